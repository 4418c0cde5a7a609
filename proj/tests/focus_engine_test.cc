// Copyright 2026 The Focuscycle Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <random>

#include "doctest.h"
#include "focuscycle/errors.h"
#include "focuscycle/focus_engine.h"
#include "focuscycle/splitter.h"
#include "testing/fixtures.h"

namespace focuscycle {
namespace {

using testing::DocBuilder;
using testing::Ref;

const PronounLexicon &Lex() { return PronounLexicon::Builtin(); }

Document Assigned(const DocBuilder &b) {
  return AssignThematicRoles(b.Build(), ThematicRuleTable::Builtin());
}

const ElementaryEvent &Event(const Document &doc, int sentence, int ee = 0) {
  return doc.sentences()[sentence].events[ee];
}

// Twelve noun phrases up front, then two sentences with one pronoun each and
// a third where a pronoun fills the agent slot.
Document Pool() {
  DocBuilder b;
  b.Sentence().Event("e0", "transfer");
  for (int i = 0; i < 12; ++i) b.Np(i == 0 ? "agent" : "location", "n" + std::to_string(i));
  b.Sentence().Event("e1").Pro("object", "p1", "it");
  b.Sentence().Event("e2").Pro("object", "p2", "it");
  b.Sentence().Event("e3").Pro("agent", "p3", "he").Np("object", "x");
  return Assigned(b);
}

TEST_CASE("expected focus prefers the theme") {
  Document doc = Assigned(DocBuilder().Sentence().Event("give", "transfer")
                              .Np("agent", "ann").Np("recipient", "bob").Np("object", "book"));
  FocusState s = ExpectedFocus(Event(doc, 0), doc, Lex());
  CHECK(s.current_focus == Ref(doc, "book"));
  CHECK(s.actor_focus == Ref(doc, "ann"));
  CHECK(s.alternate_focus_list == std::vector{Ref(doc, "ann"), Ref(doc, "bob")});
  CHECK(s.focus_stack.empty());
  CHECK(RegistersConsistent(s));
}

TEST_CASE("expected focus falls back to goal, instrument or location, then agent") {
  Document loc = Assigned(DocBuilder().Sentence().Event("go", "communication")
                              .Np("agent", "ann").Np("object", "news").Np("location", "park")
                              .Np("instrument", "phone"));
  CHECK(ExpectedFocus(Event(loc, 0), loc, Lex()).current_focus == Ref(loc, "park"));

  Document agent = Assigned(DocBuilder().Sentence().Event("talk", "communication")
                                .Np("agent", "ann").Np("object", "news"));
  CHECK(ExpectedFocus(Event(agent, 0), agent, Lex()).current_focus == Ref(agent, "ann"));

  Document bare = Assigned(DocBuilder().Sentence().Event("talk", "communication")
                               .Np("object", "news").Np("object", "more"));
  FocusState s = ExpectedFocus(Event(bare, 0), bare, Lex());
  CHECK(s.current_focus == Ref(bare, "news"));
  CHECK_FALSE(s.actor_focus.has_value());
}

TEST_CASE("expected focus failures") {
  Document anaphor = Assigned(DocBuilder().Sentence().Event("e")
                                  .Pro("agent", "he", "he").Np("object", "b"));
  CHECK_THROWS_AS(ExpectedFocus(Event(anaphor, 0), anaphor, Lex()), InitialAnaphor);

  Document empty = Assigned(DocBuilder().Sentence().Event("rain"));
  CHECK_THROWS_AS(ExpectedFocus(Event(empty, 0), empty, Lex()), EmptyEvent);

  Document prr_only = Assigned(DocBuilder().Sentence().Event("e").Pro("agent", "self", "itself"));
  CHECK_THROWS_AS(ExpectedFocus(Event(prr_only, 0), prr_only, Lex()), EmptyEvent);
}

TEST_CASE("update rules") {
  Document doc = Pool();
  auto n = [&](int i) { return Ref(doc, "n" + std::to_string(i)); };
  const MentionRef p1 = Ref(doc, "p1");
  FocusState s;
  s.current_focus = n(1);
  s.alternate_focus_list = {n(2), n(3)};
  s.focus_stack = {n(4), n(5)};
  s.actor_focus = n(0);

  SUBCASE("confirm keeps the current focus") {
    Resolution r{p1, n(1), CandidateSource::kCF};
    FocusUpdate u = UpdateFocus(s, Event(doc, 1), {&r, 1}, doc);
    CHECK(u.event == FocusEvent::kConfirm);
    CHECK(u.state.current_focus == n(1));
    CHECK(u.state.focus_stack == s.focus_stack);
  }
  SUBCASE("movement stacks the old focus") {
    Resolution r{p1, n(3), CandidateSource::kAFL};
    FocusUpdate u = UpdateFocus(s, Event(doc, 1), {&r, 1}, doc);
    CHECK(u.event == FocusEvent::kMovement);
    CHECK(u.state.current_focus == n(3));
    CHECK(u.state.focus_stack == std::vector{n(4), n(5), n(1)});
    CHECK(u.state.alternate_focus_list == std::vector{n(2)});
  }
  SUBCASE("return pops the stack") {
    Resolution r{p1, n(4), CandidateSource::kFS};
    FocusUpdate u = UpdateFocus(s, Event(doc, 1), {&r, 1}, doc);
    CHECK(u.event == FocusEvent::kReturn);
    CHECK(u.state.current_focus == n(4));
    CHECK(u.state.focus_stack.empty());
    CHECK(u.state.alternate_focus_list == std::vector{n(1), n(2), n(3)});
  }
  SUBCASE("unresolved pronouns retain") {
    Resolution r{p1, std::nullopt, std::nullopt};
    FocusUpdate u = UpdateFocus(s, Event(doc, 1), {&r, 1}, doc);
    CHECK(u.event == FocusEvent::kRetain);
    CHECK(u.state == s);
  }
  SUBCASE("a resolution outside every register retains and joins the alternates") {
    Resolution r{p1, n(9), CandidateSource::kSameSentencePriorEE};
    FocusUpdate u = UpdateFocus(s, Event(doc, 1), {&r, 1}, doc);
    CHECK(u.event == FocusEvent::kRetain);
    CHECK(u.state.alternate_focus_list == std::vector{n(9), n(2), n(3)});
  }
  SUBCASE("actor directed resolutions move the actor focus only") {
    Resolution r{Ref(doc, "p3"), n(2), CandidateSource::kAFL};
    FocusUpdate u = UpdateFocus(s, Event(doc, 3), {&r, 1}, doc);
    CHECK(u.event == FocusEvent::kRetain);
    CHECK(u.state.current_focus == n(1));
    CHECK(u.state.actor_focus == n(2));
    CHECK(u.state.actor_stack == std::vector{n(0)});

    FocusState t = u.state;
    Resolution back{Ref(doc, "p3"), n(0), CandidateSource::kAFL};
    FocusUpdate v = UpdateFocus(t, Event(doc, 3), {&back, 1}, doc);
    CHECK(v.state.actor_focus == n(0));
    CHECK(v.state.actor_stack.empty());
  }
  SUBCASE("a resolution through the actor focus does not move the current focus") {
    Resolution r{p1, n(2), CandidateSource::kAF};
    FocusUpdate u = UpdateFocus(s, Event(doc, 1), {&r, 1}, doc);
    CHECK(u.state.current_focus == n(1));
    CHECK(u.state.actor_focus == n(2));
  }
}

TEST_CASE("bad resolutions are rejected") {
  Document doc = Pool();
  FocusState s;
  Resolution foreign{Ref(doc, "p2"), Ref(doc, "n1"), CandidateSource::kCF};
  CHECK_THROWS_AS(UpdateFocus(s, Event(doc, 1), {&foreign, 1}, doc), UnknownResolutionTarget);
  Resolution to_pronoun{Ref(doc, "p1"), Ref(doc, "p2"), CandidateSource::kCF};
  CHECK_THROWS_AS(UpdateFocus(s, Event(doc, 1), {&to_pronoun, 1}, doc), UnknownResolutionTarget);
  Resolution ahead{Ref(doc, "p1"), Ref(doc, "x"), CandidateSource::kCF};
  CHECK_THROWS_AS(UpdateFocus(s, Event(doc, 1), {&ahead, 1}, doc), UnknownResolutionTarget);
}

TEST_CASE("register sizes are bounded") {
  Document doc = Pool();
  auto n = [&](int i) { return Ref(doc, "n" + std::to_string(i)); };
  FocusState s;
  s.current_focus = n(0);
  for (int i = 1; i < 12; ++i) s.focus_stack.push_back(n(i));
  s.focus_stack.erase(s.focus_stack.begin());  // n2..n11, ten entries
  s.alternate_focus_list = {n(1)};
  Resolution r{Ref(doc, "p1"), n(1), CandidateSource::kAFL};
  FocusUpdate u = UpdateFocus(s, Event(doc, 1), {&r, 1}, doc);
  CHECK(u.state.focus_stack.size() == kMaxStackDepth);
  CHECK(u.state.focus_stack.front() == n(3));
  CHECK(u.state.focus_stack.back() == n(0));

  Document wide_doc = [] {
    DocBuilder b;
    b.Sentence().Event("e0");
    for (int i = 0; i < 30; ++i) b.Np("location", "w" + std::to_string(i));
    return Assigned(b);
  }();
  FocusState wide = ExpectedFocus(Event(wide_doc, 0), wide_doc, Lex());
  FocusUpdate w = UpdateFocus(wide, Event(wide_doc, 0), {}, wide_doc);
  CHECK(w.state.alternate_focus_list.size() == kMaxAlternateFoci);
  CHECK(RegistersConsistent(w.state));
}

TEST_CASE("movement followed by a return restores the stack") {
  Document doc = Pool();
  std::mt19937 rng(11);
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<MentionRef> pool;
    for (int i = 0; i < 12; ++i) pool.push_back(Ref(doc, "n" + std::to_string(i)));
    std::shuffle(pool.begin(), pool.end(), rng);
    FocusState s;
    s.current_focus = pool[0];
    const MentionRef target = pool[1];
    s.alternate_focus_list.push_back(target);
    const int depth = std::uniform_int_distribution<int>(0, kMaxStackDepth - 1)(rng);
    for (int i = 0; i < depth; ++i) s.focus_stack.push_back(pool[2 + i]);
    for (std::size_t i = 2; i < pool.size(); ++i) {
      if (std::bernoulli_distribution(0.4)(rng)) s.alternate_focus_list.push_back(pool[i]);
    }
    REQUIRE(RegistersConsistent(s));

    Resolution away{Ref(doc, "p1"), target, CandidateSource::kAFL};
    FocusUpdate moved = UpdateFocus(s, Event(doc, 1), {&away, 1}, doc);
    REQUIRE(moved.event == FocusEvent::kMovement);
    CHECK(moved.state.focus_stack.back() == *s.current_focus);

    Resolution back{Ref(doc, "p2"), *s.current_focus, CandidateSource::kFS};
    FocusUpdate returned = UpdateFocus(moved.state, Event(doc, 2), {&back, 1}, doc);
    REQUIRE(returned.event == FocusEvent::kReturn);
    CHECK(returned.state.focus_stack == s.focus_stack);
    CHECK(returned.state.current_focus == s.current_focus);
    CHECK(RegistersConsistent(returned.state));
  }
}

TEST_CASE("agent slots are detected") {
  Document doc = Pool();
  CHECK(IsAgentive(Ref(doc, "p3"), Event(doc, 3)));
  CHECK_FALSE(IsAgentive(Ref(doc, "p1"), Event(doc, 1)));
}

TEST_CASE("corpus expected foci") {
  Document baseball = AssignThematicRoles(testing::LoadCorpus("baseball"),
                                          ThematicRuleTable::Builtin());
  CHECK(ExpectedFocus(Event(baseball, 0), baseball, Lex()).current_focus ==
        Ref(baseball, "baseball"));

  // The reported event is the theme but has no head entity, so the agent
  // takes the current focus.
  Document lafarge = AssignThematicRoles(testing::LoadCorpus("lafarge"),
                                         ThematicRuleTable::Builtin());
  FocusState said = ExpectedFocus(Event(lafarge, 0), lafarge, Lex());
  CHECK(said.current_focus == Ref(lafarge, "lafarge"));
  CHECK(said.actor_focus == Ref(lafarge, "lafarge"));

  Document agent_only = Assigned(DocBuilder().Sentence().Event("run").Np("agent", "ann"));
  CHECK(ExpectedFocus(Event(agent_only, 0), agent_only, Lex()).current_focus ==
        Ref(agent_only, "ann"));
}

TEST_CASE("an event without pronouns retains and feeds the alternates") {
  Document doc = Pool();
  FocusState s;
  s.current_focus = Ref(doc, "n1");
  s.alternate_focus_list = {Ref(doc, "n2")};
  FocusUpdate u = UpdateFocus(s, Event(doc, 0), {}, doc);
  CHECK(u.event == FocusEvent::kRetain);
  CHECK(u.state.current_focus == s.current_focus);
  CHECK(u.state.alternate_focus_list.size() == 11);
  CHECK(u.state.alternate_focus_list.front() == Ref(doc, "n11"));
  CHECK_FALSE(u.state.InAlternates(Ref(doc, "n1")));
}

}  // namespace
}  // namespace focuscycle
