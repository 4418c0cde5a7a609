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

#include "doctest.h"
#include "focuscycle/errors.h"
#include "focuscycle/splitter.h"
#include "testing/fixtures.h"

namespace focuscycle {
namespace {

using testing::DocBuilder;
using testing::LoadCorpus;

std::vector<ThematicRole> Roles(const ElementaryEvent &event) {
  std::vector<ThematicRole> out;
  for (const Slot &s : event.slots) out.push_back(s.thematic);
  return out;
}

TEST_CASE("a reporting sentence splits into its three events") {
  Document doc = LoadCorpus("lafarge");
  std::vector<ElementaryEvent> events = SplitSentence(doc.sentences()[0]);
  REQUIRE(events.size() == 3);
  CHECK(events[0].predicate == "say");
  CHECK(events[1].predicate == "buy");
  CHECK(events[2].predicate == "allow");
  for (std::size_t i = 0; i < events.size(); ++i) CHECK(events[i].ee_index == int(i));
  CHECK(IsEmbedded(doc.sentences()[0]));
}

TEST_CASE("single event sentences are not embedded") {
  Document doc = LoadCorpus("baseball");
  for (const Sentence &s : doc.sentences()) {
    CHECK(SplitSentence(s).size() == s.events.size());
  }
  CHECK_FALSE(IsEmbedded(doc.sentences()[0]));
}

TEST_CASE("rule table assigns roles by predicate class and case role") {
  Document doc = DocBuilder()
                     .Sentence().Event("give", "transfer")
                     .Np("agent", "a").Np("object", "b").Np("recipient", "c")
                     .Np("instrument", "d").Np("location", "e")
                     .Build();
  ElementaryEvent e =
      AssignThematicRoles(doc.sentences()[0].events[0], doc, ThematicRuleTable::Builtin());
  CHECK(Roles(e) == std::vector{ThematicRole::kAgent, ThematicRole::kTheme, ThematicRole::kGoal,
                                ThematicRole::kInstrument, ThematicRole::kLocation});
}

TEST_CASE("communication verbs make the reported event the theme") {
  Document doc = DocBuilder()
                     .Sentence().Event("say", "communication")
                     .Np("agent", "a").Np("object", "b").Complement("claim")
                     .Event("claim").Np("agent", "c")
                     .Build();
  Document assigned = AssignThematicRoles(doc, ThematicRuleTable::Builtin());
  CHECK(Roles(assigned.sentences()[0].events[0]) ==
        std::vector{ThematicRole::kAgent, ThematicRole::kNone, ThematicRole::kTheme});
}

TEST_CASE("annotations are never overwritten") {
  Document doc = DocBuilder()
                     .Sentence().Event("e", "change_of_state")
                     .Np("agent", "a").Thematic("none").Np("object", "b").Thematic("goal")
                     .Build();
  ElementaryEvent e =
      AssignThematicRoles(doc.sentences()[0].events[0], doc, ThematicRuleTable::Builtin());
  CHECK(Roles(e) == std::vector{ThematicRole::kNone, ThematicRole::kGoal});
}

TEST_CASE("only the first rule-derived theme is kept") {
  Document doc = DocBuilder()
                     .Sentence().Event("e", "stative").Np("object", "a").Np("object", "b")
                     .Build();
  ElementaryEvent e =
      AssignThematicRoles(doc.sentences()[0].events[0], doc, ThematicRuleTable::Builtin());
  CHECK(Roles(e) == std::vector{ThematicRole::kTheme, ThematicRole::kNone});
}

TEST_CASE("conflicting theme annotations are rejected") {
  const ThematicRuleTable &rules = ThematicRuleTable::Builtin();
  Document two = DocBuilder()
                     .Sentence().Event("e").Np("agent", "a").Thematic("theme")
                     .Np("location", "b").Thematic("theme")
                     .Build();
  CHECK_THROWS_AS(AssignThematicRoles(two, rules), ConflictingTheme);

  Document clash = DocBuilder()
                       .Sentence().Event("e", "transfer").Np("agent", "a").Thematic("theme")
                       .Np("object", "b")
                       .Build();
  CHECK_THROWS_AS(AssignThematicRoles(clash, rules), ConflictingTheme);

  Document same = DocBuilder()
                      .Sentence().Event("e", "transfer").Np("agent", "a")
                      .Np("object", "b").Thematic("theme")
                      .Build();
  CHECK_NOTHROW(AssignThematicRoles(same, rules));
}

TEST_CASE("custom rule tables and semantic class patterns") {
  ThematicRuleTable rules = ThematicRuleTable::FromTable(
      "# class\trole\tsemantic\tthematic\n"
      "*\tobject\tfood\tgoal\n"
      "other\t*\t*\ttheme\n");
  CHECK(rules.rules().size() == 2);
  CHECK(rules.Match(PredicateClass::kStative, CaseRole::kObject, "food") == ThematicRole::kGoal);
  CHECK(rules.Match(PredicateClass::kOther, CaseRole::kAgent, "") == ThematicRole::kTheme);
  CHECK_FALSE(rules.Match(PredicateClass::kStative, CaseRole::kAgent, "").has_value());
  CHECK_THROWS_AS(ThematicRuleTable::FromTable("*\tobject\ttheme\n"), SchemaError);
  CHECK_THROWS_AS(ThematicRuleTable::FromTable("*\tsubject\t*\ttheme\n"), SchemaError);
}

TEST_CASE("embedded and simple corpus sentences") {
  Document one = LoadCorpus("sentence1");
  std::vector<ElementaryEvent> events = SplitSentence(one.sentences()[0]);
  REQUIRE(events.size() == 2);
  CHECK(events[0].id == "s1_said");
  CHECK(events[1].id == "s1_form");
  CHECK(IsEmbedded(one.sentences()[0]));

  Document two = LoadCorpus("sentence2");
  CHECK(SplitSentence(two.sentences()[0]).size() == 1);
  CHECK_FALSE(IsEmbedded(two.sentences()[0]));
}

TEST_CASE("corpus thematic roles") {
  const ThematicRuleTable &rules = ThematicRuleTable::Builtin();
  Document baseball = AssignThematicRoles(LoadCorpus("baseball"), rules);
  const ElementaryEvent &like = baseball.sentences()[0].events[0];
  for (const Slot &s : like.slots) {
    if (s.mention() && baseball.mention(*s.mention()).id == "baseball") {
      CHECK(s.thematic == ThematicRole::kTheme);
    }
  }

  Document lafarge = AssignThematicRoles(LoadCorpus("lafarge"), rules);
  const ElementaryEvent &said = lafarge.sentences()[0].events[0];
  for (const Slot &s : said.slots) {
    if (s.event()) CHECK(s.thematic == ThematicRole::kTheme);
    if (s.case_role == CaseRole::kAgent) {
      CHECK(lafarge.mention(*s.mention()).id == "lafarge");
      CHECK(s.thematic == ThematicRole::kAgent);
    }
  }

  // Already assigned events come back unchanged.
  CHECK(AssignThematicRoles(said, lafarge, rules) == said);
}

}  // namespace
}  // namespace focuscycle
