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

#include "focuscycle/interpreter.h"

#include <algorithm>
#include <set>

#include "focuscycle/errors.h"

namespace focuscycle {

namespace {

bool InEvent(const Mention &m, const ElementaryEvent &event) {
  return m.sentence_index == event.sentence_index && m.ee_index == event.ee_index;
}

// Noun phrases of `event` that precede `pronoun`, nearest first. For
// reflexives and reciprocals an agent filler is moved to the front.
std::vector<MentionRef> IntraEventCandidates(MentionRef pronoun, const PronounClass &cls,
                                             const ElementaryEvent &event,
                                             const Document &document) {
  const Mention &p = document.mention(pronoun);
  std::vector<MentionRef> out;
  std::optional<MentionRef> agent;
  for (auto it = event.slots.rbegin(); it != event.slots.rend(); ++it) {
    const MentionRef *ref = it->mention();
    if (ref == nullptr) continue;
    const Mention &m = document.mention(*ref);
    if (m.pronoun() || m.token_offset >= p.token_offset) continue;
    out.push_back(*ref);
    if (it->case_role == CaseRole::kAgent && !agent) agent = *ref;
  }
  const bool prefers_agent = cls.subkind == PronounSubkind::kReflexive ||
                             cls.subkind == PronounSubkind::kReciprocal;
  if (prefers_agent && agent) {
    out.erase(std::find(out.begin(), out.end(), *agent));
    out.insert(out.begin(), *agent);
  }
  return out;
}

}  // namespace

std::vector<Resolution> ResolvePrrInitial(const ElementaryEvent &initial,
                                          const Document &document,
                                          const PronounLexicon &lexicon,
                                          std::vector<Diagnostic> *failures) {
  std::vector<Resolution> out;
  for (const Slot &slot : initial.slots) {
    const MentionRef *ref = slot.mention();
    if (ref == nullptr) continue;
    const Mention &p = document.mention(*ref);
    if (!p.pronoun()) continue;
    PronounClass cls = lexicon.Classify(p);
    if (!cls.prr()) continue;
    Resolution r{*ref, std::nullopt, std::nullopt};
    for (MentionRef candidate : IntraEventCandidates(*ref, cls, initial, document)) {
      if (FeaturesCompatible(p.features, document.mention(candidate).features)) {
        r.antecedent = candidate;
        r.rule = CandidateSource::kIntraEE;
        break;
      }
    }
    if (!r.resolved()) {
      std::string message = "no agreeing antecedent for \"" + p.surface + "\" (mention \"" +
                            p.id + "\") in the initial event \"" + initial.id + "\"";
      if (failures == nullptr) throw NoAgreeingAntecedent(message);
      failures->push_back({Severity::kWarning, "NoAgreeingAntecedent", message, p.id});
    }
    out.push_back(r);
  }
  return out;
}

CandidateList Interpret(MentionRef pronoun, const PronounClass &cls,
                        const FocusState &state, const InterpretContext &context) {
  const Document &document = context.document;
  CandidateList list{pronoun, {}};
  std::set<MentionRef> seen;

  auto propose = [&](MentionRef ref, CandidateSource source) {
    if (ref == pronoun || document.mention(ref).pronoun()) return;
    if (source != CandidateSource::kIntraEE &&
        InEvent(document.mention(ref), context.event)) {
      return;
    }
    if (!seen.insert(ref).second) return;
    list.candidates.push_back({ref, source});
  };

  if (cls.prr()) {
    for (MentionRef ref : IntraEventCandidates(pronoun, cls, context.event, document)) {
      propose(ref, CandidateSource::kIntraEE);
    }
  }

  const bool agentive = IsAgentive(pronoun, context.event);
  auto propose_af = [&] {
    if (state.actor_focus) propose(*state.actor_focus, CandidateSource::kAF);
  };
  auto propose_cf = [&] {
    if (state.current_focus) propose(*state.current_focus, CandidateSource::kCF);
  };
  if (agentive) {
    propose_af();
    propose_cf();
  } else {
    propose_cf();
    propose_af();
  }
  for (MentionRef ref : state.alternate_focus_list) propose(ref, CandidateSource::kAFL);
  for (auto it = state.focus_stack.rbegin(); it != state.focus_stack.rend(); ++it) {
    propose(*it, CandidateSource::kFS);
  }

  // Earlier events of the same sentence, most recently processed first.
  const Sentence &sentence = document.sentences()[context.event.sentence_index];
  for (auto ee = context.prior_events.rbegin(); ee != context.prior_events.rend(); ++ee) {
    const ElementaryEvent &prior = sentence.events[*ee];
    for (auto slot = prior.slots.rbegin(); slot != prior.slots.rend(); ++slot) {
      if (const MentionRef *ref = slot->mention()) {
        propose(*ref, CandidateSource::kSameSentencePriorEE);
      }
    }
  }
  return list;
}

std::vector<int> ReorderEvents(const Sentence &sentence, const Document &document,
                               OrderMode mode) {
  std::vector<int> order(sentence.events.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  if (mode == OrderMode::kSurface) return order;

  auto has_pronoun = [&](int ee) {
    const ElementaryEvent &event = sentence.events[ee];
    return std::any_of(event.slots.begin(), event.slots.end(), [&](const Slot &s) {
      const MentionRef *m = s.mention();
      return m != nullptr && document.mention(*m).pronoun();
    });
  };
  std::stable_partition(order.begin(), order.end(),
                        [&](int ee) { return !has_pronoun(ee); });
  return order;
}

}  // namespace focuscycle
