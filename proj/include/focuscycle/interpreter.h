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

#ifndef FOCUSCYCLE_INTERPRETER_H_
#define FOCUSCYCLE_INTERPRETER_H_

#include <span>
#include <vector>

#include "focuscycle/discourse_model.h"
#include "focuscycle/focus_engine.h"
#include "focuscycle/resolution.h"

namespace focuscycle {

struct Candidate {
  MentionRef antecedent;
  CandidateSource source = CandidateSource::kCF;

  bool operator==(const Candidate &) const = default;
};

// Proposed antecedents for one pronoun, most preferred first, no duplicates.
struct CandidateList {
  MentionRef pronoun;
  std::vector<Candidate> candidates;

  bool operator==(const CandidateList &) const = default;
};

enum class OrderMode { kSurface, kCataphora };

// Binds each PRR pronoun of the discourse-initial event to an agreeing,
// preceding noun phrase of the same event. Reflexives and reciprocals take
// the agent when it agrees; otherwise (and for possessives) the nearest
// preceding agreeing mention wins. Throws NoAgreeingAntecedent, unless
// `failures` is given, in which case the pronoun is left unresolved and a
// warning is appended there.
std::vector<Resolution> ResolvePrrInitial(const ElementaryEvent &initial,
                                          const Document &document,
                                          const PronounLexicon &lexicon,
                                          std::vector<Diagnostic> *failures = nullptr);

struct InterpretContext {
  const Document &document;
  const ElementaryEvent &event;
  // ee_index values of this sentence's events processed before `event`.
  std::span<const int> prior_events;
};

// Interpretation rules for one pronoun over a focus state.
//
// Non-PRR pronouns get CF then AF (AF first for pronouns in an agent slot),
// the alternates in order, the focus stack from the top, and finally the
// noun phrases of earlier events of the sentence. Every mention of the
// pronoun's own event is excluded. PRR pronouns outside the initial event
// first get the preceding noun phrases of their own event, then the same
// chain.
CandidateList Interpret(MentionRef pronoun, const PronounClass &cls,
                        const FocusState &state, const InterpretContext &context);

// Processing order of the sentence's events. Surface mode is the identity;
// cataphora mode moves pronoun-free events ahead of the others, keeping the
// relative order within both groups.
std::vector<int> ReorderEvents(const Sentence &sentence, const Document &document,
                               OrderMode mode);

}  // namespace focuscycle

#endif  // FOCUSCYCLE_INTERPRETER_H_
