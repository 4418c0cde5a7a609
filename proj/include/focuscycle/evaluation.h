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

#ifndef FOCUSCYCLE_EVALUATION_H_
#define FOCUSCYCLE_EVALUATION_H_

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "focuscycle/discourse_model.h"
#include "focuscycle/focus_engine.h"
#include "focuscycle/interpreter.h"
#include "focuscycle/resolution.h"
#include "focuscycle/splitter.h"

namespace focuscycle {

// Candidates proposed for and kept for one pronoun, as recorded in traces.
struct TraceCandidates {
  CandidateList proposed;
  CandidateList survivors;
  std::optional<MentionRef> antecedent;
};

// Focus state after processing one elementary event.
struct TraceRecord {
  int sentence = 0;
  int ee = 0;
  FocusState focus;
  FocusEvent event = FocusEvent::kRetain;
  std::vector<TraceCandidates> candidates;
};

// One interpretation state: the bindings made so far, the position in the
// document and the focus registers reflecting exactly those bindings.
struct Reading {
  int id = 0;
  std::optional<int> parent_id;
  std::map<MentionRef, Resolution> resolutions;
  int sentence_cursor = 0;
  int ee_cursor = 0;
  FocusState focus;
  // Number of splits along this reading's lineage.
  int duplications = 0;
  std::vector<TraceRecord> trace;
  // Candidate records of the event being processed, flushed into `trace`.
  std::vector<TraceCandidates> pending;

  std::size_t unresolved() const;
};

// Hands out reading ids in creation order.
class ReadingIds {
 public:
  explicit ReadingIds(int next = 1) : next_(next) {}
  int Next() { return next_++; }

 private:
  int next_;
};

struct ConsistencyChecks {
  bool chain_features = true;       // (i) coreferring pronouns agree pairwise
  bool same_event_disjoint = true;  // (ii) co-argument non-PRR pronouns differ
  bool unresolved_siblings = true;  // (iii) drop unresolved if a sibling resolves
};

struct ResolverConfig {
  std::size_t max_readings = 64;
  // On overflow keep the best-ranked readings; otherwise throw
  // ReadingExplosion.
  bool prune_on_overflow = true;
  OrderMode order = OrderMode::kSurface;
  ConsistencyChecks checks;
  PronounLexicon lexicon = PronounLexicon::Builtin();
  ThematicRuleTable rules = ThematicRuleTable::Builtin();
};

// Keeps the candidates agreeing with the pronoun in number, gender, animacy
// and semantic class, in their original order.
CandidateList IndividualEvaluate(const Mention &pronoun, const CandidateList &candidates,
                                 const Document &document);

// Binds `pronoun` in `reading`. Several survivors give one child per
// survivor (new ids, parent_id set, own focus copy); a single survivor binds
// in place; none leaves the pronoun unresolved.
std::vector<Reading> DuplicateReading(const Reading &reading, MentionRef pronoun,
                                      const CandidateList &survivors, ReadingIds &ids);

// Interprets and evaluates `pronoun` in every reading and binds or splits.
// Applies the max_readings policy of `config`.
std::vector<Reading> ExpandReadings(const std::vector<Reading> &readings,
                                    MentionRef pronoun, const PronounClass &cls,
                                    const InterpretContext &context,
                                    const ResolverConfig &config, ReadingIds &ids);

// Number of violations of (i) and (ii) in `reading` for sentence `sentence`.
std::size_t ConsistencyViolations(const Reading &reading, int sentence,
                                  const Document &document, const PronounLexicon &lexicon,
                                  const ConsistencyChecks &checks);

// Suppresses inconsistent readings once all pronouns of the sentence are
// bound. At least one reading survives.
std::vector<Reading> CollectiveEvaluate(const std::vector<Reading> &readings, int sentence,
                                        const Document &document,
                                        const PronounLexicon &lexicon,
                                        const ConsistencyChecks &checks);

// Final ranking: fewest unresolved, then fewest duplications, then id.
bool RanksBefore(const Reading &a, const Reading &b);

struct ResolveResult {
  // The document with thematic roles assigned, which all refs point into.
  Document document;
  // Surviving readings, best first.
  std::vector<Reading> readings;
  std::vector<Diagnostic> diagnostics;

  const std::vector<TraceRecord> &trace() const { return readings.front().trace; }
};

// Runs the whole pipeline over a validated document.
ResolveResult ResolveDocument(const Document &document, const ResolverConfig &config = {});

}  // namespace focuscycle

#endif  // FOCUSCYCLE_EVALUATION_H_
