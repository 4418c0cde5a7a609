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

#ifndef FOCUSCYCLE_REPORT_H_
#define FOCUSCYCLE_REPORT_H_

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "focuscycle/evaluation.h"

namespace focuscycle {

// Output JSON for `resolve`: ranked readings and, if requested, the trace of
// the top reading.
std::string RenderResolveOutput(const ResolveResult &result, bool with_trace);

// One JSON object per line per trace record of the top reading.
std::string RenderTraceNdjson(const ResolveResult &result);

// Expected antecedent of one pronoun. An empty `acceptable` list means the
// pronoun must stay unresolved.
struct GoldAnswer {
  std::vector<std::string> acceptable;

  bool unresolved() const { return acceptable.empty(); }
};

struct GoldFile {
  bool expected_failure = false;
  bool cataphora = false;
  std::string note;
  std::map<std::string, GoldAnswer> antecedents;
};

// Gold schema: {"expected_failure": bool, "cataphora": bool, "note": str,
// "antecedents": {pronoun_id: id | null | [id, ...]}}. Only "antecedents"
// is required.
GoldFile ParseGold(std::string_view serialized);

struct ScoreEntry {
  std::string pronoun;
  GoldAnswer gold;
  std::optional<std::string> predicted;
  bool correct = false;
};

struct ScoreReport {
  std::size_t total = 0;
  std::size_t correct = 0;
  bool expected_failure = false;
  std::vector<ScoreEntry> entries;

  // Percentage of correctly resolved pronouns; 100 when there are none.
  double success_rate() const;
};

// Scores the top-ranked reading of `result` against `gold`. Throws
// GoldMismatch when the pronoun ids differ.
ScoreReport Score(const ResolveResult &result, const GoldFile &gold);

std::string RenderScoreReport(const ScoreReport &report);

}  // namespace focuscycle

#endif  // FOCUSCYCLE_REPORT_H_
