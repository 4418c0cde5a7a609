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

#include "focuscycle/report.h"

#include <algorithm>
#include <set>
#include <sstream>

#include "focuscycle/errors.h"
#include "json.hpp"

namespace focuscycle {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json Id(const Document &document, const std::optional<MentionRef> &ref) {
  if (!ref) return nullptr;
  return document.mention(*ref).id;
}

ordered_json Ids(const Document &document, const std::vector<MentionRef> &refs) {
  ordered_json out = ordered_json::array();
  for (MentionRef ref : refs) out.push_back(document.mention(ref).id);
  return out;
}

ordered_json Candidates(const Document &document, const CandidateList &list) {
  ordered_json out = ordered_json::array();
  for (const Candidate &c : list.candidates) {
    out.push_back({{"antecedent", document.mention(c.antecedent).id},
                   {"source", Name(c.source)}});
  }
  return out;
}

ordered_json TraceJson(const Document &document, const TraceRecord &record) {
  ordered_json j;
  j["sentence"] = record.sentence;
  j["ee"] = record.ee;
  j["cf"] = Id(document, record.focus.current_focus);
  j["afl"] = Ids(document, record.focus.alternate_focus_list);
  j["fs"] = Ids(document, record.focus.focus_stack);
  j["af"] = Id(document, record.focus.actor_focus);
  j["actor_stack"] = Ids(document, record.focus.actor_stack);
  j["event"] = Name(record.event);
  j["candidates"] = ordered_json::array();
  for (const TraceCandidates &c : record.candidates) {
    j["candidates"].push_back({{"pronoun", document.mention(c.proposed.pronoun).id},
                               {"proposed", Candidates(document, c.proposed)},
                               {"survivors", Candidates(document, c.survivors)},
                               {"antecedent", Id(document, c.antecedent)}});
  }
  return j;
}

ordered_json GoldJson(const GoldAnswer &answer) {
  if (answer.unresolved()) return nullptr;
  if (answer.acceptable.size() == 1) return answer.acceptable.front();
  return answer.acceptable;
}

}  // namespace

std::string RenderResolveOutput(const ResolveResult &result, bool with_trace) {
  const Document &document = result.document;
  ordered_json root;
  root["readings"] = ordered_json::array();
  for (std::size_t rank = 0; rank < result.readings.size(); ++rank) {
    const Reading &reading = result.readings[rank];
    ordered_json rj;
    rj["id"] = reading.id;
    rj["rank"] = rank + 1;
    rj["resolutions"] = ordered_json::array();
    for (const auto &[pronoun, r] : reading.resolutions) {
      ordered_json resolution;
      resolution["pronoun"] = document.mention(pronoun).id;
      resolution["antecedent"] = Id(document, r.antecedent);
      resolution["rule"] = r.rule ? ordered_json(Name(*r.rule)) : ordered_json(nullptr);
      rj["resolutions"].push_back(std::move(resolution));
    }
    root["readings"].push_back(std::move(rj));
  }
  if (with_trace) {
    root["trace"] = ordered_json::array();
    for (const TraceRecord &record : result.trace()) {
      root["trace"].push_back(TraceJson(document, record));
    }
  }
  return root.dump(2) + "\n";
}

std::string RenderTraceNdjson(const ResolveResult &result) {
  std::string out;
  for (const TraceRecord &record : result.trace()) {
    out += TraceJson(result.document, record).dump();
    out += '\n';
  }
  return out;
}

GoldFile ParseGold(std::string_view serialized) {
  nlohmann::json root;
  try {
    root = nlohmann::json::parse(serialized.begin(), serialized.end());
  } catch (const nlohmann::json::parse_error &e) {
    throw SchemaError(std::string("gold: malformed JSON: ") + e.what());
  }
  if (!root.is_object() || !root.contains("antecedents") ||
      !root["antecedents"].is_object()) {
    throw SchemaError("gold: expected an object with an \"antecedents\" object");
  }
  GoldFile gold;
  if (root.contains("expected_failure")) {
    if (!root["expected_failure"].is_boolean()) {
      throw SchemaError("gold.expected_failure: expected a boolean");
    }
    gold.expected_failure = root["expected_failure"].get<bool>();
  }
  if (root.contains("cataphora")) {
    if (!root["cataphora"].is_boolean()) throw SchemaError("gold.cataphora: expected a boolean");
    gold.cataphora = root["cataphora"].get<bool>();
  }
  if (root.contains("note") && root["note"].is_string()) {
    gold.note = root["note"].get<std::string>();
  }
  for (const auto &[pronoun, value] : root["antecedents"].items()) {
    GoldAnswer answer;
    if (value.is_string()) {
      answer.acceptable.push_back(value.get<std::string>());
    } else if (value.is_array()) {
      for (const auto &v : value) {
        if (!v.is_string()) throw SchemaError("gold." + pronoun + ": expected string ids");
        answer.acceptable.push_back(v.get<std::string>());
      }
      if (answer.acceptable.empty()) {
        throw SchemaError("gold." + pronoun + ": empty list; use null for unresolved");
      }
    } else if (!value.is_null()) {
      throw SchemaError("gold." + pronoun + ": expected an id, null or a list of ids");
    }
    gold.antecedents.emplace(pronoun, std::move(answer));
  }
  return gold;
}

double ScoreReport::success_rate() const {
  if (total == 0) return 100.0;
  return 100.0 * static_cast<double>(correct) / static_cast<double>(total);
}

ScoreReport Score(const ResolveResult &result, const GoldFile &gold) {
  const Document &document = result.document;
  const Reading &top = result.readings.front();

  std::set<std::string> input_ids;
  for (const Mention &m : document.mentions()) {
    if (m.pronoun()) input_ids.insert(m.id);
  }
  std::set<std::string> gold_ids;
  for (const auto &[id, answer] : gold.antecedents) gold_ids.insert(id);
  if (input_ids != gold_ids) {
    std::string detail;
    for (const std::string &id : input_ids) {
      if (!gold_ids.count(id)) detail += " missing-in-gold:" + id;
    }
    for (const std::string &id : gold_ids) {
      if (!input_ids.count(id)) detail += " not-a-pronoun:" + id;
    }
    throw GoldMismatch("pronoun ids differ between input and gold:" + detail);
  }

  ScoreReport report;
  report.expected_failure = gold.expected_failure;
  for (const auto &[pronoun, r] : top.resolutions) {
    ScoreEntry entry;
    entry.pronoun = document.mention(pronoun).id;
    entry.gold = gold.antecedents.at(entry.pronoun);
    if (r.antecedent) entry.predicted = document.mention(*r.antecedent).id;
    if (entry.gold.unresolved()) {
      entry.correct = !entry.predicted;
    } else {
      entry.correct = entry.predicted &&
                      std::find(entry.gold.acceptable.begin(), entry.gold.acceptable.end(),
                                *entry.predicted) != entry.gold.acceptable.end();
    }
    ++report.total;
    if (entry.correct) ++report.correct;
    report.entries.push_back(std::move(entry));
  }
  return report;
}

std::string RenderScoreReport(const ScoreReport &report) {
  ordered_json root;
  std::ostringstream summary;
  summary.setf(std::ios::fixed);
  summary.precision(1);
  summary << report.correct << "/" << report.total << " (" << report.success_rate() << "%)";
  root["summary"] = summary.str();
  root["correct"] = report.correct;
  root["pronouns"] = report.total;
  root["success_rate"] = report.success_rate();
  root["expected_failure"] = report.expected_failure;
  std::string status = report.correct == report.total ? "pass" : "fail";
  if (report.expected_failure && status == "fail") status = "expected_failure";
  root["status"] = status;
  root["diff"] = ordered_json::array();
  for (const ScoreEntry &e : report.entries) {
    root["diff"].push_back({{"pronoun", e.pronoun},
                            {"gold", GoldJson(e.gold)},
                            {"predicted", e.predicted ? ordered_json(*e.predicted)
                                                      : ordered_json(nullptr)},
                            {"correct", e.correct}});
  }
  return root.dump(2) + "\n";
}

}  // namespace focuscycle
