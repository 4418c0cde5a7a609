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

#include "focuscycle/evaluation.h"

#include <algorithm>
#include <climits>
#include <tuple>

#include "focuscycle/errors.h"

namespace focuscycle {

namespace {

std::vector<MentionRef> PronounsOf(const ElementaryEvent &event, const Document &document) {
  std::vector<MentionRef> out;
  for (const Slot &slot : event.slots) {
    const MentionRef *ref = slot.mention();
    if (ref != nullptr && document.mention(*ref).pronoun()) out.push_back(*ref);
  }
  return out;
}

std::vector<MentionRef> PronounsOf(const Sentence &sentence, const Document &document) {
  std::vector<MentionRef> out;
  for (MentionRef ref : sentence.mentions) {
    if (document.mention(ref).pronoun()) out.push_back(ref);
  }
  return out;
}

// Drops the non-PRR pronoun slots so the expected focus can run on an
// initial event that breaks the no-initial-anaphor assumption.
ElementaryEvent WithoutPersonalPronouns(const ElementaryEvent &event, const Document &document,
                                        const PronounLexicon &lexicon) {
  ElementaryEvent out = event;
  std::erase_if(out.slots, [&](const Slot &slot) {
    const MentionRef *ref = slot.mention();
    if (ref == nullptr) return false;
    const Mention &m = document.mention(*ref);
    return m.pronoun() && !lexicon.Classify(m).prr();
  });
  return out;
}

void Bind(Reading &reading, MentionRef pronoun, const std::optional<Candidate> &candidate) {
  Resolution r{pronoun, std::nullopt, std::nullopt};
  if (candidate) {
    r.antecedent = candidate->antecedent;
    r.rule = candidate->source;
  }
  reading.resolutions[pronoun] = r;
}

void EnforceLimit(std::vector<Reading> &readings, const ResolverConfig &config) {
  if (readings.size() <= config.max_readings) return;
  if (!config.prune_on_overflow) {
    throw ReadingExplosion(std::to_string(readings.size()) +
                           " readings exceed the limit of " +
                           std::to_string(config.max_readings));
  }
  std::stable_sort(readings.begin(), readings.end(), RanksBefore);
  readings.resize(config.max_readings);
}

}  // namespace

std::size_t Reading::unresolved() const {
  return static_cast<std::size_t>(std::count_if(
      resolutions.begin(), resolutions.end(),
      [](const auto &entry) { return !entry.second.resolved(); }));
}

CandidateList IndividualEvaluate(const Mention &pronoun, const CandidateList &candidates,
                                 const Document &document) {
  CandidateList out{candidates.pronoun, {}};
  for (const Candidate &c : candidates.candidates) {
    if (FeaturesCompatible(pronoun.features, document.mention(c.antecedent).features)) {
      out.candidates.push_back(c);
    }
  }
  return out;
}

std::vector<Reading> DuplicateReading(const Reading &reading, MentionRef pronoun,
                                      const CandidateList &survivors, ReadingIds &ids) {
  if (survivors.candidates.size() <= 1) {
    Reading bound = reading;
    if (survivors.candidates.empty()) {
      Bind(bound, pronoun, std::nullopt);
    } else {
      Bind(bound, pronoun, survivors.candidates.front());
    }
    return {std::move(bound)};
  }
  std::vector<Reading> children;
  children.reserve(survivors.candidates.size());
  for (const Candidate &c : survivors.candidates) {
    Reading child = reading;
    child.id = ids.Next();
    child.parent_id = reading.id;
    child.duplications = reading.duplications + 1;
    Bind(child, pronoun, c);
    children.push_back(std::move(child));
  }
  return children;
}

std::vector<Reading> ExpandReadings(const std::vector<Reading> &readings,
                                    MentionRef pronoun, const PronounClass &cls,
                                    const InterpretContext &context,
                                    const ResolverConfig &config, ReadingIds &ids) {
  const Mention &p = context.document.mention(pronoun);
  std::vector<Reading> out;
  for (const Reading &reading : readings) {
    CandidateList proposed = Interpret(pronoun, cls, reading.focus, context);
    CandidateList survivors = IndividualEvaluate(p, proposed, context.document);
    for (Reading &next : DuplicateReading(reading, pronoun, survivors, ids)) {
      next.pending.push_back({proposed, survivors, next.resolutions[pronoun].antecedent});
      out.push_back(std::move(next));
    }
  }
  EnforceLimit(out, config);
  return out;
}

std::size_t ConsistencyViolations(const Reading &reading, int sentence,
                                  const Document &document, const PronounLexicon &lexicon,
                                  const ConsistencyChecks &checks) {
  std::size_t violations = 0;
  if (checks.chain_features) {
    std::map<MentionRef, std::vector<MentionRef>> chains;
    for (const auto &[pronoun, r] : reading.resolutions) {
      if (r.antecedent) chains[*r.antecedent].push_back(pronoun);
    }
    for (const auto &[antecedent, pronouns] : chains) {
      const FeatureSet &head = document.mention(antecedent).features;
      for (std::size_t i = 0; i < pronouns.size(); ++i) {
        const FeatureSet &fi = document.mention(pronouns[i]).features;
        if (!FeaturesCompatible(fi, head)) ++violations;
        for (std::size_t j = i + 1; j < pronouns.size(); ++j) {
          if (!FeaturesCompatible(fi, document.mention(pronouns[j]).features)) ++violations;
        }
      }
    }
  }
  if (checks.same_event_disjoint) {
    for (const ElementaryEvent &event : document.sentences()[sentence].events) {
      std::vector<const Slot *> personal;
      for (const Slot &slot : event.slots) {
        const MentionRef *ref = slot.mention();
        if (ref == nullptr || !document.mention(*ref).pronoun()) continue;
        if (!lexicon.Classify(document.mention(*ref)).prr()) personal.push_back(&slot);
      }
      for (std::size_t i = 0; i < personal.size(); ++i) {
        for (std::size_t j = i + 1; j < personal.size(); ++j) {
          if (personal[i]->case_role == personal[j]->case_role) continue;
          auto a = reading.resolutions.find(*personal[i]->mention());
          auto b = reading.resolutions.find(*personal[j]->mention());
          if (a == reading.resolutions.end() || b == reading.resolutions.end()) continue;
          if (a->second.antecedent && a->second.antecedent == b->second.antecedent) {
            ++violations;
          }
        }
      }
    }
  }
  return violations;
}

std::vector<Reading> CollectiveEvaluate(const std::vector<Reading> &readings, int sentence,
                                        const Document &document,
                                        const PronounLexicon &lexicon,
                                        const ConsistencyChecks &checks) {
  if (readings.empty()) return readings;
  std::vector<std::size_t> violations(readings.size());
  std::vector<std::size_t> consistent;
  for (std::size_t i = 0; i < readings.size(); ++i) {
    violations[i] = ConsistencyViolations(readings[i], sentence, document, lexicon, checks);
    if (violations[i] == 0) consistent.push_back(i);
  }

  const std::vector<MentionRef> pronouns =
      PronounsOf(document.sentences()[sentence], document);
  auto resolves = [&](std::size_t i, MentionRef p) {
    auto it = readings[i].resolutions.find(p);
    return it != readings[i].resolutions.end() && it->second.resolved();
  };

  std::vector<Reading> out;
  for (std::size_t i : consistent) {
    bool keep = true;
    if (checks.unresolved_siblings) {
      for (MentionRef p : pronouns) {
        if (resolves(i, p)) continue;
        const bool sibling_resolves = std::any_of(
            consistent.begin(), consistent.end(),
            [&](std::size_t j) { return j != i && resolves(j, p); });
        if (sibling_resolves) {
          keep = false;
          ++violations[i];
        }
      }
    }
    if (keep) out.push_back(readings[i]);
  }
  if (!out.empty()) return out;

  // Nothing is consistent: keep the least bad reading.
  auto signature = [&](std::size_t i) {
    std::vector<std::uint32_t> positions;
    for (const auto &[pronoun, r] : readings[i].resolutions) {
      positions.push_back(r.antecedent ? r.antecedent->index : UINT32_MAX);
    }
    return std::make_tuple(violations[i], readings[i].unresolved(),
                           readings[i].duplications, positions);
  };
  std::size_t best = 0;
  for (std::size_t i = 1; i < readings.size(); ++i) {
    if (signature(i) < signature(best)) best = i;
  }
  return {readings[best]};
}

bool RanksBefore(const Reading &a, const Reading &b) {
  return std::make_tuple(a.unresolved(), a.duplications, a.id) <
         std::make_tuple(b.unresolved(), b.duplications, b.id);
}

ResolveResult ResolveDocument(const Document &input, const ResolverConfig &config) {
  ResolveResult result{AssignThematicRoles(input, config.rules), {}, {}};
  const Document &document = result.document;
  const PronounLexicon &lexicon = config.lexicon;
  ReadingIds ids;
  std::vector<Reading> readings(1);

  for (std::size_t si = 0; si < document.sentences().size(); ++si) {
    const Sentence &sentence = document.sentences()[si];
    const std::vector<int> order = ReorderEvents(sentence, document, config.order);
    std::vector<int> prior;
    for (std::size_t k = 0; k < order.size(); ++k) {
      const ElementaryEvent &event = sentence.events[order[k]];
      const InterpretContext context{document, event, prior};
      const std::vector<MentionRef> pronouns = PronounsOf(event, document);

      if (si == 0 && k == 0) {
        std::vector<Diagnostic> initial = ValidateInitialEvent(document, lexicon, order[0]);
        result.diagnostics.insert(result.diagnostics.end(), initial.begin(), initial.end());

        Reading &root = readings.front();
        try {
          root.focus = ExpectedFocus(WithoutPersonalPronouns(event, document, lexicon),
                                     document, lexicon);
        } catch (const EmptyEvent &e) {
          result.diagnostics.push_back({Severity::kWarning, "EmptyEvent", e.what(), {}});
        }
        for (const Resolution &r :
             ResolvePrrInitial(event, document, lexicon, &result.diagnostics)) {
          root.resolutions[r.pronoun] = r;
          CandidateList chosen{r.pronoun, {}};
          if (r.antecedent) chosen.candidates.push_back({*r.antecedent, *r.rule});
          root.pending.push_back({chosen, chosen, r.antecedent});
        }
        for (MentionRef p : pronouns) {
          PronounClass cls = lexicon.Classify(document.mention(p));
          if (cls.prr()) continue;
          readings = ExpandReadings(readings, p, cls, context, config, ids);
        }
        for (Reading &r : readings) {
          r.trace.push_back({static_cast<int>(si), event.ee_index, r.focus,
                             FocusEvent::kExpected, std::move(r.pending)});
          r.pending.clear();
        }
      } else {
        for (MentionRef p : pronouns) {
          PronounClass cls = lexicon.Classify(document.mention(p));
          readings = ExpandReadings(readings, p, cls, context, config, ids);
        }
        for (Reading &r : readings) {
          std::vector<Resolution> bound;
          for (MentionRef p : pronouns) bound.push_back(r.resolutions.at(p));
          FocusUpdate update = UpdateFocus(r.focus, event, bound, document);
          r.focus = std::move(update.state);
          r.trace.push_back({static_cast<int>(si), event.ee_index, r.focus, update.event,
                             std::move(r.pending)});
          r.pending.clear();
        }
      }
      for (Reading &r : readings) {
        r.sentence_cursor = static_cast<int>(si);
        r.ee_cursor = event.ee_index;
      }
      prior.push_back(order[k]);
    }
    readings = CollectiveEvaluate(readings, static_cast<int>(si), document, lexicon,
                                  config.checks);
  }

  std::stable_sort(readings.begin(), readings.end(), RanksBefore);
  result.readings = std::move(readings);
  return result;
}

}  // namespace focuscycle
