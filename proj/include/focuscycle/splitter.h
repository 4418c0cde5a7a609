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

#ifndef FOCUSCYCLE_SPLITTER_H_
#define FOCUSCYCLE_SPLITTER_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "focuscycle/discourse_model.h"

namespace focuscycle {

// One row of the thematic rule table. Unset fields are "*" wildcards.
struct ThematicRule {
  std::optional<PredicateClass> predicate_class;
  std::optional<CaseRole> case_role;
  std::optional<std::string> semantic_class;
  ThematicRole thematic = ThematicRole::kNone;
};

// Ordered thematic rules; the first matching row decides a slot's role.
class ThematicRuleTable {
 public:
  ThematicRuleTable() = default;
  explicit ThematicRuleTable(std::vector<ThematicRule> rules)
      : rules_(std::move(rules)) {}

  // Parses "predicate_class<TAB>case_role<TAB>semantic_class<TAB>thematic"
  // rows. '#' starts a comment.
  static ThematicRuleTable FromTable(std::string_view table);

  // The table shipped in data/thematic_rules.tsv.
  static const ThematicRuleTable &Builtin();

  // Role for a slot, or nullopt if no row matches. `semantic_class` is the
  // filler's class (empty for event fillers).
  std::optional<ThematicRole> Match(PredicateClass predicate_class, CaseRole role,
                                    std::string_view semantic_class) const;

  const std::vector<ThematicRule> &rules() const { return rules_; }

 private:
  std::vector<ThematicRule> rules_;
};

// The sentence's events in processing order (ee_index order). Nesting stays
// visible through complement_event slots.
std::vector<ElementaryEvent> SplitSentence(const Sentence &sentence);

// An embedded sentence holds more than one elementary event.
bool IsEmbedded(const Sentence &sentence);

// Fills unannotated thematic roles from the rule table. At most one slot ends
// up as theme: annotated themes win, otherwise the first rule-derived theme
// in slot order. Throws ConflictingTheme when an annotated theme and a rule
// derived theme land on different slots, or two slots are annotated theme.
ElementaryEvent AssignThematicRoles(const ElementaryEvent &event,
                                    const Document &document,
                                    const ThematicRuleTable &rules);

// Copy of the document with thematic roles assigned on every event.
Document AssignThematicRoles(const Document &document,
                             const ThematicRuleTable &rules);

}  // namespace focuscycle

#endif  // FOCUSCYCLE_SPLITTER_H_
