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

#include "focuscycle/splitter.h"

#include <sstream>

#include "builtin_data.h"
#include "focuscycle/errors.h"

namespace focuscycle {

namespace {

std::vector<std::string> SplitColumns(const std::string &line) {
  std::vector<std::string> columns;
  std::istringstream in(line);
  std::string column;
  while (in >> column) columns.push_back(column);
  return columns;
}

}  // namespace

ThematicRuleTable ThematicRuleTable::FromTable(std::string_view table) {
  std::vector<ThematicRule> rules;
  std::istringstream in{std::string(table)};
  std::string line;
  int line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    std::vector<std::string> columns = SplitColumns(line.substr(0, line.find('#')));
    if (columns.empty()) continue;
    const std::string where = "thematic rules line " + std::to_string(line_number);
    if (columns.size() != 4) throw SchemaError(where + ": expected 4 columns");
    ThematicRule rule;
    if (columns[0] != "*") {
      rule.predicate_class = ParsePredicateClass(columns[0]);
      if (!rule.predicate_class) throw SchemaError(where + ": bad predicate_class");
    }
    if (columns[1] != "*") {
      rule.case_role = ParseCaseRole(columns[1]);
      if (!rule.case_role) throw SchemaError(where + ": bad case_role");
    }
    if (columns[2] != "*") rule.semantic_class = columns[2];
    auto thematic = ParseThematicRole(columns[3]);
    if (!thematic) throw SchemaError(where + ": bad thematic role");
    rule.thematic = *thematic;
    rules.push_back(std::move(rule));
  }
  return ThematicRuleTable(std::move(rules));
}

const ThematicRuleTable &ThematicRuleTable::Builtin() {
  static const ThematicRuleTable table = FromTable(internal::BuiltinThematicRules());
  return table;
}

std::optional<ThematicRole> ThematicRuleTable::Match(
    PredicateClass predicate_class, CaseRole role,
    std::string_view semantic_class) const {
  for (const ThematicRule &rule : rules_) {
    if (rule.predicate_class && *rule.predicate_class != predicate_class) continue;
    if (rule.case_role && *rule.case_role != role) continue;
    if (rule.semantic_class && *rule.semantic_class != semantic_class) continue;
    return rule.thematic;
  }
  return std::nullopt;
}

std::vector<ElementaryEvent> SplitSentence(const Sentence &sentence) {
  // Events are stored in ee_index order already; the copy is the contract.
  return sentence.events;
}

bool IsEmbedded(const Sentence &sentence) { return sentence.events.size() > 1; }

ElementaryEvent AssignThematicRoles(const ElementaryEvent &event,
                                    const Document &document,
                                    const ThematicRuleTable &rules) {
  ElementaryEvent out = event;
  std::optional<std::size_t> annotated_theme;
  for (std::size_t i = 0; i < out.slots.size(); ++i) {
    const Slot &slot = out.slots[i];
    if (slot.thematic_annotated && slot.thematic == ThematicRole::kTheme) {
      if (annotated_theme) {
        throw ConflictingTheme("event \"" + event.id +
                               "\" annotates more than one theme slot");
      }
      annotated_theme = i;
    }
  }

  std::optional<std::size_t> theme = annotated_theme;
  for (std::size_t i = 0; i < out.slots.size(); ++i) {
    Slot &slot = out.slots[i];
    if (slot.thematic_annotated) continue;
    std::string_view semantic_class;
    if (const MentionRef *m = slot.mention()) {
      semantic_class = document.mention(*m).features.semantic_class;
    }
    ThematicRole role = rules.Match(event.predicate_class, slot.case_role, semantic_class)
                            .value_or(ThematicRole::kNone);
    if (role == ThematicRole::kTheme) {
      if (annotated_theme) {
        throw ConflictingTheme("event \"" + event.id + "\": rule table assigns theme to slot " +
                               std::to_string(i) + " but slot " +
                               std::to_string(*annotated_theme) + " is annotated theme");
      }
      if (theme) {
        role = ThematicRole::kNone;
      } else {
        theme = i;
      }
    }
    slot.thematic = role;
  }
  return out;
}

Document AssignThematicRoles(const Document &document, const ThematicRuleTable &rules) {
  std::vector<Sentence> sentences = document.sentences();
  for (Sentence &sentence : sentences) {
    for (ElementaryEvent &event : sentence.events) {
      event = AssignThematicRoles(event, document, rules);
    }
  }
  return Document(std::move(sentences), document.mentions());
}

}  // namespace focuscycle
