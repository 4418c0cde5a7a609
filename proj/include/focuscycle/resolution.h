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

#ifndef FOCUSCYCLE_RESOLUTION_H_
#define FOCUSCYCLE_RESOLUTION_H_

#include <optional>
#include <string_view>

#include "focuscycle/discourse_model.h"

namespace focuscycle {

// Where an interpretation rule found a candidate antecedent.
enum class CandidateSource { kCF, kAF, kAFL, kFS, kSameSentencePriorEE, kIntraEE };

std::string_view Name(CandidateSource source);

// Binding of a pronoun to its antecedent. Unresolved pronouns have neither
// antecedent nor rule.
struct Resolution {
  MentionRef pronoun;
  std::optional<MentionRef> antecedent;
  std::optional<CandidateSource> rule;

  bool resolved() const { return antecedent.has_value(); }
  bool operator==(const Resolution &) const = default;
};

}  // namespace focuscycle

#endif  // FOCUSCYCLE_RESOLUTION_H_
