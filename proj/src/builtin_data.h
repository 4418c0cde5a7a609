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

#ifndef FOCUSCYCLE_SRC_BUILTIN_DATA_H_
#define FOCUSCYCLE_SRC_BUILTIN_DATA_H_

#include <string_view>

namespace focuscycle::internal {

// Contents of data/pronouns.tsv and data/thematic_rules.tsv, embedded at
// configure time.
std::string_view BuiltinPronounTable();
std::string_view BuiltinThematicRules();

}  // namespace focuscycle::internal

#endif  // FOCUSCYCLE_SRC_BUILTIN_DATA_H_
