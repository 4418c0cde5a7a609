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

#ifndef FOCUSCYCLE_ERRORS_H_
#define FOCUSCYCLE_ERRORS_H_

#include <stdexcept>
#include <string>

namespace focuscycle {

// Base class for all engine errors. The name() tag is stable and is what the
// CLI prints in front of the message.
class Error : public std::runtime_error {
 public:
  Error(const char *name, const std::string &message)
      : std::runtime_error(message), name_(name) {}
  const char *name() const { return name_; }

 private:
  const char *name_;
};

#define FOCUSCYCLE_DEFINE_ERROR(Type)                                   \
  class Type : public Error {                                           \
   public:                                                              \
    explicit Type(const std::string &message) : Error(#Type, message) {} \
  }

// Input document problems.
FOCUSCYCLE_DEFINE_ERROR(SchemaError);
FOCUSCYCLE_DEFINE_ERROR(DanglingReference);
FOCUSCYCLE_DEFINE_ERROR(CyclicNesting);

// Pronoun classification.
FOCUSCYCLE_DEFINE_ERROR(NotAPronoun);
FOCUSCYCLE_DEFINE_ERROR(UnknownPronoun);

// Thematic role assignment.
FOCUSCYCLE_DEFINE_ERROR(ConflictingTheme);

// Focus registers.
FOCUSCYCLE_DEFINE_ERROR(InitialAnaphor);
FOCUSCYCLE_DEFINE_ERROR(EmptyEvent);
FOCUSCYCLE_DEFINE_ERROR(UnknownResolutionTarget);

// Interpretation and evaluation.
FOCUSCYCLE_DEFINE_ERROR(NoAgreeingAntecedent);
FOCUSCYCLE_DEFINE_ERROR(ReadingExplosion);

// Scoring: gold and input disagree on the set of pronouns.
FOCUSCYCLE_DEFINE_ERROR(GoldMismatch);

#undef FOCUSCYCLE_DEFINE_ERROR

}  // namespace focuscycle

#endif  // FOCUSCYCLE_ERRORS_H_
