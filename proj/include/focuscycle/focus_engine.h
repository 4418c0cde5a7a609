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

#ifndef FOCUSCYCLE_FOCUS_ENGINE_H_
#define FOCUSCYCLE_FOCUS_ENGINE_H_

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "focuscycle/discourse_model.h"
#include "focuscycle/resolution.h"

namespace focuscycle {

inline constexpr std::size_t kMaxAlternateFoci = 20;
inline constexpr std::size_t kMaxStackDepth = 10;

// The focus registers. A plain value: readings copy it when they split.
// Registers only ever hold noun-phrase mentions; a resolved pronoun enters
// them as its antecedent.
struct FocusState {
  std::optional<MentionRef> current_focus;          // CF
  std::vector<MentionRef> alternate_focus_list;     // AFL, most recent first
  std::vector<MentionRef> focus_stack;              // FS, back() is the top
  std::optional<MentionRef> actor_focus;            // AF
  std::vector<MentionRef> actor_stack;              // back() is the top

  bool InAlternates(MentionRef ref) const;
  bool InFocusStack(MentionRef ref) const;
  bool InActorStack(MentionRef ref) const;
  // True if any register holds `ref`.
  bool Holds(MentionRef ref) const;

  bool operator==(const FocusState &) const = default;
};

// How update_focus treated the current focus.
enum class FocusEvent { kExpected, kConfirm, kMovement, kReturn, kRetain };

std::string_view Name(FocusEvent event);

// CF not in AFL and no register holds a duplicate.
bool RegistersConsistent(const FocusState &state);

// Expected focus for the discourse-initial event: the theme, else the
// earliest goal/instrument/location filler, else the agent. Pronoun fillers
// are skipped (PRRs are resolved beforehand). Throws InitialAnaphor if a
// non-PRR pronoun fills a slot and EmptyEvent if no noun phrase does.
FocusState ExpectedFocus(const ElementaryEvent &initial, const Document &document,
                         const PronounLexicon &lexicon);

struct FocusUpdate {
  FocusState state;
  FocusEvent event = FocusEvent::kRetain;
};

// One focusing step after the pronouns of `event` were interpreted.
// `resolutions` covers the event's pronouns; a resolution is actor-directed
// when its pronoun fills an agent slot or its rule is AF. Confirmation beats
// movement beats return. Throws UnknownResolutionTarget when a resolution
// points at a pronoun or at a mention of a later sentence.
FocusUpdate UpdateFocus(const FocusState &state, const ElementaryEvent &event,
                        std::span<const Resolution> resolutions,
                        const Document &document);

// True if the pronoun fills an agent case slot of `event`.
bool IsAgentive(MentionRef pronoun, const ElementaryEvent &event);

}  // namespace focuscycle

#endif  // FOCUSCYCLE_FOCUS_ENGINE_H_
