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

#include "focuscycle/focus_engine.h"

#include <algorithm>
#include <set>

#include "focuscycle/errors.h"

namespace focuscycle {

namespace {

bool Contains(const std::vector<MentionRef> &list, MentionRef ref) {
  return std::find(list.begin(), list.end(), ref) != list.end();
}

void Erase(std::vector<MentionRef> &list, MentionRef ref) {
  list.erase(std::remove(list.begin(), list.end(), ref), list.end());
}

// Pushes onto a bounded stack; an existing entry moves to the top and the
// bottom entry is evicted on overflow.
void Push(std::vector<MentionRef> &stack, MentionRef ref) {
  Erase(stack, ref);
  stack.push_back(ref);
  if (stack.size() > kMaxStackDepth) stack.erase(stack.begin());
}

// Pops everything above `ref` and `ref` itself.
void PopTo(std::vector<MentionRef> &stack, MentionRef ref) {
  auto it = std::find(stack.begin(), stack.end(), ref);
  stack.erase(it, stack.end());
}

bool Unique(const std::vector<MentionRef> &list) {
  std::set<MentionRef> seen(list.begin(), list.end());
  return seen.size() == list.size();
}

}  // namespace

std::string_view Name(CandidateSource source) {
  switch (source) {
    case CandidateSource::kCF: return "CF";
    case CandidateSource::kAF: return "AF";
    case CandidateSource::kAFL: return "AFL";
    case CandidateSource::kFS: return "FS";
    case CandidateSource::kSameSentencePriorEE: return "same_sentence_prior_EE";
    case CandidateSource::kIntraEE: return "intra_EE";
  }
  return "?";
}

std::string_view Name(FocusEvent event) {
  switch (event) {
    case FocusEvent::kExpected: return "expected";
    case FocusEvent::kConfirm: return "confirm";
    case FocusEvent::kMovement: return "movement";
    case FocusEvent::kReturn: return "return";
    case FocusEvent::kRetain: return "retain";
  }
  return "?";
}

bool FocusState::InAlternates(MentionRef ref) const {
  return Contains(alternate_focus_list, ref);
}

bool FocusState::InFocusStack(MentionRef ref) const { return Contains(focus_stack, ref); }

bool FocusState::InActorStack(MentionRef ref) const { return Contains(actor_stack, ref); }

bool FocusState::Holds(MentionRef ref) const {
  return current_focus == ref || actor_focus == ref || InAlternates(ref) ||
         InFocusStack(ref) || InActorStack(ref);
}

bool RegistersConsistent(const FocusState &state) {
  if (state.current_focus && state.InAlternates(*state.current_focus)) return false;
  return Unique(state.alternate_focus_list) && Unique(state.focus_stack) &&
         Unique(state.actor_stack);
}

bool IsAgentive(MentionRef pronoun, const ElementaryEvent &event) {
  for (const Slot &slot : event.slots) {
    const MentionRef *m = slot.mention();
    if (m != nullptr && *m == pronoun) return slot.case_role == CaseRole::kAgent;
  }
  return false;
}

FocusState ExpectedFocus(const ElementaryEvent &initial, const Document &document,
                         const PronounLexicon &lexicon) {
  struct Filler {
    const Slot *slot;
    MentionRef ref;
  };
  std::vector<Filler> fillers;
  for (const Slot &slot : initial.slots) {
    const MentionRef *ref = slot.mention();
    if (ref == nullptr) continue;
    const Mention &m = document.mention(*ref);
    if (m.pronoun()) {
      if (!lexicon.Classify(m).prr()) {
        throw InitialAnaphor("initial event \"" + initial.id +
                             "\" contains the non-PRR pronoun \"" + m.surface + "\"");
      }
      continue;
    }
    fillers.push_back({&slot, *ref});
  }
  if (fillers.empty()) {
    throw EmptyEvent("initial event \"" + initial.id + "\" has no noun phrase filler");
  }

  auto first_with = [&](auto predicate) -> std::optional<MentionRef> {
    for (const Filler &f : fillers) {
      if (predicate(*f.slot)) return f.ref;
    }
    return std::nullopt;
  };

  FocusState state;
  state.current_focus =
      first_with([](const Slot &s) { return s.thematic == ThematicRole::kTheme; });
  if (!state.current_focus) {
    // Slots follow surface order, so the first match has the lowest offset.
    state.current_focus = first_with([](const Slot &s) {
      return s.thematic == ThematicRole::kGoal ||
             s.thematic == ThematicRole::kInstrument ||
             s.thematic == ThematicRole::kLocation;
    });
  }
  if (!state.current_focus) {
    state.current_focus =
        first_with([](const Slot &s) { return s.thematic == ThematicRole::kAgent; });
  }
  if (!state.current_focus) state.current_focus = fillers.front().ref;

  state.actor_focus =
      first_with([](const Slot &s) { return s.case_role == CaseRole::kAgent; });
  for (const Filler &f : fillers) {
    if (f.ref != state.current_focus) state.alternate_focus_list.push_back(f.ref);
  }
  return state;
}

FocusUpdate UpdateFocus(const FocusState &state, const ElementaryEvent &event,
                        std::span<const Resolution> resolutions,
                        const Document &document) {
  auto fills_event = [&](MentionRef ref) {
    return std::any_of(event.slots.begin(), event.slots.end(), [&](const Slot &s) {
      const MentionRef *m = s.mention();
      return m != nullptr && *m == ref;
    });
  };

  std::vector<const Resolution *> resolved;
  for (const Resolution &r : resolutions) {
    if (!fills_event(r.pronoun)) {
      throw UnknownResolutionTarget("pronoun \"" + document.mention(r.pronoun).id +
                                    "\" does not fill a slot of event \"" + event.id + "\"");
    }
    if (!r.antecedent) continue;
    const Mention &target = document.mention(*r.antecedent);
    if (target.pronoun() || target.sentence_index > event.sentence_index) {
      throw UnknownResolutionTarget("antecedent \"" + target.id + "\" of pronoun \"" +
                                    document.mention(r.pronoun).id +
                                    "\" is not a prior discourse entity");
    }
    resolved.push_back(&r);
  }

  auto actor_directed = [&](const Resolution &r) {
    return r.rule == CandidateSource::kAF || IsAgentive(r.pronoun, event);
  };

  FocusUpdate update{state, FocusEvent::kRetain};
  FocusState &next = update.state;

  // Current focus: confirm > movement > return > retain.
  const bool confirmed = std::any_of(resolved.begin(), resolved.end(), [&](auto *r) {
    return state.current_focus && *r->antecedent == *state.current_focus;
  });
  if (confirmed) {
    update.event = FocusEvent::kConfirm;
  } else {
    const Resolution *move = nullptr;
    const Resolution *back = nullptr;
    for (const Resolution *r : resolved) {
      if (actor_directed(*r)) continue;
      if (move == nullptr && state.InAlternates(*r->antecedent)) move = r;
      if (back == nullptr && state.InFocusStack(*r->antecedent)) back = r;
    }
    if (move != nullptr) {
      if (state.current_focus) Push(next.focus_stack, *state.current_focus);
      next.current_focus = *move->antecedent;
      Erase(next.alternate_focus_list, *move->antecedent);
      update.event = FocusEvent::kMovement;
    } else if (back != nullptr) {
      PopTo(next.focus_stack, *back->antecedent);
      if (state.current_focus) {
        next.alternate_focus_list.insert(next.alternate_focus_list.begin(),
                                         *state.current_focus);
      }
      next.current_focus = *back->antecedent;
      update.event = FocusEvent::kReturn;
    }
  }

  // Actor focus mirrors the same rules over actor-directed resolutions.
  std::vector<const Resolution *> actor;
  for (const Resolution *r : resolved) {
    if (actor_directed(*r)) actor.push_back(r);
  }
  const bool actor_confirmed = std::any_of(actor.begin(), actor.end(), [&](auto *r) {
    return state.actor_focus && *r->antecedent == *state.actor_focus;
  });
  if (!actor_confirmed && !actor.empty()) {
    auto back = std::find_if(actor.begin(), actor.end(),
                             [&](auto *r) { return state.InActorStack(*r->antecedent); });
    if (back != actor.end()) {
      PopTo(next.actor_stack, *(*back)->antecedent);
      next.actor_focus = *(*back)->antecedent;
    } else {
      if (state.actor_focus) Push(next.actor_stack, *state.actor_focus);
      next.actor_focus = *actor.front()->antecedent;
    }
  }

  // The event's entities join the alternates, most recent first.
  std::vector<MentionRef> incoming;
  for (auto it = event.slots.rbegin(); it != event.slots.rend(); ++it) {
    const MentionRef *ref = it->mention();
    if (ref == nullptr) continue;
    if (!document.mention(*ref).pronoun()) {
      incoming.push_back(*ref);
      continue;
    }
    for (const Resolution &r : resolutions) {
      if (r.pronoun == *ref && r.antecedent) incoming.push_back(*r.antecedent);
    }
  }
  std::vector<MentionRef> alternates;
  for (const std::vector<MentionRef> *source : {&incoming, &next.alternate_focus_list}) {
    for (MentionRef ref : *source) {
      if (ref == next.current_focus || Contains(alternates, ref)) continue;
      alternates.push_back(ref);
    }
  }
  if (alternates.size() > kMaxAlternateFoci) alternates.resize(kMaxAlternateFoci);
  next.alternate_focus_list = std::move(alternates);
  return update;
}

}  // namespace focuscycle
