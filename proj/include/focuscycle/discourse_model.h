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

#ifndef FOCUSCYCLE_DISCOURSE_MODEL_H_
#define FOCUSCYCLE_DISCOURSE_MODEL_H_

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace focuscycle {

enum class Gender { kMasculine, kFeminine, kNeuter, kUnknown };
enum class Number { kSingular, kPlural, kUnknown };
enum class Animacy { kAnimate, kInanimate, kUnknown };

// Agreement features of a mention. For pronouns the features double as the
// selectional expectation of the slot the pronoun fills. An empty
// semantic_class is unconstrained.
struct FeatureSet {
  Gender gender = Gender::kUnknown;
  Number number = Number::kUnknown;
  Animacy animacy = Animacy::kUnknown;
  std::string semantic_class;

  bool operator==(const FeatureSet &) const = default;
};

enum class MentionKind { kNounPhrase, kPronoun };

enum class PronounCategory { kPRR, kNonPRR };
enum class PronounSubkind { kPossessive, kReciprocal, kReflexive, kPersonal };

struct PronounClass {
  PronounCategory category = PronounCategory::kNonPRR;
  PronounSubkind subkind = PronounSubkind::kPersonal;

  bool prr() const { return category == PronounCategory::kPRR; }
  bool operator==(const PronounClass &) const = default;
};

// Field-wise agreement: unknown values and an empty semantic class match
// anything, otherwise values must be equal.
bool FeaturesCompatible(const FeatureSet &a, const FeatureSet &b);

// Builds the class for a subkind; the category follows from it.
PronounClass MakePronounClass(PronounSubkind subkind);

// Index of a mention in Document::mentions. Mentions are stored in document
// order, so comparing refs compares document positions.
struct MentionRef {
  std::uint32_t index = 0;
  auto operator<=>(const MentionRef &) const = default;
};

// Sentence-local reference to an elementary event by ee_index.
struct EventRef {
  std::uint32_t ee_index = 0;
  auto operator<=>(const EventRef &) const = default;
};

struct Mention {
  std::string id;
  MentionKind kind = MentionKind::kNounPhrase;
  std::string surface;
  FeatureSet features;
  int sentence_index = 0;
  int ee_index = 0;
  int token_offset = 0;
  // Selects among the lexicon readings of an ambiguous pronoun surface.
  std::optional<PronounSubkind> subkind_hint;

  bool pronoun() const { return kind == MentionKind::kPronoun; }
  bool operator==(const Mention &) const = default;
};

enum class CaseRole {
  kAgent,
  kObject,
  kRecipient,
  kInstrument,
  kLocation,
  kComplementEvent
};

enum class ThematicRole { kTheme, kGoal, kInstrument, kLocation, kAgent, kNone };

enum class PredicateClass {
  kChangeOfState,
  kTransfer,
  kCommunication,
  kStative,
  kOther
};

struct Slot {
  CaseRole case_role = CaseRole::kAgent;
  ThematicRole thematic = ThematicRole::kNone;
  // True when the thematic role came from the input annotation. Annotated
  // roles are never overwritten by the rule table.
  bool thematic_annotated = false;
  std::variant<MentionRef, EventRef> filler;

  const MentionRef *mention() const { return std::get_if<MentionRef>(&filler); }
  const EventRef *event() const { return std::get_if<EventRef>(&filler); }
  bool operator==(const Slot &) const = default;
};

struct ElementaryEvent {
  std::string id;
  std::string predicate;
  PredicateClass predicate_class = PredicateClass::kOther;
  std::vector<Slot> slots;
  int sentence_index = 0;
  int ee_index = 0;

  bool operator==(const ElementaryEvent &) const = default;
};

struct Sentence {
  std::string text;
  std::vector<ElementaryEvent> events;
  // Mentions of this sentence in document order.
  std::vector<MentionRef> mentions;

  bool operator==(const Sentence &) const = default;
};

// A validated, immutable annotated document.
class Document {
 public:
  Document() = default;
  Document(std::vector<Sentence> sentences, std::vector<Mention> mentions);

  const std::vector<Sentence> &sentences() const { return sentences_; }
  const std::vector<Mention> &mentions() const { return mentions_; }
  const Mention &mention(MentionRef ref) const { return mentions_[ref.index]; }
  const ElementaryEvent &event(int sentence, EventRef ref) const {
    return sentences_[sentence].events[ref.ee_index];
  }
  std::optional<MentionRef> find_mention(std::string_view id) const;

  // Number of elementary events over all sentences.
  std::size_t event_count() const;

  bool operator==(const Document &other) const {
    return sentences_ == other.sentences_ && mentions_ == other.mentions_;
  }

 private:
  std::vector<Sentence> sentences_;
  std::vector<Mention> mentions_;
  std::map<std::string, MentionRef, std::less<>> by_id_;
};

// Parses a document in the JSON annotation schema and validates all
// cross-references. Throws SchemaError, DanglingReference or CyclicNesting.
Document ParseDocument(std::string_view serialized);

// Serializes back into the annotation schema. Thematic roles are emitted
// only for annotated slots, so parse/serialize/parse is structure preserving.
std::string SerializeDocument(const Document &document);

// Closed pronoun lexicon mapping surface forms to subkinds.
class PronounLexicon {
 public:
  // Parses a tab separated "surface<TAB>subkind" table; '#' starts a comment.
  static PronounLexicon FromTable(std::string_view table);

  // The lexicon shipped in data/pronouns.tsv.
  static const PronounLexicon &Builtin();

  // Throws NotAPronoun for noun phrases and UnknownPronoun for surfaces (or
  // subkind hints) outside the lexicon. Matching is case-insensitive.
  PronounClass Classify(const Mention &mention) const;

  std::size_t size() const { return entries_.size(); }

 private:
  // Lowercased surface -> subkinds in table order.
  std::map<std::string, std::vector<PronounSubkind>, std::less<>> entries_;
};

enum class Severity { kWarning, kError };

struct Diagnostic {
  Severity severity = Severity::kWarning;
  std::string code;
  std::string message;
  std::optional<std::string> mention_id;
};

// Warns about every non-PRR pronoun in the initial elementary event (the
// first event processed). With `initial_ee` unset the event with ee_index 0
// of the first sentence is checked.
std::vector<Diagnostic> ValidateInitialEvent(
    const Document &document, const PronounLexicon &lexicon,
    std::optional<int> initial_ee = std::nullopt);

// Enum <-> string names used by the JSON schema.
std::string_view Name(Gender value);
std::string_view Name(Number value);
std::string_view Name(Animacy value);
std::string_view Name(MentionKind value);
std::string_view Name(PronounSubkind value);
std::string_view Name(PronounCategory value);
std::string_view Name(CaseRole value);
std::string_view Name(ThematicRole value);
std::string_view Name(PredicateClass value);

std::optional<Gender> ParseGender(std::string_view name);
std::optional<Number> ParseNumber(std::string_view name);
std::optional<Animacy> ParseAnimacy(std::string_view name);
std::optional<MentionKind> ParseMentionKind(std::string_view name);
std::optional<PronounSubkind> ParsePronounSubkind(std::string_view name);
std::optional<CaseRole> ParseCaseRole(std::string_view name);
std::optional<ThematicRole> ParseThematicRole(std::string_view name);
std::optional<PredicateClass> ParsePredicateClass(std::string_view name);

}  // namespace focuscycle

#endif  // FOCUSCYCLE_DISCOURSE_MODEL_H_
