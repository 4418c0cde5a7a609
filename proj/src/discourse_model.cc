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

#include "focuscycle/discourse_model.h"

#include <algorithm>
#include <array>
#include <cctype>
#include <functional>
#include <set>
#include <sstream>

#include "builtin_data.h"
#include "focuscycle/errors.h"
#include "json.hpp"

namespace focuscycle {

namespace {

using nlohmann::json;

template <typename Enum, std::size_t N>
using NameTable = std::array<std::pair<Enum, std::string_view>, N>;

constexpr NameTable<Gender, 4> kGenderNames{{
    {Gender::kMasculine, "masculine"},
    {Gender::kFeminine, "feminine"},
    {Gender::kNeuter, "neuter"},
    {Gender::kUnknown, "unknown"},
}};
constexpr NameTable<Number, 3> kNumberNames{{
    {Number::kSingular, "singular"},
    {Number::kPlural, "plural"},
    {Number::kUnknown, "unknown"},
}};
constexpr NameTable<Animacy, 3> kAnimacyNames{{
    {Animacy::kAnimate, "animate"},
    {Animacy::kInanimate, "inanimate"},
    {Animacy::kUnknown, "unknown"},
}};
constexpr NameTable<MentionKind, 2> kMentionKindNames{{
    {MentionKind::kNounPhrase, "noun_phrase"},
    {MentionKind::kPronoun, "pronoun"},
}};
constexpr NameTable<PronounSubkind, 4> kSubkindNames{{
    {PronounSubkind::kPossessive, "possessive"},
    {PronounSubkind::kReciprocal, "reciprocal"},
    {PronounSubkind::kReflexive, "reflexive"},
    {PronounSubkind::kPersonal, "personal"},
}};
constexpr NameTable<PronounCategory, 2> kCategoryNames{{
    {PronounCategory::kPRR, "PRR"},
    {PronounCategory::kNonPRR, "nonPRR"},
}};
constexpr NameTable<CaseRole, 6> kCaseRoleNames{{
    {CaseRole::kAgent, "agent"},
    {CaseRole::kObject, "object"},
    {CaseRole::kRecipient, "recipient"},
    {CaseRole::kInstrument, "instrument"},
    {CaseRole::kLocation, "location"},
    {CaseRole::kComplementEvent, "complement_event"},
}};
constexpr NameTable<ThematicRole, 6> kThematicNames{{
    {ThematicRole::kTheme, "theme"},
    {ThematicRole::kGoal, "goal"},
    {ThematicRole::kInstrument, "instrument"},
    {ThematicRole::kLocation, "location"},
    {ThematicRole::kAgent, "agent"},
    {ThematicRole::kNone, "none"},
}};
constexpr NameTable<PredicateClass, 5> kPredicateClassNames{{
    {PredicateClass::kChangeOfState, "change_of_state"},
    {PredicateClass::kTransfer, "transfer"},
    {PredicateClass::kCommunication, "communication"},
    {PredicateClass::kStative, "stative"},
    {PredicateClass::kOther, "other"},
}};

template <typename Enum, std::size_t N>
std::string_view Lookup(const NameTable<Enum, N> &table, Enum value) {
  for (const auto &[e, name] : table) {
    if (e == value) return name;
  }
  return "?";
}

template <typename Enum, std::size_t N>
std::optional<Enum> Lookup(const NameTable<Enum, N> &table,
                           std::string_view name) {
  for (const auto &[e, n] : table) {
    if (n == name) return e;
  }
  return std::nullopt;
}

std::string Lowercase(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  }
  return out;
}

std::string Trim(std::string_view text) {
  std::size_t begin = 0;
  std::size_t end = text.size();
  while (begin < end && std::isspace(static_cast<unsigned char>(text[begin]))) ++begin;
  while (end > begin && std::isspace(static_cast<unsigned char>(text[end - 1]))) --end;
  return std::string(text.substr(begin, end - begin));
}

// Field accessors that turn type mismatches into SchemaError with a path.
const json &Field(const json &object, const char *key, const std::string &path) {
  auto it = object.find(key);
  if (it == object.end()) {
    throw SchemaError(path + ": missing field \"" + key + "\"");
  }
  return *it;
}

std::string StringField(const json &object, const char *key,
                        const std::string &path) {
  const json &value = Field(object, key, path);
  if (!value.is_string()) {
    throw SchemaError(path + "." + key + ": expected a string");
  }
  return value.get<std::string>();
}

const json &ArrayField(const json &object, const char *key,
                       const std::string &path) {
  const json &value = Field(object, key, path);
  if (!value.is_array()) {
    throw SchemaError(path + "." + key + ": expected an array");
  }
  return value;
}

template <typename Enum>
Enum EnumField(const json &object, const char *key, const std::string &path,
               std::optional<Enum> (*parse)(std::string_view),
               std::optional<Enum> fallback = std::nullopt) {
  auto it = object.find(key);
  if (it == object.end()) {
    if (fallback) return *fallback;
    throw SchemaError(path + ": missing field \"" + key + "\"");
  }
  if (!it->is_string()) {
    throw SchemaError(path + "." + key + ": expected a string");
  }
  auto parsed = parse(it->get<std::string>());
  if (!parsed) {
    throw SchemaError(path + "." + key + ": invalid value \"" +
                      it->get<std::string>() + "\"");
  }
  return *parsed;
}

// Parser-internal mention record before global ordering is known.
struct PendingMention {
  Mention mention;
  bool attached = false;
};

struct PendingSlot {
  CaseRole case_role;
  std::optional<ThematicRole> thematic;
  std::optional<std::size_t> mention;  // index into the sentence's pending list
  std::optional<std::size_t> event;    // ee_index
};

}  // namespace

bool FeaturesCompatible(const FeatureSet &a, const FeatureSet &b) {
  auto field = [](auto x, auto y, auto unknown) {
    return x == unknown || y == unknown || x == y;
  };
  return field(a.number, b.number, Number::kUnknown) &&
         field(a.gender, b.gender, Gender::kUnknown) &&
         field(a.animacy, b.animacy, Animacy::kUnknown) &&
         (a.semantic_class.empty() || b.semantic_class.empty() ||
          a.semantic_class == b.semantic_class);
}

PronounClass MakePronounClass(PronounSubkind subkind) {
  return PronounClass{subkind == PronounSubkind::kPersonal
                          ? PronounCategory::kNonPRR
                          : PronounCategory::kPRR,
                      subkind};
}

std::string_view Name(Gender value) { return Lookup(kGenderNames, value); }
std::string_view Name(Number value) { return Lookup(kNumberNames, value); }
std::string_view Name(Animacy value) { return Lookup(kAnimacyNames, value); }
std::string_view Name(MentionKind value) { return Lookup(kMentionKindNames, value); }
std::string_view Name(PronounSubkind value) { return Lookup(kSubkindNames, value); }
std::string_view Name(PronounCategory value) { return Lookup(kCategoryNames, value); }
std::string_view Name(CaseRole value) { return Lookup(kCaseRoleNames, value); }
std::string_view Name(ThematicRole value) { return Lookup(kThematicNames, value); }
std::string_view Name(PredicateClass value) {
  return Lookup(kPredicateClassNames, value);
}

std::optional<Gender> ParseGender(std::string_view name) {
  return Lookup(kGenderNames, name);
}
std::optional<Number> ParseNumber(std::string_view name) {
  return Lookup(kNumberNames, name);
}
std::optional<Animacy> ParseAnimacy(std::string_view name) {
  return Lookup(kAnimacyNames, name);
}
std::optional<MentionKind> ParseMentionKind(std::string_view name) {
  return Lookup(kMentionKindNames, name);
}
std::optional<PronounSubkind> ParsePronounSubkind(std::string_view name) {
  return Lookup(kSubkindNames, name);
}
std::optional<CaseRole> ParseCaseRole(std::string_view name) {
  return Lookup(kCaseRoleNames, name);
}
std::optional<ThematicRole> ParseThematicRole(std::string_view name) {
  return Lookup(kThematicNames, name);
}
std::optional<PredicateClass> ParsePredicateClass(std::string_view name) {
  return Lookup(kPredicateClassNames, name);
}

Document::Document(std::vector<Sentence> sentences, std::vector<Mention> mentions)
    : sentences_(std::move(sentences)), mentions_(std::move(mentions)) {
  for (std::uint32_t i = 0; i < mentions_.size(); ++i) {
    by_id_.emplace(mentions_[i].id, MentionRef{i});
  }
}

std::optional<MentionRef> Document::find_mention(std::string_view id) const {
  auto it = by_id_.find(id);
  if (it == by_id_.end()) return std::nullopt;
  return it->second;
}

std::size_t Document::event_count() const {
  std::size_t count = 0;
  for (const Sentence &s : sentences_) count += s.events.size();
  return count;
}

Document ParseDocument(std::string_view serialized) {
  json root;
  try {
    root = json::parse(serialized.begin(), serialized.end());
  } catch (const json::parse_error &e) {
    throw SchemaError(std::string("malformed JSON: ") + e.what());
  }
  if (!root.is_object()) throw SchemaError("document: expected an object");
  const json &sentences_json = ArrayField(root, "sentences", "document");

  std::set<std::string> mention_ids;
  std::set<std::string> event_ids;
  std::vector<Sentence> sentences;
  std::vector<Mention> mentions;

  for (std::size_t si = 0; si < sentences_json.size(); ++si) {
    const std::string spath = "sentences[" + std::to_string(si) + "]";
    const json &sj = sentences_json[si];
    if (!sj.is_object()) throw SchemaError(spath + ": expected an object");

    Sentence sentence;
    if (sj.contains("text")) sentence.text = StringField(sj, "text", spath);

    // Mentions.
    std::vector<PendingMention> pending;
    std::map<std::string, std::size_t> local_mentions;
    const json &mentions_json = ArrayField(sj, "mentions", spath);
    std::set<int> offsets;
    for (std::size_t mi = 0; mi < mentions_json.size(); ++mi) {
      const std::string mpath = spath + ".mentions[" + std::to_string(mi) + "]";
      const json &mj = mentions_json[mi];
      if (!mj.is_object()) throw SchemaError(mpath + ": expected an object");
      Mention m;
      m.id = StringField(mj, "id", mpath);
      if (m.id.empty()) throw SchemaError(mpath + ".id: must not be empty");
      if (!mention_ids.insert(m.id).second) {
        throw SchemaError(mpath + ": duplicate mention id \"" + m.id + "\"");
      }
      m.kind = EnumField(mj, "kind", mpath, &ParseMentionKind);
      m.surface = StringField(mj, "surface", mpath);
      if (mj.contains("features")) {
        const json &fj = mj["features"];
        if (!fj.is_object()) throw SchemaError(mpath + ".features: expected an object");
        const std::string fpath = mpath + ".features";
        m.features.gender =
            EnumField(fj, "gender", fpath, &ParseGender, std::optional(Gender::kUnknown));
        m.features.number =
            EnumField(fj, "number", fpath, &ParseNumber, std::optional(Number::kUnknown));
        m.features.animacy = EnumField(fj, "animacy", fpath, &ParseAnimacy,
                                       std::optional(Animacy::kUnknown));
        if (fj.contains("semantic_class")) {
          m.features.semantic_class = StringField(fj, "semantic_class", fpath);
        }
      }
      const json &offset = Field(mj, "token_offset", mpath);
      if (!offset.is_number_integer() || offset.get<long long>() < 0) {
        throw SchemaError(mpath + ".token_offset: expected a non-negative integer");
      }
      m.token_offset = offset.get<int>();
      if (!offsets.insert(m.token_offset).second) {
        throw SchemaError(mpath + ": token_offset " + std::to_string(m.token_offset) +
                          " is used by another mention of the sentence");
      }
      if (mj.contains("pronoun_subkind")) {
        if (m.kind != MentionKind::kPronoun) {
          throw SchemaError(mpath + ".pronoun_subkind: only valid on pronouns");
        }
        m.subkind_hint = EnumField(mj, "pronoun_subkind", mpath, &ParsePronounSubkind);
      }
      m.sentence_index = static_cast<int>(si);
      local_mentions.emplace(m.id, pending.size());
      pending.push_back({std::move(m), false});
    }

    // Events.
    const json &events_json = ArrayField(sj, "events", spath);
    if (events_json.empty()) {
      throw SchemaError(spath + ": a sentence needs at least one event");
    }
    std::map<std::string, std::size_t> local_events;
    for (std::size_t ei = 0; ei < events_json.size(); ++ei) {
      const std::string epath = spath + ".events[" + std::to_string(ei) + "]";
      if (!events_json[ei].is_object()) throw SchemaError(epath + ": expected an object");
      std::string id = StringField(events_json[ei], "id", epath);
      if (id.empty()) throw SchemaError(epath + ".id: must not be empty");
      if (!event_ids.insert(id).second) {
        throw SchemaError(epath + ": duplicate event id \"" + id + "\"");
      }
      local_events.emplace(id, ei);
    }

    std::vector<std::vector<PendingSlot>> pending_slots(events_json.size());
    std::vector<int> complement_parent(events_json.size(), -1);
    for (std::size_t ei = 0; ei < events_json.size(); ++ei) {
      const std::string epath = spath + ".events[" + std::to_string(ei) + "]";
      const json &ej = events_json[ei];
      ElementaryEvent event;
      event.id = StringField(ej, "id", epath);
      event.predicate = StringField(ej, "predicate", epath);
      event.predicate_class =
          EnumField(ej, "predicate_class", epath, &ParsePredicateClass);
      event.sentence_index = static_cast<int>(si);
      event.ee_index = static_cast<int>(ei);

      const json &slots_json = ArrayField(ej, "slots", epath);
      int last_offset = -1;
      for (std::size_t k = 0; k < slots_json.size(); ++k) {
        const std::string kpath = epath + ".slots[" + std::to_string(k) + "]";
        const json &kj = slots_json[k];
        if (!kj.is_object()) throw SchemaError(kpath + ": expected an object");
        PendingSlot slot;
        slot.case_role = EnumField(kj, "case_role", kpath, &ParseCaseRole);
        if (kj.contains("thematic")) {
          slot.thematic = EnumField(kj, "thematic", kpath, &ParseThematicRole);
        }
        if (!kj.contains("filler")) {
          throw SchemaError(kpath + ": unattached slot (no filler)");
        }
        const json &filler = kj["filler"];
        if (!filler.is_object() || filler.size() != 1 ||
            !(filler.contains("mention") || filler.contains("event"))) {
          throw SchemaError(kpath +
                            ".filler: expected {\"mention\": id} or {\"event\": id}");
        }
        if (filler.contains("mention")) {
          if (slot.case_role == CaseRole::kComplementEvent) {
            throw SchemaError(kpath + ": complement_event slots must reference an event");
          }
          std::string ref = StringField(filler, "mention", kpath + ".filler");
          auto it = local_mentions.find(ref);
          if (it == local_mentions.end()) {
            throw DanglingReference(kpath + ": unknown mention \"" + ref +
                                    "\" in this sentence");
          }
          PendingMention &target = pending[it->second];
          if (target.attached) {
            throw SchemaError(kpath + ": mention \"" + ref +
                              "\" already fills another slot");
          }
          target.attached = true;
          target.mention.ee_index = static_cast<int>(ei);
          if (target.mention.token_offset <= last_offset) {
            throw SchemaError(kpath + ": slots must follow the surface order of their fillers");
          }
          last_offset = target.mention.token_offset;
          slot.mention = it->second;
        } else {
          if (slot.case_role != CaseRole::kComplementEvent) {
            throw SchemaError(kpath + ": only complement_event slots may reference an event");
          }
          std::string ref = StringField(filler, "event", kpath + ".filler");
          auto it = local_events.find(ref);
          if (it == local_events.end()) {
            throw DanglingReference(kpath + ": unknown event \"" + ref +
                                    "\" in this sentence");
          }
          if (it->second == ei) {
            throw CyclicNesting(kpath + ": event \"" + ref + "\" nests itself");
          }
          if (complement_parent[it->second] != -1) {
            throw SchemaError(kpath + ": event \"" + ref +
                              "\" is already the complement of another event");
          }
          complement_parent[it->second] = static_cast<int>(ei);
          slot.event = it->second;
        }
        pending_slots[ei].push_back(slot);
      }
      sentence.events.push_back(std::move(event));
    }

    // Complement nesting must be a forest.
    for (std::size_t ei = 0; ei < complement_parent.size(); ++ei) {
      std::size_t steps = 0;
      for (int p = complement_parent[ei]; p != -1; p = complement_parent[p]) {
        if (static_cast<std::size_t>(p) == ei || ++steps > complement_parent.size()) {
          throw CyclicNesting(spath + ": complement cycle through event \"" +
                              sentence.events[ei].id + "\"");
        }
      }
    }

    for (const PendingMention &pm : pending) {
      if (!pm.attached) {
        throw SchemaError(spath + ": unattached mention \"" + pm.mention.id +
                          "\" fills no slot");
      }
    }

    // Order the sentence's mentions by (ee_index, token_offset) and assign
    // global refs.
    std::vector<std::size_t> order(pending.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      const Mention &ma = pending[a].mention;
      const Mention &mb = pending[b].mention;
      return std::pair(ma.ee_index, ma.token_offset) <
             std::pair(mb.ee_index, mb.token_offset);
    });
    std::vector<MentionRef> global(pending.size());
    for (std::size_t i : order) {
      global[i] = MentionRef{static_cast<std::uint32_t>(mentions.size())};
      sentence.mentions.push_back(global[i]);
      mentions.push_back(pending[i].mention);
    }

    for (std::size_t ei = 0; ei < pending_slots.size(); ++ei) {
      for (const PendingSlot &ps : pending_slots[ei]) {
        Slot slot;
        slot.case_role = ps.case_role;
        slot.thematic = ps.thematic.value_or(ThematicRole::kNone);
        slot.thematic_annotated = ps.thematic.has_value();
        if (ps.mention) {
          slot.filler = global[*ps.mention];
        } else {
          slot.filler = EventRef{static_cast<std::uint32_t>(*ps.event)};
        }
        sentence.events[ei].slots.push_back(slot);
      }
    }
    sentences.push_back(std::move(sentence));
  }
  return Document(std::move(sentences), std::move(mentions));
}

std::string SerializeDocument(const Document &document) {
  nlohmann::ordered_json root;
  root["sentences"] = nlohmann::ordered_json::array();
  for (const Sentence &sentence : document.sentences()) {
    nlohmann::ordered_json sj;
    sj["text"] = sentence.text;
    sj["mentions"] = nlohmann::ordered_json::array();
    for (MentionRef ref : sentence.mentions) {
      const Mention &m = document.mention(ref);
      nlohmann::ordered_json mj;
      mj["id"] = m.id;
      mj["kind"] = Name(m.kind);
      mj["surface"] = m.surface;
      mj["features"] = {{"gender", Name(m.features.gender)},
                        {"number", Name(m.features.number)},
                        {"animacy", Name(m.features.animacy)},
                        {"semantic_class", m.features.semantic_class}};
      mj["token_offset"] = m.token_offset;
      if (m.subkind_hint) mj["pronoun_subkind"] = Name(*m.subkind_hint);
      sj["mentions"].push_back(std::move(mj));
    }
    sj["events"] = nlohmann::ordered_json::array();
    for (const ElementaryEvent &event : sentence.events) {
      nlohmann::ordered_json ej;
      ej["id"] = event.id;
      ej["predicate"] = event.predicate;
      ej["predicate_class"] = Name(event.predicate_class);
      ej["slots"] = nlohmann::ordered_json::array();
      for (const Slot &slot : event.slots) {
        nlohmann::ordered_json kj;
        kj["case_role"] = Name(slot.case_role);
        if (const MentionRef *m = slot.mention()) {
          kj["filler"] = {{"mention", document.mention(*m).id}};
        } else {
          kj["filler"] = {{"event", sentence.events[slot.event()->ee_index].id}};
        }
        if (slot.thematic_annotated) kj["thematic"] = Name(slot.thematic);
        ej["slots"].push_back(std::move(kj));
      }
      sj["events"].push_back(std::move(ej));
    }
    root["sentences"].push_back(std::move(sj));
  }
  return root.dump(2) + "\n";
}

PronounLexicon PronounLexicon::FromTable(std::string_view table) {
  PronounLexicon lexicon;
  std::istringstream in{std::string(table)};
  std::string line;
  int line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    std::string content = Trim(line.substr(0, line.find('#')));
    if (content.empty()) continue;
    std::size_t tab = content.find('\t');
    if (tab == std::string::npos) {
      throw SchemaError("pronoun lexicon line " + std::to_string(line_number) +
                        ": expected \"surface<TAB>subkind\"");
    }
    std::string surface = Lowercase(Trim(content.substr(0, tab)));
    std::string kind = Trim(content.substr(tab + 1));
    auto subkind = ParsePronounSubkind(kind);
    if (surface.empty() || !subkind) {
      throw SchemaError("pronoun lexicon line " + std::to_string(line_number) +
                        ": invalid entry");
    }
    auto &kinds = lexicon.entries_[surface];
    if (std::find(kinds.begin(), kinds.end(), *subkind) == kinds.end()) {
      kinds.push_back(*subkind);
    }
  }
  return lexicon;
}

const PronounLexicon &PronounLexicon::Builtin() {
  static const PronounLexicon lexicon = FromTable(internal::BuiltinPronounTable());
  return lexicon;
}

PronounClass PronounLexicon::Classify(const Mention &mention) const {
  if (!mention.pronoun()) {
    throw NotAPronoun("mention \"" + mention.id + "\" (" + mention.surface +
                      ") is a noun phrase");
  }
  auto it = entries_.find(Lowercase(Trim(mention.surface)));
  if (it == entries_.end()) {
    throw UnknownPronoun("pronoun \"" + mention.surface + "\" (mention \"" +
                         mention.id + "\") is not in the lexicon");
  }
  const std::vector<PronounSubkind> &kinds = it->second;
  if (!mention.subkind_hint) return MakePronounClass(kinds.front());
  if (std::find(kinds.begin(), kinds.end(), *mention.subkind_hint) == kinds.end()) {
    throw UnknownPronoun("pronoun \"" + mention.surface + "\" has no " +
                         std::string(Name(*mention.subkind_hint)) + " reading");
  }
  return MakePronounClass(*mention.subkind_hint);
}

std::vector<Diagnostic> ValidateInitialEvent(const Document &document,
                                             const PronounLexicon &lexicon,
                                             std::optional<int> initial_ee) {
  std::vector<Diagnostic> diagnostics;
  if (document.sentences().empty()) return diagnostics;
  const Sentence &first = document.sentences().front();
  const int ee = initial_ee.value_or(0);
  if (ee < 0 || static_cast<std::size_t>(ee) >= first.events.size()) return diagnostics;
  const ElementaryEvent &event = first.events[ee];
  for (const Slot &slot : event.slots) {
    const MentionRef *ref = slot.mention();
    if (ref == nullptr) continue;
    const Mention &m = document.mention(*ref);
    if (!m.pronoun()) continue;
    try {
      if (!lexicon.Classify(m).prr()) {
        diagnostics.push_back({Severity::kWarning, "initial_anaphor",
                               "non-PRR pronoun \"" + m.surface +
                                   "\" in the initial elementary event \"" +
                                   event.id + "\"",
                               m.id});
      }
    } catch (const UnknownPronoun &e) {
      diagnostics.push_back({Severity::kError, "UnknownPronoun", e.what(), m.id});
    }
  }
  return diagnostics;
}

}  // namespace focuscycle
