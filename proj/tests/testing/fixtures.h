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

#ifndef FOCUSCYCLE_TESTS_TESTING_FIXTURES_H_
#define FOCUSCYCLE_TESTS_TESTING_FIXTURES_H_

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>

#include "focuscycle/discourse_model.h"
#include "json.hpp"

namespace focuscycle::testing {

inline std::string ReadFile(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

inline std::string CorpusPath(std::string_view name) {
  return std::string(FOCUSCYCLE_CORPUS_DIR) + "/" + std::string(name) + ".json";
}

inline std::string GoldPath(std::string_view name) {
  return std::string(FOCUSCYCLE_CORPUS_DIR) + "/gold/" + std::string(name) + ".gold.json";
}

inline Document LoadCorpus(std::string_view name) {
  return ParseDocument(ReadFile(CorpusPath(name)));
}

inline MentionRef Ref(const Document &doc, std::string_view id) {
  auto ref = doc.find_mention(id);
  if (!ref) throw std::runtime_error("no mention " + std::string(id));
  return *ref;
}

// Builds input JSON event by event. Feature shorthand is a space separated
// list: m/f/n for gender, sg/pl for number, an/in for animacy, anything else
// is the semantic class.
class DocBuilder {
 public:
  DocBuilder &Sentence(std::string text = "") {
    root_["sentences"].push_back(
        {{"text", text}, {"mentions", nlohmann::ordered_json::array()},
         {"events", nlohmann::ordered_json::array()}});
    offset_ = 0;
    return *this;
  }

  DocBuilder &Event(const std::string &id, const std::string &predicate_class = "other") {
    sentence()["events"].push_back({{"id", id},
                                    {"predicate", id},
                                    {"predicate_class", predicate_class},
                                    {"slots", nlohmann::ordered_json::array()}});
    return *this;
  }

  DocBuilder &Np(const std::string &role, const std::string &id,
                 const std::string &features = "") {
    return Add(role, id, "noun_phrase", id, features);
  }

  DocBuilder &Pro(const std::string &role, const std::string &id, const std::string &surface,
                  const std::string &features = "") {
    return Add(role, id, "pronoun", surface, features);
  }

  DocBuilder &Complement(const std::string &event_id) {
    slots().push_back({{"case_role", "complement_event"}, {"filler", {{"event", event_id}}}});
    return *this;
  }

  // Annotates the thematic role of the last slot.
  DocBuilder &Thematic(const std::string &role) {
    slots().back()["thematic"] = role;
    return *this;
  }

  // Sets a field on the last mention.
  DocBuilder &With(const std::string &key, const std::string &value) {
    sentence()["mentions"].back()[key] = value;
    return *this;
  }

  std::string Json() const { return root_.dump(); }
  Document Build() const { return ParseDocument(Json()); }

 private:
  nlohmann::ordered_json &sentence() { return root_["sentences"].back(); }
  nlohmann::ordered_json &slots() { return sentence()["events"].back()["slots"]; }

  DocBuilder &Add(const std::string &role, const std::string &id, const std::string &kind,
                  const std::string &surface, const std::string &features) {
    nlohmann::ordered_json f{{"gender", "unknown"},
                             {"number", "unknown"},
                             {"animacy", "unknown"},
                             {"semantic_class", ""}};
    std::istringstream words(features);
    for (std::string w; words >> w;) {
      if (w == "m") f["gender"] = "masculine";
      else if (w == "f") f["gender"] = "feminine";
      else if (w == "n") f["gender"] = "neuter";
      else if (w == "sg") f["number"] = "singular";
      else if (w == "pl") f["number"] = "plural";
      else if (w == "an") f["animacy"] = "animate";
      else if (w == "in") f["animacy"] = "inanimate";
      else f["semantic_class"] = w;
    }
    offset_ += 2;
    sentence()["mentions"].push_back({{"id", id},
                                      {"kind", kind},
                                      {"surface", surface},
                                      {"features", f},
                                      {"token_offset", offset_}});
    slots().push_back({{"case_role", role}, {"filler", {{"mention", id}}}});
    return *this;
  }

  nlohmann::ordered_json root_{{"sentences", nlohmann::ordered_json::array()}};
  int offset_ = 0;
};

}  // namespace focuscycle::testing

#endif  // FOCUSCYCLE_TESTS_TESTING_FIXTURES_H_
