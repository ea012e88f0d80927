// Copyright 2026 The isplan Authors.
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

// Semantic types and inferability links, and the alternative sets used to
// decide contrastive focus.
//
// KB file format, one declaration per line, `#` comments:
//
//   type <concept> <agent|object|event>
//   infer <concept> <concept>

#pragma once

#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "isplan/discourse_model.hpp"
#include "isplan/error.hpp"
#include "isplan/interlingua.hpp"

namespace isplan {

enum class SemanticType { agent, object, event };

inline std::string_view to_string(SemanticType type) {
  switch (type) {
    case SemanticType::agent: return "agent";
    case SemanticType::object: return "object";
    case SemanticType::event: return "event";
  }
  return "object";
}

inline std::optional<SemanticType> semantic_type_from_string(
    std::string_view text) {
  if (text == "agent") return SemanticType::agent;
  if (text == "object") return SemanticType::object;
  if (text == "event") return SemanticType::event;
  return std::nullopt;
}

class KnowledgeBase {
 public:
  // Returns false if the concept already has a different type.
  bool declare_type(const Concept& symbol, SemanticType type) {
    auto [it, inserted] = types_.try_emplace(symbol, type);
    return inserted || it->second == type;
  }

  // `symbol` becomes inferrable once `anchor` is in the discourse model.
  // Links are single-hop and one-directional.
  void declare_inference(const Concept& symbol, const Concept& anchor) {
    infer_links_.emplace(symbol, anchor);
  }

  std::optional<SemanticType> type_of(const Concept& symbol) const {
    auto it = types_.find(symbol);
    if (it == types_.end()) return std::nullopt;
    return it->second;
  }

  bool has_inference(const Concept& symbol, const Concept& anchor) const {
    return infer_links_.count({symbol, anchor}) != 0;
  }

  // True if some anchor linked from `symbol` is in the model.
  bool inferrable_from(const Concept& symbol,
                       const DiscourseModel& model) const {
    for (auto it = infer_links_.lower_bound({symbol, Concept{}});
         it != infer_links_.end() && it->first == symbol; ++it) {
      if (model.contains(it->second)) return true;
    }
    return false;
  }

  const std::map<Concept, SemanticType>& types() const { return types_; }
  const std::set<std::pair<Concept, Concept>>& infer_links() const {
    return infer_links_;
  }

 private:
  std::map<Concept, SemanticType> types_;
  std::set<std::pair<Concept, Concept>> infer_links_;
};

inline KnowledgeBase load_kb(std::string_view text) {
  KnowledgeBase kb;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream words(line);
    std::string keyword, first, second, extra;
    if (!(words >> keyword)) continue;
    if (!(words >> first >> second) || (words >> extra)) {
      throw ParseError("expected '" + keyword + " <concept> <value>'", line_no,
                       1);
    }
    if (keyword == "type") {
      auto type = semantic_type_from_string(second);
      if (!type) {
        throw ParseError("unknown semantic type '" + second + "'", line_no, 1);
      }
      if (!kb.declare_type(first, *type)) {
        throw KnowledgeError("line " + std::to_string(line_no) +
                             ": conflicting type declarations for '" + first +
                             "'");
      }
    } else if (keyword == "infer") {
      kb.declare_inference(first, second);
    } else {
      throw ParseError("unknown declaration '" + keyword + "'", line_no, 1);
    }
  }
  return kb;
}

// Throws KnowledgeError naming the first realized concept with no type.
inline void require_types(const KnowledgeBase& kb,
                          const std::vector<SemanticRep>& document) {
  for (std::size_t i = 0; i < document.size(); ++i) {
    for (const EntityRef& ref : realized_entities(document[i], true)) {
      if (!kb.type_of(ref.symbol)) {
        throw KnowledgeError("sentence " + std::to_string(i + 1) +
                             ": no type declared for concept '" + ref.symbol +
                             "'");
      }
    }
  }
}

struct AlternativeSet {
  Concept anchor;
  std::set<Concept> members;

  bool empty() const { return members.empty(); }
};

// Every model entity sharing the anchor's semantic type, minus the anchor.
inline AlternativeSet alternative_set(const KnowledgeBase& kb,
                                      const DiscourseModel& model,
                                      const Concept& anchor) {
  auto type = kb.type_of(anchor);
  if (!type) {
    throw KnowledgeError("no type declared for concept '" + anchor + "'");
  }
  AlternativeSet result{anchor, {}};
  for (const auto& [symbol, entity] : model.entities()) {
    if (symbol == anchor) continue;
    if (kb.type_of(symbol) == type) result.members.insert(symbol);
  }
  return result;
}

}  // namespace isplan
