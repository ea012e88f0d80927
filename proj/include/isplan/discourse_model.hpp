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

#pragma once

#include <cstddef>
#include <map>
#include <ostream>
#include <string_view>
#include <vector>

#include "isplan/interlingua.hpp"

namespace isplan {

// Familiarity of an entity relative to the discourse and the hearer.
enum class Status { discourse_old, inferrable, hearer_old, brand_new };

inline std::string_view to_string(Status status) {
  switch (status) {
    case Status::discourse_old: return "discourse-old";
    case Status::inferrable: return "inferrable";
    case Status::hearer_old: return "hearer-old";
    case Status::brand_new: return "brand-new";
  }
  return "brand-new";
}

// Everything except brand-new is treated as given by the planner.
inline bool is_given(Status status) { return status != Status::brand_new; }

struct DiscourseEntity {
  Concept symbol;
  // Status the entity had when it entered the model.
  Status status = Status::brand_new;
  std::size_t first_mention = 0;
  std::size_t last_mention = 0;
  std::size_t mention_count = 0;
};

// Registry of every entity mentioned so far. Entities are added or updated,
// never removed. Ordinal 0 is reserved for entities seeded as prior context.
class DiscourseModel {
 public:
  bool contains(const Concept& symbol) const {
    return entities_.count(symbol) != 0;
  }

  const DiscourseEntity* find(const Concept& symbol) const {
    auto it = entities_.find(symbol);
    return it == entities_.end() ? nullptr : &it->second;
  }

  const std::map<Concept, DiscourseEntity>& entities() const {
    return entities_;
  }

  std::size_t size() const { return entities_.size(); }
  std::size_t sentence_count() const { return sentence_count_; }

  // Records one mention in the sentence currently being committed
  // (ordinal sentence_count() + 1). `status` applies to new entries only.
  void note_mention(const Concept& symbol, Status status) {
    touch(symbol, status, sentence_count_ + 1);
  }

  // Closes the sentence opened by note_mention calls.
  void finish_sentence() { ++sentence_count_; }

  // Registers an entity as known from context preceding the document.
  void seed(const Concept& symbol, Status status = Status::discourse_old) {
    touch(symbol, status, 0);
  }

 private:
  void touch(const Concept& symbol, Status status, std::size_t ordinal) {
    auto [it, inserted] = entities_.try_emplace(symbol);
    DiscourseEntity& entity = it->second;
    if (inserted) {
      entity.symbol = symbol;
      entity.status = status;
      entity.first_mention = ordinal;
    }
    entity.last_mention = ordinal;
    ++entity.mention_count;
  }

  std::map<Concept, DiscourseEntity> entities_;
  std::size_t sentence_count_ = 0;
};

// Diagnostic dump, one entity per line in concept order.
inline void write_model(std::ostream& out, const DiscourseModel& model) {
  out << "# discourse model after " << model.sentence_count()
      << " sentence(s)\n";
  for (const auto& [symbol, entity] : model.entities()) {
    out << symbol << '\t' << to_string(entity.status) << "\tfirst="
        << entity.first_mention << "\tlast=" << entity.last_mention
        << "\tcount=" << entity.mention_count << '\n';
  }
}

}  // namespace isplan
