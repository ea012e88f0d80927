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

// Centering bookkeeping (forward-looking centers, backward-looking center)
// and entity status lookup against the discourse model.

#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "isplan/discourse_model.hpp"
#include "isplan/interlingua.hpp"
#include "isplan/knowledge.hpp"

namespace isplan {

// Forward-looking centers of one utterance, most salient first.
struct CfList {
  std::vector<Concept> ranked;

  bool contains(const Concept& symbol) const {
    return std::find(ranked.begin(), ranked.end(), symbol) != ranked.end();
  }

  bool operator==(const CfList&) const = default;
};

struct CenterAnalysis {
  std::optional<Concept> cb;
  CfList cf;
};

inline CfList build_cf(const SemanticRep& rep) {
  CfList cf;
  for (const EntityRef& ref : realized_entities(rep, true)) {
    if (!cf.contains(ref.symbol)) cf.ranked.push_back(ref.symbol);
  }
  return cf;
}

inline std::set<Concept> realized_concepts(const SemanticRep& rep) {
  std::set<Concept> out;
  for (const EntityRef& ref : realized_entities(rep, true)) {
    out.insert(ref.symbol);
  }
  return out;
}

// Highest ranked element of the previous utterance's Cf list that is
// realized in the current one.
inline std::optional<Concept> compute_cb(const std::optional<CfList>& prev,
                                         const std::set<Concept>& current) {
  if (!prev) return std::nullopt;
  for (const Concept& symbol : prev->ranked) {
    if (current.count(symbol)) return symbol;
  }
  return std::nullopt;
}

inline CenterAnalysis analyze_centers(const std::optional<CfList>& prev,
                                      const SemanticRep& rep) {
  CenterAnalysis analysis;
  analysis.cf = build_cf(rep);
  analysis.cb = compute_cb(prev, realized_concepts(rep));
  return analysis;
}

// Status of an occurrence given the model of all prior sentences. Entities
// outside the model are accommodated as inferrable through a KB link, or as
// hearer-old when the source used a name, definite NP or pronoun.
inline Status lookup_status(const DiscourseModel& model, const EntityRef& ref,
                            const KnowledgeBase& kb) {
  if (model.contains(ref.symbol)) return Status::discourse_old;
  if (kb.inferrable_from(ref.symbol, model)) return Status::inferrable;
  switch (ref.form) {
    case SourceForm::name:
    case SourceForm::definite_np:
    case SourceForm::overt_pronoun:
      return Status::hearer_old;
    case SourceForm::indefinite_np:
    case SourceForm::zero:
      break;
  }
  return Status::brand_new;
}

// Registers every realized entity of `rep` (events included) and closes the
// sentence. Statuses of new entries are computed against the model as it
// stood before this sentence.
inline void commit_sentence(DiscourseModel& model, const SemanticRep& rep,
                            const KnowledgeBase& kb) {
  std::vector<std::pair<Concept, Status>> mentions;
  for (const EntityRef& ref : realized_entities(rep, true)) {
    mentions.emplace_back(ref.symbol, lookup_status(model, ref, kb));
  }
  for (const auto& [symbol, status] : mentions) {
    model.note_mention(symbol, status);
  }
  model.finish_sentence();
}

inline void commit_sentence(DiscourseModel& model, const SemanticRep& rep) {
  commit_sentence(model, rep, KnowledgeBase{});
}

}  // namespace isplan
