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

// Semantic representation of one sentence: an event predicate with ranked
// arguments, adjuncts, embedded clauses and surface features.

#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace isplan {

// Concept symbols double as discourse entity identity and lexicon keys.
using Concept = std::string;

// How the entity was referred to in the source text.
enum class SourceForm { name, definite_np, indefinite_np, overt_pronoun, zero };

enum class Role { agent, experiencer, goal, comitative, theme, other };

inline constexpr std::array<Role, 6> kAllRoles = {
    Role::agent, Role::experiencer, Role::goal,
    Role::comitative, Role::theme, Role::other};

inline std::string_view to_string(Role role) {
  switch (role) {
    case Role::agent: return "agent";
    case Role::experiencer: return "experiencer";
    case Role::goal: return "goal";
    case Role::comitative: return "comitative";
    case Role::theme: return "theme";
    case Role::other: return "other";
  }
  return "other";
}

inline std::optional<Role> role_from_string(std::string_view text) {
  for (Role role : kAllRoles) {
    if (to_string(role) == text) return role;
  }
  return std::nullopt;
}

// Document spelling of a source form ("def", "pron", ...).
inline std::string_view to_string(SourceForm form) {
  switch (form) {
    case SourceForm::name: return "name";
    case SourceForm::definite_np: return "def";
    case SourceForm::indefinite_np: return "indef";
    case SourceForm::overt_pronoun: return "pron";
    case SourceForm::zero: return "zero";
  }
  return "indef";
}

inline std::optional<SourceForm> form_from_string(std::string_view text) {
  for (SourceForm form :
       {SourceForm::name, SourceForm::definite_np, SourceForm::indefinite_np,
        SourceForm::overt_pronoun, SourceForm::zero}) {
    if (to_string(form) == text) return form;
  }
  return std::nullopt;
}

// Ranking of theta roles, highest first. The default puts agents above
// experiencers above goals above comitatives above themes.
class ThetaHierarchy {
 public:
  ThetaHierarchy() : order_(kAllRoles) {}

  // `order` must be a permutation of all six roles.
  static std::optional<ThetaHierarchy> from_order(const std::vector<Role>& order) {
    if (order.size() != kAllRoles.size()) return std::nullopt;
    ThetaHierarchy result;
    for (std::size_t i = 0; i < order.size(); ++i) {
      if (std::count(order.begin(), order.end(), order[i]) != 1) {
        return std::nullopt;
      }
      result.order_[i] = order[i];
    }
    return result;
  }

  std::size_t rank(Role role) const {
    return static_cast<std::size_t>(
        std::find(order_.begin(), order_.end(), role) - order_.begin());
  }

  const std::array<Role, 6>& order() const { return order_; }

  bool operator==(const ThetaHierarchy&) const = default;

 private:
  std::array<Role, 6> order_;
};

struct EntityRef {
  Concept symbol;
  SourceForm form = SourceForm::indefinite_np;
  // Occurrence id, unique within a document.
  std::size_t index = 0;

  bool operator==(const EntityRef&) const = default;
};

struct SemanticRep;

struct EmbeddedClause {
  std::shared_ptr<const SemanticRep> rep;

  bool operator==(const EmbeddedClause& other) const;
};

struct Argument {
  Role role = Role::other;
  std::variant<EntityRef, EmbeddedClause> filler;

  bool is_clause() const {
    return std::holds_alternative<EmbeddedClause>(filler);
  }
  const EntityRef& entity() const { return std::get<EntityRef>(filler); }
  const SemanticRep& clause() const {
    return *std::get<EmbeddedClause>(filler).rep;
  }

  bool operator==(const Argument&) const = default;
};

struct Adjunct {
  EntityRef entity;
  // Temporal or locative scene-setter.
  bool setting = false;

  bool operator==(const Adjunct&) const = default;
};

struct SemanticRep {
  EntityRef event;
  // Sorted by the theta hierarchy, roles pairwise distinct.
  std::vector<Argument> args;
  std::vector<Adjunct> adjuncts;
  // tense / polarity / mood, in document order.
  std::vector<std::pair<std::string, std::string>> features;

  bool operator==(const SemanticRep&) const = default;

  const std::string* feature(std::string_view key) const {
    for (const auto& [k, v] : features) {
      if (k == key) return &v;
    }
    return nullptr;
  }
};

inline bool EmbeddedClause::operator==(const EmbeddedClause& other) const {
  if (rep == other.rep) return true;
  if (!rep || !other.rep) return false;
  return *rep == *other.rep;
}

// What a constituent is within its clause.
enum class ConstituentKind { argument, adjunct, event };

// One realized entity occurrence, located in the clause tree. Two
// constituents are the same iff they share the occurrence index.
struct Constituent {
  EntityRef entity;
  ConstituentKind kind = ConstituentKind::argument;
  Role role = Role::other;  // meaningful for arguments only
  bool subject = false;     // highest ranked argument of its clause
  bool setting = false;     // situation-setting adjunct
  // Argument positions leading from the matrix clause to the clause that
  // contains this constituent; empty for matrix constituents.
  std::vector<std::size_t> clause_path;

  const Concept& symbol() const { return entity.symbol; }
  std::size_t index() const { return entity.index; }
  bool embedded() const { return !clause_path.empty(); }
  bool is_event() const { return kind == ConstituentKind::event; }

  bool operator==(const Constituent& other) const {
    return entity.index == other.entity.index;
  }
};

namespace detail {

inline void collect_constituents(const SemanticRep& rep, bool recurse,
                                 std::vector<std::size_t>& path,
                                 std::vector<Constituent>& out) {
  for (std::size_t i = 0; i < rep.args.size(); ++i) {
    const Argument& arg = rep.args[i];
    if (arg.is_clause()) continue;
    Constituent c;
    c.entity = arg.entity();
    c.kind = ConstituentKind::argument;
    c.role = arg.role;
    c.subject = (i == 0);
    c.clause_path = path;
    out.push_back(std::move(c));
  }
  for (const Adjunct& adjunct : rep.adjuncts) {
    Constituent c;
    c.entity = adjunct.entity;
    c.kind = ConstituentKind::adjunct;
    c.setting = adjunct.setting;
    c.clause_path = path;
    out.push_back(std::move(c));
  }
  if (recurse) {
    for (std::size_t i = 0; i < rep.args.size(); ++i) {
      if (!rep.args[i].is_clause()) continue;
      path.push_back(i);
      collect_constituents(rep.args[i].clause(), recurse, path, out);
      path.pop_back();
    }
  }
  Constituent event;
  event.entity = rep.event;
  event.kind = ConstituentKind::event;
  event.clause_path = path;
  out.push_back(std::move(event));
}

}  // namespace detail

// All realized constituents in Cf order: entity arguments in theta order,
// then adjuncts, then (with `recurse`) embedded clauses in the same scheme,
// then the clause's own event.
inline std::vector<Constituent> constituents(const SemanticRep& rep,
                                             bool recurse = true) {
  std::vector<Constituent> out;
  std::vector<std::size_t> path;
  detail::collect_constituents(rep, recurse, path, out);
  return out;
}

inline std::vector<EntityRef> realized_entities(const SemanticRep& rep,
                                                bool recurse) {
  std::vector<EntityRef> out;
  for (const Constituent& c : constituents(rep, recurse)) {
    out.push_back(c.entity);
  }
  return out;
}

// Clause reached by following `path` from `rep`.
inline const SemanticRep& clause_at(const SemanticRep& rep,
                                    const std::vector<std::size_t>& path) {
  const SemanticRep* current = &rep;
  for (std::size_t i : path) current = &current->args.at(i).clause();
  return *current;
}

}  // namespace isplan
