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

// Word order from an information structure. The topic goes first, the
// focus immediately before the matrix verb, and ground material either
// between them, after the verb, or nowhere:
//
//   topic  ground-interposed*  focus*  verb  postposed*
//
// Within a zone, constituents keep canonical order (arguments by theta
// rank, then adjuncts). Embedded clauses move as a unit and always stay
// preverbal; a topic from inside one is extracted to the front and leaves
// a gap.

#pragma once

#include <algorithm>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "isplan/error.hpp"
#include "isplan/interlingua.hpp"
#include "isplan/lexicon.hpp"
#include "isplan/planner.hpp"

namespace isplan {

enum class GroundMode { interpose, postpose, salience };

inline std::string_view to_string(GroundMode mode) {
  switch (mode) {
    case GroundMode::interpose: return "interpose";
    case GroundMode::postpose: return "postpose";
    case GroundMode::salience: return "salience";
  }
  return "interpose";
}

// interpose: ground between topic and focus. postpose: ground after the
// verb. salience: like postpose; with drop_enabled, ground realized in the
// previous sentence is dropped (in any mode).
struct PlacementPolicy {
  GroundMode ground_mode = GroundMode::interpose;
  bool drop_enabled = false;
};

// Ordered so that a well-formed sentence has non-decreasing zones.
enum class Zone { topic, ground_interposed, focus, verb, postposed };

inline std::string_view to_string(Zone zone) {
  switch (zone) {
    case Zone::topic: return "topic";
    case Zone::ground_interposed: return "ground";
    case Zone::focus: return "focus";
    case Zone::verb: return "verb";
    case Zone::postposed: return "postposed";
  }
  return "ground";
}

struct Slot {
  Constituent constituent;
  // Placement zone; slots of an embedded clause carry the clause's zone.
  Zone zone = Zone::ground_interposed;
  bool focused = false;
  // Trace left by the extracted topic.
  bool gap = false;
  // Topic moved out of an embedded clause.
  bool extracted = false;
  // Lexicon key: case for nominals, verb form for events.
  std::string key;
};

struct LinearizedSentence {
  std::vector<Slot> slots;
  std::vector<Constituent> dropped;
  std::string label;
  std::vector<std::string> gloss;
};

namespace detail {

inline std::string nominal_key(const Constituent& c) {
  if (c.kind == ConstituentKind::adjunct) return "loc";
  if (c.subject) return c.embedded() ? "gen" : "nom";
  switch (c.role) {
    case Role::theme: return "acc";
    case Role::comitative: return "com";
    case Role::goal:
    case Role::experiencer: return "dat";
    case Role::agent:
    case Role::other: break;
  }
  return "obl";
}

inline std::string verb_key(const SemanticRep& clause, bool embedded) {
  std::string key = embedded ? "ger" : "";
  for (const auto& [name, value] : clause.features) {
    if (!key.empty()) key += '+';
    key += value;
  }
  return key.empty() ? "verb" : key;
}

inline std::string lexicon_key(const SemanticRep& matrix, const Constituent& c) {
  if (c.is_event()) return verb_key(clause_at(matrix, c.clause_path), c.embedded());
  return nominal_key(c);
}

inline bool has_prefix(const std::vector<std::size_t>& path,
                       const std::vector<std::size_t>& prefix) {
  return prefix.size() <= path.size() &&
         std::equal(prefix.begin(), prefix.end(), path.begin());
}

class Linearizer {
 public:
  Linearizer(const SemanticRep& rep, const InformationStructure& is,
             const PlacementPolicy& policy, const std::set<Concept>& prev)
      : rep_(rep), is_(is), policy_(policy), prev_(prev) {
    for (const Constituent& c : constituents(rep)) {
      if (c.clause_path.empty()) {
        matrix_.push_back(c);
      } else {
        embedded_.push_back(c);
      }
    }
  }

  LinearizedSentence run() {
    LinearizedSentence out;
    out.slots.push_back(make_slot(is_.topic, Zone::topic));
    out.slots.back().extracted = is_.topic.embedded();

    std::vector<std::vector<Slot>> interposed, focus, postposed;
    std::vector<Slot> verb;
    for (std::size_t i = 0; i < rep_.args.size(); ++i) {
      if (rep_.args[i].is_clause()) {
        std::vector<std::size_t> path{i};
        Zone zone = clause_has_focus(path) ? Zone::focus : Zone::ground_interposed;
        std::vector<Slot> unit;
        expand_clause(path, zone, unit);
        (zone == Zone::focus ? focus : interposed).push_back(std::move(unit));
      } else {
        place(matrix_arg(i), interposed, focus, postposed, out.dropped);
      }
    }
    for (const Constituent& c : matrix_) {
      if (c.kind == ConstituentKind::adjunct) {
        place(c, interposed, focus, postposed, out.dropped);
      } else if (c.is_event()) {
        verb.push_back(make_slot(c, Zone::verb));
      }
    }

    for (auto* block : {&interposed, &focus}) {
      for (auto& unit : *block) {
        out.slots.insert(out.slots.end(), unit.begin(), unit.end());
      }
    }
    out.slots.insert(out.slots.end(), verb.begin(), verb.end());
    for (auto& unit : postposed) {
      out.slots.insert(out.slots.end(), unit.begin(), unit.end());
    }
    return out;
  }

 private:
  Slot make_slot(const Constituent& c, Zone zone) const {
    Slot slot;
    slot.constituent = c;
    slot.zone = zone;
    slot.focused = is_.in_focus(c);
    slot.key = lexicon_key(rep_, c);
    return slot;
  }

  const Constituent& matrix_arg(std::size_t arg_index) const {
    // Entity arguments come first in matrix_, in argument order.
    std::size_t seen = 0;
    for (std::size_t i = 0; i < arg_index; ++i) {
      if (!rep_.args[i].is_clause()) ++seen;
    }
    return matrix_.at(seen);
  }

  void place(const Constituent& c, std::vector<std::vector<Slot>>& interposed,
             std::vector<std::vector<Slot>>& focus,
             std::vector<std::vector<Slot>>& postposed,
             std::vector<Constituent>& dropped) const {
    if (is_.is_topic(c)) return;
    if (is_.in_focus(c)) {
      focus.push_back({make_slot(c, Zone::focus)});
      return;
    }
    if (policy_.drop_enabled && prev_.count(c.symbol())) {
      dropped.push_back(c);
      return;
    }
    if (policy_.ground_mode == GroundMode::interpose) {
      interposed.push_back({make_slot(c, Zone::ground_interposed)});
    } else {
      postposed.push_back({make_slot(c, Zone::postposed)});
    }
  }

  bool clause_has_focus(const std::vector<std::size_t>& path) const {
    for (const Constituent& c : embedded_) {
      if (has_prefix(c.clause_path, path) && is_.in_focus(c)) return true;
    }
    return false;
  }

  // Canonical order inside the clause: arguments (recursing into nested
  // clauses), adjuncts, then the clause's own verb.
  void expand_clause(std::vector<std::size_t>& path, Zone zone,
                     std::vector<Slot>& out) const {
    const SemanticRep& clause = clause_at(rep_, path);
    for (std::size_t i = 0; i < clause.args.size(); ++i) {
      if (clause.args[i].is_clause()) {
        path.push_back(i);
        expand_clause(path, zone, out);
        path.pop_back();
      } else {
        emit(clause.args[i].entity().index, zone, out);
      }
    }
    for (const Adjunct& adjunct : clause.adjuncts) {
      emit(adjunct.entity.index, zone, out);
    }
    emit(clause.event.index, zone, out);
  }

  void emit(std::size_t index, Zone zone, std::vector<Slot>& out) const {
    for (const Constituent& c : embedded_) {
      if (c.index() != index) continue;
      Slot slot = make_slot(c, zone);
      slot.gap = is_.is_topic(c);
      if (slot.gap) slot.focused = false;
      out.push_back(std::move(slot));
      return;
    }
  }

  const SemanticRep& rep_;
  const InformationStructure& is_;
  const PlacementPolicy& policy_;
  const std::set<Concept>& prev_;
  std::vector<Constituent> matrix_;
  std::vector<Constituent> embedded_;
};

inline std::string slot_letter(const Constituent& c) {
  switch (c.kind) {
    case ConstituentKind::event: return "V";
    case ConstituentKind::adjunct: return "Adv";
    case ConstituentKind::argument: return c.subject ? "S" : "O";
  }
  return "O";
}

}  // namespace detail

// Word-order label: S for a clause's highest ranked argument, O for other
// arguments, Adv for adjuncts, V for verbs. When the sentence contains an
// embedded clause each letter carries its clause depth (matrix = 1) and
// embedded material is bracketed, e.g. "O2S1[S2V2]V1".
inline std::string order_label(const LinearizedSentence& sentence,
                               const SemanticRep& rep) {
  bool embedding = std::any_of(rep.args.begin(), rep.args.end(),
                               [](const Argument& a) { return a.is_clause(); });
  std::string label;
  std::vector<std::size_t> open;
  for (const Slot& slot : sentence.slots) {
    const Constituent& c = slot.constituent;
    std::vector<std::size_t> path =
        slot.extracted ? std::vector<std::size_t>{} : c.clause_path;
    while (!detail::has_prefix(path, open)) {
      label += ']';
      open.pop_back();
    }
    while (open.size() < path.size()) {
      open.push_back(path[open.size()]);
      label += '[';
    }
    if (slot.gap) continue;
    label += detail::slot_letter(c);
    if (embedding) label += std::to_string(c.clause_path.size() + 1);
  }
  label.append(open.size(), ']');
  return label;
}

// Throws InvariantError unless the topic is first, zones never go
// backwards (so the focus block is contiguous and ends at the verb), the
// matrix verb is the last non-postposed slot, and nothing dropped is
// placed.
inline void check_positions(const LinearizedSentence& sentence) {
  const auto& slots = sentence.slots;
  if (slots.empty() || slots.front().zone != Zone::topic) {
    throw InvariantError("topic is not sentence-initial");
  }
  std::size_t verbs = 0;
  for (std::size_t i = 0; i < slots.size(); ++i) {
    if (i > 0 && slots[i].zone == Zone::topic) {
      throw InvariantError("more than one topic slot");
    }
    if (i > 0 && slots[i].zone < slots[i - 1].zone) {
      throw InvariantError("slot zones out of order");
    }
    if (slots[i].zone == Zone::verb) {
      ++verbs;
      if (!slots[i].constituent.is_event() || slots[i].constituent.embedded()) {
        throw InvariantError("verb slot does not hold the matrix verb");
      }
    }
    for (const Constituent& d : sentence.dropped) {
      if (d == slots[i].constituent) {
        throw InvariantError("dropped constituent is also placed");
      }
    }
  }
  if (verbs != 1) throw InvariantError("expected exactly one matrix verb slot");
}

inline LinearizedSentence linearize(const SemanticRep& rep,
                                    const InformationStructure& is,
                                    const PlacementPolicy& policy,
                                    const std::set<Concept>& prev_realized) {
  check_partition(is, rep);
  if (is.topic.is_event()) throw InvariantError("event selected as topic");
  LinearizedSentence out =
      detail::Linearizer(rep, is, policy, prev_realized).run();
  out.label = order_label(out, rep);
  check_positions(out);
  return out;
}

struct GlossOptions {
  // Append '*' to focused verbs.
  bool mark_stress = false;
};

// One token per slot: the lexicon form for the slot's key, "e_i" for the
// gap, and "_i" co-indexing on an extracted topic.
inline std::vector<std::string> realize_gloss(const LinearizedSentence& sentence,
                                              const Lexicon& lexicon,
                                              const GlossOptions& options = {}) {
  std::vector<std::string> tokens;
  for (const Slot& slot : sentence.slots) {
    if (slot.gap) {
      tokens.push_back("e_i");
      continue;
    }
    std::string token = lexicon.realize(slot.constituent.symbol(), slot.key);
    if (slot.extracted) token += "_i";
    if (options.mark_stress && slot.focused && slot.constituent.is_event()) {
      token += '*';
    }
    tokens.push_back(std::move(token));
  }
  return tokens;
}

}  // namespace isplan
