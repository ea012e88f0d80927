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

// Sentence planner: splits a sentence into topic, focus and ground from the
// discourse model built over the preceding sentences.
//
// Topic, first step that succeeds:
//   1. the Cb, i.e. the highest ranked element of the previous Cf list that
//      is realized here;
//   2. the first given (non brand-new) entity of the current Cf list;
//   3. the leftmost situation-setting adjunct of the matrix clause;
//   4. the first entity of the current Cf list.
// Events are never topics.
//
// Focus, over every realized constituent except the topic:
//   1. all brand-new constituents, if there are any;
//   2. otherwise every constituent whose alternative set in the model is
//      non-empty. If that is empty too, the matrix event is focused.

#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "isplan/discourse.hpp"
#include "isplan/discourse_model.hpp"
#include "isplan/error.hpp"
#include "isplan/interlingua.hpp"
#include "isplan/knowledge.hpp"

namespace isplan {

enum class TopicStep { cb = 1, given = 2, setting_adverb = 3, first_cf = 4 };
enum class FocusStep { discourse_new = 1, contrastive = 2 };

inline int step_number(TopicStep step) { return static_cast<int>(step); }
inline int step_number(FocusStep step) { return static_cast<int>(step); }

struct TopicChoice {
  Constituent constituent;
  TopicStep step = TopicStep::first_cf;
};

struct FocusChoice {
  std::vector<Constituent> members;  // Cf order
  FocusStep step = FocusStep::discourse_new;
  // Nothing qualified and the matrix event was focused by default.
  bool fallback = false;
};

struct InformationStructure {
  Constituent topic;
  TopicStep topic_step = TopicStep::first_cf;
  std::vector<Constituent> focus;
  FocusStep focus_step = FocusStep::discourse_new;
  bool focus_fallback = false;
  std::vector<Constituent> ground;
  std::optional<Concept> cb;

  bool in_focus(const Constituent& c) const {
    return std::find(focus.begin(), focus.end(), c) != focus.end();
  }
  bool in_ground(const Constituent& c) const {
    return std::find(ground.begin(), ground.end(), c) != ground.end();
  }
  bool is_topic(const Constituent& c) const { return topic == c; }

  // "(T:n,F:m)"
  std::string annotation() const {
    return "(T:" + std::to_string(step_number(topic_step)) +
           ",F:" + std::to_string(step_number(focus_step)) + ")";
  }
};

inline TopicChoice select_topic(const SemanticRep& rep,
                                const std::optional<CfList>& prev_cf,
                                const DiscourseModel& model,
                                const KnowledgeBase& kb) {
  std::vector<Constituent> nominals;
  for (Constituent& c : constituents(rep)) {
    if (!c.is_event()) nominals.push_back(std::move(c));
  }
  if (nominals.empty()) {
    throw InputError("clause '" + rep.event.symbol +
                     "' realizes no arguments or adjuncts");
  }

  if (auto cb = compute_cb(prev_cf, realized_concepts(rep))) {
    for (const Constituent& c : nominals) {
      if (c.symbol() == *cb) return {c, TopicStep::cb};
    }
  }
  for (const Constituent& c : nominals) {
    if (is_given(lookup_status(model, c.entity, kb))) {
      return {c, TopicStep::given};
    }
  }
  for (const Constituent& c : nominals) {
    if (c.kind == ConstituentKind::adjunct && c.setting && !c.embedded()) {
      return {c, TopicStep::setting_adverb};
    }
  }
  return {nominals.front(), TopicStep::first_cf};
}

inline FocusChoice select_focus(const SemanticRep& rep,
                                const Constituent& topic,
                                const DiscourseModel& model,
                                const KnowledgeBase& kb) {
  std::vector<Constituent> candidates;
  for (Constituent& c : constituents(rep)) {
    if (!(c == topic)) candidates.push_back(std::move(c));
  }

  FocusChoice choice;
  for (const Constituent& c : candidates) {
    if (lookup_status(model, c.entity, kb) == Status::brand_new) {
      choice.members.push_back(c);
    }
  }
  if (!choice.members.empty()) {
    choice.step = FocusStep::discourse_new;
    return choice;
  }

  choice.step = FocusStep::contrastive;
  for (const Constituent& c : candidates) {
    if (!alternative_set(kb, model, c.symbol()).empty()) {
      choice.members.push_back(c);
    }
  }
  if (choice.members.empty()) {
    for (const Constituent& c : candidates) {
      if (c.is_event() && !c.embedded()) choice.members.push_back(c);
    }
    choice.fallback = true;
  }
  return choice;
}

// Throws InvariantError unless topic, focus and ground partition the
// realized constituents of `rep` with the topic outside the focus.
inline void check_partition(const InformationStructure& is,
                            const SemanticRep& rep) {
  std::vector<std::size_t> seen;
  auto take = [&seen](const Constituent& c, const char* cell) {
    if (std::find(seen.begin(), seen.end(), c.index()) != seen.end()) {
      throw InvariantError(std::string("constituent '") + c.symbol() +
                           "' assigned twice (" + cell + ")");
    }
    seen.push_back(c.index());
  };
  take(is.topic, "topic");
  for (const Constituent& c : is.focus) take(c, "focus");
  for (const Constituent& c : is.ground) take(c, "ground");
  std::vector<Constituent> all = constituents(rep);
  if (seen.size() != all.size()) {
    throw InvariantError("information structure does not cover the sentence");
  }
  for (const Constituent& c : all) {
    if (std::find(seen.begin(), seen.end(), c.index()) == seen.end()) {
      throw InvariantError("constituent '" + c.symbol() + "' left unassigned");
    }
  }
}

// Plans one sentence against the model of all PRIOR sentences.
inline InformationStructure plan_sentence(const SemanticRep& rep,
                                          const std::optional<CfList>& prev_cf,
                                          const DiscourseModel& model,
                                          const KnowledgeBase& kb) {
  InformationStructure is;
  is.cb = compute_cb(prev_cf, realized_concepts(rep));
  TopicChoice topic = select_topic(rep, prev_cf, model, kb);
  is.topic = topic.constituent;
  is.topic_step = topic.step;
  FocusChoice focus = select_focus(rep, is.topic, model, kb);
  is.focus = std::move(focus.members);
  is.focus_step = focus.step;
  is.focus_fallback = focus.fallback;
  for (Constituent& c : constituents(rep)) {
    if (!is.is_topic(c) && !is.in_focus(c)) is.ground.push_back(std::move(c));
  }
  check_partition(is, rep);
  return is;
}

}  // namespace isplan
