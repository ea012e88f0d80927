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

#include <set>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "isplan/discourse.hpp"
#include "isplan/document.hpp"
#include "isplan/pipeline.hpp"
#include "isplan/planner.hpp"
#include "support/fixtures.hpp"

namespace isplan {
namespace {

std::vector<Concept> symbols(const std::vector<Constituent>& cs) {
  std::vector<Concept> out;
  for (const Constituent& c : cs) out.push_back(c.symbol());
  return out;
}

std::set<Concept> symbol_set(const std::vector<Constituent>& cs) {
  auto v = symbols(cs);
  return {v.begin(), v.end()};
}

// Plans every sentence of `doc` in order and returns the structures.
std::vector<InformationStructure> plan_all(const std::vector<SemanticRep>& doc,
                                           const KnowledgeBase& kb) {
  std::vector<InformationStructure> out;
  DiscourseModel model;
  std::optional<CfList> prev;
  for (const SemanticRep& rep : doc) {
    out.push_back(plan_sentence(rep, prev, model, kb));
    commit_sentence(model, rep, kb);
    prev = build_cf(rep);
  }
  return out;
}

class GoldenText : public ::testing::Test {
 protected:
  void SetUp() override {
    doc = parse_document(testing::fixture("golden_text1.doc"));
    kb = load_kb(testing::fixture("isplan.kb"));
    plans = plan_all(doc, kb);
  }
  std::vector<SemanticRep> doc;
  KnowledgeBase kb;
  std::vector<InformationStructure> plans;
};

TEST_F(GoldenText, SentenceATopicIsTheSettingAdverb) {
  EXPECT_EQ(plans[0].topic.symbol(), "today");
  EXPECT_EQ(plans[0].topic_step, TopicStep::setting_adverb);
}

TEST_F(GoldenText, SentenceAFocusesEverythingNew) {
  EXPECT_EQ(symbol_set(plans[0].focus),
            (std::set<Concept>{"pat", "chris", "meet"}));
  EXPECT_EQ(plans[0].focus_step, FocusStep::discourse_new);
  EXPECT_TRUE(plans[0].ground.empty());
  EXPECT_EQ(plans[0].annotation(), "(T:3,F:1)");
}

TEST_F(GoldenText, SentenceB) {
  EXPECT_EQ(plans[1].topic.symbol(), "four");
  EXPECT_EQ(symbol_set(plans[1].focus), (std::set<Concept>{"talk", "exist"}));
  EXPECT_EQ(plans[1].annotation(), "(T:3,F:1)");
}

TEST_F(GoldenText, SentenceCTopicIsTheCb) {
  EXPECT_EQ(plans[2].cb, "talk");
  EXPECT_EQ(plans[2].topic.symbol(), "talk");
  EXPECT_EQ(plans[2].topic_step, TopicStep::cb);
  EXPECT_EQ(plans[2].focus_step, FocusStep::contrastive);
  EXPECT_TRUE(symbol_set(plans[2].focus).count("chris"));
  EXPECT_EQ(plans[2].annotation(), "(T:1,F:2)");
}

TEST_F(GoldenText, SentenceDFocusesTheVerb) {
  EXPECT_EQ(plans[3].cb, std::nullopt);
  EXPECT_EQ(plans[3].topic.symbol(), "pat");
  EXPECT_EQ(plans[3].topic_step, TopicStep::given);
  EXPECT_EQ(symbols(plans[3].focus), (std::vector<Concept>{"come"}));
  EXPECT_EQ(plans[3].focus_step, FocusStep::discourse_new);
  EXPECT_EQ(plans[3].annotation(), "(T:2,F:1)");
}

TEST_F(GoldenText, SentenceCGroundIsTheRest) {
  std::vector<Constituent> all = constituents(doc[2]);
  EXPECT_EQ(1 + plans[2].focus.size() + plans[2].ground.size(), all.size());
  for (const Constituent& c : plans[2].ground) {
    EXPECT_FALSE(plans[2].in_focus(c));
    EXPECT_FALSE(plans[2].is_topic(c));
  }
}

TEST(SelectTopic, StepOneFromExplicitPreviousList) {
  auto doc = parse_document(testing::fixture("golden_text1.doc"));
  KnowledgeBase kb = load_kb(testing::fixture("isplan.kb"));
  DiscourseModel model;
  commit_sentence(model, doc[0], kb);
  commit_sentence(model, doc[1], kb);
  TopicChoice t = select_topic(doc[2], CfList{{"four", "talk", "exist"}}, model, kb);
  EXPECT_EQ(t.constituent.symbol(), "talk");
  EXPECT_EQ(t.step, TopicStep::cb);
}

TEST(SelectTopic, FallsBackToFirstCfEntry) {
  KnowledgeBase kb = load_kb("type pat agent\ntype book object\ntype give event\n");
  auto rep = parse_document("(sent (pred give (arg theme book) (arg agent pat)))").at(0);
  TopicChoice t = select_topic(rep, std::nullopt, DiscourseModel{}, kb);
  EXPECT_EQ(t.constituent.symbol(), "pat");
  EXPECT_EQ(t.step, TopicStep::first_cf);
}

TEST(SelectTopic, NonSettingAdverbIsNotStepThree) {
  KnowledgeBase kb = load_kb("type pat agent\ntype garden object\ntype see event\n");
  auto rep = parse_document("(sent (pred see (arg agent pat)) (adv garden))").at(0);
  TopicChoice t = select_topic(rep, std::nullopt, DiscourseModel{}, kb);
  EXPECT_EQ(t.constituent.symbol(), "pat");
  EXPECT_EQ(t.step, TopicStep::first_cf);
}

TEST(SelectTopic, EventCbDoesNotBecomeTopic) {
  KnowledgeBase kb = load_kb(
      "type pat agent\ntype kim agent\ntype come event\ntype see event\n");
  DiscourseModel model;
  auto doc = parse_document(
      "(sent (pred come (arg agent pat)))\n"
      "(sent (pred see (arg agent kim) (arg theme (clause (pred come (arg agent lee))))))");
  kb.declare_type("lee", SemanticType::agent);
  commit_sentence(model, doc[0], kb);
  // Only the event 'come' is shared with the previous sentence.
  TopicChoice t = select_topic(doc[1], build_cf(doc[0]), model, kb);
  EXPECT_FALSE(t.constituent.is_event());
  EXPECT_NE(t.step, TopicStep::cb);
}

TEST(SelectTopic, ClauseWithoutNominalsRejected) {
  auto rep = parse_document("(sent (pred rain))").at(0);
  EXPECT_THROW(select_topic(rep, std::nullopt, DiscourseModel{}, KnowledgeBase{}),
               InputError);
}

TEST(SelectFocus, EverythingNewInSingleSentence) {
  KnowledgeBase kb = load_kb(
      "type pat agent\ntype chris agent\ntype book object\ntype give event\n");
  auto rep = parse_document(
      "(sent (pred give (arg agent pat) (arg goal chris) (arg theme book)))").at(0);
  InformationStructure is = plan_sentence(rep, std::nullopt, DiscourseModel{}, kb);
  EXPECT_EQ(is.topic.symbol(), "pat");
  EXPECT_EQ(symbols(is.focus), (std::vector<Concept>{"chris", "book", "give"}));
  EXPECT_EQ(is.focus_step, FocusStep::discourse_new);
  EXPECT_TRUE(is.ground.empty());
}

TEST(SelectFocus, TopicNeverFocused) {
  KnowledgeBase kb = load_kb("type pat agent\ntype come event\n");
  auto rep = parse_document("(sent (pred come (arg agent pat)))").at(0);
  InformationStructure is = plan_sentence(rep, std::nullopt, DiscourseModel{}, kb);
  EXPECT_EQ(symbols(is.focus), (std::vector<Concept>{"come"}));
  EXPECT_TRUE(is.ground.empty());
}

TEST(SelectFocus, FallbackFocusesTheMatrixVerb) {
  KnowledgeBase kb = load_kb("type pat agent\ntype book object\ntype see event\n");
  auto rep = parse_document("(sent (pred see (arg agent pat) (arg theme book)))").at(0);
  DiscourseModel model;
  commit_sentence(model, rep, kb);
  InformationStructure is = plan_sentence(rep, build_cf(rep), model, kb);
  EXPECT_EQ(is.topic.symbol(), "pat");
  EXPECT_TRUE(is.focus_fallback);
  EXPECT_EQ(symbols(is.focus), (std::vector<Concept>{"see"}));
  EXPECT_EQ(symbols(is.ground), (std::vector<Concept>{"book"}));
  EXPECT_EQ(is.annotation(), "(T:1,F:2)");
}

TEST(PlanSentence, LongDistanceWithoutInferenceLink) {
  // Pat is a known name and giving is not expected from the talk.
  KnowledgeBase kb = load_kb(
      "type pat agent\ntype chris agent\ntype talk object\ntype four object\n"
      "type exist event\ntype give event\ntype think event\n");
  auto doc = parse_document(
      "(sent (pred exist (arg theme talk)) (adv four (setting +)))\n"
      "(sent (pred think (arg agent (ent pat (form name)))"
      " (arg theme (clause (pred give (arg agent chris)"
      " (arg theme (ent talk (form def))))))) (feat tense prog))");
  auto plans = plan_all(doc, kb);
  const InformationStructure& is = plans[1];
  EXPECT_EQ(is.topic.symbol(), "talk");
  EXPECT_TRUE(is.topic.embedded());
  EXPECT_EQ(is.topic_step, TopicStep::cb);
  EXPECT_EQ(symbol_set(is.focus), (std::set<Concept>{"chris", "give", "think"}));
  EXPECT_EQ(is.focus_step, FocusStep::discourse_new);
  EXPECT_EQ(symbols(is.ground), (std::vector<Concept>{"pat"}));
}

TEST(PlanSentence, LongDistanceWithBundledKnowledge) {
  auto doc = parse_document(testing::fixture("golden_text2.doc"));
  KnowledgeBase kb = load_kb(testing::fixture("isplan.kb"));
  auto plans = plan_all(doc, kb);
  EXPECT_EQ(plans[1].topic.symbol(), "talk");
  EXPECT_EQ(plans[1].annotation(), "(T:1,F:1)");
  EXPECT_EQ(symbol_set(plans[1].focus), (std::set<Concept>{"pat", "chris", "think"}));
  EXPECT_EQ(symbols(plans[1].ground), (std::vector<Concept>{"give"}));
}

TEST(PlanSentence, ContrastedSubjectWithSeededContext) {
  auto doc = parse_document(testing::fixture("childes.doc"));
  KnowledgeBase kb = load_kb(testing::fixture("isplan.kb"));
  DiscourseContext ctx = load_context(testing::fixture("childes.ctx"));
  InformationStructure is = plan_sentence(doc[0], ctx.prev_cf, ctx.model, kb);
  EXPECT_EQ(is.topic.symbol(), "notebook");
  EXPECT_EQ(lookup_status(ctx.model, is.topic.entity, kb), Status::discourse_old);
  EXPECT_EQ(symbols(is.focus), (std::vector<Concept>{"father"}));
  EXPECT_EQ(is.focus_step, FocusStep::contrastive);
  EXPECT_FALSE(is.focus_fallback);
  EXPECT_EQ(symbols(is.ground), (std::vector<Concept>{"give"}));
}

TEST(CheckPartition, RejectsOverlapAndGaps) {
  KnowledgeBase kb = load_kb("type pat agent\ntype book object\ntype see event\n");
  auto rep = parse_document("(sent (pred see (arg agent pat) (arg theme book)))").at(0);
  InformationStructure is = plan_sentence(rep, std::nullopt, DiscourseModel{}, kb);
  EXPECT_NO_THROW(check_partition(is, rep));

  InformationStructure overlap = is;
  overlap.focus.push_back(is.topic);
  EXPECT_THROW(check_partition(overlap, rep), InvariantError);

  InformationStructure missing = is;
  missing.focus.pop_back();
  EXPECT_THROW(check_partition(missing, rep), InvariantError);
}

}  // namespace
}  // namespace isplan
