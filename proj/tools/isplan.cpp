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

// isplan plan --doc F --kb F [--lexicon F] [--ground MODE] [--drop]
//             [--mark-stress] [--format text|tsv] [--dump-model]
//             [--context F] [--theta F] [--verbose]
// isplan stats
//
// Exit status: 0 success, 1 input error, 2 internal invariant violation.

#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "isplan/isplan.hpp"

namespace {

struct PlanArgs {
  std::string doc;
  std::string kb;
  std::string lexicon;
  std::string context;
  std::string theta;
  std::string ground = "interpose";
  bool drop = false;
  bool mark_stress = false;
  bool dump_model = false;
  bool verbose = false;
  std::string format = "text";
};

int run_plan(const PlanArgs& args) {
  // Everything is loaded and validated before any planning, and output is
  // buffered so that a failure emits no partial report.
  isplan::ThetaHierarchy hierarchy;
  if (!args.theta.empty()) {
    hierarchy = isplan::load_theta_hierarchy(isplan::read_file(args.theta));
  }
  auto document =
      isplan::parse_document(isplan::read_file(args.doc), hierarchy);
  isplan::KnowledgeBase kb = isplan::load_kb(isplan::read_file(args.kb));
  isplan::Lexicon lexicon;
  if (!args.lexicon.empty()) {
    lexicon = isplan::load_lexicon(isplan::read_file(args.lexicon));
  }
  isplan::DiscourseContext context;
  if (!args.context.empty()) {
    context = isplan::load_context(isplan::read_file(args.context));
  }

  isplan::PipelineOptions options;
  const std::map<std::string, isplan::GroundMode> modes = {
      {"interpose", isplan::GroundMode::interpose},
      {"postpose", isplan::GroundMode::postpose},
      {"salience", isplan::GroundMode::salience}};
  options.policy.ground_mode = modes.at(args.ground);
  options.policy.drop_enabled = args.drop;
  options.gloss.mark_stress = args.mark_stress;

  isplan::DiscourseModel model;
  auto reports =
      isplan::plan_document(document, kb, lexicon, options, &model, context);

  std::ostringstream out;
  if (args.format == "tsv") {
    isplan::write_tsv(out, reports);
  } else {
    isplan::write_text(out, reports, args.verbose);
  }
  if (args.dump_model) isplan::write_model(out, model);
  std::cout << out.str();
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Information-structure sentence planner and linearizer"};
  app.require_subcommand(1);

  PlanArgs plan_args;
  CLI::App* plan = app.add_subcommand(
      "plan", "Plan topic/focus/ground and word order for each sentence");
  plan->add_option("--doc", plan_args.doc, "Interlingua document")
      ->required()
      ->check(CLI::ExistingFile);
  plan->add_option("--kb", plan_args.kb, "Knowledge base")
      ->required()
      ->check(CLI::ExistingFile);
  plan->add_option("--lexicon", plan_args.lexicon, "Surface-form lexicon")
      ->check(CLI::ExistingFile);
  plan->add_option("--context", plan_args.context,
                   "Discourse context preceding the document")
      ->check(CLI::ExistingFile);
  plan->add_option("--theta", plan_args.theta, "Theta hierarchy config")
      ->check(CLI::ExistingFile);
  plan->add_option("--ground", plan_args.ground, "Ground placement")
      ->check(CLI::IsMember({"interpose", "postpose", "salience"}));
  plan->add_flag("--drop", plan_args.drop,
                 "Drop ground realized in the previous sentence");
  plan->add_flag("--mark-stress", plan_args.mark_stress,
                 "Mark focused verbs with '*'");
  plan->add_option("--format", plan_args.format, "Output format")
      ->check(CLI::IsMember({"text", "tsv"}));
  plan->add_flag("--dump-model", plan_args.dump_model,
                 "Print the final discourse model");
  plan->add_flag("-v,--verbose", plan_args.verbose,
                 "Print topic, focus, ground and Cb per sentence");

  app.add_subcommand("stats", "Chi-square analyses of the corpus tables");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (app.got_subcommand("stats")) {
      isplan::write_stats_report(std::cout);
      return 0;
    }
    return run_plan(plan_args);
  } catch (const isplan::InputError& e) {
    std::cerr << "isplan: " << e.what() << '\n';
    return 1;
  } catch (const isplan::InvariantError& e) {
    std::cerr << "isplan: internal error: " << e.what() << '\n';
    return 2;
  }
}
