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

// Sentence-by-sentence driver: plan against the model of earlier
// sentences, linearize, realize, then commit the sentence to the model.

#pragma once

#include <cstddef>
#include <fstream>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "isplan/discourse.hpp"
#include "isplan/discourse_model.hpp"
#include "isplan/error.hpp"
#include "isplan/interlingua.hpp"
#include "isplan/knowledge.hpp"
#include "isplan/lexicon.hpp"
#include "isplan/linearizer.hpp"
#include "isplan/planner.hpp"

namespace isplan {

struct PipelineOptions {
  PlacementPolicy policy;
  GlossOptions gloss;
};

struct SentenceReport {
  std::size_t ordinal = 0;  // 1-based
  InformationStructure is;
  LinearizedSentence sentence;
};

class DocumentPlanner {
 public:
  DocumentPlanner(const KnowledgeBase& kb, const Lexicon& lexicon,
                  PipelineOptions options = {})
      : kb_(kb), lexicon_(lexicon), options_(options) {}

  // Starts from a pre-populated model, e.g. seeded prior context.
  DocumentPlanner(const KnowledgeBase& kb, const Lexicon& lexicon,
                  PipelineOptions options, DiscourseModel model,
                  std::optional<CfList> prev_cf)
      : kb_(kb),
        lexicon_(lexicon),
        options_(options),
        model_(std::move(model)),
        prev_cf_(std::move(prev_cf)) {}

  SentenceReport next(const SemanticRep& rep) {
    SentenceReport report;
    report.ordinal = model_.sentence_count() + 1;
    report.is = plan_sentence(rep, prev_cf_, model_, kb_);
    report.sentence = linearize(rep, report.is, options_.policy, prev_realized_);
    report.sentence.gloss = realize_gloss(report.sentence, lexicon_, options_.gloss);
    commit_sentence(model_, rep, kb_);
    prev_cf_ = build_cf(rep);
    prev_realized_ = realized_concepts(rep);
    return report;
  }

  const DiscourseModel& model() const { return model_; }
  const std::optional<CfList>& previous_cf() const { return prev_cf_; }

 private:
  const KnowledgeBase& kb_;
  const Lexicon& lexicon_;
  PipelineOptions options_;
  DiscourseModel model_;
  std::optional<CfList> prev_cf_;
  std::set<Concept> prev_realized_;
};

// Discourse state preceding the document.
struct DiscourseContext {
  DiscourseModel model;
  std::optional<CfList> prev_cf;
};

// Context file, one directive per line, `#` comments:
//
//   entity <concept> [discourse-old|inferrable|hearer-old|brand-new]
//   previous <concept> <concept> ...     (Cf list of the preceding utterance)
inline DiscourseContext load_context(std::string_view text) {
  DiscourseContext context;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream words(line);
    std::string keyword;
    if (!(words >> keyword)) continue;
    if (keyword == "entity") {
      std::string symbol, status_text, extra;
      if (!(words >> symbol)) throw ParseError("expected a concept", line_no, 1);
      Status status = Status::discourse_old;
      if (words >> status_text) {
        bool known = false;
        for (Status s : {Status::discourse_old, Status::inferrable,
                         Status::hearer_old, Status::brand_new}) {
          if (to_string(s) == status_text) {
            status = s;
            known = true;
          }
        }
        if (!known) {
          throw ParseError("unknown status '" + status_text + "'", line_no, 1);
        }
        if (words >> extra) throw ParseError("trailing text", line_no, 1);
      }
      context.model.seed(symbol, status);
    } else if (keyword == "previous") {
      if (context.prev_cf) throw ParseError("duplicate 'previous' line", line_no, 1);
      CfList cf;
      std::string symbol;
      while (words >> symbol) {
        if (!cf.contains(symbol)) cf.ranked.push_back(symbol);
      }
      context.prev_cf = std::move(cf);
    } else {
      throw ParseError("unknown directive '" + keyword + "'", line_no, 1);
    }
  }
  return context;
}

inline std::vector<SentenceReport> plan_document(
    const std::vector<SemanticRep>& document, const KnowledgeBase& kb,
    const Lexicon& lexicon, const PipelineOptions& options = {},
    DiscourseModel* final_model = nullptr,
    const DiscourseContext& context = {}) {
  require_types(kb, document);
  for (const auto& [symbol, entity] : context.model.entities()) {
    if (!kb.type_of(symbol)) {
      throw KnowledgeError("context: no type declared for concept '" +
                           symbol + "'");
    }
  }
  DocumentPlanner planner(kb, lexicon, options, context.model, context.prev_cf);
  std::vector<SentenceReport> reports;
  for (const SemanticRep& rep : document) reports.push_back(planner.next(rep));
  if (final_model != nullptr) *final_model = planner.model();
  return reports;
}

namespace detail {

inline std::string join_concepts(const std::vector<Constituent>& items,
                                 const char* separator) {
  std::string out;
  for (const Constituent& c : items) {
    if (!out.empty()) out += separator;
    out += c.symbol();
  }
  return out;
}

inline std::string join_tokens(const std::vector<std::string>& tokens) {
  std::string out;
  for (const std::string& t : tokens) {
    if (!out.empty()) out += ' ';
    out += t;
  }
  return out;
}

}  // namespace detail

// One line per sentence: "(T:n,F:m) <label> <gloss>". With `verbose`, each
// line is followed by the topic, focus, ground, dropped items and Cb.
inline void write_text(std::ostream& out,
                       const std::vector<SentenceReport>& reports,
                       bool verbose = false) {
  for (const SentenceReport& r : reports) {
    out << r.is.annotation() << ' ' << r.sentence.label << ' '
        << detail::join_tokens(r.sentence.gloss) << '\n';
    if (!verbose) continue;
    auto or_dash = [](const std::string& s) { return s.empty() ? "-" : s; };
    out << "  topic:   " << r.is.topic.symbol() << '\n'
        << "  focus:   " << or_dash(detail::join_concepts(r.is.focus, " "))
        << (r.is.focus_fallback ? " (default)" : "") << '\n'
        << "  ground:  " << or_dash(detail::join_concepts(r.is.ground, " "))
        << '\n'
        << "  dropped: "
        << or_dash(detail::join_concepts(r.sentence.dropped, " ")) << '\n'
        << "  cb:      " << (r.is.cb ? *r.is.cb : std::string("-")) << '\n';
  }
}

inline constexpr const char* kTsvHeader =
    "ordinal\ttopic\ttopic_step\tfocus_list\tfocus_step\tground_list\tdropped"
    "\tlabel\tgloss";

inline void write_tsv(std::ostream& out,
                      const std::vector<SentenceReport>& reports) {
  out << kTsvHeader << '\n';
  for (const SentenceReport& r : reports) {
    out << r.ordinal << '\t' << r.is.topic.symbol() << '\t'
        << step_number(r.is.topic_step) << '\t'
        << detail::join_concepts(r.is.focus, ",") << '\t'
        << step_number(r.is.focus_step) << '\t'
        << detail::join_concepts(r.is.ground, ",") << '\t'
        << detail::join_concepts(r.sentence.dropped, ",") << '\t'
        << r.sentence.label << '\t' << detail::join_tokens(r.sentence.gloss)
        << '\n';
  }
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace isplan
