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

// Reader and writer for the s-expression document format:
//
//   doc     := record*
//   record  := "(sent" pred adjunct* feat* ")"
//   pred    := "(pred" SYMBOL arg* ")"
//   arg     := "(arg" ROLE filler ")"
//   filler  := entity | "(clause" pred ")"
//   entity  := SYMBOL | "(ent" SYMBOL ("(form" FORM ")")? ")"
//   adjunct := "(adv" entity ("(setting +)")? ")"
//   feat    := "(feat" SYMBOL SYMBOL ")"
//
// `;` starts a comment running to the end of the line. Entities without a
// form are indefinite.

#pragma once

#include <cctype>
#include <cstddef>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "isplan/error.hpp"
#include "isplan/interlingua.hpp"

namespace isplan {

// Feature keys accepted in `(feat KEY VALUE)`.
inline bool is_feature_key(std::string_view key) {
  return key == "tense" || key == "polarity" || key == "mood";
}

namespace detail {

struct Token {
  enum class Kind { open, close, symbol, end } kind = Kind::end;
  std::string text;
  std::size_t line = 1;
  std::size_t column = 1;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  Token next() {
    skip_blank();
    Token token;
    token.line = line_;
    token.column = column_;
    if (pos_ >= text_.size()) return token;
    char c = text_[pos_];
    if (c == '(' || c == ')') {
      token.kind = c == '(' ? Token::Kind::open : Token::Kind::close;
      token.text = std::string(1, c);
      advance();
      return token;
    }
    if (c == '"') throw ParseError("unexpected '\"'", line_, column_);
    token.kind = Token::Kind::symbol;
    while (pos_ < text_.size() && !is_delimiter(text_[pos_])) {
      token.text.push_back(text_[pos_]);
      advance();
    }
    return token;
  }

 private:
  static bool is_delimiter(char c) {
    return std::isspace(static_cast<unsigned char>(c)) || c == '(' ||
           c == ')' || c == ';' || c == '"';
  }

  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  void skip_blank() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == ';') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        break;
      }
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
};

class DocumentParser {
 public:
  DocumentParser(std::string_view text, const ThetaHierarchy& hierarchy)
      : lexer_(text), hierarchy_(hierarchy) {
    shift();
  }

  std::vector<SemanticRep> parse() {
    std::vector<SemanticRep> records;
    while (look_.kind != Token::Kind::end) records.push_back(record());
    return records;
  }

 private:
  void shift() { look_ = lexer_.next(); }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what, look_.line, look_.column);
  }

  static std::string describe(const Token& token) {
    switch (token.kind) {
      case Token::Kind::open: return "'('";
      case Token::Kind::close: return "')'";
      case Token::Kind::symbol: return "'" + token.text + "'";
      case Token::Kind::end: return "end of input";
    }
    return "token";
  }

  void expect_close() {
    if (look_.kind != Token::Kind::close) {
      fail("expected ')' but found " + describe(look_));
    }
    shift();
  }

  std::string symbol(std::string_view what) {
    if (look_.kind != Token::Kind::symbol) {
      fail("expected " + std::string(what) + " but found " + describe(look_));
    }
    std::string text = std::move(look_.text);
    shift();
    return text;
  }

  // Consumes "(" KEYWORD and returns true when the lookahead starts a form
  // with that keyword.
  bool enter(std::string_view keyword) {
    if (look_.kind != Token::Kind::open) return false;
    Token saved = look_;
    Lexer saved_lexer = lexer_;
    shift();
    if (look_.kind == Token::Kind::symbol && look_.text == keyword) {
      shift();
      return true;
    }
    look_ = std::move(saved);
    lexer_ = saved_lexer;
    return false;
  }

  void require(std::string_view keyword) {
    if (!enter(keyword)) {
      fail("expected '(" + std::string(keyword) + "' but found " +
           describe(look_));
    }
  }

  SemanticRep record() {
    require("sent");
    SemanticRep rep = pred();
    while (enter("adv")) {
      Adjunct adjunct;
      adjunct.entity = entity();
      if (enter("setting")) {
        std::string flag = symbol("'+' or '-'");
        if (flag != "+" && flag != "-") fail("setting flag must be '+' or '-'");
        adjunct.setting = flag == "+";
        expect_close();
      }
      expect_close();
      rep.adjuncts.push_back(std::move(adjunct));
    }
    while (enter("feat")) {
      std::size_t line = look_.line, column = look_.column;
      std::string key = symbol("feature name");
      if (!is_feature_key(key)) {
        throw ParseError("unknown feature '" + key + "'", line, column);
      }
      if (rep.feature(key) != nullptr) {
        throw ParseError("duplicate feature '" + key + "'", line, column);
      }
      std::string value = symbol("feature value");
      rep.features.emplace_back(std::move(key), std::move(value));
      expect_close();
    }
    expect_close();
    return rep;
  }

  SemanticRep pred() {
    require("pred");
    SemanticRep rep;
    rep.event.symbol = symbol("predicate symbol");
    while (enter("arg")) {
      std::size_t line = look_.line, column = look_.column;
      std::string role_text = symbol("theta role");
      auto role = role_from_string(role_text);
      if (!role) {
        throw ParseError("unknown theta role '" + role_text + "'", line,
                         column);
      }
      for (const Argument& existing : rep.args) {
        if (existing.role == *role) {
          throw ParseError("duplicate role '" + role_text + "' in one clause",
                           line, column);
        }
      }
      Argument arg;
      arg.role = *role;
      if (enter("clause")) {
        arg.filler = EmbeddedClause{std::make_shared<const SemanticRep>(pred())};
        expect_close();
      } else {
        arg.filler = entity();
      }
      expect_close();
      rep.args.push_back(std::move(arg));
    }
    expect_close();
    std::stable_sort(rep.args.begin(), rep.args.end(),
                     [this](const Argument& a, const Argument& b) {
                       return hierarchy_.rank(a.role) < hierarchy_.rank(b.role);
                     });
    return rep;
  }

  EntityRef entity() {
    EntityRef ref;
    if (enter("ent")) {
      ref.symbol = symbol("concept symbol");
      if (enter("form")) {
        std::size_t line = look_.line, column = look_.column;
        std::string text = symbol("source form");
        auto form = form_from_string(text);
        if (!form) {
          throw ParseError("unknown source form '" + text + "'", line, column);
        }
        ref.form = *form;
        expect_close();
      }
      expect_close();
      return ref;
    }
    ref.symbol = symbol("entity");
    return ref;
  }

  Lexer lexer_;
  Token look_;
  const ThetaHierarchy& hierarchy_;
};

// Assigns occurrence indices in print order: event, arguments (recursing
// into clauses), adjuncts.
inline SemanticRep renumber(const SemanticRep& rep, std::size_t& next) {
  SemanticRep out = rep;
  out.event.index = next++;
  for (Argument& arg : out.args) {
    if (arg.is_clause()) {
      arg.filler = EmbeddedClause{
          std::make_shared<const SemanticRep>(renumber(arg.clause(), next))};
    } else {
      std::get<EntityRef>(arg.filler).index = next++;
    }
  }
  for (Adjunct& adjunct : out.adjuncts) adjunct.entity.index = next++;
  return out;
}

inline void print_entity(std::ostream& out, const EntityRef& ref) {
  if (ref.form == SourceForm::indefinite_np) {
    out << ref.symbol;
  } else {
    out << "(ent " << ref.symbol << " (form " << to_string(ref.form) << "))";
  }
}

inline void print_pred(std::ostream& out, const SemanticRep& rep) {
  out << "(pred " << rep.event.symbol;
  for (const Argument& arg : rep.args) {
    out << " (arg " << to_string(arg.role) << ' ';
    if (arg.is_clause()) {
      out << "(clause ";
      print_pred(out, arg.clause());
      out << ')';
    } else {
      print_entity(out, arg.entity());
    }
    out << ')';
  }
  out << ')';
}

}  // namespace detail

// One SemanticRep per `(sent ...)` record, in document order. Every entity
// occurrence gets a fresh index, numbered from 1 across the document.
inline std::vector<SemanticRep> parse_document(
    std::string_view text, const ThetaHierarchy& hierarchy = {}) {
  detail::DocumentParser parser(text, hierarchy);
  std::vector<SemanticRep> records = parser.parse();
  std::size_t next = 1;
  for (SemanticRep& rep : records) rep = detail::renumber(rep, next);
  return records;
}

inline std::string print_sentence(const SemanticRep& rep) {
  std::ostringstream out;
  out << "(sent ";
  detail::print_pred(out, rep);
  for (const Adjunct& adjunct : rep.adjuncts) {
    out << " (adv ";
    detail::print_entity(out, adjunct.entity);
    if (adjunct.setting) out << " (setting +)";
    out << ')';
  }
  for (const auto& [key, value] : rep.features) {
    out << " (feat " << key << ' ' << value << ')';
  }
  out << ')';
  return out.str();
}

inline std::string print_document(const std::vector<SemanticRep>& records) {
  std::string out;
  for (const SemanticRep& rep : records) {
    out += print_sentence(rep);
    out += '\n';
  }
  return out;
}

// Theta hierarchy config: one line `theta ROLE ROLE ...` listing all six
// roles highest first; `#` comments.
inline ThetaHierarchy load_theta_hierarchy(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  std::optional<ThetaHierarchy> result;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream words(line);
    std::string keyword;
    if (!(words >> keyword)) continue;
    if (keyword != "theta") {
      throw ParseError("unknown directive '" + keyword + "'", line_no, 1);
    }
    if (result) throw ParseError("duplicate theta line", line_no, 1);
    std::vector<Role> order;
    std::string word;
    while (words >> word) {
      auto role = role_from_string(word);
      if (!role) {
        throw ParseError("unknown theta role '" + word + "'", line_no, 1);
      }
      order.push_back(*role);
    }
    result = ThetaHierarchy::from_order(order);
    if (!result) {
      throw ParseError("theta line must list each of the six roles once",
                       line_no, 1);
    }
  }
  if (!result) throw ParseError("missing theta line", line_no + 1, 1);
  return *result;
}

}  // namespace isplan
