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

// Inflected surface forms keyed by concept and case/verb-form key:
//
//   lex <concept> <key> "<surface form>"
//
// Nominal keys are cases (nom, acc, gen, com, dat, loc, obl); verb keys are
// the clause's feature values joined with '+' ("prog", "neg+fut"), "verb"
// for a featureless matrix verb and "ger" for an embedded one.

#pragma once

#include <cctype>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>

#include "isplan/error.hpp"
#include "isplan/interlingua.hpp"

namespace isplan {

class Lexicon {
 public:
  void add(const Concept& symbol, const std::string& key, std::string surface) {
    entries_[{symbol, key}] = std::move(surface);
  }

  std::optional<std::string> lookup(const Concept& symbol,
                                    const std::string& key) const {
    auto it = entries_.find({symbol, key});
    if (it == entries_.end()) return std::nullopt;
    return it->second;
  }

  // Surface form, or "concept#key" when the lexicon has no entry.
  std::string realize(const Concept& symbol, const std::string& key) const {
    if (auto surface = lookup(symbol, key)) return *surface;
    return symbol + "#" + key;
  }

  std::size_t size() const { return entries_.size(); }

 private:
  std::map<std::pair<Concept, std::string>, std::string> entries_;
};

inline Lexicon load_lexicon(std::string_view text) {
  Lexicon lexicon;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::size_t pos = 0;
    auto skip_space = [&] {
      while (pos < line.size() &&
             std::isspace(static_cast<unsigned char>(line[pos]))) {
        ++pos;
      }
    };
    auto word = [&]() -> std::string {
      skip_space();
      std::size_t start = pos;
      while (pos < line.size() &&
             !std::isspace(static_cast<unsigned char>(line[pos])) &&
             line[pos] != '"') {
        ++pos;
      }
      return line.substr(start, pos - start);
    };
    skip_space();
    if (pos == line.size() || line[pos] == '#') continue;
    std::string keyword = word();
    if (keyword != "lex") {
      throw ParseError("unknown declaration '" + keyword + "'", line_no,
                       pos + 1);
    }
    std::string symbol = word();
    std::string key = word();
    skip_space();
    if (symbol.empty() || key.empty() || pos >= line.size() ||
        line[pos] != '"') {
      throw ParseError("expected 'lex <concept> <key> \"<form>\"'", line_no,
                       pos + 1);
    }
    std::size_t close = line.find('"', pos + 1);
    if (close == std::string::npos) {
      throw ParseError("unterminated surface form", line_no, pos + 1);
    }
    std::string surface = line.substr(pos + 1, close - pos - 1);
    pos = close + 1;
    skip_space();
    if (pos < line.size() && line[pos] != '#') {
      throw ParseError("trailing text after surface form", line_no, pos + 1);
    }
    lexicon.add(symbol, key, std::move(surface));
  }
  return lexicon;
}

}  // namespace isplan
