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
#include <stdexcept>
#include <string>

namespace isplan {

// Bad input: documents, knowledge bases, lexicons, config files.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Syntax error in a text input, carrying a 1-based position.
class ParseError : public InputError {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : InputError(std::to_string(line) + ":" + std::to_string(column) + ": " +
                   what),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

// Inconsistent or incomplete knowledge base.
class KnowledgeError : public InputError {
 public:
  using InputError::InputError;
};

// A structural guarantee of the planner or linearizer was broken.
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace isplan
