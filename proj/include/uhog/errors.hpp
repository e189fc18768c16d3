// Copyright 2026 The uhog Authors.
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

#ifndef UHOG_ERRORS_HPP_
#define UHOG_ERRORS_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace uhog {

// Base class of every error raised by the engine.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Ill-typed term or grammar component. `where` is a term path or a component
// name, depending on the raiser.
class TypeError : public Error {
 public:
  TypeError(std::string where, std::string expected, std::string found)
      : Error("type mismatch at " + where + ": expected " + expected +
              ", found " + found),
        where_(std::move(where)),
        expected_(std::move(expected)),
        found_(std::move(found)) {}

  const std::string &where() const { return where_; }
  const std::string &expected() const { return expected_; }
  const std::string &found() const { return found_; }

 private:
  std::string where_;
  std::string expected_;
  std::string found_;
};

// Reduction exceeded its step budget.
class NonTerminating : public Error {
 public:
  explicit NonTerminating(long budget)
      : Error("reduction exceeded step budget " + std::to_string(budget)),
        budget_(budget) {}
  long budget() const { return budget_; }

 private:
  long budget_;
};

// Input character outside the alphabet.
class UnknownSymbol : public Error {
 public:
  UnknownSymbol(std::string symbol, std::size_t position)
      : Error("unknown symbol '" + symbol + "' at position " +
              std::to_string(position)),
        symbol_(std::move(symbol)),
        position_(position) {}
  const std::string &symbol() const { return symbol_; }
  std::size_t position() const { return position_; }

 private:
  std::string symbol_;
  std::size_t position_;
};

class NotAWordTerm : public Error {
 public:
  using Error::Error;
};

// Syntax error in a grammar file, rules file or S-expression.
class ParseError : public Error {
 public:
  ParseError(const std::string &message, int line, int col)
      : Error(std::to_string(line) + ":" + std::to_string(col) + ": " +
              message),
        line_(line),
        col_(col) {}
  int line() const { return line_; }
  int col() const { return col_; }

 private:
  int line_;
  int col_;
};

class UnknownComponent : public Error {
 public:
  UnknownComponent(std::string name, int line)
      : Error("unknown component '" + name + "'" +
              (line > 0 ? " at line " + std::to_string(line) : "")),
        name_(std::move(name)),
        line_(line) {}
  const std::string &name() const { return name_; }
  int line() const { return line_; }

 private:
  std::string name_;
  int line_;
};

class Ambiguous : public Error {
 public:
  Ambiguous(const std::string &what, std::size_t count)
      : Error(what + ": " + std::to_string(count) + " readings"),
        count_(count) {}
  std::size_t count() const { return count_; }

 private:
  std::size_t count_;
};

class NoParse : public Error {
 public:
  using Error::Error;
};

// Program step whose instruction has the wrong shape or type.
class IllTypedInstruction : public Error {
 public:
  using Error::Error;
};

// Term outside the fragment an evaluator supports.
class Unsupported : public Error {
 public:
  using Error::Error;
};

}  // namespace uhog

#endif  // UHOG_ERRORS_HPP_
