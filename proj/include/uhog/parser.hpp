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

#ifndef UHOG_PARSER_HPP_
#define UHOG_PARSER_HPP_

#include <cstddef>
#include <cstdint>
#include <set>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "uhog/equivalence.hpp"
#include "uhog/grammar.hpp"

namespace uhog {

// Context-free skeleton: every component with its semantic rule replaced by
// the trivial one.
struct Skeleton {
  enum class Kind { kTerminal, kBinary, kUnit };
  struct Node {
    Kind kind = Kind::kTerminal;
    std::unordered_set<std::string> words;  // kTerminal
    std::vector<int> kids;                   // kBinary: 2, kUnit: 1 or more
    bool extend = false;  // may cover unknown words in partial mode
  };

  const Grammar *grammar = nullptr;
  std::vector<Node> nodes;  // indexed like the grammar's components
  // Strongly connected groups of the unit-production graph, kids first.
  std::vector<std::vector<int>> groups;
};

Skeleton build_skeleton(const Grammar &grammar);

struct SpanRef {
  int component;
  int start;
  int end;
  bool operator==(const SpanRef &) const = default;
};

struct ChartItem {
  int component = 0;
  int start = 0;
  int end = 0;
  bool placeholder = false;
  // Each derivation lists the child items it combines.
  std::vector<std::vector<SpanRef>> children;
};

// Recognition chart over code point positions.
class Chart {
 public:
  Chart(const Skeleton &skeleton, std::vector<std::string> chars);

  const Skeleton &skeleton() const { return *skeleton_; }
  int length() const { return static_cast<int>(chars_.size()); }
  const std::vector<std::string> &chars() const { return chars_; }
  std::string slice(int start, int end) const;

  bool has(int component, int start, int end) const {
    return bits_[Key(component, start, end)] != 0;
  }
  bool placeholder(int component, int start, int end) const {
    return bits_[Key(component, start, end)] == 2;
  }
  void mark(int component, int start, int end, bool placeholder) {
    bits_[Key(component, start, end)] = placeholder ? 2 : 1;
  }

  ChartItem item(int component, int start, int end) const;

 private:
  std::size_t Key(int c, int i, int j) const {
    std::size_t n = chars_.size() + 1;
    return (static_cast<std::size_t>(c) * n + i) * n + j;
  }

  const Skeleton *skeleton_;
  std::vector<std::string> chars_;
  std::vector<std::size_t> offsets_;
  std::string text_;
  std::vector<std::uint8_t> bits_;
};

// Characters that end a word for placeholder spans.
bool is_separator(const std::string &ch);

// CKY recognition of every component over every span. In partial mode the
// extendable components also cover any separator-free span they do not
// derive. Throws UnknownSymbol.
Chart recognize(const Skeleton &skeleton, const std::string &input,
                bool partial = false);

struct ParseOptions {
  bool partial = false;
  std::size_t width = 64;  // generator set cap per item
  long budget = kDefaultBudget;
  bool forest = false;
};

// Meanings of the item (component, start, end), empty when filtered out.
GeneratorSet attribute(const Grammar &grammar, const Chart &chart,
                       int component, int start, int end,
                       const ParseOptions &options = ParseOptions{});

struct ParseResult {
  std::string input;
  std::string component;
  GeneratorSet meanings;
  std::vector<std::string> forest;  // filled when requested
  bool partial = false;              // some meaning holds a placeholder
  std::vector<std::string> diagnostics;
};

ParseResult parse(const Grammar &grammar, const std::string &component,
                  const std::string &input,
                  const ParseOptions &options = ParseOptions{});

// Lines `Comp[i,j] -> Kid[i,k] Kid[k,j]` for every derivation step below
// the root item.
std::vector<std::string> forest_dump(const Grammar &grammar, const Chart &chart,
                                     int component);

// Structured text document and stable JSON.
std::string to_text(const ParseResult &result, const Grammar &grammar);
std::string to_json(const ParseResult &result, const Grammar &grammar);

}  // namespace uhog

#endif  // UHOG_PARSER_HPP_
