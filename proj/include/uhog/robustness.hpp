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

#ifndef UHOG_ROBUSTNESS_HPP_
#define UHOG_ROBUSTNESS_HPP_

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "uhog/grammar.hpp"
#include "uhog/parser.hpp"

namespace uhog {

// (component, word) of an unknown word.
using Hole = std::pair<std::string, std::string>;

struct PartialMeaning {
  Term meaning;
  std::set<Hole> holes;
};

// tau(C, /w/) for component C of the grammar.
Term make_placeholder(const Grammar &grammar, int component,
                      const std::string &word);

// Placeholders occurring in `term`.
std::set<Hole> holes_of(const Term &term, const Alphabet &alphabet);

PartialMeaning partial_meaning(const Term &meaning, const Alphabet &alphabet);

// The unique meaning of `word` in `component`, or its placeholder when it
// has none. Throws Ambiguous.
Term translate(const Grammar &grammar, const std::string &component,
               const std::string &word);

// An expression of `meaning` in `component`, or sigma(C, meaning). Lexicons
// are searched by reverse lookup; other components by generating phrases up
// to `depth` nested components, shortest first. Throws Ambiguous when a
// lexicon has several words for the meaning.
struct Expression {
  bool found = false;
  std::string word;
  std::optional<Term> placeholder;  // sigma term when not found
};
Expression express(const Grammar &grammar, const std::string &component,
                   const Term &meaning, int depth = 8);

// The strict parse when it has meanings, else the parse in which extendable
// components cover unknown words with placeholders. Throws NoParse.
ParseResult partial_parse(const Grammar &grammar, const std::string &component,
                          const std::string &input,
                          ParseOptions options = ParseOptions{});

// Substitutes every hole that `grammar` now translates to exactly one
// meaning, then simplifies.
PartialMeaning resolve_placeholders(const PartialMeaning &meaning,
                                    const Grammar &grammar);

// tau and sigma unfolded into descriptions; products are described
// componentwise.
Term expand_placeholders(const Term &term, const Sorts &sorts = Sorts{});

// `(hole COMPONENT "word")`.
std::string hole_sexpr(const Hole &hole);

// Stored parse documents, as written by to_text.
struct StoredParse {
  std::string input;
  std::string component;
  std::vector<Term> meanings;
};
StoredParse read_stored_parse(const std::string &text, const Grammar &grammar);

}  // namespace uhog

#endif  // UHOG_ROBUSTNESS_HPP_
