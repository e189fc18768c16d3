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

#ifndef UHOG_SYNTAX_HPP_
#define UHOG_SYNTAX_HPP_

#include <map>
#include <string>
#include <string_view>

#include "uhog/sexpr.hpp"
#include "uhog/term.hpp"
#include "uhog/type.hpp"
#include "uhog/words.hpp"

namespace uhog {

// Names visible while reading terms.
struct TermScope {
  Sorts sorts;
  const Alphabet *alphabet = nullptr;  // standard alphabet when null
  std::map<std::string, Type> constants;
  std::map<std::string, Term> definitions;
  std::map<std::string, Type> type_aliases;
  // Grammar components, by meaning type; used by (tau C w) and (sigma C m).
  std::map<std::string, Type> components;

  const Alphabet &alpha() const {
    return alphabet != nullptr ? *alphabet : Alphabet::standard();
  }
};

// Types: t e e1 e2 ... c s unit, (-> a b ...), (* a b ...), aliases, and
// compact atoms over the letters e t c s such as `eet`.
Type parse_type(const Sexp &sexp, const TermScope &scope);
Type parse_type(std::string_view text, const TermScope &scope);

// Terms in the core S-expression syntax plus the logical and instruction
// sugar. Undeclared bare symbols are rejected. The result is type checked.
Term parse_term(const Sexp &sexp, const TermScope &scope);
Term parse_term(std::string_view text, const TermScope &scope);

// Canonical S-expression; parse_term(print_term(t)) is alpha-equal to t
// when every constant is printed with its type. Word terms are printed as
// (word "...") when `alphabet` is given.
std::string print_term(const Term &term, const Sorts &sorts = Sorts{},
                       const Alphabet *alphabet = nullptr);

// Human-readable notation with logical symbols, /word/ literals and
// programs written as compositions.
std::string pretty(const Term &term, const Sorts &sorts = Sorts{},
                   const Alphabet *alphabet = nullptr);

}  // namespace uhog

#endif  // UHOG_SYNTAX_HPP_
