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

#ifndef UHOG_BUILTINS_HPP_
#define UHOG_BUILTINS_HPP_

#include <string>

#include "uhog/term.hpp"
#include "uhog/type.hpp"

namespace uhog {

// Builders for the distinguished constants at their fixed type schemes.

Term mk_true();
Term mk_false();
Term mk_not(Term a);
Term mk_and(Term a, Term b);
Term mk_or(Term a, Term b);
Term mk_imp(Term a, Term b);

// Quantifiers and description over a binder (x : type).
Term mk_forall(const std::string &x, const Type &type, Term body);
Term mk_exists(const std::string &x, const Type &type, Term body);
Term mk_iota(Term predicate);
Term mk_ite(Term then_term, Term else_term, Term cond);

// Pointwise lifting of the connectives to predicates of any arity, and the
// predicate implication `A => B` as a universally quantified formula.
// Throws TypeError when the operand types disagree.
Term lift_and(Term a, Term b);
Term lift_or(Term a, Term b);
Term lift_not(Term a);
Term lift_imp(Term a, Term b);

// Identity function on `type`.
Term mk_identity(const Type &type);
// Composition f . g as the distinguished compose constant.
Term mk_compose(Term f, Term g);

Term mk_star();

// Symbolic type constants.
Term mk_empty_word(const Sorts &sorts);
Term mk_symbol(int index, const Sorts &sorts);
Term mk_concat(Term a, Term b, const Sorts &sorts);

// Context instructions.
Term mk_setref(Term symbol, Term value, const Sorts &sorts);
Term mk_deref(Term symbol, const Sorts &sorts);
Term mk_unset(Term symbol, const Sorts &sorts);
Term mk_assert(Term formula, const Sorts &sorts);
Term mk_refute(Term formula, const Sorts &sorts);
Term mk_test(Term formula, const Sorts &sorts);

// tau and sigma operators over a language relation of type s -> a -> t.
Term mk_tau(Term language, Term word, const Sorts &sorts);
Term mk_sigma(Term language, Term meaning, const Sorts &sorts);

// True if `type` is an instance of the type scheme of reserved constant
// `name`. Alphabet constants C<i> require the symbolic type.
bool fits_scheme(std::string_view name, const Type &type, const Sorts &sorts);

// Index of an alphabet constant name "C<i>", or -1.
int symbol_index(std::string_view name);

// Fresh variable name based on `base` that satisfies `taken`.
template <typename Pred>
std::string fresh_name(const std::string &base, Pred taken) {
  std::string name = base;
  while (taken(name)) name += '\'';
  return name;
}

}  // namespace uhog

#endif  // UHOG_BUILTINS_HPP_
