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

#ifndef UHOG_TERM_OPS_HPP_
#define UHOG_TERM_OPS_HPP_

#include <compare>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "uhog/term.hpp"
#include "uhog/type.hpp"

namespace uhog {

using VarRef = std::pair<std::string, Type>;
using VarSet = std::set<VarRef>;

struct Binding {
  std::string name;
  Type type;
  Term replacement;
};

inline constexpr long kDefaultBudget = 10000;

// Type of a term. Throws TypeError with a path such as "app.fn.lam".
Type typecheck(const Term &term, const Sorts &sorts = Sorts{});

// Capture-avoiding substitution; bound variables are renamed with primes.
Term substitute(const Term &term, const Binding &binding);

// Free variables as (name, type) pairs. Constants are not included.
VarSet free_vars(const Term &term);
bool occurs_free(const Term &term, const std::string &name, const Type &type);

// Names of the constants occurring in `term`.
std::set<std::string> constants(const Term &term);

// Total order on terms, invariant under renaming of bound variables. Bound
// variables compare by binder depth and sort before free ones.
std::strong_ordering compare(const Term &a, const Term &b);
bool alpha_eq(const Term &a, const Term &b);

// Normal-order beta, eta, projection and surjective pairing reduction plus
// the ite, iota and compose laws, to a fixpoint. Throws NonTerminating when
// more than `budget` contraction steps are needed.
Term normalize(const Term &term, long budget = kDefaultBudget);

// Number of nodes, used by size caps and tests.
std::size_t term_size(const Term &term);

// Head of an application spine and its arguments in order.
Term spine_head(const Term &term);
std::vector<Term> spine_args(const Term &term);

}  // namespace uhog

#endif  // UHOG_TERM_OPS_HPP_
