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

#ifndef UHOG_EQUIVALENCE_HPP_
#define UHOG_EQUIVALENCE_HPP_

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "uhog/term.hpp"
#include "uhog/term_ops.hpp"
#include "uhog/type.hpp"

namespace uhog {

// Pattern over terms. Atoms starting with `?` are metavariables; `and` and
// `or` patterns match modulo associativity and commutativity.
struct Pattern {
  enum class Kind {
    kMeta,
    kConst,  // true, false or any constant by name
    kAnd,
    kOr,
    kNot,
    kImp,
    kEq,
    kExists,
    kForall,
    kIte,
    kApp,
    kSubst,  // right-hand sides only: (subst B x A) is B[x := A]
  };

  Kind kind = Kind::kConst;
  std::string name;  // metavariable, constant or binder metavariable
  std::vector<Pattern> kids;

  std::string str() const;
};

struct RewriteRule {
  std::string name;
  Pattern lhs;
  Pattern rhs;
  // (binder metavariable, term metavariable) pairs: the variable bound to
  // the first must not occur free in the term bound to the second.
  std::vector<std::pair<std::string, std::string>> notfree;
};

// Ordered rewrite library.
class RuleSet {
 public:
  RuleSet() = default;

  // One rule per line: `name : LHS ==> RHS [where ?x notfree ?A, ...]`.
  // Blank lines and `#` comments are skipped. Throws ParseError.
  static RuleSet parse(std::string_view text);
  static RuleSet load(const std::string &path);

  // The rules file named by UHOG_RULES, else the copy built into the
  // library. Loaded once.
  static const RuleSet &bundled();

  // Copy without the named rules.
  RuleSet without(const std::vector<std::string> &names) const;

  const std::vector<RewriteRule> &rules() const { return rules_; }
  bool contains(std::string_view name) const;

 private:
  std::vector<RewriteRule> rules_;
};

// Variable and term bindings of a successful match.
struct Match {
  std::map<std::string, Term> terms;
  std::map<std::string, VarRef> binders;
  // Conjuncts or disjuncts of a root `and`/`or` left over by the pattern.
  std::vector<Term> rest;
};

// First match of `pattern` at the root of `term`. Leftover operands are
// allowed at the root when `allow_rest` is set.
std::optional<Match> match_pattern(const Pattern &pattern, const Term &term,
                                   bool allow_rest = false);

// Result of rewriting `term` at its root with `rule`, if it matches.
std::optional<Term> rewrite_root(const RewriteRule &rule, const Term &term);

// Flattened operands of nested `and` (resp. `or`) applications.
std::vector<Term> conjuncts(const Term &term);
std::vector<Term> disjuncts(const Term &term);

// Associative-commutative normal form: `and`/`or` chains flattened, sorted
// by the term order and rebuilt right-associated.
Term canonicalize(const Term &term);

// normalize interleaved with the rewrite library and canonicalization, to a
// fixpoint. Throws NonTerminating when `budget` is exhausted.
Term simplify(const Term &term, const RuleSet &rules = RuleSet::bundled(),
              long budget = kDefaultBudget);

// Sound but incomplete: simplified forms are alpha-equal.
bool equivalent(const Term &a, const Term &b,
                const RuleSet &rules = RuleSet::bundled());

// Finite set of pairwise non-equivalent simplified terms of one type.
class GeneratorSet {
 public:
  GeneratorSet() = default;
  explicit GeneratorSet(Type type) : type_(std::move(type)) {}

  const std::optional<Type> &type() const { return type_; }
  const std::vector<Term> &terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }

  // Adds the simplified term unless an equivalent one is present; true if
  // added.
  bool insert(const Term &term, const RuleSet &rules = RuleSet::bundled());
  bool contains(const Term &term,
                const RuleSet &rules = RuleSet::bundled()) const;
  // Inclusion and equality up to equivalence, independent of order.
  bool subset_of(const GeneratorSet &other,
                 const RuleSet &rules = RuleSet::bundled()) const;
  bool same_as(const GeneratorSet &other,
               const RuleSet &rules = RuleSet::bundled()) const;

 private:
  std::optional<Type> type_;
  std::vector<Term> terms_;
};

// Greedy left-to-right filtering by equivalent(). Throws TypeError on mixed
// types.
GeneratorSet dedupe(const std::vector<Term> &terms,
                    const RuleSet &rules = RuleSet::bundled(),
                    const Sorts &sorts = Sorts{});

enum class Refutation { kDistinct, kUnknown };

struct ModelSizes {
  int individuals = 2;  // cardinality of every individual sort
  // Interpretations tried exhaustively; beyond this a fixed-seed sample of
  // the same size is drawn.
  long max_interpretations = 200000;
};

// Searches finite interpretations of the constants for one separating `a`
// from `b`. Closed terms over t, unit, individual sorts other than c, word
// literals, functions and products only; iota must reduce away. Throws
// Unsupported otherwise.
Refutation finite_model_refute(const Term &a, const Term &b,
                               const ModelSizes &sizes = ModelSizes{},
                               const Sorts &sorts = Sorts{});

}  // namespace uhog

#endif  // UHOG_EQUIVALENCE_HPP_
