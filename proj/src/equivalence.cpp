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

#include <algorithm>

#include "uhog/builtins.hpp"
#include "uhog/equivalence.hpp"
#include "uhog/errors.hpp"
#include "uhog/words.hpp"

namespace uhog {

using Kind = Term::Kind;
using PK = Pattern::Kind;

namespace {

bool IsBinary(const Term &t, std::string_view op) {
  return t.is(Kind::kApp) && t.fn().is(Kind::kApp) && t.fn().fn().is_con(op);
}

// Rebuilds `t` with `f` applied to each immediate subterm.
template <typename F>
Term MapChildren(const Term &t, F f) {
  switch (t.kind()) {
    case Kind::kVar:
    case Kind::kCon:
      return t;
    case Kind::kApp: {
      Term a = f(t.fn()), b = f(t.arg());
      if (a.same_node(t.fn()) && b.same_node(t.arg())) return t;
      return Term::app(a, b);
    }
    case Kind::kLam: {
      Term b = f(t.body());
      if (b.same_node(t.body())) return t;
      return Term::lam(t.name(), t.type(), b);
    }
    case Kind::kEq: {
      Term a = f(t.lhs()), b = f(t.rhs());
      if (a.same_node(t.lhs()) && b.same_node(t.rhs())) return t;
      return Term::eq(a, b);
    }
    case Kind::kPair: {
      Term a = f(t.left()), b = f(t.right());
      if (a.same_node(t.left()) && b.same_node(t.right())) return t;
      return Term::pair(a, b);
    }
    case Kind::kProj1:
    case Kind::kProj2: {
      Term a = f(t.operand());
      if (a.same_node(t.operand())) return t;
      return t.is(Kind::kProj1) ? Term::proj1(a) : Term::proj2(a);
    }
  }
  return t;
}

// Cheap root filter before attempting a full match.
bool MayMatch(const Pattern &p, const Term &t) {
  switch (p.kind) {
    case PK::kAnd:
      return IsBinary(t, names::kAnd);
    case PK::kOr:
      return IsBinary(t, names::kOr);
    case PK::kNot:
      return spine_head(t).is_con(names::kNot);
    case PK::kImp:
      return spine_head(t).is_con(names::kImp);
    case PK::kIte:
      return spine_head(t).is_con(names::kIte);
    case PK::kExists:
      return spine_head(t).is_con(names::kExists);
    case PK::kForall:
      return spine_head(t).is_con(names::kForall);
    case PK::kEq:
      return t.is(Kind::kEq);
    case PK::kConst:
      return t.is_con(p.name);
    case PK::kApp:
      return t.is(Kind::kApp);
    default:
      return true;
  }
}

struct Rewriter {
  const RuleSet &rules;
  long fuel;
  long budget;
  bool changed = false;

  Term Pass(const Term &t) {
    Term cur = MapChildren(t, [&](const Term &c) { return Pass(c); });
    if (cur.is(Kind::kEq)) {
      // Distinct words denote distinct strings.
      auto a = word_symbols(cur.lhs());
      auto b = word_symbols(cur.rhs());
      if (a && b) {
        if (--fuel < 0) throw NonTerminating(budget);
        changed = true;
        return *a == *b ? mk_true() : mk_false();
      }
    }
    for (const auto &rule : rules.rules()) {
      if (!MayMatch(rule.lhs, cur)) continue;
      if (auto out = rewrite_root(rule, cur)) {
        if (--fuel < 0) throw NonTerminating(budget);
        changed = true;
        return *out;
      }
    }
    return cur;
  }
};

Term Canon(const Term &t) {
  for (std::string_view op : {names::kAnd, names::kOr}) {
    if (!IsBinary(t, op)) continue;
    std::vector<Term> ops =
        op == names::kAnd ? conjuncts(t) : disjuncts(t);
    for (auto &o : ops) o = Canon(o);
    std::stable_sort(ops.begin(), ops.end(), [](const Term &a, const Term &b) {
      return compare(a, b) < 0;
    });
    Term out = ops.back();
    for (std::size_t i = ops.size() - 1; i-- > 0;) {
      out = op == names::kAnd ? mk_and(ops[i], out) : mk_or(ops[i], out);
    }
    return out;
  }
  return MapChildren(t, Canon);
}

}  // namespace

Term canonicalize(const Term &term) { return Canon(term); }

Term simplify(const Term &term, const RuleSet &rules, long budget) {
  Term cur = canonicalize(normalize(term, budget));
  Rewriter rw{rules, budget, budget};
  for (;;) {
    rw.changed = false;
    Term next = rw.Pass(cur);
    if (!rw.changed) return cur;
    next = canonicalize(normalize(next, budget));
    if (alpha_eq(next, cur)) return cur;
    cur = next;
  }
}

bool equivalent(const Term &a, const Term &b, const RuleSet &rules) {
  if (a.same_node(b)) return true;
  return alpha_eq(simplify(a, rules), simplify(b, rules));
}

bool GeneratorSet::insert(const Term &term, const RuleSet &rules) {
  Term s = simplify(term, rules);
  for (const auto &t : terms_) {
    if (alpha_eq(t, s)) return false;
  }
  terms_.push_back(s);
  return true;
}

bool GeneratorSet::contains(const Term &term, const RuleSet &rules) const {
  Term s = simplify(term, rules);
  return std::any_of(terms_.begin(), terms_.end(),
                     [&](const Term &t) { return alpha_eq(t, s); });
}

bool GeneratorSet::subset_of(const GeneratorSet &other,
                             const RuleSet &rules) const {
  return std::all_of(terms_.begin(), terms_.end(), [&](const Term &t) {
    return other.contains(t, rules);
  });
}

bool GeneratorSet::same_as(const GeneratorSet &other,
                           const RuleSet &rules) const {
  return subset_of(other, rules) && other.subset_of(*this, rules);
}

GeneratorSet dedupe(const std::vector<Term> &terms, const RuleSet &rules,
                    const Sorts &sorts) {
  if (terms.empty()) return GeneratorSet();
  Type type = typecheck(terms.front(), sorts);
  GeneratorSet out(type);
  for (const auto &t : terms) {
    Type ty = typecheck(t, sorts);
    if (ty != type) {
      throw TypeError("dedupe", type.sexpr(), ty.sexpr());
    }
    out.insert(t, rules);
  }
  return out;
}

}  // namespace uhog
