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

#include "uhog/builtins.hpp"

#include <vector>

#include "uhog/errors.hpp"
#include "uhog/term_ops.hpp"

namespace uhog {

namespace {

const Type &T() {
  static const Type kT = Type::truth();
  return kT;
}

Term Con(std::string_view name, Type type) {
  return Term::con(std::string(name), std::move(type));
}

Term Binary(std::string_view name, Term a, Term b) {
  return Term::app(Con(name, Type::fun(T(), T(), T())), std::move(a),
                   std::move(b));
}

// Argument types of a predicate a1 -> ... -> ak -> t.
std::vector<Type> PredicateArgs(const Type &type, const std::string &op) {
  std::vector<Type> args;
  Type cur = type;
  while (cur.is_fun()) {
    args.push_back(cur.from());
    cur = cur.to();
  }
  if (!cur.is_truth()) throw TypeError(op, "predicate", type.sexpr());
  return args;
}

std::vector<Term> FreshVars(const std::vector<Type> &types,
                            const std::vector<Term> &avoid) {
  VarSet taken;
  for (const auto &t : avoid) {
    VarSet fv = free_vars(t);
    taken.insert(fv.begin(), fv.end());
  }
  std::vector<Term> vars;
  for (std::size_t i = 0; i < types.size(); ++i) {
    std::string base = types.size() == 1 ? "x" : "x" + std::to_string(i + 1);
    std::string name = fresh_name(base, [&](const std::string &n) {
      for (const auto &v : taken) {
        if (v.first == n) return true;
      }
      return false;
    });
    vars.push_back(Term::var(name, types[i]));
  }
  return vars;
}

Term ApplyAll(Term f, const std::vector<Term> &args) {
  for (const auto &a : args) f = Term::app(std::move(f), a);
  return f;
}

Term LambdaAll(const std::vector<Term> &vars, Term body) {
  for (auto it = vars.rbegin(); it != vars.rend(); ++it) {
    body = Term::lam(it->name(), it->type(), std::move(body));
  }
  return body;
}

template <typename Combine>
Term LiftBinary(const Term &a, const Term &b, const std::string &op,
                Combine combine) {
  Type ta = typecheck(a);
  Type tb = typecheck(b);
  if (ta != tb) throw TypeError(op, ta.sexpr(), tb.sexpr());
  auto arg_types = PredicateArgs(ta, op);
  if (arg_types.empty()) return combine(a, b);
  auto vars = FreshVars(arg_types, {a, b});
  return LambdaAll(vars, combine(ApplyAll(a, vars), ApplyAll(b, vars)));
}

Type ContextInstr(const Sorts &sorts) {
  return Type::fun(Type::context(sorts), Type::context(sorts));
}

}  // namespace

Term mk_true() { return Con(names::kTrue, T()); }
Term mk_false() { return Con(names::kFalse, T()); }

Term mk_not(Term a) {
  return Term::app(Con(names::kNot, Type::fun(T(), T())), std::move(a));
}

Term mk_and(Term a, Term b) {
  return Binary(names::kAnd, std::move(a), std::move(b));
}

Term mk_or(Term a, Term b) {
  return Binary(names::kOr, std::move(a), std::move(b));
}

Term mk_imp(Term a, Term b) {
  return Binary(names::kImp, std::move(a), std::move(b));
}

Term mk_forall(const std::string &x, const Type &type, Term body) {
  return Term::app(Con(names::kForall, Type::fun(Type::fun(type, T()), T())),
                   Term::lam(x, type, std::move(body)));
}

Term mk_exists(const std::string &x, const Type &type, Term body) {
  return Term::app(Con(names::kExists, Type::fun(Type::fun(type, T()), T())),
                   Term::lam(x, type, std::move(body)));
}

Term mk_iota(Term predicate) {
  Type p = typecheck(predicate);
  if (!p.is_predicate()) throw TypeError("iota", "predicate", p.sexpr());
  return Term::app(Con(names::kIota, Type::fun(p, p.from())),
                   std::move(predicate));
}

Term mk_ite(Term then_term, Term else_term, Term cond) {
  Type a = typecheck(then_term);
  return Term::app(Con(names::kIte, Type::fun(a, a, T(), a)),
                   std::move(then_term), std::move(else_term),
                   std::move(cond));
}

Term lift_and(Term a, Term b) {
  return LiftBinary(a, b, "and", [](Term x, Term y) {
    return mk_and(std::move(x), std::move(y));
  });
}

Term lift_or(Term a, Term b) {
  return LiftBinary(a, b, "or", [](Term x, Term y) {
    return mk_or(std::move(x), std::move(y));
  });
}

Term lift_not(Term a) {
  auto arg_types = PredicateArgs(typecheck(a), "not");
  if (arg_types.empty()) return mk_not(std::move(a));
  auto vars = FreshVars(arg_types, {a});
  return LambdaAll(vars, mk_not(ApplyAll(a, vars)));
}

Term lift_imp(Term a, Term b) {
  Type ta = typecheck(a);
  Type tb = typecheck(b);
  if (ta != tb) throw TypeError("imp", ta.sexpr(), tb.sexpr());
  auto arg_types = PredicateArgs(ta, "imp");
  if (arg_types.empty()) return mk_imp(std::move(a), std::move(b));
  auto vars = FreshVars(arg_types, {a, b});
  Term body = mk_imp(ApplyAll(a, vars), ApplyAll(b, vars));
  for (auto it = vars.rbegin(); it != vars.rend(); ++it) {
    body = mk_forall(it->name(), it->type(), std::move(body));
  }
  return body;
}

Term mk_identity(const Type &type) {
  return Term::lam("x", type, Term::var("x", type));
}

Term mk_compose(Term f, Term g) {
  Type tf = typecheck(f);
  Type tg = typecheck(g);
  if (!tf.is_fun() || !tg.is_fun() || tg.to() != tf.from()) {
    throw TypeError("compose", "composable functions",
                    tf.sexpr() + " . " + tg.sexpr());
  }
  Type type = Type::fun(tf, tg, Type::fun(tg.from(), tf.to()));
  return Term::app(Con(names::kCompose, type), std::move(f), std::move(g));
}

Term mk_star() { return Con(names::kStar, Type::unit()); }

Term mk_empty_word(const Sorts &sorts) {
  return Con(names::kEmptyWord, Type::symbolic(sorts));
}

Term mk_symbol(int index, const Sorts &sorts) {
  return Term::con("C" + std::to_string(index), Type::symbolic(sorts));
}

Term mk_concat(Term a, Term b, const Sorts &sorts) {
  Type s = Type::symbolic(sorts);
  return Term::app(Con(names::kConcat, Type::fun(s, s, s)), std::move(a),
                   std::move(b));
}

Term mk_setref(Term symbol, Term value, const Sorts &sorts) {
  Type a = typecheck(symbol, sorts);
  Type c = Type::context(sorts);
  return Term::app(Con(names::kSetref, Type::fun(a, a, c, c)),
                   std::move(symbol), std::move(value));
}

Term mk_deref(Term symbol, const Sorts &sorts) {
  Type a = typecheck(symbol, sorts);
  return Term::app(
      Con(names::kDeref, Type::fun(a, Type::context(sorts), a)),
      std::move(symbol));
}

Term mk_unset(Term symbol, const Sorts &sorts) {
  Type a = typecheck(symbol, sorts);
  return Term::app(Con(names::kUnset, Type::fun(a, ContextInstr(sorts))),
                   std::move(symbol));
}

Term mk_assert(Term formula, const Sorts &sorts) {
  return Term::app(Con(names::kAssert, Type::fun(T(), ContextInstr(sorts))),
                   std::move(formula));
}

Term mk_refute(Term formula, const Sorts &sorts) {
  return Term::app(Con(names::kRefute, Type::fun(T(), ContextInstr(sorts))),
                   std::move(formula));
}

Term mk_test(Term formula, const Sorts &sorts) {
  return Term::app(Con(names::kTest, Type::fun(T(), ContextInstr(sorts))),
                   std::move(formula));
}

Term mk_tau(Term language, Term word, const Sorts &sorts) {
  Type l = typecheck(language, sorts);
  if (!l.is_fun() || !l.to().is_predicate()) {
    throw TypeError("tau", "language relation", l.sexpr(sorts));
  }
  Type a = l.to().from();
  return Term::app(
      Con(names::kTau, Type::fun(l, Type::symbolic(sorts), a)),
      std::move(language), std::move(word));
}

Term mk_sigma(Term language, Term meaning, const Sorts &sorts) {
  Type l = typecheck(language, sorts);
  if (!l.is_fun() || !l.to().is_predicate()) {
    throw TypeError("sigma", "language relation", l.sexpr(sorts));
  }
  Type a = l.to().from();
  return Term::app(
      Con(names::kSigma, Type::fun(l, a, Type::symbolic(sorts))),
      std::move(language), std::move(meaning));
}

int symbol_index(std::string_view name) {
  if (name.size() < 2 || name[0] != 'C') return -1;
  int value = 0;
  for (std::size_t i = 1; i < name.size(); ++i) {
    if (name[i] < '0' || name[i] > '9') return -1;
    if (value > 100000) return -1;
    value = value * 10 + (name[i] - '0');
  }
  if (name.size() > 2 && name[1] == '0') return -1;
  return value;
}

bool fits_scheme(std::string_view name, const Type &type,
                 const Sorts &sorts) {
  const Type t = T();
  const Type s = Type::symbolic(sorts);
  const Type c = Type::context(sorts);
  const Type cc = Type::fun(c, c);
  if (name == names::kAnd || name == names::kOr || name == names::kImp) {
    return type == Type::fun(t, t, t);
  }
  if (name == names::kNot) return type == Type::fun(t, t);
  if (name == names::kTrue || name == names::kFalse) return type == t;
  if (name == names::kForall || name == names::kExists) {
    return type.is_fun() && type.from().is_predicate() && type.to() == t;
  }
  if (name == names::kIota) {
    return type.is_fun() && type.from().is_predicate() &&
           type.from().from() == type.to();
  }
  if (name == names::kIte) {
    if (!type.is_fun()) return false;
    const Type &a = type.from();
    return type == Type::fun(a, a, t, a);
  }
  if (name == names::kConcat) return type == Type::fun(s, s, s);
  if (symbol_index(name) >= 0) return type == s;
  if (name == names::kCompose) {
    if (!type.is_fun() || !type.from().is_fun()) return false;
    const Type &f = type.from();
    const Type &rest = type.to();
    if (!rest.is_fun() || !rest.from().is_fun()) return false;
    const Type &g = rest.from();
    return g.to() == f.from() &&
           rest.to() == Type::fun(g.from(), f.to());
  }
  if (name == names::kSetref) {
    if (!type.is_fun()) return false;
    const Type &a = type.from();
    return type == Type::fun(a, a, cc);
  }
  if (name == names::kDeref) {
    if (!type.is_fun()) return false;
    const Type &a = type.from();
    return type == Type::fun(a, c, a);
  }
  if (name == names::kUnset) {
    return type.is_fun() && type.to() == cc;
  }
  if (name == names::kAssert || name == names::kRefute ||
      name == names::kTest) {
    return type == Type::fun(t, cc);
  }
  if (name == names::kStar) return type.is_unit();
  if (name == names::kTau) {
    if (!type.is_fun()) return false;
    const Type &l = type.from();
    if (!l.is_fun() || l.from() != s || !l.to().is_predicate()) return false;
    return type.to() == Type::fun(s, l.to().from());
  }
  if (name == names::kSigma) {
    if (!type.is_fun()) return false;
    const Type &l = type.from();
    if (!l.is_fun() || l.from() != s || !l.to().is_predicate()) return false;
    return type.to() == Type::fun(l.to().from(), s);
  }
  return true;
}

}  // namespace uhog
