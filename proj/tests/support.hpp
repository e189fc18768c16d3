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

// Shared fixtures and independent oracles for the test suites.

#ifndef UHOG_TESTS_SUPPORT_HPP_
#define UHOG_TESTS_SUPPORT_HPP_

#include <random>
#include <string>
#include <vector>

#include "uhog/builtins.hpp"
#include "uhog/syntax.hpp"
#include "uhog/term.hpp"
#include "uhog/term_ops.hpp"

namespace uhog::testing {

inline TermScope sample_scope() {
  TermScope scope;
  TermScope tmp;
  auto ty = [&](const char *s) { return parse_type(s, tmp); };
  scope.constants = {
      {"Jack", ty("e")},      {"Mary", ty("e")},     {"Build", ty("eet")},
      {"Sell", ty("eet")},    {"House", ty("et")},   {"Car", ty("et")},
      {"Builder", ty("et")},  {"Computer", ty("et")}, {"P", ty("t")},
      {"Q", ty("t")},         {"R", ty("t")},         {"f", ty("ee")},
      {"He", ty("(-> (-> e t) t)")},
      {"It", ty("(-> (-> e e t) e t)")},
  };
  return scope;
}

inline Term parse(const std::string &text) {
  static const TermScope scope = sample_scope();
  return parse_term(text, scope);
}

// Nameless rendering: bound variables by binder distance, free ones by
// name and type. Written independently of compare() as an oracle.
inline std::string debruijn(const Term &t,
                            std::vector<std::pair<std::string, Type>> &env) {
  using K = Term::Kind;
  switch (t.kind()) {
    case K::kVar:
      for (std::size_t i = env.size(); i-- > 0;) {
        if (env[i].first == t.name() && env[i].second == t.type()) {
          return "#" + std::to_string(env.size() - 1 - i);
        }
      }
      return "v:" + t.name() + ":" + t.type().sexpr();
    case K::kCon:
      return "c:" + t.name() + ":" + t.type().sexpr();
    case K::kApp:
      return "(" + debruijn(t.fn(), env) + " " + debruijn(t.arg(), env) + ")";
    case K::kLam: {
      env.emplace_back(t.name(), t.type());
      std::string body = debruijn(t.body(), env);
      env.pop_back();
      return "(L:" + t.type().sexpr() + " " + body + ")";
    }
    case K::kEq:
      return "(= " + debruijn(t.lhs(), env) + " " + debruijn(t.rhs(), env) +
             ")";
    case K::kPair:
      return "(, " + debruijn(t.left(), env) + " " + debruijn(t.right(), env) +
             ")";
    case K::kProj1:
      return "(p1 " + debruijn(t.operand(), env) + ")";
    case K::kProj2:
      return "(p2 " + debruijn(t.operand(), env) + ")";
  }
  return "?";
}

inline std::string debruijn(const Term &t) {
  std::vector<std::pair<std::string, Type>> env;
  return debruijn(t, env);
}

// Random well-typed terms over a small signature.
class TermGen {
 public:
  explicit TermGen(unsigned seed) : rng_(seed) {
    TermScope tmp;
    auto ty = [&](const char *s) { return parse_type(s, tmp); };
    types_ = {ty("e"), ty("t"), ty("et"), ty("eet"), ty("(* e t)"),
              ty("(-> (-> e t) t)")};
    for (const auto &[name, type] : sample_scope().constants) {
      if (name == "He" || name == "It") continue;
      cons_.push_back(Term::con(name, type));
    }
  }

  Term gen(const Type &type, int depth) {
    std::vector<std::pair<std::string, Type>> env;
    return gen(type, depth, env);
  }

  Type random_type() { return types_[pick(types_.size())]; }

  std::mt19937 &rng() { return rng_; }

 private:
  std::size_t pick(std::size_t n) {
    return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_);
  }

  Term leaf(const Type &type,
            std::vector<std::pair<std::string, Type>> &env, bool &ok) {
    std::vector<Term> options;
    for (const auto &[n, t] : env) {
      if (t == type) options.push_back(Term::var(n, t));
    }
    for (const auto &c : cons_) {
      if (c.type() == type) options.push_back(c);
    }
    if (type.is_truth()) {
      options.push_back(mk_true());
      options.push_back(mk_false());
    }
    if (options.empty()) {
      ok = false;
      return mk_true();
    }
    ok = true;
    return options[pick(options.size())];
  }

  Term gen(const Type &type, int depth,
           std::vector<std::pair<std::string, Type>> &env) {
    static const char *kNames[] = {"x", "y", "z"};
    if (depth <= 0 || pick(4) == 0) {
      bool ok;
      Term t = leaf(type, env, ok);
      if (ok) return t;
      if (depth <= 0) return structural(type, 0, env);
    }
    switch (pick(6)) {
      case 0:
      case 1: {
        // Application through a lambda or a constant function.
        Type a = types_[pick(2)];
        Term f = gen(Type::fun(a, type), depth - 1, env);
        return Term::app(f, gen(a, depth - 1, env));
      }
      case 2:
        if (type.is_truth()) {
          Type a = types_[pick(3)];
          return Term::eq(gen(a, depth - 1, env), gen(a, depth - 1, env));
        }
        break;
      case 3:
        if (type.is_truth()) {
          switch (pick(4)) {
            case 0:
              return mk_and(gen(type, depth - 1, env), gen(type, depth - 1, env));
            case 1:
              return mk_not(gen(type, depth - 1, env));
            case 2: {
              std::string x = kNames[pick(3)];
              Type a = Type::e();
              env.emplace_back(x, a);
              Term body = gen(type, depth - 1, env);
              env.pop_back();
              return mk_exists(x, a, body);
            }
            default:
              return mk_ite(gen(type, depth - 1, env), gen(type, depth - 1, env),
                            gen(Type::truth(), depth - 1, env));
          }
        }
        break;
      case 4: {
        Type other = types_[pick(2)];
        Term p = gen(Type::prod(type, other), depth - 1, env);
        return Term::proj1(p);
      }
      default:
        break;
    }
    return structural(type, depth, env);
  }

  Term structural(const Type &type, int depth,
                  std::vector<std::pair<std::string, Type>> &env) {
    static const char *kNames[] = {"x", "y", "z"};
    if (type.is_fun()) {
      std::string x = kNames[pick(3)];
      env.emplace_back(x, type.from());
      Term body = gen(type.to(), depth - 1, env);
      env.pop_back();
      return Term::lam(x, type.from(), body);
    }
    if (type.is_prod()) {
      return Term::pair(gen(type.left(), depth - 1, env),
                        gen(type.right(), depth - 1, env));
    }
    bool ok;
    Term t = leaf(type, env, ok);
    if (ok) return t;
    return Term::con("K", type);
  }

  std::mt19937 rng_;
  std::vector<Type> types_;
  std::vector<Term> cons_;
};

}  // namespace uhog::testing

#endif  // UHOG_TESTS_SUPPORT_HPP_
