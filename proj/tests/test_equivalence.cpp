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
#include <map>

#include "doctest.h"
#include "support.hpp"
#include "uhog/equivalence.hpp"
#include "uhog/errors.hpp"

namespace uhog {
namespace {

using testing::parse;

const Type kE = Type::e();
const Type kT = Type::truth();

bool Same(const Term &a, const Term &b) { return alpha_eq(a, b); }

TEST_CASE("rules file loads and rejects malformed lines") {
  const RuleSet &rules = RuleSet::bundled();
  CHECK(rules.contains("exists-witness-l"));
  CHECK(rules.contains("exists-absorb"));
  CHECK(rules.contains("exists-or"));
  CHECK_THROWS_AS(RuleSet::parse("broken line"), ParseError);
  CHECK_THROWS_AS(RuleSet::parse("r : (and ?A true) ==> ?B"), ParseError);
  CHECK_THROWS_AS(RuleSet::parse("r : (and ?A true) ==> House"), ParseError);
  CHECK_THROWS_AS(
      RuleSet::parse("r : (exists ?x ?A) ==> ?A where ?x fresh ?A"),
      ParseError);
  RuleSet one = RuleSet::parse("# c\n\nr : (not (not ?A)) ==> ?A\n");
  REQUIRE(one.rules().size() == 1);
  CHECK(one.rules()[0].lhs.str() == "(not (not ?A))");
  CHECK(rules.without({"exists-absorb"}).rules().size() ==
        rules.rules().size() - 1);
}

TEST_CASE("AC matching") {
  RuleSet r = RuleSet::parse("u : (and ?A true) ==> ?A");
  auto out = rewrite_root(r.rules()[0], parse("(and P (and true Q))"));
  REQUIRE(out);
  CHECK(Same(canonicalize(*out), canonicalize(parse("(and P Q)"))));

  Pattern p = RuleSet::parse("x : (and ?A ?A) ==> ?A").rules()[0].lhs;
  CHECK(match_pattern(p, parse("(and P P)")));
  CHECK_FALSE(match_pattern(p, parse("(and P Q)")));
  auto m = match_pattern(p, parse("(and P (and Q (and P Q)))"));
  REQUIRE(m);
  CHECK(m->rest.empty());
  CHECK_FALSE(match_pattern(p, parse("(and P (and Q P))")));
  auto rooted = match_pattern(p, parse("(and P (and Q P))"), true);
  REQUIRE(rooted);
  CHECK(rooted->rest.size() == 1);
}

TEST_CASE("simplify examples") {
  CHECK(Same(simplify(parse("(exists (x e) (and (eq x Jack) (Builder x)))")),
             parse("(Builder Jack)")));
  Term lhs = parse(
      "(and (exists (x e) (and (Build x Jack) (House x)))"
      "     (exists (x e) (and ((and Build Sell) x Jack) (House x))))");
  Term rhs = parse("(exists (x e) (and ((and Build Sell) x Jack) (House x)))");
  CHECK(Same(simplify(lhs), simplify(rhs)));
  CHECK(Same(simplify(parse("(and P true)")), parse("P")));
  CHECK(Same(simplify(parse("(not (not P))")), parse("P")));
  CHECK(Same(simplify(parse("(ite P P Q)")), parse("P")));
  CHECK(Same(simplify(parse("(ite (House Jack) (House Mary) P)")),
             simplify(parse("(House (ite Jack Mary P))"))));
  // Distribution of the existential over a disjunction.
  CHECK(Same(
      simplify(parse("(exists (x e) (or (House x) (Car x)))")),
      simplify(parse("(or (exists (x e) (House x)) (exists (x e) (Car x)))"))));
}

TEST_CASE("absorption needs its rule") {
  Term lhs = parse(
      "(and (exists (x e) (and (Build x Jack) (House x)))"
      "     (exists (y e) (and (Build y Jack) (and (Sell y Jack) (House y)))))");
  Term rhs = parse(
      "(exists (x e) (and (Build x Jack) (and (Sell x Jack) (House x))))");
  CHECK(equivalent(lhs, rhs));
  RuleSet ablated = RuleSet::bundled().without({"exists-absorb"});
  CHECK_FALSE(equivalent(lhs, rhs, ablated));
}

TEST_CASE("equivalent examples") {
  CHECK(equivalent(parse("(and P Q)"), parse("(and Q P)")));
  CHECK(equivalent(parse("(exists (x e) (and (Builder x) (eq Jack x)))"),
                   parse("(Builder Jack)")));
  CHECK_FALSE(equivalent(parse("Build"), parse("Sell")));
  CHECK(equivalent(parse("(or P (or Q R))"), parse("(or (or R P) Q)")));
  CHECK_FALSE(equivalent(parse("(and P Q)"), parse("(or P Q)")));
}

TEST_CASE("finite_model_refute examples") {
  CHECK(finite_model_refute(mk_true(), mk_false()) == Refutation::kDistinct);
  CHECK(finite_model_refute(parse("(or P (not P))"), mk_true()) ==
        Refutation::kUnknown);
  Term open_a = Term::app(parse("Build"), Term::var("x", kE),
                          Term::var("y", kE));
  Term open_b = Term::app(parse("Build"), Term::var("y", kE),
                          Term::var("x", kE));
  CHECK_THROWS_AS(finite_model_refute(open_a, open_b), Unsupported);
  CHECK(finite_model_refute(parse("(Build Jack Mary)"),
                            parse("(Build Mary Jack)")) ==
        Refutation::kDistinct);
  CHECK(finite_model_refute(parse("(exists (x e) (House x))"),
                            parse("(not (forall (x e) (not (House x))))")) ==
        Refutation::kUnknown);
  CHECK(finite_model_refute(parse("(eq (word \"ab\") (word \"ab\"))"),
                            mk_true()) == Refutation::kUnknown);
  CHECK(finite_model_refute(parse("(eq (word \"ab\") (word \"ba\"))"),
                            mk_true()) == Refutation::kDistinct);
  CHECK(finite_model_refute(parse("(lam (p (-> e t)) (exists (x e) (p x)))"),
                            parse("(lam (p (-> e t)) (p Jack))")) ==
        Refutation::kDistinct);
}

TEST_CASE("dedupe examples") {
  GeneratorSet a = dedupe({parse("P"), parse("P"), parse("Q")});
  CHECK(a.size() == 2);
  GeneratorSet b = dedupe(
      {parse("(exists (x e) (and (eq x Jack) (House x)))"),
       parse("(House Jack)")});
  REQUIRE(b.size() == 1);
  CHECK(Same(b.terms()[0], parse("(House Jack)")));
  CHECK(dedupe({}).empty());
  CHECK_THROWS_AS(dedupe({parse("P"), parse("Jack")}), TypeError);
}

// Random instances of rule left-hand sides.
class Instantiator {
 public:
  explicit Instantiator(unsigned seed) : gen_(seed) {}

  Term Formula(std::vector<VarRef> &env, int depth) {
    std::vector<Term> pool{gen_.gen(kT, depth)};
    for (const auto &[x, ty] : env) {
      Term v = Term::var(x, ty);
      pool.push_back(Term::app(parse("House"), v));
      pool.push_back(Term::app(parse("Build"), v, parse("Jack")));
      pool.push_back(Term::eq(v, parse("Mary")));
      pool.push_back(mk_and(Term::app(parse("Car"), v), gen_.gen(kT, 1)));
    }
    return pool[Pick(pool.size())];
  }

  Term Of(const Pattern &p, const Type &type, std::vector<VarRef> &env,
          std::map<std::string, Term> &metas) {
    using PK = Pattern::Kind;
    switch (p.kind) {
      case PK::kMeta: {
        for (const auto &[x, ty] : env) {
          if (x == p.name.substr(1)) return Term::var(x, ty);
        }
        if (auto it = metas.find(p.name); it != metas.end()) return it->second;
        Term t = type.is_truth() ? Formula(env, 2) : Individual(env);
        metas.emplace(p.name, t);
        return t;
      }
      case PK::kConst:
        return p.name == "true" ? mk_true() : mk_false();
      case PK::kAnd:
      case PK::kOr: {
        Term out = Of(p.kids.back(), kT, env, metas);
        for (std::size_t i = p.kids.size() - 1; i-- > 0;) {
          Term k = Of(p.kids[i], kT, env, metas);
          out = p.kind == PK::kAnd ? mk_and(k, out) : mk_or(k, out);
        }
        return out;
      }
      case PK::kNot:
        return mk_not(Of(p.kids[0], kT, env, metas));
      case PK::kImp:
        return mk_imp(Of(p.kids[0], kT, env, metas),
                      Of(p.kids[1], kT, env, metas));
      case PK::kEq: {
        Type ty = Pick(2) == 0 ? kE : kT;
        for (const auto &k : p.kids) {
          for (const auto &[x, t] : env) {
            if (k.kind == PK::kMeta && k.name.substr(1) == x) ty = t;
          }
        }
        return Term::eq(Of(p.kids[0], ty, env, metas),
                        Of(p.kids[1], ty, env, metas));
      }
      case PK::kExists:
      case PK::kForall: {
        std::string x = p.name.substr(1);
        env.emplace_back(x, kE);
        Term body = Of(p.kids[0], kT, env, metas);
        env.pop_back();
        return p.kind == PK::kExists ? mk_exists(x, kE, body)
                                     : mk_forall(x, kE, body);
      }
      case PK::kIte:
        return mk_ite(Of(p.kids[0], type, env, metas),
                      Of(p.kids[1], type, env, metas),
                      Of(p.kids[2], kT, env, metas));
      case PK::kApp: {
        // Function metavariables stand for a predicate on individuals.
        auto it = metas.find(p.kids[0].name);
        if (it == metas.end()) {
          std::vector<Term> preds{parse("House"), parse("Builder"),
                                  parse("(lam (y e) (Build y Jack))")};
          it = metas.emplace(p.kids[0].name, preds[Pick(preds.size())]).first;
        }
        Term f = it->second;
        return Term::app(f, Of(p.kids[1], kE, env, metas));
      }
      case PK::kSubst:
        break;
    }
    return mk_true();
  }

 private:
  Term Individual(std::vector<VarRef> &env) {
    std::vector<Term> pool{parse("Jack"), parse("Mary"), parse("(f Jack)")};
    return pool[Pick(pool.size())];
  }

  std::size_t Pick(std::size_t n) {
    return std::uniform_int_distribution<std::size_t>(0, n - 1)(gen_.rng());
  }

  testing::TermGen gen_;
};

TEST_CASE("property: every rule is sound on random instances") {
  Instantiator inst(2024);
  for (const auto &rule : RuleSet::bundled().rules()) {
    int fired = 0;
    for (int i = 0; i < 120; ++i) {
      std::vector<VarRef> env;
      std::map<std::string, Term> metas;
      Term lhs = inst.Of(rule.lhs, kT, env, metas);
      REQUIRE(typecheck(lhs) == kT);
      auto rhs = rewrite_root(rule, lhs);
      if (!rhs) continue;
      ++fired;
      CHECK(typecheck(*rhs) == kT);
      CHECK_MESSAGE(finite_model_refute(lhs, *rhs) == Refutation::kUnknown,
                    rule.name << ": " << print_term(lhs) << " vs "
                              << print_term(*rhs));
    }
    CHECK_MESSAGE(fired > 0, rule.name << " never fired");
  }
}

TEST_CASE("property: simplify preserves type, is idempotent and sound") {
  testing::TermGen gen(31337);
  for (int i = 0; i < 300; ++i) {
    Term t = gen.gen(kT, 5);
    Term s = simplify(t);
    CHECK(typecheck(s) == kT);
    CHECK(Same(simplify(s), s));
    CHECK_MESSAGE(finite_model_refute(t, s) == Refutation::kUnknown,
                  print_term(t) << " ~> " << print_term(s));
  }
}

TEST_CASE("property: dedupe is independent of input order") {
  testing::TermGen gen(5);
  for (int round = 0; round < 30; ++round) {
    std::vector<Term> terms;
    for (int i = 0; i < 6; ++i) {
      Term t = gen.gen(kT, 3);
      terms.push_back(t);
      terms.push_back(mk_and(t, mk_true()));
    }
    GeneratorSet a = dedupe(terms);
    std::shuffle(terms.begin(), terms.end(), gen.rng());
    GeneratorSet b = dedupe(terms);
    CHECK(a.same_as(b));
    CHECK(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      for (std::size_t j = i + 1; j < a.size(); ++j) {
        CHECK_FALSE(equivalent(a.terms()[i], a.terms()[j]));
      }
    }
  }
}

}  // namespace
}  // namespace uhog
