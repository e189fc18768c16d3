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

#include <random>

#include "corpus.hpp"
#include "doctest.h"
#include "support.hpp"
#include "uhog/errors.hpp"
#include "uhog/grammar.hpp"
#include "uhog/parser.hpp"
#include "uhog/words.hpp"

namespace uhog {
namespace {

using testing::all_meanings;
using testing::random_grammar;

Term In(const Grammar &g, const std::string &text) {
  return parse_term(text, g.scope());
}

const char *kSmall = R"(
const A B : t;
const Jack : e;
const Builder : (-> e t);
lexicon Name : e { "Jack" => Jack; }
lexicon Noun : (-> e t) { "builder" => Builder; }
lexicon Be : (-> e e t) { "be" => (lam (x e) (y e) (eq x y)); }
lang Pair : (* e (-> e t)) = Name ++ Noun;
lang Phrase : (* e (-> e t)) = Name +. Noun;
lang Either : e = Name | Name;
lang Said : t = Name +. "is" +. Noun |>> (lam (x e) (p (-> e t)) (p x));
main Said;
)";

TEST_CASE("lexicon representation is a disjunction of word and meaning tests") {
  Grammar g = load_grammar(kSmall);
  const Component &noun = g.component(g.require("Noun"));
  Term repr = lexicon_repr(*noun.lexicon, g.alphabet(), g.sorts());
  CHECK(typecheck(repr, g.sorts()) ==
        parse_type("(-> s (-> (-> e t) t))", g.scope()));
  // Applied to the right word and meaning it reduces to true.
  Term w = encode("builder", g.alphabet(), g.sorts());
  Term yes = Term::app(repr, w, In(g, "Builder"));
  CHECK(simplify(yes).is_con("true"));
  Term no = Term::app(repr, encode("house", g.alphabet(), g.sorts()),
                      In(g, "Builder"));
  CHECK(simplify(no).is_con("false"));
}

TEST_CASE("apply_rule") {
  Grammar g = load_grammar(R"(
const Jack : e;
lexicon VerbBe : (-> e e t) { "be" => (lam (x e) (y e) (eq x y)); }
def O = (lam (n (-> (-> e t) t)) (v (-> e e t)) (y e) (n (lam (x e) (v x y))));
)");
  SemanticRule o = SemanticRule::functional(g.scope().definitions.at("O"));
  auto out = apply_rule(o, In(g, "(lam (y (-> e t)) (y Jack))"), g.alphabet(),
                        g.sorts());
  REQUIRE(out.size() == 1);
  CHECK(equivalent(out[0], In(g, "(lam (v (-> e e t)) (y e) (v Jack y))")));

  const Component &be = g.component(g.require("VerbBe"));
  SemanticRule lex = SemanticRule::lexicon_rule(be.lexicon);
  auto hit = apply_rule(lex, encode("be", g.alphabet(), g.sorts()),
                        g.alphabet(), g.sorts());
  REQUIRE(hit.size() == 1);
  CHECK(equivalent(hit[0], In(g, "(lam (x e) (y e) (eq x y))")));
  CHECK(apply_rule(lex, encode("run", g.alphabet(), g.sorts()), g.alphabet(),
                   g.sorts())
            .empty());

  SemanticRule table = SemanticRule::table(
      Type::e(), Type::truth(),
      {{In(g, "Jack"), {In(g, "true"), In(g, "false")}}});
  CHECK(apply_rule(table, In(g, "Jack"), g.alphabet(), g.sorts()).size() == 2);
  CHECK(apply_rule(table, In(g, "((lam (x e) x) Jack)"), g.alphabet(),
                   g.sorts())
            .size() == 2);
  CHECK_THROWS_AS(apply_rule(table, In(g, "true"), g.alphabet(), g.sorts()),
                  TypeError);
}

TEST_CASE("validate") {
  Grammar g = load_grammar(kSmall);
  TypeTable table = validate(g);
  REQUIRE(table.types.size() == 7);
  CHECK(table.types[3].first == "Pair");
  CHECK(table.types[3].second.sexpr() == "(* e (-> e t))");
  CHECK(table.types[6].second.is_truth());
  CHECK(table.warnings.empty());

  CHECK_THROWS_AS(load_grammar("lexicon N : t { \"a\" => true; }\n"
                               "lang X : t = N | Missing;\n"),
                  UnknownComponent);
  try {
    load_grammar("lexicon N : t { \"a\" => true; }\n"
                 "lang X : t = N | Missing;\n");
  } catch (const UnknownComponent &e) {
    CHECK(e.line() == 2);
  }
  CHECK_THROWS_AS(load_grammar("const P : (-> e t);\n"
                               "lexicon N : t { \"a\" => true; }\n"
                               "lexicon M : (-> e t) { \"b\" => P; }\n"
                               "lang X : t = N | M;\n"),
                  TypeError);
  Grammar empty = load_grammar("lexicon N : t { \"a\" => true; }\n"
                               "lang X : t = X | X;\n");
  TypeTable t2 = validate(empty);
  REQUIRE(t2.warnings.size() == 1);
  CHECK(t2.warnings[0].find("X") != std::string::npos);
  CHECK(validate(*std::make_unique<Grammar>(load_grammar(""))).types.empty());
}

TEST_CASE("emit_axioms shapes") {
  Grammar one = load_grammar("const A : t;\nlexicon N : t { \"a\" => A; }\n");
  AxiomSet ax = emit_axioms(one);
  REQUIRE(ax.formulas.size() == 1);
  const Term &f = ax.formulas[0].second;
  REQUIRE(f.is(Term::Kind::kEq));
  CHECK(alpha_eq(f.lhs(), component_constant(one, 0)));
  CHECK(alpha_eq(f.rhs(), lexicon_repr(*one.component(0).lexicon,
                                       one.alphabet(), one.sorts())));
  REQUIRE(ax.compact);
  CHECK(typecheck(*ax.compact, one.sorts()) ==
        parse_type("(-> s (-> t t))", one.scope()));

  Grammar g = load_grammar(kSmall);
  AxiomSet all = emit_axioms(g);
  CHECK(all.formulas.size() == g.components().size());
  for (const auto &[name, formula] : all.formulas) {
    CAPTURE(name);
    CHECK(typecheck(formula, g.sorts()).is_truth());
    CHECK(free_vars(formula).empty());
  }
  // Join: C = lam x lam y (C1 x y or C2 x y).
  const Term &join = all.formulas[g.require("Either")].second;
  Term x = Term::var("x", Type::symbolic(g.sorts()));
  Term y = Term::var("y", Type::e());
  Term c1 = component_constant(g, g.require("Name"));
  Term expect = Term::lam(
      "x", x.type(),
      Term::lam("y", y.type(),
                mk_or(Term::app(c1, x, y), Term::app(c1, x, y))));
  CHECK(equivalent(join.rhs(), expect));
  // Concatenations split the word existentially.
  CHECK(print_term(all.formulas[g.require("Pair")].second, g.sorts())
            .find("exists") != std::string::npos);

  for (const char *file : {"english-core.uhg", "english-context.uhg"}) {
    CAPTURE(file);
    Grammar bundled = load_grammar_file(testing::grammar_path(file));
    AxiomSet ba = emit_axioms(bundled);
    CHECK(ba.formulas.size() == bundled.components().size());
    for (const auto &[name, formula] : ba.formulas) {
      CAPTURE(name);
      CHECK(typecheck(formula, bundled.sorts()).is_truth());
    }
  }
}

TEST_CASE("combinators") {
  Grammar g = load_grammar("const A B : t;\nconst K : c;\n");
  Term m1 = In(g, "(pair (lam (z c) z) (lam (z c) A))");
  Term m2 = In(g, "(pair (assert B) (lam (z c) B))");
  Term ana = compose_anaphoric(m1, m2, g.sorts());
  CHECK(typecheck(ana, g.sorts()).sexpr() ==
        "(* (-> c c) (* (-> c t) (-> c t)))");
  CHECK(equivalent(Term::proj2(Term::proj2(ana)),
                   In(g, "(lam (z c) B)")));
  CHECK(equivalent(Term::proj1(ana), In(g, "(assert B)")));
  Term cat = compose_cataphoric(m1, m2, g.sorts());
  CHECK(equivalent(Term::proj1(cat), In(g, "(assert B)")));
  Term p = In(g, "(assert A)");
  Term q = In(g, "(assert B)");
  CHECK(equivalent(compose_anaphoric(p, q, g.sorts()),
                   mk_compose(q, p)));
  CHECK(equivalent(compose_cataphoric(p, q, g.sorts()),
                   mk_compose(p, q)));
  Term raised = context_raise(In(g, "A"), In(g, "(lam (x t) (assert x))"),
                              g.sorts());
  CHECK(equivalent(context_instantiate(raised, In(g, "K"), g.sorts()),
                   In(g, "A")));
  CHECK(alpha_eq(concat_meaning(mk_star(), In(g, "A"), g.sorts()), In(g, "A")));
  CHECK(equivalent(spread_apply(In(g, "(lam (p t) (q t) (and p q))"),
                                In(g, "(pair A B)"), g.sorts()),
                   In(g, "(and A B)")));
  CHECK_THROWS_AS(spread_apply(In(g, "(lam (p t) p)"), In(g, "K"), g.sorts()),
                  TypeError);
}

TEST_CASE("random grammars: distributivity and join") {
  std::mt19937 rng(20260);
  int checked = 0;
  for (int round = 0; round < 200; ++round) {
    auto rg = random_grammar(rng);
    CAPTURE(rg.text);
    Grammar g = load_grammar(rg.text);
    Skeleton sk = build_skeleton(g);
    int jn = g.require("JN");
    const Component &jc = g.component(jn);
    for (const auto &input : rg.inputs) {
      CAPTURE(input);
      auto ms = all_meanings(g, sk, input);
      for (const auto &[a, b] : rg.equal) {
        CAPTURE(a);
        CHECK(ms[g.require(a)].same_as(ms[g.require(b)]));
        ++checked;
      }
      std::vector<Term> both;
      for (int kid : jc.kids) {
        for (const auto &t : ms[kid].terms()) both.push_back(t);
      }
      GeneratorSet joined = both.empty() ? GeneratorSet(Type::truth())
                                         : dedupe(both);
      CHECK(ms[jn].same_as(joined));
    }
  }
  CHECK(checked > 1000);
}

TEST_CASE("random grammars: monotonicity under lexicon extension") {
  std::mt19937 rng(7);
  for (int round = 0; round < 200; ++round) {
    auto rg = random_grammar(rng);
    CAPTURE(rg.text);
    Grammar g = load_grammar(rg.text);
    std::string lex = rg.lexicons[rng() % rg.lexicons.size()];
    std::string word = testing::vocabulary()[rng() % 4];
    std::string meaning =
        testing::truth_terms()[rng() % testing::truth_terms().size()];
    Grammar bigger = g.with_entry(lex, word, In(g, meaning));
    Skeleton s1 = build_skeleton(g);
    Skeleton s2 = build_skeleton(bigger);
    for (const auto &input : rg.inputs) {
      auto before = all_meanings(g, s1, input);
      auto after = all_meanings(bigger, s2, input);
      for (const auto &name : g.named()) {
        CAPTURE(name);
        CAPTURE(input);
        int id = g.require(name);
        CHECK(before[id].subset_of(after[id]));
      }
    }
  }
}

// Every bundled lexicon, raised by a program and instantiated at a context
// constant, gives back its own meanings.
TEST_CASE("raise then instantiate is the identity on bundled lexicons") {
  for (const char *file : {"english-core.uhg", "english-context.uhg"}) {
    std::string text = testing::read_text(testing::grammar_path(file));
    Grammar base = load_grammar(text);
    std::string extra = "\nconst Ctx0 : c;\n";
    std::vector<std::string> lexicons;
    for (const auto &name : base.named()) {
      const Component &c = base.component(base.require(name));
      if (c.op != Component::Op::kLexicon) continue;
      std::string ty = c.type->sexpr(base.sorts());
      extra += "lang RI_" + name + " : " + ty + " = " + name +
               " raise (lam (x " + ty + ") (lam (z c) z)) at Ctx0;\n";
      extra += "lang RA_" + name + " : " + ty + " = " + name +
               " raise (lam (x " + ty + ") (unset He)) at Ctx0;\n";
      lexicons.push_back(name);
    }
    if (text.find("const He") == std::string::npos) {
      extra = "const He : (-> (-> e t) t);\n" + extra;
    }
    Grammar g = load_grammar(text + extra);
    REQUIRE(!lexicons.empty());
    for (const auto &name : lexicons) {
      for (const auto &[word, meaning] :
           g.component(g.require(name)).lexicon->entries) {
        CAPTURE(name);
        CAPTURE(word);
        auto plain = parse(g, name, word).meanings;
        CHECK(plain.size() >= 1);
        CHECK(parse(g, "RI_" + name, word).meanings.same_as(plain));
        CHECK(parse(g, "RA_" + name, word).meanings.same_as(plain));
      }
    }
  }
}

}  // namespace
}  // namespace uhog
