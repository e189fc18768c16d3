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
#include "uhog/builtins.hpp"
#include "uhog/errors.hpp"
#include "uhog/robustness.hpp"
#include "uhog/syntax.hpp"
#include "uhog/words.hpp"

namespace uhog {
namespace {

const Grammar &Core() {
  static const Grammar g =
      load_grammar_file(testing::grammar_path("english-core.uhg"));
  return g;
}

Term In(const Grammar &g, const std::string &text) {
  return parse_term(text, g.scope());
}
Term In(const std::string &text) { return In(Core(), text); }

Term Computer() { return Term::con("Computer", parse_type("(-> e t)", Core().scope())); }

TEST_CASE("translate") {
  CHECK(alpha_eq(translate(Core(), "Noun", "house"), In("House")));
  Term paint = translate(Core(), "Verbt", "paint");
  CHECK(alpha_eq(paint, make_placeholder(Core(), Core().require("Verbt"), "paint")));
  CHECK(print_term(paint, Core().sorts(), &Core().alphabet()) ==
        "(tau Verbt (word \"paint\"))");
  Grammar g = load_grammar(R"(
const A B : t;
lexicon K : t { "a" => A; "a" => B; }
)");
  CHECK_THROWS_AS(translate(g, "K", "a"), Ambiguous);
}

TEST_CASE("placeholders") {
  Term p1 = make_placeholder(Core(), Core().require("Noun"), "computer");
  Term p2 = make_placeholder(Core(), Core().require("Noun"), "computer");
  Term p3 = make_placeholder(Core(), Core().require("Verbt"), "computer");
  CHECK(alpha_eq(p1, p2));
  CHECK_FALSE(equivalent(p1, p3));
  CHECK(typecheck(p1, Core().sorts()) == parse_type("(-> e t)", Core().scope()));
  auto holes = holes_of(Term::app(p1, In("Jack")), Core().alphabet());
  REQUIRE(holes.size() == 1);
  CHECK(*holes.begin() == Hole{"Noun", "computer"});
  CHECK(hole_sexpr(*holes.begin()) == "(hole Noun \"computer\")");
  CHECK(holes_of(In("(House Jack)"), Core().alphabet()).empty());
}

TEST_CASE("product placeholders expand by projection") {
  Grammar g = load_grammar(R"(
const Jack : e;
const House : (-> e t);
lexicon Name : e { "Jack" => Jack; }
lexicon Noun : (-> e t) extend { "house" => House; }
lang Both : (* e (-> e t)) = Name +. Noun;
)");
  Term p = make_placeholder(g, g.require("Both"), "x");
  Term expanded = expand_placeholders(p, g.sorts());
  REQUIRE(expanded.is(Term::Kind::kPair));
  CHECK(typecheck(expanded.left(), g.sorts()) == Type::e());
  CHECK(typecheck(expanded.right(), g.sorts()) ==
        parse_type("(-> e t)", g.scope()));
}

TEST_CASE("partial translation of the paint and computer sentences") {
  ParseResult paint = partial_parse(Core(), "St", "Jack paints a house.");
  REQUIRE(paint.meanings.size() == 1);
  CHECK(paint.partial);
  Term tau_v = make_placeholder(Core(), Core().require("Verbt"), "paint");
  Term x = Term::var("x", Type::e());
  CHECK(equivalent(
      paint.meanings.terms()[0],
      mk_exists("x", Type::e(),
                mk_and(Term::app(tau_v, x, In("Jack")), Term::app(In("House"), x)))));
  PartialMeaning pm = partial_meaning(paint.meanings.terms()[0], Core().alphabet());
  CHECK(pm.holes == std::set<Hole>{{"Verbt", "paint"}});

  ParseResult comp = partial_parse(Core(), "St", "Jack builds a computer.");
  REQUIRE(comp.meanings.size() == 1);
  Term tau_n = make_placeholder(Core(), Core().require("Noun"), "computer");
  CHECK(equivalent(
      comp.meanings.terms()[0],
      mk_exists("x", Type::e(),
                mk_and(Term::app(In("Build"), x, In("Jack")), Term::app(tau_n, x)))));

  // Unchanged grammar: nothing to resolve.
  PartialMeaning same = resolve_placeholders(pm, Core());
  CHECK(alpha_eq(same.meaning, pm.meaning));
  CHECK(same.holes == pm.holes);

  Grammar ext = Core().with_entry("Noun", "computer", Computer());
  PartialMeaning cm = partial_meaning(comp.meanings.terms()[0], Core().alphabet());
  PartialMeaning done = resolve_placeholders(cm, ext);
  CHECK(done.holes.empty());
  CHECK(equivalent(done.meaning,
                   mk_exists("x", Type::e(),
                             mk_and(Term::app(In("Build"), x, In("Jack")),
                                    Term::app(Computer(), x)))));
}

TEST_CASE("two holes, one resolvable") {
  ParseResult r = partial_parse(Core(), "St", "Jack paints a computer.");
  REQUIRE(r.meanings.size() == 1);
  PartialMeaning pm = partial_meaning(r.meanings.terms()[0], Core().alphabet());
  CHECK(pm.holes.size() == 2);
  Grammar ext = Core().with_entry("Noun", "computer", Computer());
  PartialMeaning half = resolve_placeholders(pm, ext);
  CHECK(half.holes == std::set<Hole>{{"Verbt", "paint"}});
  CHECK(print_term(half.meaning).find("Computer") != std::string::npos);
}

TEST_CASE("partial mode leaves valid sentences alone") {
  for (const char *s : {"Jack builds a house.", "every builder builds a house.",
                        "Jack does not build a house."}) {
    CAPTURE(s);
    ParseResult strict = parse(Core(), "St", s);
    ParseResult partial = partial_parse(Core(), "St", s);
    CHECK_FALSE(partial.partial);
    CHECK(partial.meanings.same_as(strict.meanings));
  }
  CHECK_THROWS_AS(partial_parse(Core(), "St", "Jack"), NoParse);
}

TEST_CASE("lexicon words translate the same in partial mode") {
  for (const char *file : {"english-core.uhg", "english-context.uhg"}) {
    Grammar g = load_grammar_file(testing::grammar_path(file));
    for (const auto &name : g.named()) {
      const Component &c = g.component(g.require(name));
      if (c.op != Component::Op::kLexicon) continue;
      for (const auto &[word, meaning] : c.lexicon->entries) {
        CAPTURE(name);
        CAPTURE(word);
        ParseResult strict = parse(g, name, word);
        ParseResult partial = partial_parse(g, name, word);
        CHECK(partial.meanings.same_as(strict.meanings));
        CHECK_FALSE(partial.partial);
      }
    }
  }
}

TEST_CASE("expression round trip over bundled lexicons") {
  for (const char *file : {"english-core.uhg", "english-context.uhg"}) {
    Grammar g = load_grammar_file(testing::grammar_path(file));
    for (const auto &name : g.named()) {
      const Component &c = g.component(g.require(name));
      if (c.op != Component::Op::kLexicon) continue;
      for (const auto &[word, meaning] : c.lexicon->entries) {
        CAPTURE(name);
        CAPTURE(word);
        Expression e = express(g, name, translate(g, name, word));
        CHECK(e.found);
        CHECK(e.word == word);
      }
    }
  }
  Expression none = express(Core(), "Noun", Computer());
  CHECK_FALSE(none.found);
  REQUIRE(none.placeholder);
  CHECK(print_term(*none.placeholder).rfind("(sigma Noun", 0) == 0);
}

TEST_CASE("expression of a sentence meaning") {
  Term x = Term::var("x", Type::e());
  Term m = mk_exists("x", Type::e(), mk_and(Term::app(In("Build"), x, In("Jack")),
                                            Term::app(In("House"), x)));
  Expression e = express(Core(), "St", m);
  REQUIRE(e.found);
  CHECK(e.word == "Jack builds a house.");
}

TEST_CASE("resolution commutes with parsing") {
  struct Case {
    std::string sentence;
    std::string lexicon;
    std::string word;
  };
  std::vector<Case> cases = {{"Jack paints a house.", "Verbt", "paint"},
                             {"Jack builds a computer.", "Noun", "computer"}};
  std::mt19937 rng(3);
  const std::vector<std::string> frames_noun = {
      "Jack builds a %.", "every % builds a house.", "Jack sells a %.",
      "Jack is a %.", "Jack does not sell a %."};
  const std::vector<std::string> frames_verb = {
      "Jack %s a house.", "every builder %s a car.", "Jack does not % a car.",
      "Jack %s a car and builds a house."};
  const std::string letters = "bdfgklmnprtvz";
  for (int i = 0; i < 30; ++i) {
    std::string w;
    for (int k = 0; k < 5; ++k) w += letters[rng() % letters.size()];
    bool noun = rng() % 2 == 0;
    const auto &frames = noun ? frames_noun : frames_verb;
    std::string s = frames[rng() % frames.size()];
    s.replace(s.find('%'), 1, w);
    cases.push_back({s, noun ? "Noun" : "Verbt", w});
  }
  for (const auto &c : cases) {
    CAPTURE(c.sentence);
    ParseResult partial = partial_parse(Core(), "St", c.sentence);
    REQUIRE(partial.meanings.size() == 1);
    Type ty = *Core().component(Core().require(c.lexicon)).type;
    Term fresh = Term::con("New" + c.word, ty);
    Grammar ext = Core().with_entry(c.lexicon, c.word, fresh);
    ParseResult strict = parse(ext, "St", c.sentence);
    REQUIRE(strict.meanings.size() == 1);
    PartialMeaning resolved = resolve_placeholders(
        partial_meaning(partial.meanings.terms()[0], Core().alphabet()), ext);
    CHECK(resolved.holes.empty());
    CHECK(equivalent(resolved.meaning, strict.meanings.terms()[0]));
  }
}

TEST_CASE("stored parses read back") {
  ParseResult r = partial_parse(Core(), "St", "Jack builds a computer.");
  StoredParse s = read_stored_parse(to_text(r, Core()), Core());
  CHECK(s.input == "Jack builds a computer.");
  CHECK(s.component == "St");
  REQUIRE(s.meanings.size() == 1);
  CHECK(alpha_eq(s.meanings[0], r.meanings.terms()[0]));
  CHECK_THROWS_AS(read_stored_parse("meaning: (nope\n", Core()), ParseError);
}

}  // namespace
}  // namespace uhog
