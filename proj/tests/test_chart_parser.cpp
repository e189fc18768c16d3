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

#include <chrono>
#include <random>

#include "corpus.hpp"
#include "doctest.h"
#include "uhog/errors.hpp"
#include "uhog/grammar.hpp"
#include "uhog/parser.hpp"
#include "uhog/syntax.hpp"

namespace uhog {
namespace {

const Grammar &Core() {
  static const Grammar g =
      load_grammar_file(testing::grammar_path("english-core.uhg"));
  return g;
}

Term In(const std::string &text) { return parse_term(text, Core().scope()); }

struct Golden {
  const char *input;
  const char *meaning;
};

// Printed derivations of the sample grammar.
const Golden kGolden[] = {
    {"Jack builds a house.",
     "(exists (x e) (and (Build x Jack) (House x)))"},
    {"Jack sells a car and builds a house.",
     "(and (exists (x e) (and (Sell x Jack) (Car x)))"
     " (exists (x e) (and (Build x Jack) (House x))))"},
    {"Jack does not build a house.",
     "(not (exists (x e) (and (Build x Jack) (House x))))"},
    {"every builder builds a house.",
     "(forall (x2 e) (imp (Builder x2)"
     " (exists (x1 e) (and (Build x1 x2) (House x1)))))"},
    {"Jack is a builder, Jack builds a house.",
     "(and (exists (x e) (and (Builder x) (eq Jack x)))"
     " (exists (x e) (and (Build x Jack) (House x))))"},
};

TEST_CASE("golden derivations of the sample grammar") {
  auto start = std::chrono::steady_clock::now();
  for (const auto &[input, meaning] : kGolden) {
    CAPTURE(input);
    ParseResult r = parse(Core(), "St", input);
    REQUIRE(r.meanings.size() == 1);
    CHECK(equivalent(r.meanings.terms()[0], In(meaning)));
    CHECK_FALSE(r.partial);
  }
  double secs = std::chrono::duration<double>(
                    std::chrono::steady_clock::now() - start)
                    .count();
  CHECK(secs < 1.0);
}

TEST_CASE("incomplete and foreign inputs") {
  ParseResult r = parse(Core(), "St", "Jack");
  CHECK(r.meanings.empty());
  CHECK_FALSE(r.partial);
  CHECK(parse(Core(), "St", "Jack paints a house.").meanings.empty());
  CHECK_THROWS_AS(parse(Core(), "St", "Jack builds a hous\xCF\x80."),
                  UnknownSymbol);
  CHECK_THROWS_AS(parse(Core(), "Nope", "Jack"), UnknownComponent);
}

TEST_CASE("skeleton and recognition") {
  const Grammar &g = Core();
  Skeleton sk = build_skeleton(g);
  REQUIRE(sk.nodes.size() == g.components().size());
  int noun = g.require("Noun");
  CHECK(sk.nodes[noun].kind == Skeleton::Kind::kTerminal);
  CHECK(sk.nodes[noun].words.count("house") == 1);
  CHECK(sk.nodes[noun].extend);
  int vp = g.require("VP");
  CHECK(sk.nodes[vp].kind == Skeleton::Kind::kUnit);
  Chart chart = recognize(sk, "Jack builds a house.");
  CHECK(chart.has(g.require("St"), 0, chart.length()));
  CHECK(chart.has(g.require("Name"), 0, 4));
  CHECK(chart.slice(0, 4) == "Jack");
  CHECK_FALSE(chart.has(g.require("Name"), 0, 3));
  // The skeleton ignores rules, so it accepts what the semantics filter.
  Chart loose = recognize(sk, "Jack ises a house.");
  (void)loose;
  Chart partial = recognize(sk, "Jack paints a house.", true);
  CHECK(partial.placeholder(g.require("Verbt"), 5, 10));
  CHECK_FALSE(partial.placeholder(g.require("Verbt"), 4, 10));
  CHECK(is_separator(" "));
  CHECK(is_separator("."));
  CHECK_FALSE(is_separator("a"));
}

TEST_CASE("unit cycles reach a fixpoint") {
  Grammar g = load_grammar(R"(
const A B : t;
lexicon K : t { "a" => A; "b" => B; }
lang X : t = K | Y;
lang Y : t = X |>> (lam (p t) (not p)) | X;
)");
  ParseResult r = parse(g, "X", "a");
  // A, not A, and not not A = A.
  CHECK(r.meanings.size() == 2);
  CHECK(r.meanings.contains(parse_term("(not A)", g.scope())));
  CHECK(parse(g, "Y", "b").meanings.size() == 2);
}

TEST_CASE("forest dump and serialization") {
  ParseOptions opts;
  opts.forest = true;
  ParseResult r = parse(Core(), "St", "Jack builds a house.", opts);
  REQUIRE_FALSE(r.forest.empty());
  CHECK(std::is_sorted(r.forest.begin(), r.forest.end()));
  bool root = false;
  for (const auto &line : r.forest) root = root || line.rfind("St[0,20]", 0) == 0;
  CHECK(root);
  std::string json = to_json(r, Core());
  CHECK(json.find("\"input\": \"Jack builds a house.\"") != std::string::npos);
  CHECK(json.find("\"forest\"") != std::string::npos);
  std::string text = to_text(r, Core());
  CHECK(text.rfind("input: \"Jack builds a house.\"\n", 0) == 0);
  CHECK(text.find("meaning: (exists") != std::string::npos);
}

TEST_CASE("repeated parses serialize identically") {
  for (const auto &[input, meaning] : kGolden) {
    std::string first = to_json(parse(Core(), "St", input), Core());
    for (int i = 0; i < 3; ++i) {
      CHECK(to_json(parse(Core(), "St", input), Core()) == first);
    }
  }
}

TEST_CASE("width cap truncates with a diagnostic") {
  Grammar g = load_grammar(R"(
const A B C D : t;
lexicon K : t { "a" => A; "a" => B; "a" => C; "a" => D; }
)");
  CHECK(parse(g, "K", "a").meanings.size() == 4);
  ParseOptions opts;
  opts.width = 2;
  ParseResult r = parse(g, "K", "a", opts);
  CHECK(r.meanings.size() == 2);
  CHECK_FALSE(r.diagnostics.empty());
}

TEST_CASE("stage-1 recognition covers every attributed item") {
  std::mt19937 rng(99);
  int nonempty = 0;
  for (int round = 0; round < 200; ++round) {
    auto rg = testing::random_grammar(rng);
    CAPTURE(rg.text);
    Grammar g = load_grammar(rg.text);
    Skeleton sk = build_skeleton(g);
    for (const auto &input : rg.inputs) {
      Chart chart = recognize(sk, input);
      for (std::size_t c = 0; c < g.components().size(); ++c) {
        int id = static_cast<int>(c);
        if (attribute(g, chart, id, 0, chart.length()).empty()) continue;
        ++nonempty;
        CAPTURE(input);
        CHECK(chart.has(id, 0, chart.length()));
      }
    }
  }
  CHECK(nonempty > 100);
}

}  // namespace
}  // namespace uhog
