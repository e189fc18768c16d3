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

#include "doctest.h"
#include "support.hpp"
#include "uhog/errors.hpp"
#include "uhog/words.hpp"

namespace uhog {
namespace {

const Alphabet &Std() { return Alphabet::standard(); }

Term Sym(char c) {
  return mk_symbol(Std().index_of(std::string(1, c)), Sorts{});
}

// All words over `symbols` of exactly `len` characters.
void Words(const std::string &symbols, int len, std::string prefix,
           std::vector<std::string> &out) {
  if (len == 0) {
    out.push_back(prefix);
    return;
  }
  for (char c : symbols) Words(symbols, len - 1, prefix + c, out);
}

TEST_CASE("alphabet") {
  CHECK(Std().size() == 68);
  CHECK(Std().index_of("a") == 1);
  CHECK(Std().index_of("π") == 0);
  CHECK_THROWS_AS(Alphabet("aa"), Error);
  CHECK_THROWS_AS(Alphabet(""), Error);
  Alphabet greek("αβγ");
  CHECK(greek.size() == 3);
  CHECK(greek.index_of("β") == 2);
}

TEST_CASE("encode") {
  CHECK(encode("", Std()).is_con("C0"));
  Term car = encode("car", Std());
  CHECK(alpha_eq(car, mk_concat(Sym('c'), mk_concat(Sym('a'), Sym('r'),
                                                    Sorts{}),
                                Sorts{})));
  CHECK(decode(car, Std()) == "car");
  try {
    encode("aπb", Std());
    FAIL("expected UnknownSymbol");
  } catch (const UnknownSymbol &e) {
    CHECK(e.symbol() == "π");
    CHECK(e.position() == 1);
  }
  CHECK(typecheck(car) == Type::symbolic(Sorts{}));
}

TEST_CASE("decode") {
  CHECK(decode(mk_empty_word(Sorts{}), Std()) == "");
  Term left = mk_concat(mk_concat(Sym('c'), Sym('a'), Sorts{}), Sym('r'),
                        Sorts{});
  CHECK(decode(left, Std()) == "car");
  CHECK_THROWS_AS(decode(Term::var("x", Type::symbolic(Sorts{})), Std()),
                  NotAWordTerm);
  CHECK_FALSE(is_word_term(Term::var("x", Type::symbolic(Sorts{}))));
  // Empty words are units of concatenation.
  Term padded = mk_concat(mk_empty_word(Sorts{}),
                          mk_concat(Sym('a'), mk_empty_word(Sorts{}), Sorts{}),
                          Sorts{});
  CHECK(decode(padded, Std()) == "a");
  CHECK(alpha_eq(normalize_concat(padded), encode("a", Std())));
}

TEST_CASE("word_eq_decide") {
  CHECK(word_eq_decide(encode("car", Std()), encode("car", Std()), Std()) ==
        WordEq::kEqual);
  CHECK(word_eq_decide(encode("car", Std()), encode("cat", Std()), Std()) ==
        WordEq::kDistinct);
  CHECK(word_eq_decide(encode("", Std()), encode("a", Std()), Std()) ==
        WordEq::kDistinct);
}

TEST_CASE("splits") {
  using P = std::pair<std::string, std::string>;
  CHECK(splits("ab") == std::vector<P>{{"", "ab"}, {"a", "b"}, {"ab", ""}});
  CHECK(splits("") == std::vector<P>{{"", ""}});
  CHECK(splits("car").size() == 4);
  CHECK(splits("αβ").size() == 3);
}

TEST_CASE("property: round trip and homomorphism") {
  std::mt19937 rng(17);
  std::string spec = Std().spec();
  std::uniform_int_distribution<std::size_t> len(0, 32);
  std::uniform_int_distribution<std::size_t> ch(0, spec.size() - 1);
  auto random_word = [&] {
    std::string w;
    std::size_t n = len(rng);
    for (std::size_t i = 0; i < n; ++i) w += spec[ch(rng)];
    return w;
  };
  for (int i = 0; i < 500; ++i) {
    std::string u = random_word(), v = random_word();
    CHECK(decode(encode(u, Std()), Std()) == u);
    Term joined = mk_concat(encode(u, Std()), encode(v, Std()), Sorts{});
    CHECK(alpha_eq(normalize_concat(joined), encode(u + v, Std())));
  }
}

TEST_CASE("property: exhaustive equality on a three-symbol alphabet") {
  Alphabet abc("abc");
  std::vector<std::string> words;
  for (int n = 0; n <= 3; ++n) Words("abc", n, "", words);
  CHECK(words.size() == 40);
  for (const auto &u : words) {
    CHECK(decode(encode(u, abc), abc) == u);
    for (const auto &v : words) {
      bool eq = word_eq_decide(encode(u, abc), encode(v, abc), abc) ==
                WordEq::kEqual;
      CHECK(eq == (u == v));
    }
  }
}

}  // namespace
}  // namespace uhog
