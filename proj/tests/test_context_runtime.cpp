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
#include "uhog/context.hpp"
#include "uhog/errors.hpp"
#include "uhog/syntax.hpp"

namespace uhog {
namespace {

const Grammar &Ctx() {
  static const Grammar g =
      load_grammar_file(testing::grammar_path("english-context.uhg"));
  return g;
}

Term In(const std::string &text) { return parse_term(text, Ctx().scope()); }

// Printed programs, with the He payload written as the lambda it composes.
const char *kHe = "(lam (y (-> e t)) (y Jack))";
const char *kIt =
    "(lam (u (-> e e t)) (y e)"
    " (exists (x e) (and (Build x y) (u x y) (House x))))";
const char *kIsBuilder = "(exists (x e) (and (Builder x) (eq Jack x)))";
const char *kBuildsHouse = "(exists (x e) (and (Build x Jack) (House x)))";
const char *kBuildsSells =
    "(exists (x e) (and (Build x Jack) (Sell x Jack) (House x)))";

std::string Prog(const std::string &body) { return "(lam (z c) " + body + ")"; }
std::string SetHe(const std::string &ctx) {
  return std::string("(setref He ") + kHe + " " + ctx + ")";
}
std::string SetIt(const std::string &ctx) {
  return std::string("(setref It ") + kIt + " " + ctx + ")";
}

Term Sentence(const std::string &input) {
  ContextState empty;
  Interpretation r = interpret_sentence(Ctx(), input, empty);
  CHECK(r.diagnostics.empty());
  return r.program;
}

TEST_CASE("declarative and interrogative programs") {
  CHECK(equivalent(
      Sentence("Jack is a builder."),
      In(Prog(std::string("(assert ") + kIsBuilder + " " + SetHe("z") + ")"))));
  CHECK(equivalent(
      Sentence("is Jack a builder?"),
      In(Prog(std::string("(test ") + kIsBuilder + " " + SetHe("z") + ")"))));
}

TEST_CASE("comma anaphora resolves he") {
  // The It reference set by "builds a house" is part of the derived chain.
  std::string expect = std::string("(assert (and ") + kIsBuilder + " " +
                       kBuildsHouse + ") " + SetIt(SetHe("z")) + ")";
  CHECK(equivalent(Sentence("Jack is a builder, he builds a house."),
                   In(Prog(expect))));
}

TEST_CASE("builds a house and sells it") {
  std::string long_form = std::string("(assert (and ") + kBuildsHouse + " " +
                          kBuildsSells + ") " + SetIt(SetHe("z")) + ")";
  std::string short_form = std::string("(assert ") + kBuildsSells + " " +
                           SetIt(SetHe("z")) + ")";
  Term program = Sentence("Jack builds a house and sells it.");
  CHECK(equivalent(program, In(Prog(long_form))));
  CHECK(equivalent(program, In(Prog(short_form))));

  RuleSet absorb = RuleSet::parse(
      "exists-absorb : (and (exists ?x ?A) (exists ?x (and ?A ?B))) ==> "
      "(exists ?x (and ?A ?B))\n");
  Term lf = In(Prog(long_form));
  Term sf = In(Prog(short_form));
  CHECK_FALSE(alpha_eq(canonicalize(normalize(lf)), canonicalize(normalize(sf))));
  CHECK(alpha_eq(simplify(lf, absorb), simplify(sf, absorb)));
}

TEST_CASE("every builder builds a house and sells it") {
  std::string expect =
      std::string("(assert (forall (y e) (imp (Builder y) (exists (x e) (and "
                  "(Build x y) (Sell x y) (House x))))) ") +
      SetIt("z") + ")";
  CHECK(equivalent(Sentence("Every builder builds a house and sells it."),
                   In(Prog(expect))));
}

TEST_CASE("text chains sentences right to left") {
  ContextState session;
  auto [program, answers] =
      interpret_text(Ctx(), "Jack is a builder. he builds a house.", session);
  std::string expect = std::string("(assert ") + kBuildsHouse + " " +
                       SetIt(std::string("(assert ") + kIsBuilder + " " +
                             SetHe("z") + ")") +
                       ")";
  CHECK(equivalent(program, In(Prog(expect))));
  CHECK(answers.empty());
  auto steps = decompose(program, Ctx().sorts());
  REQUIRE(steps.size() == 4);
  CHECK(steps[0].kind == Instruction::Kind::kSetref);
  CHECK(steps[1].kind == Instruction::Kind::kAssert);
  CHECK(steps[2].kind == Instruction::Kind::kSetref);
  CHECK(steps[3].kind == Instruction::Kind::kAssert);
  CHECK(session.facts.size() == 2);
  CHECK(session.store.count("He") == 1);
  CHECK(session.store.count("It") == 1);

  // A single sentence as text gives the sentence program.
  ContextState fresh;
  auto single = interpret_text(Ctx(), "Jack is a builder.", fresh);
  CHECK(equivalent(single.first, Sentence("Jack is a builder.")));
}

TEST_CASE("resolve_refs") {
  const Sorts &s = Ctx().sorts();
  Term v = In(kHe);
  // Deref over an assertion and a setref.
  Term p = In(std::string("(lam (z c) (assert (deref He (assert (Car Jack) ") +
              SetHe("z") + ") Builder) " + SetHe("z") + "))");
  Term r = resolve_refs(p, nullptr, s);
  CHECK(unresolved_refs(r).empty());
  CHECK(equivalent(r, In(Prog(std::string("(assert (Builder Jack) ") +
                              SetHe("z") + ")"))));
  // Unset blocks the reference.
  Term blocked = In(std::string("(lam (z c) (assert (deref He (unset He ") +
                    SetHe("z") + ") Builder) z))");
  CHECK(unresolved_refs(resolve_refs(blocked, nullptr, s)) ==
        std::vector<std::string>{"He"});
  // The base context is inert without a session and resolved with one.
  Term base = In("(lam (z c) (assert (deref He z Builder) z))");
  CHECK(unresolved_refs(resolve_refs(base, nullptr, s)).size() == 1);
  ContextState session;
  session.store.insert_or_assign("He", v);
  CHECK(equivalent(resolve_refs(base, &session, s),
                   In("(lam (z c) (assert (Builder Jack) z))")));
}

TEST_CASE("unresolved pronoun is reported") {
  ContextState empty;
  Interpretation r = interpret_sentence(Ctx(), "he builds a house.", empty);
  REQUIRE(r.diagnostics.size() == 1);
  CHECK(r.diagnostics[0] == "unresolved reference He");
  ContextState known;
  interpret_text(Ctx(), "Jack is a builder.", known);
  Interpretation ok = interpret_sentence(Ctx(), "he builds a house.", known);
  CHECK(ok.diagnostics.empty());
  CHECK(print_term(ok.program).find("Jack") != std::string::npos);
}

TEST_CASE("execute") {
  const Sorts &s = Ctx().sorts();
  ContextState state;
  CHECK(execute(In("(lam (z c) z)"), state, s).empty());
  CHECK(state.history.empty());
  CHECK(state.facts.empty());

  Term prog = In(Prog(std::string("(assert (Builder Jack) ") + SetHe("z") + ")"));
  execute(prog, state, s);
  REQUIRE(state.facts.size() == 1);
  CHECK(alpha_eq(state.facts[0], In("(Builder Jack)")));
  CHECK(alpha_eq(state.store.at("He"), In(kHe)));
  auto answers = execute(In("(lam (z c) (test (Builder Jack) z))"), state, s);
  CHECK(answers == std::vector<Answer>{Answer::kYes});
  CHECK(state.responses.size() == 1);
  answers = execute(In("(lam (z c) (test (not (Builder Jack)) z))"), state, s);
  CHECK(answers == std::vector<Answer>{Answer::kNo});
  answers = execute(In("(lam (z c) (test (Car Jack) z))"), state, s);
  CHECK(answers == std::vector<Answer>{Answer::kUnknown});
  execute(In("(lam (z c) (refute (Builder Jack) z))"), state, s);
  CHECK(state.facts.empty());
  execute(In("(lam (z c) (unset He z))"), state, s);
  CHECK(state.store.empty());
  CHECK(state.transcript.back() == "! unset He");

  CHECK_THROWS_AS(execute(In("(lam (x e) x)"), state, s), IllTypedInstruction);
  ContextState other;
  execute(In("(lam (z c) (assert (Car Jack) (assert (Car Jack) z)))"), other,
          s);
  CHECK(other.facts.size() == 1);
}

TEST_CASE("entails") {
  std::vector<Term> facts = {In(kIsBuilder)};
  CHECK(entails(facts, In(kIsBuilder)) == Answer::kYes);
  CHECK(entails({In("(and (Car Jack) (House Jack))")}, In("(Car Jack)")) ==
        Answer::kYes);
  std::vector<Term> rule = {
      In("(forall (x e) (imp (Builder x) (exists (y e) (and (House y) (Build y x)))))"),
      In("(Builder Jack)")};
  CHECK(entails(rule, In("(exists (y e) (and (House y) (Build y Jack)))")) ==
        Answer::kYes);
  CHECK(entails({}, In("(Builder Jack)")) == Answer::kUnknown);
  CHECK(entails({In("(not (Car Jack))")}, In("(Car Jack)")) == Answer::kNo);
}

TEST_CASE("entails is monotone in the facts") {
  std::mt19937 rng(5);
  std::vector<std::string> atoms = {"(Builder Jack)", "(Car Jack)",
                                    "(House Jack)", "(not (Car Jack))",
                                    "(forall (x e) (imp (Builder x) (House x)))",
                                    "(and (Builder Jack) (Car Jack))"};
  for (int round = 0; round < 300; ++round) {
    std::vector<Term> facts;
    std::size_t n = rng() % 4;
    for (std::size_t i = 0; i < n; ++i) facts.push_back(In(atoms[rng() % atoms.size()]));
    Term q = In(atoms[rng() % atoms.size()]);
    Answer before = entails(facts, q);
    facts.push_back(In(atoms[rng() % atoms.size()]));
    Answer after = entails(facts, q);
    if (before == Answer::kYes) CHECK(after == Answer::kYes);
  }
}

// Random instruction chains that leave `symbol` alone.
std::string Chain(std::mt19937 &rng, const std::string &symbol,
                  const std::string &inner) {
  std::string other = symbol == "He" ? "It" : "He";
  std::string other_value = other == "He" ? kHe : kIt;
  std::string out = inner;
  std::size_t n = rng() % 5;
  for (std::size_t i = 0; i < n; ++i) {
    switch (rng() % 5) {
      case 0:
        out = "(assert (Car Jack) " + out + ")";
        break;
      case 1:
        out = "(refute (House Jack) " + out + ")";
        break;
      case 2:
        out = "(test (Builder Jack) " + out + ")";
        break;
      case 3:
        out = "(setref " + other + " " + other_value + " " + out + ")";
        break;
      default:
        out = "(unset " + other + " " + out + ")";
        break;
    }
  }
  return out;
}

TEST_CASE("store laws") {
  const Sorts &s = Ctx().sorts();
  std::mt19937 rng(42);
  struct Ref {
    std::string symbol;
    std::string value;
  };
  const Ref refs[] = {{"He", kHe},
                      {"It", kIt},
                      {"He", "(lam (y (-> e t)) (Builder Jack))"}};
  for (int round = 0; round < 200; ++round) {
    const Ref &ref = refs[rng() % 3];
    std::string set = "(setref " + ref.symbol + " " + ref.value + " z)";
    std::string chain = Chain(rng, ref.symbol, set);
    Term v = In(ref.value);
    CAPTURE(chain);
    // Deref S (P (Setref S V z)) resolves to V.
    Term direct = In("(lam (z c) (deref " + ref.symbol + " " + chain + "))");
    Term resolved = resolve_refs(direct, nullptr, s);
    CHECK(unresolved_refs(resolved).empty());
    CHECK(equivalent(resolved, Term::lam("z", Type::context(s), v)));
    // With Unset S on top the reference stays inert, session or not.
    Term blocked =
        In("(lam (z c) (deref " + ref.symbol + " (unset " + ref.symbol + " " +
           chain + ")))");
    ContextState session;
    session.store.insert_or_assign(ref.symbol, v);
    CHECK(unresolved_refs(resolve_refs(blocked, nullptr, s)).size() == 1);
    CHECK(unresolved_refs(resolve_refs(blocked, &session, s)).size() == 1);
    // Unset S . P . Setref S V leaves no trace of S in the store.
    ContextState state;
    execute(In("(lam (z c) (unset " + ref.symbol + " " + chain + "))"), state,
            s);
    CHECK(state.store.count(ref.symbol) == 0);
    CHECK(fold_store(state.history).size() == state.store.size());
  }
}

TEST_CASE("store follows history across sessions and replays") {
  std::vector<std::string> lines = {
      "Jack is a builder.",        "is Jack a builder?",
      "he builds a house.",        "does Jack build a house?",
      "Jack sells a car.",         "Jack builds a house and sells it.",
      "Every builder builds a house.", "Jack does not sell a car."};
  ContextState session;
  for (const auto &line : lines) {
    CAPTURE(line);
    try {
      interpret_text(Ctx(), line, session);
    } catch (const NoParse &) {
    }
    auto folded = fold_store(session.history);
    REQUIRE(folded.size() == session.store.size());
    for (const auto &[k, v] : folded) CHECK(alpha_eq(v, session.store.at(k)));
  }
  REQUIRE(session.responses.size() == 2);
  CHECK(session.responses[0].second == Answer::kYes);
  CHECK(session.responses[1].second == Answer::kYes);

  ContextState again = replay(Ctx(), session.transcript);
  CHECK(again.transcript == session.transcript);
  CHECK(again.facts.size() == session.facts.size());
  CHECK(again.store.size() == session.store.size());
}

TEST_CASE("ambiguity and failure") {
  ContextState s;
  CHECK_THROWS_AS(interpret_sentence(Ctx(), "Jack", s), NoParse);
  CHECK_THROWS_AS(interpret_text(Ctx(), "builds Jack.", s), NoParse);
  CHECK(s.facts.empty());
  CHECK(answer_name(Answer::kUnknown) == "unknown");
}

}  // namespace
}  // namespace uhog
