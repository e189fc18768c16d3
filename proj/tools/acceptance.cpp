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

// Acceptance driver: one PASS/FAIL line per criterion, nonzero exit on any
// failure.

#include <chrono>
#include <filesystem>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "corpus.hpp"
#include "uhog/builtins.hpp"
#include "uhog/cli.hpp"
#include "uhog/context.hpp"
#include "uhog/errors.hpp"
#include "uhog/parser.hpp"
#include "uhog/robustness.hpp"
#include "uhog/syntax.hpp"
#include "uhog/words.hpp"

namespace uhog {
namespace {

using testing::grammar_path;

// Tolerances.
constexpr double kGoldenSeconds = 1.0;
constexpr int kRandomGrammars = 200;
constexpr int kWordPairs = 10000;
constexpr int kRandomWords = 2000;
constexpr int kMaxWordLength = 32;
constexpr int kStoreRounds = 200;
constexpr int kDeterminismRuns = 3;
constexpr int kModelIndividuals = 2;

class Report {
 public:
  void Fail(const std::string &what) {
    if (failures_.size() < 5) failures_.push_back(what);
    ++count_;
  }
  bool Expect(bool ok, const std::string &what) {
    if (!ok) Fail(what);
    return ok;
  }
  bool ok() const { return count_ == 0; }
  std::string Summary() const {
    std::string out = std::to_string(count_) + " failures";
    for (const auto &f : failures_) out += "; " + f;
    return out;
  }

 private:
  std::vector<std::string> failures_;
  int count_ = 0;
};

// Every pair the oracle judged equivalent, for the soundness sweep.
std::vector<std::pair<Term, Term>> &Judged() {
  static std::vector<std::pair<Term, Term>> pairs;
  return pairs;
}

bool Equiv(const Term &a, const Term &b,
           const RuleSet &rules = RuleSet::bundled()) {
  bool eq = equivalent(a, b, rules);
  if (eq) Judged().emplace_back(a, b);
  return eq;
}

bool SameSets(const GeneratorSet &a, const GeneratorSet &b) {
  if (!a.same_as(b)) return false;
  for (const auto &t : a.terms()) {
    for (const auto &u : b.terms()) {
      if (Equiv(t, u)) break;
    }
  }
  return true;
}

const Grammar &Core() {
  static const Grammar g = load_grammar_file(grammar_path("english-core.uhg"));
  return g;
}

const Grammar &Ctx() {
  static const Grammar g =
      load_grammar_file(grammar_path("english-context.uhg"));
  return g;
}

const std::pair<const char *, const char *> kCoreGolden[] = {
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

std::string CoreGoldens() {
  Report rep;
  auto start = std::chrono::steady_clock::now();
  for (const auto &[input, meaning] : kCoreGolden) {
    ParseResult r = parse(Core(), "St", input);
    Term want = parse_term(meaning, Core().scope());
    rep.Expect(r.meanings.size() == 1 && !r.partial &&
                   Equiv(r.meanings.terms()[0], want),
               input);
  }
  double secs = std::chrono::duration<double>(
                    std::chrono::steady_clock::now() - start)
                    .count();
  rep.Expect(secs < kGoldenSeconds, "runtime " + std::to_string(secs) + "s");
  return rep.ok() ? "" : rep.Summary();
}

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
Term CtxTerm(const std::string &text) {
  return parse_term(text, Ctx().scope());
}

std::string ContextGoldens() {
  Report rep;
  auto sentence = [&](const std::string &input) {
    ContextState empty;
    Interpretation r = interpret_sentence(Ctx(), input, empty);
    rep.Expect(r.diagnostics.empty(), input + " has diagnostics");
    return r.program;
  };
  const std::string a = "(assert ";
  struct Case {
    std::string input;
    std::string program;
  };
  std::string long_form = a + "(and " + kBuildsHouse + " " + kBuildsSells +
                          ") " + SetIt(SetHe("z")) + ")";
  std::string short_form = a + kBuildsSells + " " + SetIt(SetHe("z")) + ")";
  const Case cases[] = {
      {"Jack is a builder.", a + kIsBuilder + " " + SetHe("z") + ")"},
      {"is Jack a builder?",
       std::string("(test ") + kIsBuilder + " " + SetHe("z") + ")"},
      {"Jack is a builder, he builds a house.",
       a + "(and " + kIsBuilder + " " + kBuildsHouse + ") " +
           SetIt(SetHe("z")) + ")"},
      {"Jack builds a house and sells it.", long_form},
      {"Jack builds a house and sells it.", short_form},
      {"Every builder builds a house and sells it.",
       a +
           "(forall (y e) (imp (Builder y) (exists (x e) (and (Build x y) "
           "(Sell x y) (House x))))) " +
           SetIt("z") + ")"},
  };
  for (const auto &c : cases) {
    rep.Expect(Equiv(sentence(c.input), CtxTerm(Prog(c.program))), c.input);
  }
  RuleSet absorb = RuleSet::parse(
      "exists-absorb : (and (exists ?x ?A) (exists ?x (and ?A ?B))) ==> "
      "(exists ?x (and ?A ?B))\n");
  Term lf = CtxTerm(Prog(long_form));
  Term sf = CtxTerm(Prog(short_form));
  rep.Expect(!alpha_eq(canonicalize(normalize(lf)), canonicalize(normalize(sf))),
             "long and short forms coincide before absorption");
  rep.Expect(alpha_eq(simplify(lf, absorb), simplify(sf, absorb)),
             "absorption alone does not give the short form");

  ContextState session;
  auto [program, answers] =
      interpret_text(Ctx(), "Jack is a builder. he builds a house.", session);
  std::string text = a + kBuildsHouse + " " +
                     SetIt(a + kIsBuilder + " " + SetHe("z") + ")") + ")";
  rep.Expect(Equiv(program, CtxTerm(Prog(text))), "text program");
  auto steps = decompose(program, Ctx().sorts());
  using K = Instruction::Kind;
  std::vector<K> kinds;
  for (const auto &s : steps) kinds.push_back(s.kind);
  rep.Expect(kinds == std::vector<K>{K::kSetref, K::kAssert, K::kSetref,
                                     K::kAssert},
             "text instruction order");
  return rep.ok() ? "" : rep.Summary();
}

std::string PartialGoldens() {
  Report rep;
  const Grammar &g = Core();
  auto in = [&](const std::string &t) { return parse_term(t, g.scope()); };
  Term x = Term::var("x", Type::e());
  ParseResult paint = partial_parse(g, "St", "Jack paints a house.");
  Term tau_v = make_placeholder(g, g.require("Verbt"), "paint");
  rep.Expect(paint.meanings.size() == 1 && paint.partial &&
                 Equiv(paint.meanings.terms()[0],
                       mk_exists("x", Type::e(),
                                 mk_and(Term::app(tau_v, x, in("Jack")),
                                        Term::app(in("House"), x)))),
             "paint");
  ParseResult comp = partial_parse(g, "St", "Jack builds a computer.");
  Term tau_n = make_placeholder(g, g.require("Noun"), "computer");
  if (!rep.Expect(comp.meanings.size() == 1 && comp.partial, "computer")) {
    return rep.Summary();
  }
  rep.Expect(Equiv(comp.meanings.terms()[0],
                   mk_exists("x", Type::e(),
                             mk_and(Term::app(in("Build"), x, in("Jack")),
                                    Term::app(tau_n, x)))),
             "computer meaning");
  PartialMeaning pm = partial_meaning(comp.meanings.terms()[0], g.alphabet());
  rep.Expect(pm.holes == std::set<Hole>{{"Noun", "computer"}}, "computer holes");
  Term computer = Term::con("Computer", parse_type("(-> e t)", g.scope()));
  Grammar ext = g.with_entry("Noun", "computer", computer);
  PartialMeaning done = resolve_placeholders(pm, ext);
  rep.Expect(done.holes.empty(), "holes remain after resolution");
  rep.Expect(Equiv(done.meaning,
                   mk_exists("x", Type::e(),
                             mk_and(Term::app(in("Build"), x, in("Jack")),
                                    Term::app(computer, x)))),
             "resolved meaning");
  return rep.ok() ? "" : rep.Summary();
}

std::string WordLaws() {
  Report rep;
  Alphabet abc("abc");
  std::vector<std::string> words = {""};
  for (std::size_t i = 0; i < words.size(); ++i) {
    if (words[i].size() == 3) continue;
    for (char ch : std::string("abc")) words.push_back(words[i] + ch);
  }
  for (const auto &w : words) {
    rep.Expect(decode(encode(w, abc), abc) == w, "round trip " + w);
  }
  for (const auto &u : words) {
    for (const auto &v : words) {
      bool eq = word_eq_decide(encode(u, abc), encode(v, abc), abc) ==
                WordEq::kEqual;
      rep.Expect(eq == (u == v), "decide " + u + "/" + v);
    }
  }
  const Alphabet &std_alpha = Alphabet::standard();
  std::mt19937 rng(4242);
  auto random_word = [&](const Alphabet &alpha, int max_len) {
    std::string w;
    int len = static_cast<int>(rng() % (max_len + 1));
    for (int i = 0; i < len; ++i) {
      w += alpha.symbol(1 + static_cast<int>(rng() % alpha.size()));
    }
    return w;
  };
  for (int i = 0; i < kRandomWords; ++i) {
    std::string w = random_word(std_alpha, kMaxWordLength);
    rep.Expect(decode(encode(w, std_alpha), std_alpha) == w, "round trip " + w);
  }
  Alphabet ab("ab");
  for (int i = 0; i < kWordPairs; ++i) {
    // Short words over two symbols so equal pairs actually occur.
    std::string u = random_word(ab, 4), v = random_word(ab, 4);
    bool eq = word_eq_decide(encode(u, ab), encode(v, ab), ab) == WordEq::kEqual;
    rep.Expect(eq == (u == v), "decide " + u + "/" + v);
  }
  return rep.ok() ? "" : rep.Summary();
}

std::string AlgebraicLaws() {
  Report rep;
  std::mt19937 rng(20260);
  for (int round = 0; round < kRandomGrammars; ++round) {
    auto rg = testing::random_grammar(rng);
    Grammar g = load_grammar(rg.text);
    Skeleton sk = build_skeleton(g);
    int jn = g.require("JN");
    std::string lex = rg.lexicons[rng() % rg.lexicons.size()];
    std::string word = testing::vocabulary()[rng() % 4];
    std::string meaning =
        testing::truth_terms()[rng() % testing::truth_terms().size()];
    Grammar bigger = g.with_entry(lex, word, parse_term(meaning, g.scope()));
    Skeleton sk2 = build_skeleton(bigger);
    for (const auto &input : rg.inputs) {
      auto ms = testing::all_meanings(g, sk, input);
      for (const auto &[a, b] : rg.equal) {
        rep.Expect(SameSets(ms[g.require(a)], ms[g.require(b)]),
                   a + " vs " + b + " on " + input);
      }
      std::vector<Term> both;
      for (int kid : g.component(jn).kids) {
        for (const auto &t : ms[kid].terms()) both.push_back(t);
      }
      GeneratorSet joined =
          both.empty() ? GeneratorSet(Type::truth()) : dedupe(both);
      rep.Expect(SameSets(ms[jn], joined), "join on " + input);
      auto after = testing::all_meanings(bigger, sk2, input);
      for (const auto &name : g.named()) {
        int id = g.require(name);
        rep.Expect(ms[id].subset_of(after[id]), "monotone " + name);
      }
    }
  }
  for (const char *file : {"english-core.uhg", "english-context.uhg"}) {
    std::string text = testing::read_text(grammar_path(file));
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
    for (const auto &name : lexicons) {
      for (const auto &[word, meaning] :
           g.component(g.require(name)).lexicon->entries) {
        auto plain = parse(g, name, word).meanings;
        rep.Expect(!plain.empty() &&
                       SameSets(parse(g, "RI_" + name, word).meanings, plain) &&
                       SameSets(parse(g, "RA_" + name, word).meanings, plain),
                   "raise/instantiate " + name + " " + word);
      }
    }
  }
  return rep.ok() ? "" : rep.Summary();
}

std::string Chain(std::mt19937 &rng, const std::string &symbol,
                  const std::string &inner) {
  std::string other = symbol == "He" ? "It" : "He";
  std::string other_value = other == "He" ? kHe : kIt;
  std::string out = inner;
  std::size_t n = rng() % 4;  // plus the setref itself: length <= 4
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

bool Coherent(const ContextState &s) {
  auto folded = fold_store(s.history);
  if (folded.size() != s.store.size()) return false;
  for (const auto &[k, v] : folded) {
    auto it = s.store.find(k);
    if (it == s.store.end() || !alpha_eq(v, it->second)) return false;
  }
  return true;
}

std::string StoreLaws() {
  Report rep;
  const Sorts &s = Ctx().sorts();
  std::mt19937 rng(42);
  const std::pair<std::string, std::string> refs[] = {
      {"He", kHe}, {"It", kIt}, {"He", "(lam (y (-> e t)) (Builder Jack))"}};
  for (int round = 0; round < kStoreRounds; ++round) {
    const auto &[symbol, value] = refs[rng() % 3];
    std::string chain =
        Chain(rng, symbol, "(setref " + symbol + " " + value + " z)");
    Term v = CtxTerm(value);
    Term resolved = resolve_refs(
        CtxTerm("(lam (z c) (deref " + symbol + " " + chain + "))"), nullptr, s);
    rep.Expect(unresolved_refs(resolved).empty() &&
                   Equiv(resolved, Term::lam("z", Type::context(s), v)),
               "deref over " + chain);
    Term blocked = CtxTerm("(lam (z c) (deref " + symbol + " (unset " + symbol +
                           " " + chain + ")))");
    ContextState session;
    session.store.insert_or_assign(symbol, v);
    rep.Expect(unresolved_refs(resolve_refs(blocked, nullptr, s)).size() == 1 &&
                   unresolved_refs(resolve_refs(blocked, &session, s)).size() == 1,
               "unset over " + chain);
    ContextState state;
    execute(CtxTerm("(lam (z c) (unset " + symbol + " " + chain + "))"), state,
            s);
    rep.Expect(state.store.count(symbol) == 0 && Coherent(state),
               "unset after " + chain);
  }

  const std::vector<std::vector<std::string>> transcripts = {
      {"Jack is a builder.", "is Jack a builder?", "he builds a house.",
       "does Jack build a house?"},
      {"Jack sells a car.", "Jack builds a house and sells it.",
       "Every builder builds a house.", "Jack does not sell a car."},
      {"he builds a house.", "Jack is a builder, he builds a house.",
       "is Jack a builder?", "blorp."},
      {"Every builder builds a house and sells it.", "Jack is a builder.",
       "Jack is a builder. he sells a car."},
  };
  for (const auto &lines : transcripts) {
    std::string input;
    for (const auto &l : lines) input += l + "\n";
    std::string path = (std::filesystem::temp_directory_path() /
                        "uhog_acceptance_transcript.txt")
                           .string();
    std::istringstream in(input + ":save " + path + "\n");
    std::ostringstream out, err;
    rep.Expect(run_cli({"repl", "-g", grammar_path("english-context.uhg")}, in,
                       out, err) == kExitOk,
               "repl exit");
    std::vector<std::string> transcript;
    std::istringstream saved(testing::read_text(path));
    for (std::string line; std::getline(saved, line);) {
      transcript.push_back(line);
    }
    ContextState session;
    for (const auto &l : lines) {
      try {
        interpret_text(Ctx(), l, session);
      } catch (const Error &) {
      }
      rep.Expect(Coherent(session), "coherence after " + l);
    }
    ContextState again = replay(Ctx(), transcript);
    rep.Expect(Coherent(again), "coherence after replay");
    rep.Expect(again.transcript == session.transcript, "replayed transcript");
  }
  return rep.ok() ? "" : rep.Summary();
}

std::string OracleSoundness(int &checked, int &skipped) {
  Report rep;
  // Extra judgments over the truth-term corpus and its simplified forms.
  const auto &truths = testing::truth_terms();
  std::mt19937 rng(1);
  Grammar g = load_grammar(testing::random_grammar(rng).text);
  for (const auto &a : truths) {
    Term ta = parse_term(a, g.scope());
    Equiv(ta, simplify(ta));
    for (const auto &b : truths) {
      Term tb = parse_term(b, g.scope());
      Equiv(mk_and(ta, tb), mk_and(tb, ta));
      Equiv(mk_or(ta, tb), mk_or(tb, ta));
      Equiv(mk_not(mk_and(ta, tb)), mk_or(mk_not(ta), mk_not(tb)));
    }
  }
  ModelSizes sizes;
  sizes.individuals = kModelIndividuals;
  for (const auto &[a, b] : Judged()) {
    try {
      if (finite_model_refute(a, b, sizes) == Refutation::kDistinct) {
        rep.Fail(print_term(a) + " vs " + print_term(b));
      }
      ++checked;
    } catch (const Unsupported &) {
      ++skipped;
    }
  }
  rep.Expect(checked > 0, "no refutable pairs");
  return rep.ok() ? "" : rep.Summary();
}

std::string StageOneSuperset() {
  Report rep;
  std::mt19937 rng(99);
  for (int round = 0; round < kRandomGrammars; ++round) {
    auto rg = testing::random_grammar(rng);
    Grammar g = load_grammar(rg.text);
    Skeleton sk = build_skeleton(g);
    for (const auto &input : rg.inputs) {
      Chart chart = recognize(sk, input);
      for (std::size_t c = 0; c < g.components().size(); ++c) {
        int id = static_cast<int>(c);
        if (attribute(g, chart, id, 0, chart.length()).empty()) continue;
        rep.Expect(chart.has(id, 0, chart.length()),
                   g.component(id).name + " on " + input);
      }
    }
  }
  return rep.ok() ? "" : rep.Summary();
}

std::string Determinism() {
  Report rep;
  std::vector<std::vector<std::string>> commands;
  for (const char *file : {"english-core.uhg", "english-context.uhg"}) {
    commands.push_back({"axioms", "--json", "-g", grammar_path(file)});
  }
  std::vector<std::string> parse_cmd = {"parse", "--json", "--forest", "-g",
                                        grammar_path("english-core.uhg")};
  for (const auto &[input, meaning] : kCoreGolden) parse_cmd.push_back(input);
  commands.push_back(parse_cmd);
  for (const auto &cmd : commands) {
    std::string first;
    for (int run = 0; run < kDeterminismRuns; ++run) {
      std::istringstream in;
      std::ostringstream out, err;
      int code = run_cli(cmd, in, out, err);
      rep.Expect(code == kExitOk, cmd[0] + " exit " + std::to_string(code));
      if (run == 0) {
        first = out.str();
      } else {
        rep.Expect(out.str() == first, cmd[0] + " output differs");
      }
    }
  }
  return rep.ok() ? "" : rep.Summary();
}

int Run() {
  int checked = 0, skipped = 0;
  const std::vector<std::pair<std::string, std::function<std::string()>>>
      criteria = {
          {"core golden derivations", CoreGoldens},
          {"context golden programs", ContextGoldens},
          {"partial translation goldens", PartialGoldens},
          {"symbolic type laws", WordLaws},
          {"algebraic laws", AlgebraicLaws},
          {"store laws", StoreLaws},
          {"oracle soundness",
           [&] { return OracleSoundness(checked, skipped); }},
          {"stage-1 superset", StageOneSuperset},
          {"determinism", Determinism},
      };
  int failed = 0;
  int n = 0;
  for (const auto &[name, check] : criteria) {
    ++n;
    std::string problem;
    try {
      problem = check();
    } catch (const std::exception &e) {
      problem = std::string("exception: ") + e.what();
    }
    std::cout << (problem.empty() ? "PASS " : "FAIL ") << n << " " << name;
    if (name == "oracle soundness") {
      std::cout << " (" << checked << " pairs checked, " << skipped
                << " outside the model fragment)";
    }
    if (!problem.empty()) {
      std::cout << ": " << problem;
      ++failed;
    }
    std::cout << "\n";
  }
  return failed == 0 ? 0 : 1;
}

}  // namespace
}  // namespace uhog

int main() { return uhog::Run(); }
