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

#include "uhog/context.hpp"

#include <algorithm>
#include <set>

#include "uhog/builtins.hpp"
#include "uhog/equivalence.hpp"
#include "uhog/errors.hpp"
#include "uhog/parser.hpp"
#include "uhog/syntax.hpp"
#include "uhog/term_ops.hpp"

namespace uhog {

using Kind = Term::Kind;

std::string answer_name(Answer answer) {
  switch (answer) {
    case Answer::kYes:
      return "yes";
    case Answer::kNo:
      return "no";
    case Answer::kUnknown:
      return "unknown";
  }
  return "unknown";
}

namespace {

const char *kBase = "z";

std::string BaseName(const Term &program) {
  return fresh_name(kBase, [&](const std::string &n) {
    for (const auto &[v, t] : free_vars(program)) {
      if (v == n) return true;
    }
    return false;
  });
}

// Body of the program applied to a fresh base context variable.
Term Body(const Term &program, const std::string &z, const Sorts &sorts,
          long budget = kDefaultBudget) {
  return normalize(Term::app(program, Term::var(z, Type::context(sorts))),
                   budget);
}

bool IsBase(const Term &t, const std::string &z) {
  return t.is(Kind::kVar) && t.name() == z;
}

// (head name, args) when `t` is an instruction with all its arguments.
std::optional<std::pair<std::string, std::vector<Term>>> Step(const Term &t) {
  Term head = spine_head(t);
  if (!head.is(Kind::kCon)) return std::nullopt;
  std::vector<Term> args = spine_args(t);
  const std::string &h = head.name();
  std::size_t want = h == names::kSetref ? 3
                     : (h == names::kUnset || h == names::kAssert ||
                        h == names::kRefute || h == names::kTest)
                         ? 2
                         : 0;
  if (want == 0 || args.size() != want) return std::nullopt;
  return std::make_pair(h, args);
}

// Value of `symbol` seen from context `ctx`, if determined.
std::optional<Term> Lookup(const Term &symbol, Term ctx, const std::string &z,
                           const ContextState *session) {
  for (;;) {
    if (IsBase(ctx, z)) {
      if (session && symbol.is(Kind::kCon)) {
        auto it = session->store.find(symbol.name());
        if (it != session->store.end()) return it->second;
      }
      return std::nullopt;
    }
    auto step = Step(ctx);
    if (!step) return std::nullopt;
    const auto &[h, args] = *step;
    if (h == names::kSetref) {
      if (alpha_eq(args[0], symbol)) return args[1];
      ctx = args[2];
    } else if (h == names::kUnset) {
      if (alpha_eq(args[0], symbol)) return std::nullopt;
      ctx = args[1];
    } else {
      ctx = args[1];
    }
  }
}

Term ResolveIn(const Term &t, const std::string &z, const ContextState *session,
               bool &changed) {
  if (t.is(Kind::kApp)) {
    Term head = spine_head(t);
    std::vector<Term> args = spine_args(t);
    if (head.is_con(names::kDeref) && args.size() >= 2) {
      if (auto v = Lookup(args[0], args[1], z, session)) {
        changed = true;
        Term out = *v;
        for (std::size_t i = 2; i < args.size(); ++i) {
          out = Term::app(out, args[i]);
        }
        return out;
      }
    }
    Term f = ResolveIn(t.fn(), z, session, changed);
    Term a = ResolveIn(t.arg(), z, session, changed);
    return Term::app(f, a);
  }
  switch (t.kind()) {
    case Kind::kLam:
      // A binder named like the base variable hides it.
      if (t.name() == z) return t;
      return Term::lam(t.name(), t.type(),
                       ResolveIn(t.body(), z, session, changed));
    case Kind::kEq:
      return Term::eq(ResolveIn(t.lhs(), z, session, changed),
                      ResolveIn(t.rhs(), z, session, changed));
    case Kind::kPair:
      return Term::pair(ResolveIn(t.left(), z, session, changed),
                        ResolveIn(t.right(), z, session, changed));
    case Kind::kProj1:
      return Term::proj1(ResolveIn(t.operand(), z, session, changed));
    case Kind::kProj2:
      return Term::proj2(ResolveIn(t.operand(), z, session, changed));
    default:
      return t;
  }
}

void CollectDerefs(const Term &t, std::set<std::string> &out) {
  switch (t.kind()) {
    case Kind::kApp: {
      Term head = spine_head(t);
      std::vector<Term> args = spine_args(t);
      if (head.is_con(names::kDeref) && !args.empty()) {
        out.insert(args[0].is(Kind::kCon) ? args[0].name()
                                          : print_term(args[0]));
      }
      CollectDerefs(t.fn(), out);
      CollectDerefs(t.arg(), out);
      break;
    }
    case Kind::kLam:
      CollectDerefs(t.body(), out);
      break;
    case Kind::kEq:
      CollectDerefs(t.lhs(), out);
      CollectDerefs(t.rhs(), out);
      break;
    case Kind::kPair:
      CollectDerefs(t.left(), out);
      CollectDerefs(t.right(), out);
      break;
    case Kind::kProj1:
    case Kind::kProj2:
      CollectDerefs(t.operand(), out);
      break;
    default:
      break;
  }
}

}  // namespace

std::vector<Instruction> decompose(const Term &program, const Sorts &sorts) {
  Type c = Type::context(sorts);
  Type found = typecheck(program, sorts);
  if (!(found == Type::fun(c, c))) {
    throw IllTypedInstruction("program of type " + found.sexpr(sorts));
  }
  std::string z = BaseName(program);
  Term cur = Body(program, z, sorts);
  std::vector<Instruction> steps;
  while (!IsBase(cur, z)) {
    auto step = Step(cur);
    Instruction ins;
    if (!step) {
      ins.kind = Instruction::Kind::kOpaque;
      ins.term = normalize(Term::lam(z, c, cur));
      steps.push_back(ins);
      break;
    }
    const auto &[h, args] = *step;
    Term next = args.back();
    if (h == names::kSetref) {
      ins.kind = Instruction::Kind::kSetref;
      ins.symbol = args[0];
      ins.term = args[1];
    } else if (h == names::kUnset) {
      ins.kind = Instruction::Kind::kUnset;
      ins.symbol = args[0];
    } else {
      ins.kind = h == names::kAssert   ? Instruction::Kind::kAssert
                 : h == names::kRefute ? Instruction::Kind::kRefute
                                       : Instruction::Kind::kTest;
      ins.term = args[0];
      if (!typecheck(args[0], sorts).is_truth()) {
        throw IllTypedInstruction(h + " of a non-formula");
      }
    }
    steps.push_back(ins);
    cur = next;
  }
  std::reverse(steps.begin(), steps.end());
  return steps;
}

Term resolve_refs(const Term &program, const ContextState *session,
                  const Sorts &sorts) {
  std::string z = BaseName(program);
  Term body = Body(program, z, sorts);
  for (int round = 0; round < 64; ++round) {
    bool changed = false;
    Term next = ResolveIn(body, z, session, changed);
    if (!changed) break;
    body = normalize(next);
  }
  return simplify(Term::lam(z, Type::context(sorts), body));
}

std::vector<std::string> unresolved_refs(const Term &program) {
  std::set<std::string> names;
  CollectDerefs(program, names);
  return {names.begin(), names.end()};
}

std::map<std::string, Term> fold_store(
    const std::vector<Instruction> &history) {
  std::map<std::string, Term> store;
  for (const auto &ins : history) {
    if (ins.kind == Instruction::Kind::kSetref) {
      store.insert_or_assign(ins.symbol->name(), *ins.term);
    } else if (ins.kind == Instruction::Kind::kUnset) {
      store.erase(ins.symbol->name());
    }
  }
  return store;
}

namespace {

void AddConjuncts(const Term &f, std::vector<Term> &out) {
  for (const auto &c : conjuncts(f)) {
    if (c.is_con(names::kTrue)) continue;
    bool dup = false;
    for (const auto &o : out) dup = dup || alpha_eq(o, c);
    if (!dup) out.push_back(c);
  }
}

bool Holds(const std::vector<Term> &known, const Term &formula) {
  Term f = simplify(formula);
  if (f.is_con(names::kTrue)) return true;
  for (const auto &k : known) {
    if (alpha_eq(k, f)) return true;
  }
  std::vector<Term> parts = conjuncts(f);
  if (parts.size() < 2) return false;
  for (const auto &p : parts) {
    if (!Holds(known, p)) return false;
  }
  return true;
}

void Individuals(const Term &t, std::vector<Term> &out) {
  switch (t.kind()) {
    case Kind::kCon:
      if (t.type() == Type::e()) {
        for (const auto &o : out) {
          if (alpha_eq(o, t)) return;
        }
        out.push_back(t);
      }
      break;
    case Kind::kApp:
      Individuals(t.fn(), out);
      Individuals(t.arg(), out);
      break;
    case Kind::kLam:
      Individuals(t.body(), out);
      break;
    case Kind::kEq:
      Individuals(t.lhs(), out);
      Individuals(t.rhs(), out);
      break;
    case Kind::kPair:
      Individuals(t.left(), out);
      Individuals(t.right(), out);
      break;
    case Kind::kProj1:
    case Kind::kProj2:
      Individuals(t.operand(), out);
      break;
    default:
      break;
  }
}

}  // namespace

Answer entails(const std::vector<Term> &facts, const Term &formula) {
  std::vector<Term> known;
  for (const auto &f : facts) AddConjuncts(simplify(f), known);
  std::vector<Term> individuals;
  for (const auto &k : known) Individuals(k, individuals);
  std::vector<Term> derived;
  for (const auto &k : known) {
    if (!(k.is(Kind::kApp) && k.fn().is_con(names::kForall) &&
          k.arg().is(Kind::kLam))) {
      continue;
    }
    const Term &lam = k.arg();
    Term body = lam.body();
    if (!(spine_head(body).is_con(names::kImp) &&
          spine_args(body).size() == 2)) {
      continue;
    }
    for (const auto &c : individuals) {
      if (!(lam.type() == c.type())) continue;
      Binding b{lam.name(), lam.type(), c};
      Term a = substitute(spine_args(body)[0], b);
      if (Holds(known, a)) {
        AddConjuncts(simplify(substitute(spine_args(body)[1], b)), derived);
      }
    }
  }
  for (const auto &d : derived) AddConjuncts(d, known);
  if (Holds(known, formula)) return Answer::kYes;
  if (Holds(known, mk_not(formula))) return Answer::kNo;
  return Answer::kUnknown;
}

std::vector<Answer> execute(const Term &program, ContextState &state,
                            const Sorts &sorts, const Alphabet *alphabet) {
  Type c = Type::context(sorts);
  Type found = typecheck(program, sorts);
  if (!(found == Type::fun(c, c))) {
    throw IllTypedInstruction("program of type " + found.sexpr(sorts));
  }
  Term resolved = resolve_refs(program, &state, sorts);
  std::vector<Instruction> steps = decompose(resolved, sorts);
  std::vector<Answer> answers;
  auto show = [&](const Term &t) { return print_term(t, sorts, alphabet); };
  for (const auto &ins : steps) {
    switch (ins.kind) {
      case Instruction::Kind::kSetref:
        state.store.insert_or_assign(ins.symbol->name(), *ins.term);
        state.transcript.push_back("! setref " + ins.symbol->name() + " " +
                                   show(*ins.term));
        break;
      case Instruction::Kind::kUnset:
        state.store.erase(ins.symbol->name());
        state.transcript.push_back("! unset " + ins.symbol->name());
        break;
      case Instruction::Kind::kAssert: {
        Term f = simplify(*ins.term);
        bool dup = false;
        for (const auto &g : state.facts) dup = dup || alpha_eq(g, f);
        if (!dup) state.facts.push_back(f);
        state.transcript.push_back("! assert " + show(f));
        break;
      }
      case Instruction::Kind::kRefute: {
        Term f = simplify(*ins.term);
        std::erase_if(state.facts,
                      [&](const Term &g) { return alpha_eq(g, f); });
        state.transcript.push_back("! refute " + show(f));
        break;
      }
      case Instruction::Kind::kTest: {
        Term f = simplify(*ins.term);
        Answer a = entails(state.facts, f);
        state.responses.emplace_back(f, a);
        answers.push_back(a);
        state.transcript.push_back("? test " + show(f) + " => " +
                                   answer_name(a));
        break;
      }
      case Instruction::Kind::kOpaque:
        state.transcript.push_back("! opaque " + show(*ins.term));
        break;
    }
    state.history.push_back(ins);
  }
  return answers;
}

namespace {

Term ProgramOf(const Grammar &grammar, const std::string &component,
               const std::string &input) {
  ParseResult r = parse(grammar, component, input);
  if (r.meanings.empty()) {
    throw NoParse("no parse of \"" + input + "\" as " + component);
  }
  if (r.meanings.size() > 1) throw Ambiguous(input, r.meanings.size());
  Term m = r.meanings.terms()[0];
  if (is_monadic(typecheck(m, grammar.sorts()), grammar.sorts())) {
    m = normalize(Term::proj1(m));
  }
  return m;
}

std::string TextComponent(const Grammar &grammar, const std::string &given) {
  if (!given.empty()) return given;
  if (grammar.main()) return *grammar.main();
  throw Error("grammar declares no main component");
}

}  // namespace

Interpretation interpret_sentence(const Grammar &grammar,
                                  const std::string &input,
                                  const ContextState &session,
                                  const std::string &component) {
  Term program = ProgramOf(grammar, component, input);
  Term resolved = resolve_refs(program, &session, grammar.sorts());
  Interpretation out{resolved, {}};
  for (const auto &s : unresolved_refs(resolved)) {
    out.diagnostics.push_back("unresolved reference " + s);
  }
  return out;
}

std::pair<Term, std::vector<Answer>> interpret_text(const Grammar &grammar,
                                                    const std::string &input,
                                                    ContextState &session,
                                                    const std::string &component) {
  Term program = ProgramOf(grammar, TextComponent(grammar, component), input);
  Term resolved = resolve_refs(program, &session, grammar.sorts());
  session.transcript.push_back("> " + input);
  std::vector<Answer> answers =
      execute(resolved, session, grammar.sorts(), &grammar.alphabet());
  return {resolved, answers};
}

ContextState replay(const Grammar &grammar,
                    const std::vector<std::string> &transcript,
                    const std::string &component) {
  ContextState state;
  for (const auto &line : transcript) {
    if (line.rfind("> ", 0) != 0) continue;
    try {
      interpret_text(grammar, line.substr(2), state, component);
    } catch (const NoParse &) {
      state.transcript.push_back(line);
      state.transcript.push_back("no parse");
    }
  }
  return state;
}

}  // namespace uhog
