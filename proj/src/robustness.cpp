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

#include "uhog/robustness.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <sstream>

#include "uhog/builtins.hpp"
#include "uhog/equivalence.hpp"
#include "uhog/errors.hpp"
#include "uhog/sexpr.hpp"
#include "uhog/term_ops.hpp"

namespace uhog {

using Kind = Term::Kind;
using Op = Component::Op;

namespace {

bool IsTau(const Term &t) {
  return t.is(Kind::kApp) && t.fn().is(Kind::kApp) &&
         t.fn().fn().is_con(names::kTau) && t.fn().arg().is(Kind::kCon);
}

bool IsSigma(const Term &t) {
  return t.is(Kind::kApp) && t.fn().is(Kind::kApp) &&
         t.fn().fn().is_con(names::kSigma);
}

template <typename F>
void Walk(const Term &t, F &&f) {
  f(t);
  switch (t.kind()) {
    case Kind::kApp:
      Walk(t.fn(), f);
      Walk(t.arg(), f);
      break;
    case Kind::kLam:
      Walk(t.body(), f);
      break;
    case Kind::kEq:
      Walk(t.lhs(), f);
      Walk(t.rhs(), f);
      break;
    case Kind::kPair:
      Walk(t.left(), f);
      Walk(t.right(), f);
      break;
    case Kind::kProj1:
    case Kind::kProj2:
      Walk(t.operand(), f);
      break;
    default:
      break;
  }
}

// Bottom-up rewrite with `f` returning a replacement or nullopt.
template <typename F>
Term Rewrite(const Term &t, F &&f) {
  if (auto r = f(t)) return *r;
  switch (t.kind()) {
    case Kind::kApp:
      return Term::app(Rewrite(t.fn(), f), Rewrite(t.arg(), f));
    case Kind::kLam:
      return Term::lam(t.name(), t.type(), Rewrite(t.body(), f));
    case Kind::kEq:
      return Term::eq(Rewrite(t.lhs(), f), Rewrite(t.rhs(), f));
    case Kind::kPair:
      return Term::pair(Rewrite(t.left(), f), Rewrite(t.right(), f));
    case Kind::kProj1:
      return Term::proj1(Rewrite(t.operand(), f));
    case Kind::kProj2:
      return Term::proj2(Rewrite(t.operand(), f));
    default:
      return t;
  }
}

// Description of a value of `type` satisfying `pred`, componentwise on
// products.
Term Describe(const Type &type, const Term &pred) {
  if (!type.is_prod()) return mk_iota(pred);
  const Type &b = type.left(), &c = type.right();
  auto pick = [&](bool first) {
    std::string x = "x", y = "y";
    Term vx = Term::var(x, b), vy = Term::var(y, c);
    Term holds = Term::app(pred, Term::pair(vx, vy));
    if (first) return Term::lam(x, b, mk_exists(y, c, holds));
    return Term::lam(y, c, mk_exists(x, b, holds));
  };
  return Term::pair(Describe(b, pick(true)), Describe(c, pick(false)));
}

}  // namespace

Term make_placeholder(const Grammar &grammar, int component,
                      const std::string &word) {
  return mk_tau(component_constant(grammar, component),
                encode(word, grammar.alphabet(), grammar.sorts()),
                grammar.sorts());
}

std::set<Hole> holes_of(const Term &term, const Alphabet &alphabet) {
  std::set<Hole> out;
  Walk(term, [&](const Term &t) {
    if (!IsTau(t)) return;
    if (auto w = try_decode(t.arg(), alphabet)) {
      out.emplace(t.fn().arg().name(), *w);
    }
  });
  return out;
}

PartialMeaning partial_meaning(const Term &meaning, const Alphabet &alphabet) {
  return PartialMeaning{meaning, holes_of(meaning, alphabet)};
}

std::string hole_sexpr(const Hole &hole) {
  return "(hole " + hole.first + " " + quote(hole.second) + ")";
}

Term translate(const Grammar &grammar, const std::string &component,
               const std::string &word) {
  ParseResult r = parse(grammar, component, word);
  if (r.meanings.size() > 1) {
    throw Ambiguous(component + " \"" + word + "\"", r.meanings.size());
  }
  if (r.meanings.size() == 1) return r.meanings.terms()[0];
  return make_placeholder(grammar, grammar.require(component), word);
}

namespace {

// Phrases of each component with their meanings, by nesting depth.
class Generator {
 public:
  Generator(const Grammar &g, std::size_t cap) : g_(g), cap_(cap) {}

  using Phrase = std::pair<std::string, Term>;

  const std::vector<Phrase> &Gen(int c, int depth) {
    const Component &comp = g_.component(c);
    int d = comp.hidden ? depth : depth - 1;
    auto key = std::make_pair(c, depth);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    memo_[key];  // empty while in progress
    std::vector<Phrase> raw;
    if (d >= 0) Build(comp, d, raw);
    // Shortest phrases first; the cap keeps the shortest.
    std::stable_sort(raw.begin(), raw.end(), [](const Phrase &a, const Phrase &b) {
      if (a.first.size() != b.first.size()) return a.first.size() < b.first.size();
      return a.first < b.first;
    });
    std::vector<Phrase> out;
    for (auto &p : raw) {
      if (out.size() >= cap_) break;
      bool dup = false;
      for (const auto &q : out) {
        if (q.first == p.first && alpha_eq(q.second, p.second)) dup = true;
      }
      if (!dup) out.push_back(std::move(p));
    }
    return memo_[key] = std::move(out);
  }

 private:
  Term Norm(const Term &t) { return simplify(normalize(t)); }

  void Build(const Component &comp, int d, std::vector<Phrase> &raw) {
    const Sorts &sorts = g_.sorts();
    switch (comp.op) {
      case Op::kLexicon:
        for (const auto &[w, m] : comp.lexicon->entries) raw.emplace_back(w, m);
        break;
      case Op::kLiteral:
        raw.emplace_back(comp.literal, mk_star());
        break;
      case Op::kJoin:
      case Op::kSelfExtend:
        for (int k : comp.kids) {
          for (const auto &p : Gen(k, d)) raw.push_back(p);
        }
        break;
      case Op::kConcat:
      case Op::kAnaphoric:
      case Op::kCataphoric: {
        std::vector<Phrase> left = Gen(comp.kids[0], d);
        std::vector<Phrase> right = Gen(comp.kids[1], d);
        for (const auto &a : left) {
          for (const auto &b : right) {
            if (raw.size() >= cap_) return;
            Term m = comp.op == Op::kConcat
                         ? concat_meaning(a.second, b.second, sorts)
                     : comp.op == Op::kAnaphoric
                         ? compose_anaphoric(a.second, b.second, sorts)
                         : compose_cataphoric(a.second, b.second, sorts);
            raw.emplace_back(a.first + b.first, Norm(m));
          }
        }
        break;
      }
      case Op::kRuleApp:
        for (const auto &p : Gen(comp.kids[0], d)) {
          for (const auto &o : apply_rule(*comp.rule, p.second, g_.alphabet(),
                                          sorts)) {
            raw.emplace_back(p.first, Norm(o));
          }
        }
        break;
      case Op::kFunApp: {
        Type src = *g_.component(comp.kids[0]).type;
        Type f = typecheck(*comp.term, sorts);
        bool constant = src.is_unit() && !(f.is_fun() && f.from().is_unit());
        for (const auto &p : Gen(comp.kids[0], d)) {
          raw.emplace_back(p.first,
                           Norm(constant ? *comp.term
                                         : spread_apply(*comp.term, p.second,
                                                        sorts)));
        }
        break;
      }
      case Op::kRaise:
        for (const auto &p : Gen(comp.kids[0], d)) {
          raw.emplace_back(p.first,
                           Norm(context_raise(p.second, *comp.term, sorts)));
        }
        break;
      case Op::kInstantiate:
        for (const auto &p : Gen(comp.kids[0], d)) {
          raw.emplace_back(p.first, Norm(context_instantiate(
                                        p.second, *comp.term, sorts)));
        }
        break;
    }
  }

  const Grammar &g_;
  std::size_t cap_;
  std::map<std::pair<int, int>, std::vector<Phrase>> memo_;
};

}  // namespace

Expression express(const Grammar &grammar, const std::string &component,
                   const Term &meaning, int depth) {
  int id = grammar.require(component);
  const Component &comp = grammar.component(id);
  Type found = typecheck(meaning, grammar.sorts());
  if (!(found == *comp.type)) {
    throw TypeError(component, comp.type->sexpr(grammar.sorts()),
                    found.sexpr(grammar.sorts()));
  }
  Expression out;
  if (comp.op == Op::kLexicon) {
    std::vector<std::string> words;
    for (const auto &[w, m] : comp.lexicon->entries) {
      if (equivalent(m, meaning) &&
          std::find(words.begin(), words.end(), w) == words.end()) {
        words.push_back(w);
      }
    }
    if (words.size() > 1) throw Ambiguous(component, words.size());
    if (words.size() == 1) {
      out.found = true;
      out.word = words[0];
      return out;
    }
  } else {
    GeneratorSet target(*comp.type);
    target.insert(meaning);
    for (int d = 1; d <= depth; ++d) {
      Generator gen(grammar, 4000);
      std::vector<std::string> candidates;
      for (const auto &[w, m] : gen.Gen(id, d)) {
        if (equivalent(m, meaning)) candidates.push_back(w);
      }
      for (const auto &w : candidates) {
        ParseResult r = parse(grammar, component, w);
        if (r.meanings.same_as(target)) {
          out.found = true;
          out.word = w;
          return out;
        }
      }
    }
  }
  out.placeholder = mk_sigma(component_constant(grammar, id), meaning,
                             grammar.sorts());
  return out;
}

ParseResult partial_parse(const Grammar &grammar, const std::string &component,
                          const std::string &input, ParseOptions options) {
  options.partial = false;
  ParseResult strict = parse(grammar, component, input, options);
  if (!strict.meanings.empty()) return strict;
  options.partial = true;
  ParseResult r = parse(grammar, component, input, options);
  if (r.meanings.empty()) {
    throw NoParse("no parse of \"" + input + "\" as " + component);
  }
  // Readings with the fewest unknown words win.
  std::size_t fewest = SIZE_MAX;
  for (const auto &m : r.meanings.terms()) {
    fewest = std::min(fewest, holes_of(m, grammar.alphabet()).size());
  }
  GeneratorSet kept(*r.meanings.type());
  for (const auto &m : r.meanings.terms()) {
    if (holes_of(m, grammar.alphabet()).size() == fewest) kept.insert(m);
  }
  r.meanings = kept;
  r.partial = fewest > 0;
  return r;
}

PartialMeaning resolve_placeholders(const PartialMeaning &meaning,
                                    const Grammar &grammar) {
  Term t = meaning.meaning;
  bool changed = false;
  for (const auto &[comp, word] : meaning.holes) {
    int id = grammar.find(comp);
    if (id < 0) continue;
    ParseResult r;
    try {
      r = parse(grammar, comp, word);
    } catch (const UnknownSymbol &) {
      continue;
    }
    if (r.meanings.size() != 1) continue;
    Term value = r.meanings.terms()[0];
    Term hole = make_placeholder(grammar, id, word);
    t = Rewrite(t, [&](const Term &s) -> std::optional<Term> {
      if (IsTau(s) && alpha_eq(s, hole)) return value;
      return std::nullopt;
    });
    changed = true;
  }
  if (changed) t = simplify(normalize(t));
  return partial_meaning(t, grammar.alphabet());
}

Term expand_placeholders(const Term &term, const Sorts &sorts) {
  Term out = Rewrite(term, [&](const Term &s) -> std::optional<Term> {
    if (IsTau(s)) {
      Term lang = s.fn().arg(), word = s.arg();
      Type a = typecheck(s, sorts);
      std::string y = "y";
      Term pred = Term::lam(y, a, Term::app(lang, word, Term::var(y, a)));
      return Describe(a, pred);
    }
    if (IsSigma(s)) {
      Term lang = s.fn().arg(), m = s.arg();
      Type st = Type::symbolic(sorts);
      return mk_iota(Term::lam("x", st, Term::app(lang, Term::var("x", st), m)));
    }
    return std::nullopt;
  });
  return normalize(out);
}

StoredParse read_stored_parse(const std::string &text, const Grammar &grammar) {
  StoredParse out;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto colon = line.find(": ");
    if (line.empty() || colon == std::string::npos) continue;
    std::string key = line.substr(0, colon);
    std::string value = line.substr(colon + 2);
    try {
      if (key == "input") {
        out.input = parse_sexp(value).text;
      } else if (key == "component") {
        out.component = value;
      } else if (key == "meaning") {
        out.meanings.push_back(parse_term(value, grammar.scope()));
      }
    } catch (const ParseError &e) {
      throw ParseError(e.what(), lineno, 1);
    }
  }
  return out;
}

}  // namespace uhog
