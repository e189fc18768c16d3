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

#include "uhog/grammar.hpp"

#include <algorithm>
#include <functional>

#include "uhog/builtins.hpp"
#include "uhog/equivalence.hpp"
#include "uhog/errors.hpp"
#include "uhog/term_ops.hpp"

namespace uhog {

using Op = Component::Op;

SemanticRule SemanticRule::functional(Term fn, std::string name) {
  SemanticRule r;
  r.kind = Kind::kFunctional;
  r.fn = std::move(fn);
  r.name = std::move(name);
  return r;
}

SemanticRule SemanticRule::table(
    Type from, Type to, std::vector<std::pair<Term, std::vector<Term>>> cases,
    std::string name) {
  SemanticRule r;
  r.kind = Kind::kTable;
  r.from = std::move(from);
  r.to = std::move(to);
  r.cases = std::move(cases);
  r.name = std::move(name);
  return r;
}

SemanticRule SemanticRule::lexicon_rule(std::shared_ptr<const Lexicon> lexicon,
                                        std::string name) {
  SemanticRule r;
  r.kind = Kind::kLexicon;
  r.lexicon = std::move(lexicon);
  r.name = std::move(name);
  return r;
}

Grammar::Grammar()
    : alphabet_(std::make_shared<Alphabet>(Alphabet::standard())) {
  scope_.alphabet = alphabet_.get();
}

void Grammar::set_alphabet(const Alphabet &alphabet) {
  alphabet_ = std::make_shared<Alphabet>(alphabet);
  scope_.alphabet = alphabet_.get();
}

int Grammar::find(std::string_view name) const {
  auto it = index_.find(name);
  return it == index_.end() ? -1 : it->second;
}

int Grammar::require(std::string_view name) const {
  int id = find(name);
  if (id < 0) throw UnknownComponent(std::string(name), 0);
  return id;
}

int Grammar::add(Component component) {
  if (index_.count(component.name) != 0) {
    throw Error("duplicate component '" + component.name + "'");
  }
  int id = static_cast<int>(components_.size());
  index_.emplace(component.name, id);
  components_.push_back(std::move(component));
  return id;
}

std::vector<std::string> Grammar::named() const {
  std::vector<std::string> out;
  for (const auto &c : components_) {
    if (!c.hidden) out.push_back(c.name);
  }
  return out;
}

Grammar Grammar::with_entry(std::string_view name, const std::string &word,
                            const Term &meaning) const {
  Grammar g = *this;
  int id = g.require(name);
  Component &comp = g.components_[id];
  if (comp.op != Op::kLexicon) {
    throw Error("component '" + comp.name + "' is not a lexicon");
  }
  auto old = comp.lexicon;
  auto lex = std::make_shared<Lexicon>(*old);
  Type found = typecheck(meaning, sorts());
  if (!(found == lex->type)) {
    throw TypeError(comp.name, lex->type.sexpr(sorts()), found.sexpr(sorts()));
  }
  bool dup = false;
  for (const auto &[w, m] : lex->entries) {
    if (w == word && equivalent(m, meaning)) dup = true;
  }
  if (!dup) lex->entries.emplace_back(word, meaning);
  for (auto &c : g.components_) {
    if (c.lexicon == old) c.lexicon = lex;
    if (c.rule && c.rule->lexicon == old) c.rule->lexicon = lex;
  }
  return g;
}

bool is_instructive(const Type &type, const Sorts &sorts) {
  Type c = Type::context(sorts);
  return type == Type::fun(c, c);
}

bool is_monadic(const Type &type, const Sorts &sorts) {
  Type c = Type::context(sorts);
  return type.is_prod() && is_instructive(type.left(), sorts) &&
         type.right().is_fun() && type.right().from() == c;
}

std::optional<Type> spread_type(const Type &fn, const Type &arg) {
  if (!fn.is_fun()) return std::nullopt;
  if (fn.from() == arg) return fn.to();
  if (!arg.is_prod()) return std::nullopt;
  auto mid = spread_type(fn, arg.left());
  if (!mid) return std::nullopt;
  return spread_type(*mid, arg.right());
}

Term spread_apply(const Term &fn, const Term &arg, const Sorts &sorts) {
  Type f = typecheck(fn, sorts);
  Type a = typecheck(arg, sorts);
  if (f.is_fun() && f.from() == a) return Term::app(fn, arg);
  if (!f.is_fun() || !a.is_prod() || !spread_type(f, a)) {
    throw TypeError("rule application",
                    f.is_fun() ? f.from().sexpr(sorts) : "function",
                    a.sexpr(sorts));
  }
  Term mid = spread_apply(fn, Term::proj1(arg), sorts);
  return spread_apply(mid, Term::proj2(arg), sorts);
}

namespace {

std::string FreshFor(const std::string &base,
                     std::initializer_list<const Term *> terms) {
  return fresh_name(base, [&](const std::string &n) {
    for (const Term *t : terms) {
      for (const auto &[v, ty] : free_vars(*t)) {
        if (v == n) return true;
      }
    }
    return false;
  });
}

// lam z. f (g z)
Term After(const Term &f, const Term &g, const Sorts &sorts) {
  Type c = Type::context(sorts);
  std::string z = FreshFor("z", {&f, &g});
  return Term::lam(z, c, Term::app(f, Term::app(g, Term::var(z, c))));
}

void RequireMonadicPair(const std::string &where, const Type &a, const Type &b,
                        const Sorts &sorts) {
  bool mm = is_monadic(a, sorts) && is_monadic(b, sorts);
  bool ii = is_instructive(a, sorts) && is_instructive(b, sorts);
  if (!mm && !ii) {
    throw TypeError(where, "monadic or instructive operands",
                    a.sexpr(sorts) + " and " + b.sexpr(sorts));
  }
}

}  // namespace

Term compose_anaphoric(const Term &m1, const Term &m2, const Sorts &sorts) {
  Type a = typecheck(m1, sorts), b = typecheck(m2, sorts);
  RequireMonadicPair("anaphoric concatenation", a, b, sorts);
  if (is_instructive(a, sorts)) return normalize(After(m2, m1, sorts));
  Term x1 = Term::proj1(m1), y1 = Term::proj2(m1);
  Term x2 = Term::proj1(m2), y2 = Term::proj2(m2);
  return normalize(Term::pair(After(x2, x1, sorts),
                              Term::pair(y1, After(y2, x1, sorts))));
}

Term compose_cataphoric(const Term &m1, const Term &m2, const Sorts &sorts) {
  Type a = typecheck(m1, sorts), b = typecheck(m2, sorts);
  RequireMonadicPair("cataphoric concatenation", a, b, sorts);
  if (is_instructive(a, sorts)) return normalize(After(m1, m2, sorts));
  Term x1 = Term::proj1(m1), y1 = Term::proj2(m1);
  Term x2 = Term::proj1(m2), y2 = Term::proj2(m2);
  return normalize(Term::pair(After(x1, x2, sorts),
                              Term::pair(After(y1, x2, sorts), y2)));
}

Term context_raise(const Term &meaning, const Term &fn, const Sorts &sorts) {
  Term program = spread_apply(fn, meaning, sorts);
  Type p = typecheck(program, sorts);
  if (!is_instructive(p, sorts)) {
    Type c = Type::context(sorts);
    throw TypeError("raise", Type::fun(c, c).sexpr(sorts), p.sexpr(sorts));
  }
  std::string z = FreshFor("z", {&meaning});
  return normalize(Term::pair(
      program, Term::lam(z, Type::context(sorts), meaning)));
}

Term context_instantiate(const Term &meaning, const Term &context,
                         const Sorts &sorts) {
  Type m = typecheck(meaning, sorts);
  if (!is_monadic(m, sorts)) {
    throw TypeError("instantiate", "monadic meaning", m.sexpr(sorts));
  }
  return normalize(Term::app(Term::proj2(meaning), context));
}

Term concat_meaning(const Term &left, const Term &right, const Sorts &sorts) {
  bool lu = typecheck(left, sorts).is_unit();
  bool ru = typecheck(right, sorts).is_unit();
  if (lu) return right;
  if (ru) return left;
  return Term::pair(left, right);
}

Term lexicon_repr(const Lexicon &lexicon, const Alphabet &alphabet,
                  const Sorts &sorts) {
  Type s = Type::symbolic(sorts);
  Term x = Term::var("x", s);
  Term y = Term::var("y", lexicon.type);
  std::optional<Term> body;
  for (const auto &[word, meaning] : lexicon.entries) {
    Type found = typecheck(meaning, sorts);
    if (!(found == lexicon.type)) {
      throw TypeError(word, lexicon.type.sexpr(sorts), found.sexpr(sorts));
    }
    Term d = mk_and(Term::eq(x, encode(word, alphabet, sorts)),
                    Term::eq(y, meaning));
    body = body ? mk_or(*body, d) : d;
  }
  return Term::lam("x", s,
                   Term::lam("y", lexicon.type, body ? *body : mk_false()));
}

std::vector<Term> apply_rule(const SemanticRule &rule, const Term &input,
                             const Alphabet &alphabet, const Sorts &sorts) {
  std::vector<Term> out;
  switch (rule.kind) {
    case SemanticRule::Kind::kFunctional:
      out.push_back(normalize(spread_apply(*rule.fn, input, sorts)));
      return out;
    case SemanticRule::Kind::kTable: {
      Type a = typecheck(input, sorts);
      if (!(a == *rule.from)) {
        throw TypeError(rule.name, rule.from->sexpr(sorts), a.sexpr(sorts));
      }
      GeneratorSet set(*rule.to);
      for (const auto &[in, outs] : rule.cases) {
        if (!equivalent(in, input)) continue;
        for (const auto &o : outs) set.insert(o);
      }
      return set.terms();
    }
    case SemanticRule::Kind::kLexicon: {
      Type a = typecheck(input, sorts);
      if (!(a == Type::symbolic(sorts))) {
        throw TypeError(rule.name, Type::symbolic(sorts).sexpr(sorts),
                        a.sexpr(sorts));
      }
      auto word = try_decode(normalize(input), alphabet);
      if (!word) return out;
      GeneratorSet set(rule.lexicon->type);
      for (const auto &[w, m] : rule.lexicon->entries) {
        if (w == *word) set.insert(m);
      }
      return set.terms();
    }
  }
  return out;
}

namespace {

class Typer {
 public:
  explicit Typer(Grammar &g) : g_(g), sorts_(g.sorts()) {}

  void Run(TypeTable &table) {
    const auto &comps = g_.components();
    types_.assign(comps.size(), std::nullopt);
    state_.assign(comps.size(), 0);
    for (std::size_t i = 0; i < comps.size(); ++i) Body(static_cast<int>(i));
    for (std::size_t i = 0; i < comps.size(); ++i) {
      const Component &c = comps[i];
      if (c.declared && !(*c.declared == *types_[i])) {
        throw TypeError(c.name, c.declared->sexpr(sorts_),
                        types_[i]->sexpr(sorts_));
      }
    }
    Emptiness(table);
  }

  const std::vector<std::optional<Type>> &types() const { return types_; }

 private:
  // Type of a kid: its declaration when present, else its body type.
  Type Of(int id) {
    const Component &c = g_.component(id);
    if (c.declared) return *c.declared;
    if (state_[id] == 1) {
      throw TypeError(c.name, "declared type on recursive component", "none");
    }
    return Body(id);
  }

  Type Body(int id) {
    if (state_[id] == 2) return *types_[id];
    state_[id] = 1;
    Type t = Compute(g_.component(id));
    types_[id] = t;
    state_[id] = 2;
    return t;
  }

  Type Compute(const Component &c) {
    Type c_ctx = Type::context(sorts_);
    switch (c.op) {
      case Op::kLexicon:
        for (const auto &[w, m] : c.lexicon->entries) {
          Type found = typecheck(m, sorts_);
          if (!(found == c.lexicon->type)) {
            throw TypeError(c.name, c.lexicon->type.sexpr(sorts_),
                            found.sexpr(sorts_));
          }
        }
        return c.lexicon->type;
      case Op::kLiteral:
        return Type::unit();
      case Op::kJoin: {
        Type first = Of(c.kids[0]);
        for (std::size_t i = 1; i < c.kids.size(); ++i) {
          Type k = Of(c.kids[i]);
          if (!(k == first)) {
            throw TypeError(c.name, first.sexpr(sorts_), k.sexpr(sorts_));
          }
        }
        return first;
      }
      case Op::kConcat: {
        Type a = Of(c.kids[0]), b = Of(c.kids[1]);
        if (a.is_unit()) return b;
        if (b.is_unit()) return a;
        return Type::prod(a, b);
      }
      case Op::kRuleApp: {
        Type a = Of(c.kids[0]);
        const SemanticRule &r = *c.rule;
        switch (r.kind) {
          case SemanticRule::Kind::kFunctional:
            return Spread(c, typecheck(*r.fn, sorts_), a);
          case SemanticRule::Kind::kTable:
            if (!(a == *r.from)) {
              throw TypeError(c.name, r.from->sexpr(sorts_), a.sexpr(sorts_));
            }
            return *r.to;
          case SemanticRule::Kind::kLexicon:
            if (!(a == Type::symbolic(sorts_))) {
              throw TypeError(c.name, Type::symbolic(sorts_).sexpr(sorts_),
                              a.sexpr(sorts_));
            }
            return r.lexicon->type;
        }
        return a;
      }
      case Op::kFunApp: {
        Type a = Of(c.kids[0]);
        Type f = typecheck(*c.term, sorts_);
        // A unit-typed source takes any term as a constant meaning.
        if (a.is_unit() && !(f.is_fun() && f.from().is_unit())) return f;
        return Spread(c, f, a);
      }
      case Op::kAnaphoric:
      case Op::kCataphoric: {
        Type a = Of(c.kids[0]), b = Of(c.kids[1]);
        if (is_instructive(a, sorts_) && is_instructive(b, sorts_)) return a;
        if (!is_monadic(a, sorts_) || !is_monadic(b, sorts_)) {
          throw TypeError(c.name, "monadic operands",
                          a.sexpr(sorts_) + " and " + b.sexpr(sorts_));
        }
        return Type::prod(a.left(), Type::prod(a.right(), b.right()));
      }
      case Op::kRaise: {
        Type a = Of(c.kids[0]);
        Type p = Spread(c, typecheck(*c.term, sorts_), a);
        if (!is_instructive(p, sorts_)) {
          throw TypeError(c.name, Type::fun(c_ctx, c_ctx).sexpr(sorts_),
                          p.sexpr(sorts_));
        }
        return Type::prod(p, Type::fun(c_ctx, a));
      }
      case Op::kInstantiate: {
        Type a = Of(c.kids[0]);
        if (!is_monadic(a, sorts_)) {
          throw TypeError(c.name, "monadic meaning", a.sexpr(sorts_));
        }
        Type ct = typecheck(*c.term, sorts_);
        if (!(ct == c_ctx)) {
          throw TypeError(c.name, c_ctx.sexpr(sorts_), ct.sexpr(sorts_));
        }
        return a.right().to();
      }
      case Op::kSelfExtend:
        return Of(c.kids[0]);
    }
    return Type::unit();
  }

  Type Spread(const Component &c, const Type &f, const Type &a) {
    auto r = spread_type(f, a);
    if (!r) {
      throw TypeError(c.name, f.is_fun() ? f.from().sexpr(sorts_) : "function",
                      a.sexpr(sorts_));
    }
    return *r;
  }

  void Emptiness(TypeTable &table) {
    const auto &comps = g_.components();
    std::vector<bool> ne(comps.size(), false);
    for (bool changed = true; changed;) {
      changed = false;
      for (std::size_t i = 0; i < comps.size(); ++i) {
        if (ne[i]) continue;
        const Component &c = comps[i];
        bool v = false;
        switch (c.op) {
          case Op::kLexicon:
            v = !c.lexicon->entries.empty() || c.extend;
            break;
          case Op::kLiteral:
            v = true;
            break;
          case Op::kJoin:
            for (int k : c.kids) v = v || ne[k];
            break;
          case Op::kConcat:
          case Op::kAnaphoric:
          case Op::kCataphoric:
            v = ne[c.kids[0]] && ne[c.kids[1]];
            break;
          case Op::kSelfExtend:
            v = true;
            break;
          default:
            v = ne[c.kids[0]];
        }
        if (v) ne[i] = changed = true;
      }
    }
    for (std::size_t i = 0; i < comps.size(); ++i) {
      if (!ne[i] && !comps[i].hidden) {
        table.warnings.push_back("empty component '" + comps[i].name + "'");
      }
    }
  }

  Grammar &g_;
  Sorts sorts_;
  std::vector<std::optional<Type>> types_;
  std::vector<int> state_;
};

}  // namespace

TypeTable validate(Grammar &grammar) {
  TypeTable table;
  for (const auto &c : grammar.components()) {
    for (int k : c.kids) {
      if (k < 0 || k >= static_cast<int>(grammar.components().size())) {
        throw UnknownComponent(c.name, c.line);
      }
    }
  }
  Typer typer(grammar);
  typer.Run(table);
  auto &comps = grammar.mutable_components();
  for (std::size_t i = 0; i < comps.size(); ++i) {
    comps[i].type = typer.types()[i];
    if (!comps[i].hidden) {
      grammar.mutable_scope().components.insert_or_assign(comps[i].name,
                                                        *comps[i].type);
      table.types.emplace_back(comps[i].name, *comps[i].type);
    }
  }
  return table;
}

Term component_constant(const Grammar &grammar, int id) {
  const Component &c = grammar.component(id);
  const Sorts &sorts = grammar.sorts();
  Type a = c.type ? *c.type : *c.declared;
  return Term::con(c.name, Type::fun(Type::symbolic(sorts), a, Type::truth()));
}

namespace {

// Builds the defining formula of one component.
class AxiomBuilder {
 public:
  explicit AxiomBuilder(const Grammar &g) : g_(g), sorts_(g.sorts()) {}

  Term Formula(int id) {
    const Component &c = g_.component(id);
    Type s = Type::symbolic(sorts_);
    Type a = *c.type;
    Term x = Term::var("x", s);
    Term y = Term::var("y", a);
    Term self = component_constant(g_, id);
    auto rel = [&](Term body) {
      return Term::eq(self, Term::lam("x", s, Term::lam("y", a, body)));
    };
    auto kid = [&](int k) { return component_constant(g_, c.kids[k]); };
    auto kid_type = [&](int k) { return *g_.component(c.kids[k]).type; };
    switch (c.op) {
      case Op::kLexicon:
        return Term::eq(self, lexicon_repr(*c.lexicon, g_.alphabet(), sorts_));
      case Op::kLiteral: {
        Lexicon lit{Type::unit(), {{c.literal, mk_star()}}};
        return Term::eq(self, lexicon_repr(lit, g_.alphabet(), sorts_));
      }
      case Op::kJoin: {
        std::optional<Term> body;
        for (std::size_t k = 0; k < c.kids.size(); ++k) {
          Term d = Term::app(kid(static_cast<int>(k)), x, y);
          body = body ? mk_or(*body, d) : d;
        }
        return rel(*body);
      }
      case Op::kConcat:
      case Op::kAnaphoric:
      case Op::kCataphoric: {
        Type ta = kid_type(0), tb = kid_type(1);
        Term x1 = Term::var("x1", s), x2 = Term::var("x2", s);
        Term split = Term::eq(x, mk_concat(x1, x2, sorts_));
        Term body = mk_true();
        if (c.op == Op::kConcat) {
          Term y1 = ta.is_unit() ? mk_star()
                    : tb.is_unit() ? y
                                   : Term::proj1(y);
          Term y2 = tb.is_unit() ? mk_star()
                    : ta.is_unit() ? y
                                   : Term::proj2(y);
          body = mk_and(split, mk_and(Term::app(kid(0), x1, y1),
                                      Term::app(kid(1), x2, y2)));
        } else {
          Term m1 = Term::var("m1", ta), m2 = Term::var("m2", tb);
          Term joined = c.op == Op::kAnaphoric
                            ? compose_anaphoric(m1, m2, sorts_)
                            : compose_cataphoric(m1, m2, sorts_);
          body = mk_and(split, mk_and(Term::app(kid(0), x1, m1),
                                      mk_and(Term::app(kid(1), x2, m2),
                                             Term::eq(y, joined))));
          body = mk_exists("m1", ta, mk_exists("m2", tb, body));
        }
        return rel(mk_exists("x1", s, mk_exists("x2", s, body)));
      }
      case Op::kRuleApp:
      case Op::kFunApp:
      case Op::kRaise:
      case Op::kInstantiate: {
        Type ta = kid_type(0);
        Term z = Term::var("z", ta);
        bool relational = c.op == Op::kRuleApp &&
                          c.rule->kind != SemanticRule::Kind::kFunctional;
        Term link = relational ? Term::app(RuleRelation(*c.rule), z, y)
                               : Term::eq(y, Result(c, z, ta));
        return rel(mk_exists("z", ta, mk_and(Term::app(kid(0), x, z), link)));
      }
      case Op::kSelfExtend:
        return rel(mk_or(Term::app(kid(0), x, y),
                         Term::eq(y, mk_tau(kid(0), x, sorts_))));
    }
    return mk_true();
  }

 private:
  Term Result(const Component &c, const Term &z, const Type &ta) {
    switch (c.op) {
      case Op::kRuleApp:
        return spread_apply(*c.rule->fn, z, sorts_);
      case Op::kFunApp: {
        Type f = typecheck(*c.term, sorts_);
        if (ta.is_unit() && !(f.is_fun() && f.from().is_unit())) return *c.term;
        return spread_apply(*c.term, z, sorts_);
      }
      case Op::kRaise:
        return context_raise(z, *c.term, sorts_);
      default:
        return context_instantiate(z, *c.term, sorts_);
    }
  }

  // Canonic relation of a table or lexicon rule.
  Term RuleRelation(const SemanticRule &r) {
    if (r.kind == SemanticRule::Kind::kLexicon) {
      return lexicon_repr(*r.lexicon, g_.alphabet(), sorts_);
    }
    Term z = Term::var("z", *r.from), y = Term::var("y", *r.to);
    std::optional<Term> body;
    for (const auto &[in, outs] : r.cases) {
      std::optional<Term> any;
      for (const auto &o : outs) {
        Term d = Term::eq(y, o);
        any = any ? mk_or(*any, d) : d;
      }
      Term d = mk_and(Term::eq(z, in), any ? *any : mk_false());
      body = body ? mk_or(*body, d) : d;
    }
    return Term::lam("z", *r.from,
                     Term::lam("y", *r.to, body ? *body : mk_false()));
  }

  const Grammar &g_;
  Sorts sorts_;
};

}  // namespace

AxiomSet emit_axioms(const Grammar &grammar) {
  AxiomSet out;
  AxiomBuilder builder(grammar);
  const auto &comps = grammar.components();
  for (std::size_t i = 0; i < comps.size(); ++i) {
    int id = static_cast<int>(i);
    if (!comps[i].type) throw Error("grammar has not been validated");
    out.constants.push_back(component_constant(grammar, id));
    out.formulas.emplace_back(comps[i].name, builder.Formula(id));
  }
  int target = -1;
  if (grammar.main()) target = grammar.find(*grammar.main());
  for (std::size_t i = 0; target < 0 && i < comps.size(); ++i) {
    if (!comps[comps.size() - 1 - i].hidden) {
      target = static_cast<int>(comps.size() - 1 - i);
    }
  }
  if (target >= 0) {
    std::optional<Term> all;
    for (const auto &[n, f] : out.formulas) all = all ? mk_and(*all, f) : f;
    Type s = Type::symbolic(grammar.sorts());
    Type a = *comps[target].type;
    Term claim = Term::app(component_constant(grammar, target),
                           Term::var("x", s), Term::var("y", a));
    out.compact = Term::lam("x", s, Term::lam("y", a, mk_imp(*all, claim)));
  }
  return out;
}

}  // namespace uhog
