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
#include <cstdlib>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>

#include "uhog/builtins.hpp"
#include "uhog/equivalence.hpp"
#include "uhog/errors.hpp"
#include "uhog/sexpr.hpp"

namespace uhog {

extern const std::string_view kBundledRules;

using Kind = Term::Kind;
using PK = Pattern::Kind;

namespace {

bool IsMeta(const Sexp &s) {
  return s.is_atom() && s.text.size() > 1 && s.text[0] == '?';
}

Pattern ReadPattern(const Sexp &s) {
  Pattern p;
  if (s.is_atom()) {
    p.kind = IsMeta(s) ? PK::kMeta : PK::kConst;
    p.name = s.text;
    return p;
  }
  if (!s.is_list() || s.items.empty()) {
    throw ParseError("bad pattern " + s.str(), s.line, s.col);
  }
  auto need = [&](std::size_t n, bool at_least = false) {
    std::size_t got = s.items.size() - 1;
    if (at_least ? got < n : got != n) {
      throw ParseError("wrong arity in pattern " + s.str(), s.line, s.col);
    }
  };
  const Sexp &head = s.items[0];
  std::size_t first = 1;
  if (head.is_atom("and") || head.is_atom("or")) {
    need(2, true);
    p.kind = head.text == "and" ? PK::kAnd : PK::kOr;
  } else if (head.is_atom("not")) {
    need(1);
    p.kind = PK::kNot;
  } else if (head.is_atom("imp")) {
    need(2);
    p.kind = PK::kImp;
  } else if (head.is_atom("eq")) {
    need(2);
    p.kind = PK::kEq;
  } else if (head.is_atom("ite")) {
    need(3);
    p.kind = PK::kIte;
  } else if (head.is_atom("exists") || head.is_atom("forall")) {
    need(2);
    if (!IsMeta(s.items[1])) {
      throw ParseError("binder must be a metavariable", s.line, s.col);
    }
    p.kind = head.text == "exists" ? PK::kExists : PK::kForall;
    p.name = s.items[1].text;
    first = 2;
  } else if (head.is_atom("subst")) {
    need(3);
    if (!IsMeta(s.items[2])) {
      throw ParseError("subst variable must be a metavariable", s.line,
                       s.col);
    }
    p.kind = PK::kSubst;
  } else {
    need(1, true);
    p.kind = PK::kApp;
    first = 0;
  }
  for (std::size_t i = first; i < s.items.size(); ++i) {
    p.kids.push_back(ReadPattern(s.items[i]));
  }
  return p;
}

void CollectMetas(const Pattern &p, std::set<std::string> &out) {
  if (p.kind == PK::kMeta || p.kind == PK::kExists ||
      p.kind == PK::kForall) {
    out.insert(p.name);
  }
  for (const auto &k : p.kids) CollectMetas(k, out);
}

void CheckRhs(const Pattern &p, const std::set<std::string> &metas,
              const std::string &rule) {
  if (p.kind == PK::kConst && p.name != names::kTrue &&
      p.name != names::kFalse) {
    throw Error("rule " + rule + ": constant '" + p.name +
                "' not allowed on the right-hand side");
  }
  if ((p.kind == PK::kMeta || p.kind == PK::kExists ||
       p.kind == PK::kForall) &&
      metas.count(p.name) == 0) {
    throw Error("rule " + rule + ": unbound metavariable " + p.name);
  }
  for (const auto &k : p.kids) CheckRhs(k, metas, rule);
}

std::string Trim(std::string_view s) {
  std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

// Matching state threaded through continuations by value.
using Cont = std::function<bool(Match)>;

bool MatchAt(const Pattern &p, const Term &t, Match m, const Cont &k);

bool IsBinary(const Term &t, std::string_view op) {
  return t.is(Kind::kApp) && t.fn().is(Kind::kApp) && t.fn().fn().is_con(op);
}

void Flatten(const Term &t, std::string_view op, std::vector<Term> &out) {
  if (IsBinary(t, op)) {
    Flatten(t.fn().arg(), op, out);
    Flatten(t.arg(), op, out);
  } else {
    out.push_back(t);
  }
}

Term Chain(const std::vector<Term> &ops, PK kind) {
  Term out = ops.back();
  for (std::size_t i = ops.size() - 1; i-- > 0;) {
    out = kind == PK::kAnd ? mk_and(ops[i], out) : mk_or(ops[i], out);
  }
  return out;
}

bool IsBoundMeta(const Match &m, const std::string &name) {
  return m.terms.count(name) > 0 || m.binders.count(name) > 0;
}

Term MetaValue(const Match &m, const std::string &name) {
  if (auto it = m.binders.find(name); it != m.binders.end()) {
    return Term::var(it->second.first, it->second.second);
  }
  return m.terms.at(name);
}

struct AcState {
  const std::vector<Term> *ops;
  std::vector<const Pattern *> order;
  PK kind;
  bool root;
};

bool MatchAcStep(const AcState &st, std::size_t i, std::vector<bool> used,
                 Match m, const Cont &k) {
  const auto &ops = *st.ops;
  if (i == st.order.size()) {
    std::vector<Term> rest;
    for (std::size_t j = 0; j < ops.size(); ++j) {
      if (!used[j]) rest.push_back(ops[j]);
    }
    if (!rest.empty() && !st.root) return false;
    m.rest = std::move(rest);
    return k(std::move(m));
  }
  const Pattern &kid = *st.order[i];
  if (kid.kind != PK::kMeta) {
    for (std::size_t j = 0; j < ops.size(); ++j) {
      if (used[j]) continue;
      auto next = used;
      next[j] = true;
      if (MatchAt(kid, ops[j], m, [&](Match m2) {
            return MatchAcStep(st, i + 1, next, std::move(m2), k);
          })) {
        return true;
      }
    }
    return false;
  }
  if (IsBoundMeta(m, kid.name)) {
    std::vector<Term> want;
    Flatten(MetaValue(m, kid.name),
            st.kind == PK::kAnd ? names::kAnd : names::kOr, want);
    auto next = used;
    for (const auto &w : want) {
      bool found = false;
      for (std::size_t j = 0; j < ops.size(); ++j) {
        if (!next[j] && alpha_eq(ops[j], w)) {
          next[j] = true;
          found = true;
          break;
        }
      }
      if (!found) return false;
    }
    return MatchAcStep(st, i + 1, next, std::move(m), k);
  }
  std::vector<std::size_t> free;
  for (std::size_t j = 0; j < ops.size(); ++j) {
    if (!used[j]) free.push_back(j);
  }
  if (free.empty()) return false;
  auto bind = [&](unsigned long mask) {
    std::vector<Term> picked;
    auto next = used;
    for (std::size_t b = 0; b < free.size(); ++b) {
      if (mask & (1UL << b)) {
        picked.push_back(ops[free[b]]);
        next[free[b]] = true;
      }
    }
    Match m2 = m;
    m2.terms.insert_or_assign(kid.name, Chain(picked, st.kind));
    return MatchAcStep(st, i + 1, next, std::move(m2), k);
  };
  unsigned long all = (1UL << free.size()) - 1;
  if (i + 1 == st.order.size() && !st.root) return bind(all);
  if (free.size() > 12) return bind(all);
  // Larger groups first, so that the leftover at the root stays small.
  for (unsigned long mask = all; mask > 0; --mask) {
    if (bind(mask)) return true;
  }
  return false;
}

bool MatchAc(const Pattern &p, const Term &t, Match m, bool root,
             const Cont &k) {
  std::vector<Term> ops;
  Flatten(t, p.kind == PK::kAnd ? names::kAnd : names::kOr, ops);
  if (ops.size() < p.kids.size()) return false;
  AcState st{&ops, {}, p.kind, root};
  for (const auto &kid : p.kids) {
    if (kid.kind != PK::kMeta) st.order.push_back(&kid);
  }
  for (const auto &kid : p.kids) {
    if (kid.kind == PK::kMeta) st.order.push_back(&kid);
  }
  return MatchAcStep(st, 0, std::vector<bool>(ops.size(), false),
                     std::move(m), k);
}

// Arguments of a saturated application of constant `op`.
bool Spine(const Term &t, std::string_view op, std::size_t n,
           std::vector<Term> &args) {
  args = spine_args(t);
  return args.size() == n && spine_head(t).is_con(op);
}

bool MatchList(const std::vector<Pattern> &ps, const std::vector<Term> &ts,
               std::size_t i, Match m, const Cont &k) {
  if (i == ps.size()) return k(std::move(m));
  return MatchAt(ps[i], ts[i], std::move(m), [&](Match m2) {
    return MatchList(ps, ts, i + 1, std::move(m2), k);
  });
}

bool MatchBinder(const Pattern &p, const Term &t, Match m, const Cont &k) {
  std::vector<Term> args;
  std::string_view op = p.kind == PK::kExists ? names::kExists
                                               : names::kForall;
  if (!Spine(t, op, 1, args)) return false;
  Term pred = args[0];
  std::string x;
  Type ty = Type::truth();
  Term body = pred;
  if (pred.is(Kind::kLam)) {
    x = pred.name();
    ty = pred.type();
    body = pred.body();
  } else {
    ty = spine_head(t).type().from().from();
    VarSet fv = free_vars(pred);
    x = fresh_name("x", [&](const std::string &n) {
      return fv.count({n, ty}) > 0;
    });
    body = Term::app(pred, Term::var(x, ty));
  }
  if (auto it = m.binders.find(p.name); it != m.binders.end()) {
    const auto &[name, type] = it->second;
    if (type != ty) return false;
    if (name != x) {
      if (occurs_free(body, name, type)) return false;
      body = substitute(body, {x, ty, Term::var(name, type)});
    }
    return MatchAt(p.kids[0], body, std::move(m), k);
  }
  if (m.terms.count(p.name) > 0) return false;
  m.binders.insert_or_assign(p.name, VarRef{x, ty});
  return MatchAt(p.kids[0], body, std::move(m), k);
}

bool MatchAt(const Pattern &p, const Term &t, Match m, const Cont &k) {
  std::vector<Term> args;
  switch (p.kind) {
    case PK::kMeta: {
      if (auto it = m.binders.find(p.name); it != m.binders.end()) {
        return t.is(Kind::kVar) && t.name() == it->second.first &&
               t.type() == it->second.second && k(std::move(m));
      }
      if (auto it = m.terms.find(p.name); it != m.terms.end()) {
        return alpha_eq(it->second, t) && k(std::move(m));
      }
      m.terms.insert_or_assign(p.name, t);
      return k(std::move(m));
    }
    case PK::kConst:
      return t.is_con(p.name) && k(std::move(m));
    case PK::kAnd:
    case PK::kOr:
      return MatchAc(p, t, std::move(m), false, k);
    case PK::kNot:
      return Spine(t, names::kNot, 1, args) &&
             MatchList(p.kids, args, 0, std::move(m), k);
    case PK::kImp:
      return Spine(t, names::kImp, 2, args) &&
             MatchList(p.kids, args, 0, std::move(m), k);
    case PK::kIte:
      return Spine(t, names::kIte, 3, args) &&
             MatchList(p.kids, args, 0, std::move(m), k);
    case PK::kEq:
      if (!t.is(Kind::kEq)) return false;
      return MatchList(p.kids, {t.lhs(), t.rhs()}, 0, std::move(m), k);
    case PK::kExists:
    case PK::kForall:
      return MatchBinder(p, t, std::move(m), k);
    case PK::kApp: {
      if (!t.is(Kind::kApp)) return false;
      Pattern fn = p;
      fn.kids.pop_back();
      const Pattern &f = fn.kids.size() == 1 ? fn.kids[0] : fn;
      return MatchAt(f, t.fn(), std::move(m), [&](Match m2) {
        return MatchAt(p.kids.back(), t.arg(), std::move(m2), k);
      });
    }
    case PK::kSubst:
      return false;
  }
  return false;
}

Term Build(const Pattern &p, const Match &m) {
  auto kid = [&](std::size_t i) { return Build(p.kids[i], m); };
  switch (p.kind) {
    case PK::kMeta:
      return MetaValue(m, p.name);
    case PK::kConst:
      return p.name == names::kTrue ? mk_true() : mk_false();
    case PK::kAnd:
    case PK::kOr: {
      std::vector<Term> ops;
      for (std::size_t i = 0; i < p.kids.size(); ++i) ops.push_back(kid(i));
      return Chain(ops, p.kind);
    }
    case PK::kNot:
      return mk_not(kid(0));
    case PK::kImp:
      return mk_imp(kid(0), kid(1));
    case PK::kEq:
      return Term::eq(kid(0), kid(1));
    case PK::kIte:
      return mk_ite(kid(0), kid(1), kid(2));
    case PK::kExists:
    case PK::kForall: {
      const auto &[x, ty] = m.binders.at(p.name);
      return p.kind == PK::kExists ? mk_exists(x, ty, kid(0))
                                   : mk_forall(x, ty, kid(0));
    }
    case PK::kApp: {
      Term out = kid(0);
      for (std::size_t i = 1; i < p.kids.size(); ++i) {
        out = Term::app(out, kid(i));
      }
      return out;
    }
    case PK::kSubst: {
      const auto &[x, ty] = m.binders.at(p.kids[1].name);
      return substitute(kid(0), {x, ty, kid(2)});
    }
  }
  return mk_true();
}

bool SideConditions(const RewriteRule &rule, const Match &m) {
  for (const auto &[x, a] : rule.notfree) {
    auto bx = m.binders.find(x);
    auto ta = m.terms.find(a);
    if (bx == m.binders.end() || ta == m.terms.end()) return false;
    if (occurs_free(ta->second, bx->second.first, bx->second.second)) {
      return false;
    }
  }
  return true;
}

std::optional<Match> FirstMatch(const Pattern &pattern, const Term &term,
                                bool allow_rest,
                                const std::function<bool(const Match &)> &ok) {
  std::optional<Match> found;
  Cont done = [&](Match m) {
    if (!ok(m)) return false;
    found = std::move(m);
    return true;
  };
  if ((pattern.kind == PK::kAnd || pattern.kind == PK::kOr) && allow_rest) {
    MatchAc(pattern, term, Match{}, true, done);
  } else {
    MatchAt(pattern, term, Match{}, done);
  }
  return found;
}

}  // namespace

std::string Pattern::str() const {
  switch (kind) {
    case Kind::kMeta:
    case Kind::kConst:
      return name;
    default:
      break;
  }
  static const char *kHeads[] = {"",   "",   "and",    "or",     "not", "imp",
                                 "eq", "exists", "forall", "ite", "",
                                 "subst"};
  std::string out = "(";
  if (kind != Kind::kApp) out += kHeads[static_cast<int>(kind)];
  if (kind == Kind::kExists || kind == Kind::kForall) out += " " + name;
  bool first = kind == Kind::kApp;
  for (const auto &k : kids) {
    if (!first) out += " ";
    first = false;
    out += k.str();
  }
  return out + ")";
}

std::vector<Term> conjuncts(const Term &term) {
  std::vector<Term> out;
  Flatten(term, names::kAnd, out);
  return out;
}

std::vector<Term> disjuncts(const Term &term) {
  std::vector<Term> out;
  Flatten(term, names::kOr, out);
  return out;
}

std::optional<Match> match_pattern(const Pattern &pattern, const Term &term,
                                   bool allow_rest) {
  return FirstMatch(pattern, term, allow_rest,
                    [](const Match &) { return true; });
}

std::optional<Term> rewrite_root(const RewriteRule &rule, const Term &term) {
  auto m = FirstMatch(rule.lhs, term, true, [&](const Match &mm) {
    return SideConditions(rule, mm);
  });
  if (!m) return std::nullopt;
  Term out = Build(rule.rhs, *m);
  if (!m->rest.empty()) {
    std::vector<Term> ops{out};
    ops.insert(ops.end(), m->rest.begin(), m->rest.end());
    out = Chain(ops, rule.lhs.kind);
  }
  return out;
}

RuleSet RuleSet::parse(std::string_view text) {
  RuleSet set;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string body = Trim(line);
    if (body.empty() || body[0] == '#') continue;
    std::size_t colon = body.find(" : ");
    std::size_t arrow = body.find("==>");
    if (colon == std::string::npos || arrow == std::string::npos ||
        arrow < colon) {
      throw ParseError("expected `name : LHS ==> RHS`", lineno, 1);
    }
    RewriteRule rule;
    rule.name = Trim(body.substr(0, colon));
    std::string lhs = body.substr(colon + 3, arrow - colon - 3);
    std::string rhs = body.substr(arrow + 3);
    std::string where;
    if (std::size_t w = rhs.find(" where "); w != std::string::npos) {
      where = rhs.substr(w + 7);
      rhs = rhs.substr(0, w);
    }
    try {
      rule.lhs = ReadPattern(parse_sexp(lhs));
      rule.rhs = ReadPattern(parse_sexp(rhs));
    } catch (const ParseError &e) {
      throw ParseError(rule.name + ": " + e.what(), lineno, 1);
    }
    std::set<std::string> metas;
    CollectMetas(rule.lhs, metas);
    try {
      CheckRhs(rule.rhs, metas, rule.name);
    } catch (const Error &e) {
      throw ParseError(e.what(), lineno, 1);
    }
    std::istringstream conds(where);
    std::string cond;
    while (std::getline(conds, cond, ',')) {
      std::istringstream words(cond);
      std::string x, rel, a, extra;
      words >> x >> rel >> a;
      if (x.empty()) continue;
      if (rel != "notfree" || a.empty() || (words >> extra) ||
          metas.count(x) == 0 || metas.count(a) == 0) {
        throw ParseError(rule.name + ": bad condition '" + Trim(cond) + "'",
                         lineno, 1);
      }
      rule.notfree.emplace_back(x, a);
    }
    if (set.contains(rule.name)) {
      throw ParseError("duplicate rule " + rule.name, lineno, 1);
    }
    set.rules_.push_back(std::move(rule));
  }
  return set;
}

RuleSet RuleSet::load(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot read rules file " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

const RuleSet &RuleSet::bundled() {
  static const RuleSet kRules = [] {
    const char *path = std::getenv("UHOG_RULES");
    if (path != nullptr && *path != '\0') return load(path);
    return parse(kBundledRules);
  }();
  return kRules;
}

RuleSet RuleSet::without(const std::vector<std::string> &names) const {
  RuleSet out;
  for (const auto &r : rules_) {
    if (std::find(names.begin(), names.end(), r.name) == names.end()) {
      out.rules_.push_back(r);
    }
  }
  return out;
}

bool RuleSet::contains(std::string_view name) const {
  return std::any_of(rules_.begin(), rules_.end(),
                     [&](const RewriteRule &r) { return r.name == name; });
}

}  // namespace uhog
