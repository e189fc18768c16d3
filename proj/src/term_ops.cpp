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

#include "uhog/term_ops.hpp"

#include <algorithm>

#include "uhog/builtins.hpp"
#include "uhog/errors.hpp"

namespace uhog {

using Kind = Term::Kind;

namespace {

Type Check(const Term &t, const std::string &path, const Sorts &sorts) {
  switch (t.kind()) {
    case Kind::kVar:
      return t.type();
    case Kind::kCon:
      if ((is_reserved_constant(t.name()) || symbol_index(t.name()) >= 0) &&
          !fits_scheme(t.name(), t.type(), sorts)) {
        throw TypeError(path, "scheme of " + t.name(), t.type().sexpr(sorts));
      }
      return t.type();
    case Kind::kApp: {
      Type f = Check(t.fn(), path + ".fn", sorts);
      Type a = Check(t.arg(), path + ".arg", sorts);
      if (!f.is_fun()) {
        throw TypeError(path + ".fn", "function type", f.sexpr(sorts));
      }
      if (f.from() != a) {
        throw TypeError(path + ".arg", f.from().sexpr(sorts), a.sexpr(sorts));
      }
      return f.to();
    }
    case Kind::kLam:
      return Type::fun(t.type(), Check(t.body(), path + ".body", sorts));
    case Kind::kEq: {
      Type l = Check(t.lhs(), path + ".lhs", sorts);
      Type r = Check(t.rhs(), path + ".rhs", sorts);
      if (l != r) throw TypeError(path + ".rhs", l.sexpr(sorts), r.sexpr(sorts));
      return Type::truth();
    }
    case Kind::kPair:
      return Type::prod(Check(t.left(), path + ".left", sorts),
                        Check(t.right(), path + ".right", sorts));
    case Kind::kProj1:
    case Kind::kProj2: {
      Type o = Check(t.operand(), path + ".operand", sorts);
      if (!o.is_prod()) {
        throw TypeError(path + ".operand", "product type", o.sexpr(sorts));
      }
      return t.is(Kind::kProj1) ? o.left() : o.right();
    }
  }
  return Type::truth();
}

void CollectFree(const Term &t, std::vector<VarRef> &bound, VarSet &out) {
  switch (t.kind()) {
    case Kind::kVar: {
      VarRef v{t.name(), t.type()};
      if (std::find(bound.begin(), bound.end(), v) == bound.end()) {
        out.insert(std::move(v));
      }
      return;
    }
    case Kind::kCon:
      return;
    case Kind::kApp:
      CollectFree(t.fn(), bound, out);
      CollectFree(t.arg(), bound, out);
      return;
    case Kind::kLam:
      bound.emplace_back(t.name(), t.type());
      CollectFree(t.body(), bound, out);
      bound.pop_back();
      return;
    case Kind::kEq:
      CollectFree(t.lhs(), bound, out);
      CollectFree(t.rhs(), bound, out);
      return;
    case Kind::kPair:
      CollectFree(t.left(), bound, out);
      CollectFree(t.right(), bound, out);
      return;
    case Kind::kProj1:
    case Kind::kProj2:
      CollectFree(t.operand(), bound, out);
      return;
  }
}

bool NameTaken(const VarSet &set, const std::string &name) {
  for (const auto &v : set) {
    if (v.first == name) return true;
  }
  return false;
}

// Substitution that returns the input node unchanged when nothing was
// replaced, so callers can detect occurrence cheaply.
Term Subst(const Term &t, const Binding &b, const VarSet &fv_repl) {
  switch (t.kind()) {
    case Kind::kVar:
      if (t.name() == b.name && t.type() == b.type) return b.replacement;
      return t;
    case Kind::kCon:
      return t;
    case Kind::kApp: {
      Term f = Subst(t.fn(), b, fv_repl);
      Term a = Subst(t.arg(), b, fv_repl);
      if (f.same_node(t.fn()) && a.same_node(t.arg())) return t;
      return Term::app(f, a);
    }
    case Kind::kLam: {
      if (t.name() == b.name && t.type() == b.type) return t;
      Term body = Subst(t.body(), b, fv_repl);
      if (body.same_node(t.body())) return t;
      if (fv_repl.count({t.name(), t.type()}) == 0) {
        return Term::lam(t.name(), t.type(), body);
      }
      VarSet fv_body = free_vars(t.body());
      std::string fresh = fresh_name(t.name(), [&](const std::string &n) {
        return n == b.name || NameTaken(fv_repl, n) || NameTaken(fv_body, n);
      });
      Term renamed = substitute(
          t.body(), Binding{t.name(), t.type(), Term::var(fresh, t.type())});
      return Term::lam(fresh, t.type(), Subst(renamed, b, fv_repl));
    }
    case Kind::kEq: {
      Term l = Subst(t.lhs(), b, fv_repl);
      Term r = Subst(t.rhs(), b, fv_repl);
      if (l.same_node(t.lhs()) && r.same_node(t.rhs())) return t;
      return Term::eq(l, r);
    }
    case Kind::kPair: {
      Term l = Subst(t.left(), b, fv_repl);
      Term r = Subst(t.right(), b, fv_repl);
      if (l.same_node(t.left()) && r.same_node(t.right())) return t;
      return Term::pair(l, r);
    }
    case Kind::kProj1:
    case Kind::kProj2: {
      Term o = Subst(t.operand(), b, fv_repl);
      if (o.same_node(t.operand())) return t;
      return t.is(Kind::kProj1) ? Term::proj1(o) : Term::proj2(o);
    }
  }
  return t;
}

using Stack = std::vector<std::pair<const std::string *, const Type *>>;

// Depth of the innermost binder of (name, type), or -1 when free.
int Lookup(const Stack &stack, const Term &v) {
  for (int i = static_cast<int>(stack.size()) - 1; i >= 0; --i) {
    if (*stack[i].first == v.name() && *stack[i].second == v.type()) {
      return static_cast<int>(stack.size()) - 1 - i;
    }
  }
  return -1;
}

std::strong_ordering Compare(const Term &a, const Term &b, Stack &sa,
                             Stack &sb) {
  if (a.same_node(b) && sa.empty() && sb.empty()) {
    return std::strong_ordering::equal;
  }
  if (auto c = a.kind() <=> b.kind(); c != 0) return c;
  switch (a.kind()) {
    case Kind::kVar: {
      int da = Lookup(sa, a);
      int db = Lookup(sb, b);
      if (da >= 0 && db >= 0) return da <=> db;
      if (da >= 0) return std::strong_ordering::less;
      if (db >= 0) return std::strong_ordering::greater;
      if (auto c = a.name() <=> b.name(); c != 0) return c;
      return a.type() <=> b.type();
    }
    case Kind::kCon:
      if (auto c = a.name() <=> b.name(); c != 0) return c;
      return a.type() <=> b.type();
    case Kind::kApp:
      if (auto c = Compare(a.fn(), b.fn(), sa, sb); c != 0) return c;
      return Compare(a.arg(), b.arg(), sa, sb);
    case Kind::kLam: {
      if (auto c = a.type() <=> b.type(); c != 0) return c;
      sa.emplace_back(&a.name(), &a.type());
      sb.emplace_back(&b.name(), &b.type());
      auto c = Compare(a.body(), b.body(), sa, sb);
      sa.pop_back();
      sb.pop_back();
      return c;
    }
    case Kind::kEq:
      if (auto c = Compare(a.lhs(), b.lhs(), sa, sb); c != 0) return c;
      return Compare(a.rhs(), b.rhs(), sa, sb);
    case Kind::kPair:
      if (auto c = Compare(a.left(), b.left(), sa, sb); c != 0) return c;
      return Compare(a.right(), b.right(), sa, sb);
    case Kind::kProj1:
    case Kind::kProj2:
      return Compare(a.operand(), b.operand(), sa, sb);
  }
  return std::strong_ordering::equal;
}

class Normalizer {
 public:
  explicit Normalizer(long budget) : budget_(budget) {}

  Term Norm(const Term &t) {
    switch (t.kind()) {
      case Kind::kVar:
        return t;
      case Kind::kCon:
        if (t.name() == names::kCompose) return UnfoldCompose(t.type());
        return t;
      case Kind::kApp:
        return NormApp(t);
      case Kind::kLam: {
        Term body = Norm(t.body());
        if (body.is(Kind::kApp) && body.arg().is(Kind::kVar) &&
            body.arg().name() == t.name() && body.arg().type() == t.type() &&
            !occurs_free(body.fn(), t.name(), t.type())) {
          Tick();
          return body.fn();
        }
        if (body.same_node(t.body())) return t;
        return Term::lam(t.name(), t.type(), body);
      }
      case Kind::kEq: {
        Term l = Norm(t.lhs());
        Term r = Norm(t.rhs());
        if (l.same_node(t.lhs()) && r.same_node(t.rhs())) return t;
        return Term::eq(l, r);
      }
      case Kind::kPair: {
        Term l = Norm(t.left());
        Term r = Norm(t.right());
        if (l.is(Kind::kProj1) && r.is(Kind::kProj2) &&
            alpha_eq(l.operand(), r.operand())) {
          Tick();
          return l.operand();
        }
        if (l.same_node(t.left()) && r.same_node(t.right())) return t;
        return Term::pair(l, r);
      }
      case Kind::kProj1:
      case Kind::kProj2: {
        Term o = Norm(t.operand());
        if (o.is(Kind::kPair)) {
          Tick();
          return t.is(Kind::kProj1) ? o.left() : o.right();
        }
        if (o.same_node(t.operand())) return t;
        return t.is(Kind::kProj1) ? Term::proj1(o) : Term::proj2(o);
      }
    }
    return t;
  }

 private:
  void Tick() {
    if (++steps_ > budget_) throw NonTerminating(budget_);
  }

  Term UnfoldCompose(const Type &type) {
    Tick();
    // (b -> g) -> (a -> b) -> a -> g
    const Type &f_type = type.from();
    const Type &g_type = type.to().from();
    const Type &x_type = g_type.from();
    Term f = Term::var("f", f_type);
    Term g = Term::var("g", g_type);
    Term x = Term::var("x", x_type);
    return Term::lam("f", f_type,
                     Term::lam("g", g_type,
                               Term::lam("x", x_type,
                                         Term::app(f, Term::app(g, x)))));
  }

  Term NormApp(const Term &t) {
    Term f = Norm(t.fn());
    if (f.is(Kind::kLam)) {
      Tick();
      return Norm(
          substitute(f.body(), Binding{f.name(), f.type(), t.arg()}));
    }
    Term a = Norm(t.arg());
    // ite x y cond
    if (f.is(Kind::kApp) && f.fn().is(Kind::kApp) &&
        f.fn().fn().is_con(names::kIte)) {
      if (a.is_con(names::kTrue)) {
        Tick();
        return f.fn().arg();
      }
      if (a.is_con(names::kFalse)) {
        Tick();
        return f.arg();
      }
    }
    if (f.is_con(names::kIota) && a.is(Kind::kLam) &&
        a.body().is(Kind::kEq)) {
      const Term &l = a.body().lhs();
      const Term &r = a.body().rhs();
      auto is_bound = [&](const Term &v) {
        return v.is(Kind::kVar) && v.name() == a.name() &&
               v.type() == a.type();
      };
      if (is_bound(r) && !occurs_free(l, a.name(), a.type())) {
        Tick();
        return l;
      }
      if (is_bound(l) && !occurs_free(r, a.name(), a.type())) {
        Tick();
        return r;
      }
    }
    if (f.same_node(t.fn()) && a.same_node(t.arg())) return t;
    return Term::app(f, a);
  }

  long budget_;
  long steps_ = 0;
};

void CollectConstants(const Term &t, std::set<std::string> &out) {
  switch (t.kind()) {
    case Kind::kVar:
      return;
    case Kind::kCon:
      out.insert(t.name());
      return;
    case Kind::kApp:
      CollectConstants(t.fn(), out);
      CollectConstants(t.arg(), out);
      return;
    case Kind::kLam:
      CollectConstants(t.body(), out);
      return;
    case Kind::kEq:
      CollectConstants(t.lhs(), out);
      CollectConstants(t.rhs(), out);
      return;
    case Kind::kPair:
      CollectConstants(t.left(), out);
      CollectConstants(t.right(), out);
      return;
    case Kind::kProj1:
    case Kind::kProj2:
      CollectConstants(t.operand(), out);
      return;
  }
}

}  // namespace

Type typecheck(const Term &term, const Sorts &sorts) {
  return Check(term, "term", sorts);
}

Term substitute(const Term &term, const Binding &binding) {
  VarSet fv = free_vars(binding.replacement);
  return Subst(term, binding, fv);
}

VarSet free_vars(const Term &term) {
  std::vector<VarRef> bound;
  VarSet out;
  CollectFree(term, bound, out);
  return out;
}

bool occurs_free(const Term &term, const std::string &name, const Type &type) {
  switch (term.kind()) {
    case Kind::kVar:
      return term.name() == name && term.type() == type;
    case Kind::kCon:
      return false;
    case Kind::kApp:
      return occurs_free(term.fn(), name, type) ||
             occurs_free(term.arg(), name, type);
    case Kind::kLam:
      if (term.name() == name && term.type() == type) return false;
      return occurs_free(term.body(), name, type);
    case Kind::kEq:
      return occurs_free(term.lhs(), name, type) ||
             occurs_free(term.rhs(), name, type);
    case Kind::kPair:
      return occurs_free(term.left(), name, type) ||
             occurs_free(term.right(), name, type);
    case Kind::kProj1:
    case Kind::kProj2:
      return occurs_free(term.operand(), name, type);
  }
  return false;
}

std::set<std::string> constants(const Term &term) {
  std::set<std::string> out;
  CollectConstants(term, out);
  return out;
}

std::strong_ordering compare(const Term &a, const Term &b) {
  Stack sa, sb;
  return Compare(a, b, sa, sb);
}

bool alpha_eq(const Term &a, const Term &b) {
  return compare(a, b) == std::strong_ordering::equal;
}

Term normalize(const Term &term, long budget) {
  Normalizer n(budget);
  return n.Norm(term);
}

std::size_t term_size(const Term &term) {
  switch (term.kind()) {
    case Kind::kVar:
    case Kind::kCon:
      return 1;
    case Kind::kApp:
      return 1 + term_size(term.fn()) + term_size(term.arg());
    case Kind::kLam:
      return 1 + term_size(term.body());
    case Kind::kEq:
      return 1 + term_size(term.lhs()) + term_size(term.rhs());
    case Kind::kPair:
      return 1 + term_size(term.left()) + term_size(term.right());
    case Kind::kProj1:
    case Kind::kProj2:
      return 1 + term_size(term.operand());
  }
  return 1;
}

Term spine_head(const Term &term) {
  const Term *t = &term;
  while (t->is(Kind::kApp)) t = &t->fn();
  return *t;
}

std::vector<Term> spine_args(const Term &term) {
  std::vector<Term> args;
  const Term *t = &term;
  while (t->is(Kind::kApp)) {
    args.push_back(t->arg());
    t = &t->fn();
  }
  std::reverse(args.begin(), args.end());
  return args;
}

}  // namespace uhog
