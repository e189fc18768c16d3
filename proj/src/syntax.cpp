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

#include "uhog/syntax.hpp"

#include <cctype>
#include <optional>
#include <vector>

#include "uhog/builtins.hpp"
#include "uhog/errors.hpp"
#include "uhog/term_ops.hpp"

namespace uhog {

using Kind = Term::Kind;

namespace {

[[noreturn]] void Fail(const Sexp &at, const std::string &message) {
  throw ParseError(message, at.line, at.col);
}

bool IsDigits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

std::optional<Type> BaseType(std::string_view name, const Sorts &sorts) {
  if (name == "t") return Type::truth();
  if (name == "unit") return Type::unit();
  if (name == "e") return Type::e();
  if (name == "c") return Type::context(sorts);
  if (name == "s") return Type::symbolic(sorts);
  if (name.size() > 1 && name[0] == 'e' && IsDigits(name.substr(1))) {
    int k = std::stoi(std::string(name.substr(1)));
    if (k >= 1 && k <= sorts.n) return Type::individual(k);
  }
  return std::nullopt;
}

std::optional<Type> CompactType(std::string_view name, const Sorts &sorts) {
  if (name.size() < 2) return std::nullopt;
  std::vector<Type> parts;
  for (char ch : name) {
    auto t = BaseType(std::string_view(&ch, 1), sorts);
    if (!t) return std::nullopt;
    parts.push_back(*t);
  }
  Type out = parts.back();
  for (int i = static_cast<int>(parts.size()) - 2; i >= 0; --i) {
    out = Type::fun(parts[i], out);
  }
  return out;
}

class Reader {
 public:
  explicit Reader(const TermScope &scope) : scope_(scope) {}

  Term Read(const Sexp &s) {
    switch (s.kind) {
      case Sexp::Kind::kString:
        return Encode(s, s.text);
      case Sexp::Kind::kAtom:
        return ReadAtom(s);
      case Sexp::Kind::kList:
        return ReadList(s);
    }
    Fail(s, "bad term");
  }

 private:
  Term Encode(const Sexp &at, const std::string &word) {
    try {
      return encode(word, scope_.alpha(), scope_.sorts);
    } catch (const UnknownSymbol &e) {
      Fail(at, e.what());
    }
  }

  Term ReadAtom(const Sexp &s) {
    const std::string &name = s.text;
    for (auto it = bound_.rbegin(); it != bound_.rend(); ++it) {
      if (it->first == name) return Term::var(name, it->second);
    }
    if (name == names::kTrue) return mk_true();
    if (name == names::kFalse) return mk_false();
    if (name == names::kStar) return mk_star();
    const Type t = Type::truth();
    if (name == names::kAnd || name == names::kOr || name == names::kImp) {
      return Term::con(name, Type::fun(t, t, t));
    }
    if (name == names::kNot) return Term::con(name, Type::fun(t, t));
    if (auto it = scope_.definitions.find(name);
        it != scope_.definitions.end()) {
      return it->second;
    }
    if (auto it = scope_.constants.find(name); it != scope_.constants.end()) {
      return Term::con(name, it->second);
    }
    if (symbol_index(name) >= 0) {
      return Term::con(name, Type::symbolic(scope_.sorts));
    }
    Fail(s, "unknown symbol '" + name + "'");
  }

  void Arity(const Sexp &s, std::size_t n) {
    if (s.items.size() != n + 1) {
      Fail(s, "'" + s.items[0].text + "' expects " + std::to_string(n) +
                  " argument" + (n == 1 ? "" : "s"));
    }
  }

  void AtLeast(const Sexp &s, std::size_t n) {
    if (s.items.size() < n + 1) {
      Fail(s, "'" + s.items[0].text + "' expects at least " +
                  std::to_string(n) + " arguments");
    }
  }

  std::pair<std::string, Type> Binder(const Sexp &s) {
    if (!s.is_list() || s.items.size() != 2 || !s.items[0].is_atom()) {
      Fail(s, "binder must be (name type)");
    }
    return {s.items[0].text, parse_type(s.items[1], scope_)};
  }

  // Reads `(head (x T)... body)` binder lists; returns binders and body.
  template <typename Build>
  Term Binding(const Sexp &s, Build build) {
    AtLeast(s, 2);
    std::vector<std::pair<std::string, Type>> binders;
    for (std::size_t i = 1; i + 1 < s.items.size(); ++i) {
      binders.push_back(Binder(s.items[i]));
    }
    for (auto &b : binders) bound_.push_back(b);
    Term body = Read(s.items.back());
    bound_.erase(bound_.end() - binders.size(), bound_.end());
    for (auto it = binders.rbegin(); it != binders.rend(); ++it) {
      body = build(it->first, it->second, body);
    }
    return body;
  }

  Term Checked(const Sexp &at, Term t) {
    try {
      typecheck(t, scope_.sorts);
    } catch (const TypeError &e) {
      Fail(at, e.what());
    }
    return t;
  }

  Term Component(const Sexp &s) {
    if (!s.is_atom()) Fail(s, "component name expected");
    auto it = scope_.components.find(s.text);
    if (it == scope_.components.end()) {
      Fail(s, "unknown component '" + s.text + "'");
    }
    Type st = Type::symbolic(scope_.sorts);
    return Term::con(s.text, Type::fun(st, it->second, Type::truth()));
  }

  template <typename Op>
  Term Guard(const Sexp &at, Op op) {
    try {
      return op();
    } catch (const TypeError &e) {
      Fail(at, e.what());
    }
  }

  Term ReadList(const Sexp &s) {
    if (s.items.empty()) Fail(s, "empty list");
    const Sexp &head = s.items[0];
    const Sorts &sorts = scope_.sorts;
    auto arg = [&](std::size_t i) { return Read(s.items[i]); };
    if (head.is_atom() && !IsBound(head.text)) {
      const std::string &h = head.text;
      if (h == "var") {
        Arity(s, 2);
        if (!s.items[1].is_atom()) Fail(s.items[1], "variable name expected");
        return Term::var(s.items[1].text, parse_type(s.items[2], scope_));
      }
      if (h == "con") {
        Arity(s, 2);
        if (!s.items[1].is_atom()) Fail(s.items[1], "constant name expected");
        return Checked(s, Term::con(s.items[1].text,
                                    parse_type(s.items[2], scope_)));
      }
      if (h == "app") {
        AtLeast(s, 1);
        return Apply(s, 1);
      }
      if (h == "lam") {
        return Binding(s, [](const std::string &x, const Type &t, Term b) {
          return Term::lam(x, t, std::move(b));
        });
      }
      if (h == "eq") {
        Arity(s, 2);
        return Checked(s, Term::eq(arg(1), arg(2)));
      }
      if (h == "neq") {
        Arity(s, 2);
        return Checked(s, mk_not(Term::eq(arg(1), arg(2))));
      }
      if (h == "eqrel") {
        Arity(s, 1);
        Type a = parse_type(s.items[1], scope_);
        return Term::lam("x", a,
                         Term::lam("y", a, Term::eq(Term::var("x", a),
                                                    Term::var("y", a))));
      }
      if (h == "pair") {
        AtLeast(s, 2);
        Term out = arg(s.items.size() - 1);
        for (std::size_t i = s.items.size() - 2; i >= 1; --i) {
          out = Term::pair(arg(i), out);
        }
        return out;
      }
      if (h == "p1" || h == "p2") {
        Arity(s, 1);
        Term o = arg(1);
        return Checked(s, h == "p1" ? Term::proj1(o) : Term::proj2(o));
      }
      if (h == "word") {
        Arity(s, 1);
        if (!s.items[1].is_string()) Fail(s.items[1], "string expected");
        return Encode(s.items[1], s.items[1].text);
      }
      if (h == names::kAnd || h == names::kOr) {
        AtLeast(s, 1);
        Term out = arg(s.items.size() - 1);
        for (std::size_t i = s.items.size() - 2; i >= 1; --i) {
          Term a = arg(i);
          out = Guard(s, [&] {
            return h == names::kAnd ? lift_and(a, out) : lift_or(a, out);
          });
        }
        return out;
      }
      if (h == names::kNot) {
        Arity(s, 1);
        Term a = arg(1);
        return Guard(s, [&] { return lift_not(a); });
      }
      if (h == names::kImp) {
        Arity(s, 2);
        Term a = arg(1), b = arg(2);
        return Guard(s, [&] { return lift_imp(a, b); });
      }
      if (h == "times") {
        Arity(s, 2);
        Term a = arg(1), b = arg(2);
        return Guard(s, [&] { return Times(a, b); });
      }
      if (h == names::kExists || h == names::kForall) {
        bool ex = h == names::kExists;
        Term out = Binding(s, [&](const std::string &x, const Type &t, Term b) {
          return ex ? mk_exists(x, t, std::move(b))
                    : mk_forall(x, t, std::move(b));
        });
        return Checked(s, out);
      }
      if (h == names::kIota) {
        if (s.items.size() == 2) {
          Term p = arg(1);
          return Guard(s, [&] { return mk_iota(p); });
        }
        Term out = Binding(s, [](const std::string &x, const Type &t, Term b) {
          return Term::lam(x, t, std::move(b));
        });
        return Guard(s, [&] { return mk_iota(out); });
      }
      if (h == names::kIte) {
        Arity(s, 3);
        Term a = arg(1), b = arg(2), c = arg(3);
        return Checked(s, Guard(s, [&] { return mk_ite(a, b, c); }));
      }
      if (h == names::kConcat) {
        AtLeast(s, 1);
        Term out = arg(s.items.size() - 1);
        for (std::size_t i = s.items.size() - 2; i >= 1; --i) {
          out = mk_concat(arg(i), out, sorts);
        }
        return Checked(s, out);
      }
      if (h == "id") {
        Arity(s, 1);
        return mk_identity(parse_type(s.items[1], scope_));
      }
      if (h == names::kCompose) {
        AtLeast(s, 2);
        Term out = arg(s.items.size() - 1);
        for (std::size_t i = s.items.size() - 2; i >= 1; --i) {
          Term f = arg(i);
          out = Guard(s, [&] { return mk_compose(f, out); });
        }
        return out;
      }
      if (h == "setref") {
        AtLeast(s, 2);
        Term sym = arg(1), val = arg(2);
        Term out =
            Checked(s, Guard(s, [&] { return mk_setref(sym, val, sorts); }));
        return Extra(s, out, 3);
      }
      if (h == "deref" || h == "unset" || h == "assert" || h == "refute" ||
          h == "test") {
        AtLeast(s, 1);
        Term a = arg(1);
        Term out = Checked(s, Guard(s, [&] {
          if (h == "deref") return mk_deref(a, sorts);
          if (h == "unset") return mk_unset(a, sorts);
          if (h == "assert") return mk_assert(a, sorts);
          if (h == "refute") return mk_refute(a, sorts);
          return mk_test(a, sorts);
        }));
        return Extra(s, out, 2);
      }
      if (h == names::kTau || h == names::kSigma) {
        Arity(s, 2);
        Term lang = Component(s.items[1]);
        Term a = arg(2);
        return Checked(s, Guard(s, [&] {
          return h == names::kTau ? mk_tau(lang, a, sorts)
                                  : mk_sigma(lang, a, sorts);
        }));
      }
    }
    return Apply(s, 0);
  }

  bool IsBound(const std::string &name) const {
    for (const auto &b : bound_) {
      if (b.first == name) return true;
    }
    return false;
  }

  // Applies the arguments from index `first` onward to an already built head.
  Term Extra(const Sexp &s, Term out, std::size_t first) {
    if (first >= s.items.size()) return out;
    for (std::size_t i = first; i < s.items.size(); ++i) {
      out = Term::app(out, Read(s.items[i]));
    }
    return Checked(s, out);
  }

  Term Apply(const Sexp &s, std::size_t first) {
    Term out = Read(s.items[first]);
    for (std::size_t i = first + 1; i < s.items.size(); ++i) {
      out = Term::app(out, Read(s.items[i]));
    }
    return Checked(s, out);
  }

  Term Times(const Term &a, const Term &b) {
    Type ta = typecheck(a, scope_.sorts);
    Type tb = typecheck(b, scope_.sorts);
    if (!ta.is_predicate()) throw TypeError("times", "predicate", ta.sexpr());
    if (!tb.is_predicate()) throw TypeError("times", "predicate", tb.sexpr());
    VarSet fv = free_vars(a);
    VarSet fv_b = free_vars(b);
    fv.insert(fv_b.begin(), fv_b.end());
    auto taken = [&](const std::string &n) {
      for (const auto &v : fv) {
        if (v.first == n) return true;
      }
      return false;
    };
    std::string x = fresh_name("x", taken);
    std::string y = fresh_name("y", [&](const std::string &n) {
      return n == x || taken(n);
    });
    Term vx = Term::var(x, ta.from());
    Term vy = Term::var(y, tb.from());
    return Term::lam(
        x, ta.from(),
        Term::lam(y, tb.from(),
                  mk_and(Term::app(a, vx), Term::app(b, vy))));
  }

  const TermScope &scope_;
  std::vector<std::pair<std::string, Type>> bound_;
};

// ---------------------------------------------------------------------------
// Printing

bool IsApplied(const Term &t, std::string_view con, std::size_t nargs) {
  const Term *cur = &t;
  for (std::size_t i = 0; i < nargs; ++i) {
    if (!cur->is(Kind::kApp)) return false;
    cur = &cur->fn();
  }
  return cur->is_con(con);
}

std::optional<std::string> WordOf(const Term &t, const Alphabet *alphabet) {
  if (alphabet == nullptr) return std::nullopt;
  if (!t.is(Kind::kApp) && !t.is(Kind::kCon)) return std::nullopt;
  if (!is_word_term(t)) return std::nullopt;
  return try_decode(t, *alphabet);
}

class Printer {
 public:
  Printer(const Sorts &sorts, const Alphabet *alphabet)
      : sorts_(sorts), alphabet_(alphabet) {}

  std::string Print(const Term &t) {
    if (auto w = WordOf(t, alphabet_)) return "(word " + quote(*w) + ")";
    switch (t.kind()) {
      case Kind::kVar:
        if (InnermostIs(t)) return t.name();
        return "(var " + t.name() + " " + Ty(t.type()) + ")";
      case Kind::kCon:
        if (t.is_con(names::kTrue) || t.is_con(names::kFalse) ||
            t.is_con(names::kStar)) {
          return t.name();
        }
        return "(con " + t.name() + " " + Ty(t.type()) + ")";
      case Kind::kApp:
        return PrintApp(t);
      case Kind::kLam: {
        std::string out = "(lam";
        const Term *cur = &t;
        std::size_t pushed = 0;
        while (cur->is(Kind::kLam)) {
          out += " (" + cur->name() + " " + Ty(cur->type()) + ")";
          bound_.emplace_back(cur->name(), cur->type());
          ++pushed;
          cur = &cur->body();
        }
        out += " " + Print(*cur) + ")";
        bound_.erase(bound_.end() - pushed, bound_.end());
        return out;
      }
      case Kind::kEq:
        return "(eq " + Print(t.lhs()) + " " + Print(t.rhs()) + ")";
      case Kind::kPair:
        return "(pair " + Print(t.left()) + " " + Print(t.right()) + ")";
      case Kind::kProj1:
        return "(p1 " + Print(t.operand()) + ")";
      case Kind::kProj2:
        return "(p2 " + Print(t.operand()) + ")";
    }
    return "?";
  }

 private:
  std::string Ty(const Type &t) { return t.sexpr(sorts_); }

  bool InnermostIs(const Term &v) const {
    for (auto it = bound_.rbegin(); it != bound_.rend(); ++it) {
      if (it->first == v.name()) return it->second == v.type();
    }
    return false;
  }

  std::string Quantifier(const char *word, const Term &lam) {
    bound_.emplace_back(lam.name(), lam.type());
    std::string body = Print(lam.body());
    bound_.pop_back();
    return std::string("(") + word + " (" + lam.name() + " " +
           Ty(lam.type()) + ") " + body + ")";
  }

  std::string PrintApp(const Term &t) {
    Term head = spine_head(t);
    std::vector<Term> args = spine_args(t);
    if (head.is(Kind::kCon)) {
      const std::string &h = head.name();
      if ((h == names::kAnd || h == names::kOr) && args.size() == 2) {
        std::string out = "(" + h;
        const Term *cur = &t;
        while (IsApplied(*cur, h, 2)) {
          out += " " + Print(cur->fn().arg());
          cur = &cur->arg();
        }
        return out + " " + Print(*cur) + ")";
      }
      if (h == names::kImp && args.size() == 2) {
        return "(imp " + Print(args[0]) + " " + Print(args[1]) + ")";
      }
      if (h == names::kNot && args.size() == 1) {
        return "(not " + Print(args[0]) + ")";
      }
      if ((h == names::kExists || h == names::kForall) && args.size() == 1 &&
          args[0].is(Kind::kLam)) {
        return Quantifier(h.c_str(), args[0]);
      }
      if (h == names::kIota && args.size() == 1 && args[0].is(Kind::kLam)) {
        return Quantifier("iota", args[0]);
      }
      if (h == names::kIte && args.size() == 3) {
        return "(ite " + Print(args[0]) + " " + Print(args[1]) + " " +
               Print(args[2]) + ")";
      }
      if (h == names::kSetref && args.size() >= 2) {
        return Rest("(setref " + Print(args[0]) + " " + Print(args[1]) + ")",
                    args, 2);
      }
      if ((h == names::kDeref || h == names::kUnset || h == names::kAssert ||
           h == names::kRefute || h == names::kTest) &&
          !args.empty()) {
        std::string lower = h;
        for (auto &c : lower) c = static_cast<char>(std::tolower(c));
        return Rest("(" + lower + " " + Print(args[0]) + ")", args, 1);
      }
      if ((h == names::kTau || h == names::kSigma) && args.size() >= 2 &&
          args[0].is(Kind::kCon)) {
        return Rest("(" + h + " " + args[0].name() + " " + Print(args[1]) +
                        ")",
                    args, 2);
      }
    }
    std::string out = "(app " + Print(head);
    for (const auto &a : args) out += " " + Print(a);
    return out + ")";
  }

  std::string Rest(std::string head, const std::vector<Term> &args,
                   std::size_t used) {
    if (args.size() == used) return head;
    std::string out = "(app " + head;
    for (std::size_t i = used; i < args.size(); ++i) out += " " + Print(args[i]);
    return out + ")";
  }

  const Sorts &sorts_;
  const Alphabet *alphabet_;
  std::vector<std::pair<std::string, Type>> bound_;
};

// Precedence levels for the pretty printer.
enum Level { kLevelLow = 0, kLevelImp, kLevelOr, kLevelAnd, kLevelEq, kLevelApp,
             kLevelAtom };

class Pretty {
 public:
  Pretty(const Sorts &sorts, const Alphabet *alphabet)
      : sorts_(sorts), alphabet_(alphabet) {}

  std::string Show(const Term &t, int level) {
    auto [text, own] = Render(t);
    if (own < level) return "(" + text + ")";
    return text;
  }

 private:
  std::string Sub(const Type &type) { return "_" + type.compact(sorts_); }

  std::pair<std::string, int> Render(const Term &t) {
    if (auto w = WordOf(t, alphabet_)) return {"/" + *w + "/", kLevelAtom};
    switch (t.kind()) {
      case Kind::kVar:
        return {t.name(), kLevelAtom};
      case Kind::kCon:
        return {t.name(), kLevelAtom};
      case Kind::kLam:
        return RenderLam(t);
      case Kind::kEq:
        return {Show(t.lhs(), kLevelApp) + " = " + Show(t.rhs(), kLevelApp),
                kLevelEq};
      case Kind::kPair:
        return {"(" + Show(t.left(), kLevelLow) + ", " +
                    Show(t.right(), kLevelLow) + ")",
                kLevelAtom};
      case Kind::kProj1:
        return {"p1 " + Show(t.operand(), kLevelAtom), kLevelApp};
      case Kind::kProj2:
        return {"p2 " + Show(t.operand(), kLevelAtom), kLevelApp};
      case Kind::kApp:
        return RenderApp(t);
    }
    return {"?", kLevelAtom};
  }

  std::pair<std::string, int> RenderLam(const Term &t) {
    // Programs: \z_c. P1 (P2 (... (Pk z))) with z not free in any Pi.
    if (t.type() == Type::context(sorts_)) {
      std::vector<Term> chain;
      const Term *cur = &t.body();
      while (cur->is(Kind::kApp) &&
             !occurs_free(cur->fn(), t.name(), t.type())) {
        chain.push_back(cur->fn());
        cur = &cur->arg();
      }
      if (cur->is(Kind::kVar) && cur->name() == t.name() &&
          cur->type() == t.type()) {
        if (chain.empty()) return {"I", kLevelAtom};
        std::string out;
        for (std::size_t i = 0; i < chain.size(); ++i) {
          if (i > 0) out += " ∘ ";
          out += Show(chain[i], kLevelApp);
        }
        return {out, chain.size() == 1 ? kLevelApp : kLevelLow};
      }
    }
    return {"λ" + t.name() + Sub(t.type()) + "." + Show(t.body(), kLevelLow),
            kLevelLow};
  }

  std::pair<std::string, int> RenderApp(const Term &t) {
    Term head = spine_head(t);
    std::vector<Term> args = spine_args(t);
    if (head.is(Kind::kCon)) {
      const std::string &h = head.name();
      if (args.size() == 2) {
        if (h == names::kAnd) {
          return {Show(args[0], kLevelAnd) + " ∧ " + Show(args[1], kLevelAnd),
                  kLevelAnd};
        }
        if (h == names::kOr) {
          return {Show(args[0], kLevelOr) + " ∨ " + Show(args[1], kLevelOr),
                  kLevelOr};
        }
        if (h == names::kImp) {
          return {Show(args[0], kLevelOr) + " ⊃ " + Show(args[1], kLevelImp),
                  kLevelImp};
        }
        if (h == names::kConcat) {
          return {Show(args[0], kLevelApp) + " + " + Show(args[1], kLevelApp),
                  kLevelEq};
        }
      }
      if (h == names::kNot && args.size() == 1) {
        return {"¬" + Show(args[0], kLevelEq), kLevelEq};
      }
      if (args.size() == 1 && args[0].is(Kind::kLam)) {
        const char *sym = h == names::kExists   ? "∃"
                          : h == names::kForall ? "∀"
                          : h == names::kIota   ? "ι"
                                                : nullptr;
        if (sym != nullptr) {
          const Term &lam = args[0];
          return {sym + lam.name() + Sub(lam.type()) + "(" +
                      Show(lam.body(), kLevelLow) + ")",
                  kLevelAtom};
        }
      }
      if (h == names::kIte && args.size() == 3) {
        return {"(" + Show(args[0], kLevelApp) + " | " +
                    Show(args[1], kLevelApp) + ") " + Show(args[2], kLevelAtom),
                kLevelApp};
      }
    }
    std::string out = Show(head, kLevelAtom);
    if (head.is_con(names::kTau)) out = "τ";
    if (head.is_con(names::kSigma)) out = "σ";
    for (const auto &a : args) out += " " + Show(a, kLevelAtom);
    return {out, kLevelApp};
  }

  const Sorts &sorts_;
  const Alphabet *alphabet_;
};

}  // namespace

Type parse_type(const Sexp &sexp, const TermScope &scope) {
  if (sexp.is_atom()) {
    if (auto it = scope.type_aliases.find(sexp.text);
        it != scope.type_aliases.end()) {
      return it->second;
    }
    if (auto t = BaseType(sexp.text, scope.sorts)) return *t;
    if (auto t = CompactType(sexp.text, scope.sorts)) return *t;
    Fail(sexp, "unknown type '" + sexp.text + "'");
  }
  if (!sexp.is_list() || sexp.items.size() < 3 ||
      !(sexp.items[0].is_atom("->") || sexp.items[0].is_atom("*"))) {
    Fail(sexp, "malformed type");
  }
  bool fun = sexp.items[0].is_atom("->");
  Type out = parse_type(sexp.items.back(), scope);
  for (std::size_t i = sexp.items.size() - 2; i >= 1; --i) {
    Type left = parse_type(sexp.items[i], scope);
    out = fun ? Type::fun(left, out) : Type::prod(left, out);
  }
  return out;
}

Type parse_type(std::string_view text, const TermScope &scope) {
  return parse_type(parse_sexp(text), scope);
}

Term parse_term(const Sexp &sexp, const TermScope &scope) {
  Reader reader(scope);
  return reader.Read(sexp);
}

Term parse_term(std::string_view text, const TermScope &scope) {
  return parse_term(parse_sexp(text), scope);
}

std::string print_term(const Term &term, const Sorts &sorts,
                       const Alphabet *alphabet) {
  Printer p(sorts, alphabet);
  return p.Print(term);
}

std::string pretty(const Term &term, const Sorts &sorts,
                   const Alphabet *alphabet) {
  Pretty p(sorts, alphabet);
  return p.Show(term, kLevelLow);
}

}  // namespace uhog
