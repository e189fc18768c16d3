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

#include <cstdint>
#include <map>
#include <random>

#include "uhog/builtins.hpp"
#include "uhog/equivalence.hpp"
#include "uhog/errors.hpp"

namespace uhog {

using Kind = Term::Kind;

namespace {

using Value = std::uint64_t;
constexpr Value kMaxDomain = Value{1} << 40;
// Largest domain a quantifier or lambda is allowed to range over.
constexpr Value kMaxRange = Value{1} << 16;

// Symbol indices of a word literal; false if `t` is not one.
bool WordKey(const Term &t, std::vector<int> &out) {
  if (t.is(Kind::kApp) && t.fn().is(Kind::kApp) &&
      t.fn().fn().is_con(names::kConcat)) {
    return WordKey(t.fn().arg(), out) && WordKey(t.arg(), out);
  }
  if (t.is(Kind::kCon)) {
    int idx = symbol_index(t.name());
    if (idx < 0) return false;
    if (idx > 0) out.push_back(idx);
    return true;
  }
  return false;
}

class Model {
 public:
  Model(const Sorts &sorts, int individuals)
      : sorts_(sorts), individuals_(individuals) {}

  Value Size(const Type &type) const {
    switch (type.kind()) {
      case Type::Kind::kTruth:
        return 2;
      case Type::Kind::kUnit:
        return 1;
      case Type::Kind::kIndividual: {
        int sort = IndividualSort(type);
        if (sort == sorts_.context()) {
          throw Unsupported("context type outside the refutation fragment");
        }
        if (sort == sorts_.symbolic()) return words_.size() + 1;
        return static_cast<Value>(individuals_);
      }
      case Type::Kind::kFun:
        return Pow(Size(type.to()), Size(type.from()));
      case Type::Kind::kProd: {
        Value a = Size(type.left()), b = Size(type.right());
        if (a != 0 && b > kMaxDomain / a) {
          throw Unsupported("domain too large: " + type.sexpr());
        }
        return a * b;
      }
    }
    return 1;
  }

  // Collects the uninterpreted constants and word literals of `t`.
  void Scan(const Term &t) {
    switch (t.kind()) {
      case Kind::kVar:
        return;
      case Kind::kCon: {
        std::vector<int> key;
        if (WordKey(t, key)) {
          Word(key);
          return;
        }
        if (IsNative(t.name())) return;
        if (is_reserved_constant(t.name())) {
          throw Unsupported("constant '" + t.name() +
                            "' outside the refutation fragment");
        }
        constants_.emplace(VarRef{t.name(), t.type()}, 0);
        return;
      }
      case Kind::kApp: {
        std::vector<int> key;
        if (WordKey(t, key)) {
          Word(key);
          return;
        }
        if (t.fn().is(Kind::kApp) && t.fn().fn().is_con(names::kConcat)) {
          throw Unsupported("non-literal word term");
        }
        Scan(t.fn());
        Scan(t.arg());
        return;
      }
      case Kind::kLam:
        Scan(t.body());
        return;
      case Kind::kEq:
        Scan(t.lhs());
        Scan(t.rhs());
        return;
      case Kind::kPair:
        Scan(t.left());
        Scan(t.right());
        return;
      case Kind::kProj1:
      case Kind::kProj2:
        Scan(t.operand());
        return;
    }
  }

  std::map<VarRef, Value> &constants() { return constants_; }

  Value Eval(const Term &t) {
    env_.clear();
    return Eval1(t);
  }

 private:
  static bool IsNative(const std::string &n) {
    return n == names::kAnd || n == names::kOr || n == names::kImp ||
           n == names::kNot || n == names::kTrue || n == names::kFalse ||
           n == names::kForall || n == names::kExists || n == names::kIte ||
           n == names::kStar;
  }

  static int IndividualSort(const Type &type) {
    for (int i = 1;; ++i) {
      if (type == Type::individual(i)) return i;
    }
  }

  static Value Pow(Value base, Value exp) {
    Value out = 1;
    for (Value i = 0; i < exp; ++i) {
      if (base != 0 && out > kMaxDomain / base) {
        throw Unsupported("function domain too large");
      }
      out *= base;
    }
    return out;
  }

  Value Word(const std::vector<int> &key) {
    auto it = words_.find(key);
    if (it != words_.end()) return it->second;
    Value v = words_.size();
    words_.emplace(key, v);
    return v;
  }

  Value Apply(Value f, const Type &fn_type, Value a) const {
    Value n = Size(fn_type.to());
    return (f / Pow(n, a)) % n;
  }

  // Table of `type` whose entries are `leaf(args)` over all argument tuples.
  template <typename Leaf>
  Value Tabulate(const Type &type, std::vector<Value> &args, Leaf leaf) const {
    if (!type.is_fun()) return leaf(args);
    Value dom = Size(type.from());
    if (dom > kMaxRange) throw Unsupported("lambda over a large domain");
    Value n = Size(type.to());
    Value out = 0, weight = 1;
    for (Value a = 0; a < dom; ++a) {
      args.push_back(a);
      out += Tabulate(type.to(), args, leaf) * weight;
      args.pop_back();
      if (a + 1 < dom) weight *= n;
    }
    return out;
  }

  Value Native(const Term &con) {
    const std::string &n = con.name();
    const Type &type = con.type();
    if (n == names::kTrue) return 1;
    if (n == names::kFalse) return 0;
    if (n == names::kStar) return 0;
    std::vector<Value> args;
    return Tabulate(type, args, [&](const std::vector<Value> &a) -> Value {
      if (n == names::kNot) return 1 - a[0];
      if (n == names::kAnd) return a[0] & a[1];
      if (n == names::kOr) return a[0] | a[1];
      if (n == names::kImp) return (1 - a[0]) | a[1];
      if (n == names::kIte) return a[2] ? a[0] : a[1];
      Value dom = Size(type.from().from());
      Value all = (Value{1} << dom) - 1;
      if (n == names::kExists) return a[0] != 0 ? 1 : 0;
      return a[0] == all ? 1 : 0;  // forall
    });
  }

  Value Eval1(const Term &t) {
    switch (t.kind()) {
      case Kind::kVar:
        for (std::size_t i = env_.size(); i-- > 0;) {
          if (env_[i].first.first == t.name() &&
              env_[i].first.second == t.type()) {
            return env_[i].second;
          }
        }
        throw Unsupported("open term");
      case Kind::kCon: {
        std::vector<int> key;
        if (WordKey(t, key)) return Word(key);
        if (IsNative(t.name())) return Native(t);
        return constants_.at({t.name(), t.type()});
      }
      case Kind::kApp: {
        std::vector<int> key;
        if (WordKey(t, key)) return Word(key);
        Term head = spine_head(t);
        if (head.is(Kind::kCon)) {
          std::vector<Term> args = spine_args(t);
          const std::string &n = head.name();
          if (n == names::kAnd && args.size() == 2) {
            return Eval1(args[0]) && Eval1(args[1]) ? 1 : 0;
          }
          if (n == names::kOr && args.size() == 2) {
            return Eval1(args[0]) || Eval1(args[1]) ? 1 : 0;
          }
          if (n == names::kImp && args.size() == 2) {
            return !Eval1(args[0]) || Eval1(args[1]) ? 1 : 0;
          }
          if (n == names::kNot && args.size() == 1) return 1 - Eval1(args[0]);
          if (n == names::kIte && args.size() == 3) {
            return Eval1(args[2]) ? Eval1(args[0]) : Eval1(args[1]);
          }
          if ((n == names::kExists || n == names::kForall) &&
              args.size() == 1 && args[0].is(Kind::kLam)) {
            const Term &lam = args[0];
            Value dom = Size(lam.type());
            if (dom > kMaxRange) throw Unsupported("quantifier too large");
            bool exists = n == names::kExists;
            for (Value a = 0; a < dom; ++a) {
              env_.push_back({{lam.name(), lam.type()}, a});
              Value v = Eval1(lam.body());
              env_.pop_back();
              if (exists && v) return 1;
              if (!exists && !v) return 0;
            }
            return exists ? 0 : 1;
          }
        }
        Value f = Eval1(t.fn());
        Value a = Eval1(t.arg());
        return Apply(f, TypeOf(t.fn()), a);
      }
      case Kind::kLam: {
        Value dom = Size(t.type());
        if (dom > kMaxRange) throw Unsupported("lambda over a large domain");
        Value n = Size(TypeOf(t).to());
        Value out = 0, weight = 1;
        for (Value a = 0; a < dom; ++a) {
          env_.push_back({{t.name(), t.type()}, a});
          out += Eval1(t.body()) * weight;
          env_.pop_back();
          if (a + 1 < dom) weight *= n;
        }
        return out;
      }
      case Kind::kEq:
        return Eval1(t.lhs()) == Eval1(t.rhs()) ? 1 : 0;
      case Kind::kPair: {
        Value l = Eval1(t.left()), r = Eval1(t.right());
        return l + Size(TypeOf(t.left())) * r;
      }
      case Kind::kProj1:
      case Kind::kProj2: {
        Value v = Eval1(t.operand());
        Type pt = TypeOf(t.operand());
        Value n = Size(pt.left());
        return t.is(Kind::kProj1) ? v % n : v / n;
      }
    }
    return 0;
  }

  // Type of a subterm whose free variables are bound in the environment.
  Type TypeOf(const Term &t) {
    switch (t.kind()) {
      case Kind::kVar:
      case Kind::kCon:
        return t.type();
      case Kind::kApp:
        return TypeOf(t.fn()).to();
      case Kind::kLam: {
        env_.push_back({{t.name(), t.type()}, 0});
        Type body = TypeOf(t.body());
        env_.pop_back();
        return Type::fun(t.type(), body);
      }
      case Kind::kEq:
        return Type::truth();
      case Kind::kPair:
        return Type::prod(TypeOf(t.left()), TypeOf(t.right()));
      case Kind::kProj1:
        return TypeOf(t.operand()).left();
      case Kind::kProj2:
        return TypeOf(t.operand()).right();
    }
    return Type::truth();
  }

  Sorts sorts_;
  int individuals_;
  std::map<std::vector<int>, Value> words_;
  std::map<VarRef, Value> constants_;
  std::vector<std::pair<VarRef, Value>> env_;
};

}  // namespace

Refutation finite_model_refute(const Term &a, const Term &b,
                               const ModelSizes &sizes, const Sorts &sorts) {
  if (!free_vars(a).empty() || !free_vars(b).empty()) {
    throw Unsupported("open term");
  }
  Type ta = typecheck(a, sorts), tb = typecheck(b, sorts);
  if (ta != tb) throw Unsupported("terms of different types");
  Term na = normalize(a), nb = normalize(b);
  Model model(sorts, sizes.individuals);
  model.Scan(na);
  model.Scan(nb);
  model.Size(ta);

  std::vector<VarRef> keys;
  std::vector<Value> radix;
  long double total = 1;
  for (const auto &[key, value] : model.constants()) {
    keys.push_back(key);
    radix.push_back(model.Size(key.second));
    total *= static_cast<long double>(radix.back());
  }
  auto separates = [&] { return model.Eval(na) != model.Eval(nb); };

  if (total <= static_cast<long double>(sizes.max_interpretations)) {
    std::vector<Value> digits(keys.size(), 0);
    for (;;) {
      for (std::size_t i = 0; i < keys.size(); ++i) {
        model.constants().at(keys[i]) = digits[i];
      }
      if (separates()) return Refutation::kDistinct;
      std::size_t i = 0;
      while (i < digits.size() && ++digits[i] == radix[i]) digits[i++] = 0;
      if (i == digits.size()) break;
    }
    return Refutation::kUnknown;
  }
  std::mt19937_64 rng(0x5eed);
  for (long n = 0; n < sizes.max_interpretations; ++n) {
    for (std::size_t i = 0; i < keys.size(); ++i) {
      model.constants().at(keys[i]) =
          std::uniform_int_distribution<Value>(0, radix[i] - 1)(rng);
    }
    if (separates()) return Refutation::kDistinct;
  }
  return Refutation::kUnknown;
}

}  // namespace uhog
