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

#ifndef UHOG_TYPE_HPP_
#define UHOG_TYPE_HPP_

#include <compare>
#include <memory>
#include <string>

namespace uhog {

// Number of individual sorts. Sort 1 is `e`, sort n-1 the context type `c`,
// sort n the symbolic type `s`.
struct Sorts {
  int n = 3;

  int individual() const { return 1; }
  int context() const { return n - 1; }
  int symbolic() const { return n; }
};

// Simple type over t, unit and the individual sorts, closed under function
// and product. Immutable; copies share structure.
class Type {
 public:
  enum class Kind { kTruth, kUnit, kIndividual, kFun, kProd };

  static Type truth();
  static Type unit();
  static Type individual(int sort);
  static Type fun(Type from, Type to);
  static Type prod(Type left, Type right);

  // Convenience for the fixed roles.
  static Type e() { return individual(1); }
  static Type context(const Sorts &sorts) {
    return individual(sorts.context());
  }
  static Type symbolic(const Sorts &sorts) {
    return individual(sorts.symbolic());
  }

  // Right-associated curried function type a1 -> a2 -> ... -> result.
  template <typename... Rest>
  static Type fun(Type a, Type b, Type c, Rest... rest) {
    return fun(std::move(a), fun(std::move(b), std::move(c), rest...));
  }

  Kind kind() const;
  int sort() const;           // kIndividual only
  const Type &from() const;   // kFun only
  const Type &to() const;     // kFun only
  const Type &left() const;   // kProd only
  const Type &right() const;  // kProd only

  bool is_fun() const { return kind() == Kind::kFun; }
  bool is_prod() const { return kind() == Kind::kProd; }
  bool is_truth() const { return kind() == Kind::kTruth; }
  bool is_unit() const { return kind() == Kind::kUnit; }

  // True for alpha -> t for some alpha.
  bool is_predicate() const { return is_fun() && to().is_truth(); }

  std::strong_ordering operator<=>(const Type &other) const;
  bool operator==(const Type &other) const {
    return (*this <=> other) == std::strong_ordering::equal;
  }

  // Canonical S-expression: t, unit, e, c, s, e2 ..., (-> a b), (* a b).
  std::string sexpr(const Sorts &sorts = Sorts{}) const;
  // Compact notation: `eet`, `(et)t`, `c(c*t)`.
  std::string compact(const Sorts &sorts = Sorts{}) const;

 private:
  struct Node;
  static std::shared_ptr<Node> leaf(Kind kind, int sort);
  Type() = default;
  explicit Type(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

}  // namespace uhog

#endif  // UHOG_TYPE_HPP_
