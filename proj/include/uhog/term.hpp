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

#ifndef UHOG_TERM_HPP_
#define UHOG_TERM_HPP_

#include <memory>
#include <string>
#include <string_view>

#include "uhog/type.hpp"

namespace uhog {

// Lambda term of the sorted type theory, extended with equality, pairs and
// projections. Variables and constants carry their type. Immutable.
class Term {
 public:
  enum class Kind { kVar, kCon, kApp, kLam, kEq, kPair, kProj1, kProj2 };

  static Term var(std::string name, Type type);
  static Term con(std::string name, Type type);
  static Term app(Term fn, Term arg);
  static Term lam(std::string var, Type var_type, Term body);
  static Term eq(Term lhs, Term rhs);
  static Term pair(Term left, Term right);
  static Term proj1(Term operand);
  static Term proj2(Term operand);

  // Curried application f a1 a2 ...
  template <typename... Args>
  static Term app(Term fn, Term a, Term b, Args... rest) {
    return app(app(std::move(fn), std::move(a)), std::move(b), rest...);
  }

  Kind kind() const;
  bool is(Kind k) const { return kind() == k; }

  // kVar, kCon: symbol name and type. kLam: binder name and type.
  const std::string &name() const;
  const Type &type() const;

  const Term &fn() const;       // kApp
  const Term &arg() const;      // kApp
  const Term &body() const;     // kLam
  const Term &lhs() const;      // kEq
  const Term &rhs() const;      // kEq
  const Term &left() const;     // kPair
  const Term &right() const;    // kPair
  const Term &operand() const;  // kProj1, kProj2

  bool is_con(std::string_view name) const {
    return kind() == Kind::kCon && this->name() == name;
  }

  // Identity of the shared node; a cheap pre-check for equality.
  bool same_node(const Term &other) const { return node_ == other.node_; }

 private:
  struct Node;
  static std::shared_ptr<Node> new_node(Kind kind);
  Term() = default;
  explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

// Names of the distinguished constants. Their types are fixed schemes
// instantiated per use (see the builders in builtins.hpp).
namespace names {
inline constexpr std::string_view kAnd = "and";
inline constexpr std::string_view kOr = "or";
inline constexpr std::string_view kImp = "imp";
inline constexpr std::string_view kNot = "not";
inline constexpr std::string_view kTrue = "true";
inline constexpr std::string_view kFalse = "false";
inline constexpr std::string_view kForall = "forall";
inline constexpr std::string_view kExists = "exists";
inline constexpr std::string_view kIota = "iota";
inline constexpr std::string_view kIte = "ite";
inline constexpr std::string_view kConcat = "concat";
inline constexpr std::string_view kEmptyWord = "C0";
inline constexpr std::string_view kCompose = "compose";
inline constexpr std::string_view kSetref = "Setref";
inline constexpr std::string_view kDeref = "Deref";
inline constexpr std::string_view kUnset = "Unset";
inline constexpr std::string_view kAssert = "Assert";
inline constexpr std::string_view kRefute = "Refute";
inline constexpr std::string_view kTest = "Test";
inline constexpr std::string_view kStar = "star";
inline constexpr std::string_view kTau = "tau";
inline constexpr std::string_view kSigma = "sigma";
}  // namespace names

// True if `name` is reserved for a distinguished constant.
bool is_reserved_constant(std::string_view name);

}  // namespace uhog

#endif  // UHOG_TERM_HPP_
