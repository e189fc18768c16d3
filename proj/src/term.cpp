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

#include "uhog/term.hpp"

#include <array>
#include <cassert>

namespace uhog {

struct Term::Node {
  Kind kind;
  std::string name;
  Type type = Type::truth();
  Term a;
  Term b;
};

std::shared_ptr<Term::Node> Term::new_node(Kind kind) {
  auto node = std::make_shared<Node>();
  node->kind = kind;
  return node;
}

Term Term::var(std::string name, Type type) {
  auto n = new_node(Kind::kVar);
  n->name = std::move(name);
  n->type = std::move(type);
  return Term(std::move(n));
}

Term Term::con(std::string name, Type type) {
  auto n = new_node(Kind::kCon);
  n->name = std::move(name);
  n->type = std::move(type);
  return Term(std::move(n));
}

Term Term::app(Term fn, Term arg) {
  auto n = new_node(Kind::kApp);
  n->a = std::move(fn);
  n->b = std::move(arg);
  return Term(std::move(n));
}

Term Term::lam(std::string var, Type var_type, Term body) {
  auto n = new_node(Kind::kLam);
  n->name = std::move(var);
  n->type = std::move(var_type);
  n->a = std::move(body);
  return Term(std::move(n));
}

Term Term::eq(Term lhs, Term rhs) {
  auto n = new_node(Kind::kEq);
  n->a = std::move(lhs);
  n->b = std::move(rhs);
  return Term(std::move(n));
}

Term Term::pair(Term left, Term right) {
  auto n = new_node(Kind::kPair);
  n->a = std::move(left);
  n->b = std::move(right);
  return Term(std::move(n));
}

Term Term::proj1(Term operand) {
  auto n = new_node(Kind::kProj1);
  n->a = std::move(operand);
  return Term(std::move(n));
}

Term Term::proj2(Term operand) {
  auto n = new_node(Kind::kProj2);
  n->a = std::move(operand);
  return Term(std::move(n));
}

Term::Kind Term::kind() const { return node_->kind; }

const std::string &Term::name() const {
  assert(kind() == Kind::kVar || kind() == Kind::kCon ||
         kind() == Kind::kLam);
  return node_->name;
}

const Type &Term::type() const {
  assert(kind() == Kind::kVar || kind() == Kind::kCon ||
         kind() == Kind::kLam);
  return node_->type;
}

const Term &Term::fn() const {
  assert(kind() == Kind::kApp);
  return node_->a;
}

const Term &Term::arg() const {
  assert(kind() == Kind::kApp);
  return node_->b;
}

const Term &Term::body() const {
  assert(kind() == Kind::kLam);
  return node_->a;
}

const Term &Term::lhs() const {
  assert(kind() == Kind::kEq);
  return node_->a;
}

const Term &Term::rhs() const {
  assert(kind() == Kind::kEq);
  return node_->b;
}

const Term &Term::left() const {
  assert(kind() == Kind::kPair);
  return node_->a;
}

const Term &Term::right() const {
  assert(kind() == Kind::kPair);
  return node_->b;
}

const Term &Term::operand() const {
  assert(kind() == Kind::kProj1 || kind() == Kind::kProj2);
  return node_->a;
}

bool is_reserved_constant(std::string_view name) {
  static constexpr std::array kReserved = {
      names::kAnd,     names::kOr,     names::kImp,      names::kNot,
      names::kTrue,    names::kFalse,  names::kForall,   names::kExists,
      names::kIota,    names::kIte,    names::kConcat,   names::kEmptyWord,
      names::kCompose, names::kSetref, names::kDeref,    names::kUnset,
      names::kAssert,  names::kRefute, names::kTest,     names::kStar,
      names::kTau,     names::kSigma};
  for (auto r : kReserved) {
    if (r == name) return true;
  }
  return false;
}

}  // namespace uhog
