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

#include "uhog/type.hpp"

#include <cassert>

namespace uhog {

struct Type::Node {
  Kind kind;
  int sort = 0;
  Type a;
  Type b;
};

std::shared_ptr<Type::Node> Type::leaf(Kind kind, int sort) {
  auto node = std::make_shared<Node>();
  node->kind = kind;
  node->sort = sort;
  return node;
}

Type Type::truth() {
  static const Type kTruth(leaf(Kind::kTruth, 0));
  return kTruth;
}

Type Type::unit() {
  static const Type kUnit(leaf(Kind::kUnit, 0));
  return kUnit;
}

Type Type::individual(int sort) {
  assert(sort >= 1);
  return Type(leaf(Kind::kIndividual, sort));
}

Type Type::fun(Type from, Type to) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::kFun;
  node->a = std::move(from);
  node->b = std::move(to);
  return Type(std::move(node));
}

Type Type::prod(Type left, Type right) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::kProd;
  node->a = std::move(left);
  node->b = std::move(right);
  return Type(std::move(node));
}

Type::Kind Type::kind() const { return node_->kind; }

int Type::sort() const { return node_->sort; }

const Type &Type::from() const {
  assert(kind() == Kind::kFun);
  return node_->a;
}

const Type &Type::to() const {
  assert(kind() == Kind::kFun);
  return node_->b;
}

const Type &Type::left() const {
  assert(kind() == Kind::kProd);
  return node_->a;
}

const Type &Type::right() const {
  assert(kind() == Kind::kProd);
  return node_->b;
}

std::strong_ordering Type::operator<=>(const Type &other) const {
  if (node_ == other.node_) return std::strong_ordering::equal;
  if (auto c = kind() <=> other.kind(); c != 0) return c;
  switch (kind()) {
    case Kind::kTruth:
    case Kind::kUnit:
      return std::strong_ordering::equal;
    case Kind::kIndividual:
      return sort() <=> other.sort();
    case Kind::kFun:
      if (auto c = from() <=> other.from(); c != 0) return c;
      return to() <=> other.to();
    case Kind::kProd:
      if (auto c = left() <=> other.left(); c != 0) return c;
      return right() <=> other.right();
  }
  return std::strong_ordering::equal;
}

namespace {

std::string BaseName(int sort, const Sorts &sorts) {
  if (sort == sorts.symbolic()) return "s";
  if (sort == sorts.context()) return "c";
  if (sort == 1) return "e";
  return "e" + std::to_string(sort);
}

}  // namespace

std::string Type::sexpr(const Sorts &sorts) const {
  switch (kind()) {
    case Kind::kTruth:
      return "t";
    case Kind::kUnit:
      return "unit";
    case Kind::kIndividual:
      return BaseName(sort(), sorts);
    case Kind::kFun:
      return "(-> " + from().sexpr(sorts) + " " + to().sexpr(sorts) + ")";
    case Kind::kProd:
      return "(* " + left().sexpr(sorts) + " " + right().sexpr(sorts) + ")";
  }
  return "?";
}

std::string Type::compact(const Sorts &sorts) const {
  switch (kind()) {
    case Kind::kTruth:
    case Kind::kUnit:
    case Kind::kIndividual:
      return sexpr(sorts);
    case Kind::kFun: {
      std::string head = from().compact(sorts);
      if (from().is_fun() || (!from().is_prod() && head.size() > 1)) {
        head = "(" + head + ")";
      }
      return head + to().compact(sorts);
    }
    case Kind::kProd:
      return "(" + left().compact(sorts) + "*" + right().compact(sorts) + ")";
  }
  return "?";
}

}  // namespace uhog
