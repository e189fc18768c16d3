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

#ifndef UHOG_GRAMMAR_HPP_
#define UHOG_GRAMMAR_HPP_

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "uhog/syntax.hpp"
#include "uhog/term.hpp"
#include "uhog/type.hpp"
#include "uhog/words.hpp"

namespace uhog {

// Finite language given by its (word, meaning) pairs.
struct Lexicon {
  Type type;
  std::vector<std::pair<std::string, Term>> entries;
};

struct SemanticRule {
  enum class Kind { kFunctional, kTable, kLexicon };

  Kind kind = Kind::kFunctional;
  std::string name;
  std::optional<Term> fn;  // kFunctional
  // kTable: input and output types, and (input, outputs) cases.
  std::optional<Type> from;
  std::optional<Type> to;
  std::vector<std::pair<Term, std::vector<Term>>> cases;
  std::shared_ptr<const Lexicon> lexicon;  // kLexicon, keyed by word terms

  static SemanticRule functional(Term fn, std::string name = "");
  static SemanticRule table(Type from, Type to,
                            std::vector<std::pair<Term, std::vector<Term>>> cases,
                            std::string name = "");
  static SemanticRule lexicon_rule(std::shared_ptr<const Lexicon> lexicon,
                                   std::string name = "");
};

// One grammar component. Concatenations are binary; a phrase concatenation
// is a concatenation with a hidden single-space literal in between. Literal
// strings are lexicons of the unit type and drop out of products.
struct Component {
  enum class Op {
    kLexicon,
    kLiteral,
    kJoin,
    kConcat,
    kRuleApp,
    kFunApp,
    kAnaphoric,
    kCataphoric,
    kRaise,
    kInstantiate,
    kSelfExtend,
  };

  std::string name;
  bool hidden = false;  // introduced by the loader for a subexpression
  int line = 0;
  Op op = Op::kLexicon;
  std::optional<Type> declared;
  std::optional<Type> type;  // filled in by validate
  std::shared_ptr<const Lexicon> lexicon;
  std::string literal;
  std::vector<int> kids;
  std::optional<SemanticRule> rule;  // kRuleApp
  std::optional<Term> term;          // kFunApp, kRaise, kInstantiate
  bool extend = false;               // lexicon open to placeholders
};

class Grammar {
 public:
  Grammar();

  const Sorts &sorts() const { return scope_.sorts; }
  const Alphabet &alphabet() const { return *alphabet_; }
  // Constants, definitions, aliases and component types for reading terms.
  const TermScope &scope() const { return scope_; }
  TermScope &mutable_scope() { return scope_; }

  const std::vector<Component> &components() const { return components_; }
  std::vector<Component> &mutable_components() { return components_; }
  const Component &component(int id) const { return components_[id]; }
  // Index of a component by name; -1 when absent.
  int find(std::string_view name) const;
  // Throws UnknownComponent.
  int require(std::string_view name) const;
  const std::optional<std::string> &main() const { return main_; }

  // Appends a component and returns its index. Names must be unique.
  int add(Component component);
  void set_main(std::string name) { main_ = std::move(name); }
  void set_alphabet(const Alphabet &alphabet);
  void set_sorts(const Sorts &sorts) { scope_.sorts = sorts; }

  // Copy with one more entry in lexicon component `name`.
  Grammar with_entry(std::string_view name, const std::string &word,
                     const Term &meaning) const;

  // Names of the components introduced by the user, in order.
  std::vector<std::string> named() const;

 private:
  std::shared_ptr<const Alphabet> alphabet_;
  TermScope scope_;
  std::vector<Component> components_;
  std::map<std::string, int, std::less<>> index_;
  std::optional<std::string> main_;
};

struct TypeTable {
  std::vector<std::pair<std::string, Type>> types;  // named components
  std::vector<std::string> warnings;                // EmptyComponent
};

// Assigns every component its meaning type. Throws UnknownComponent or
// TypeError(component, expected, found).
TypeTable validate(Grammar &grammar);

// Grammar DSL. Throws ParseError, UnknownComponent and TypeError.
Grammar load_grammar(std::string_view text);
Grammar load_grammar_file(const std::string &path);

// Canonic representation of a lexicon, of type s -> a -> t.
Term lexicon_repr(const Lexicon &lexicon, const Alphabet &alphabet,
                  const Sorts &sorts = Sorts{});

// Meanings the rule assigns to `input`; empty when it degenerates there.
std::vector<Term> apply_rule(const SemanticRule &rule, const Term &input,
                             const Alphabet &alphabet,
                             const Sorts &sorts = Sorts{});

struct AxiomSet {
  // (component, formula) in component order, hidden components included.
  std::vector<std::pair<std::string, Term>> formulas;
  std::vector<Term> constants;  // C^i : s -> a_i -> t
  // lam x lam y (D => C x y) for the main (else last named) component.
  std::optional<Term> compact;
};

AxiomSet emit_axioms(const Grammar &grammar);

// Relation constant standing for a component, of type s -> a -> t.
Term component_constant(const Grammar &grammar, int id);

// Application of `fn` to `arg`, spreading pairs over curried parameters
// when the parameter type does not match the whole argument. Throws
// TypeError.
Term spread_apply(const Term &fn, const Term &arg, const Sorts &sorts = Sorts{});
// Result type of spread_apply, or nullopt.
std::optional<Type> spread_type(const Type &fn, const Type &arg);

// Monadic meanings are pairs (program c -> c, value c -> a).
bool is_monadic(const Type &type, const Sorts &sorts = Sorts{});
bool is_instructive(const Type &type, const Sorts &sorts = Sorts{});

// (x2 . x1, (y1, y2 . x1)); instructive operands compose to x2 . x1.
Term compose_anaphoric(const Term &m1, const Term &m2,
                       const Sorts &sorts = Sorts{});
// (x1 . x2, (y1 . x2, y2)); instructive operands compose to x1 . x2.
Term compose_cataphoric(const Term &m1, const Term &m2,
                        const Sorts &sorts = Sorts{});
// (F a, lam z a).
Term context_raise(const Term &meaning, const Term &fn,
                   const Sorts &sorts = Sorts{});
// (p2 m) C.
Term context_instantiate(const Term &meaning, const Term &context,
                         const Sorts &sorts = Sorts{});
// Pair of the two meanings, or the non-unit one.
Term concat_meaning(const Term &left, const Term &right,
                    const Sorts &sorts = Sorts{});

}  // namespace uhog

#endif  // UHOG_GRAMMAR_HPP_
