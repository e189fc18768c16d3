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

#ifndef UHOG_CONTEXT_HPP_
#define UHOG_CONTEXT_HPP_

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "uhog/grammar.hpp"
#include "uhog/term.hpp"

namespace uhog {

// One step of a program over the context type.
struct Instruction {
  enum class Kind { kSetref, kUnset, kAssert, kRefute, kTest, kOpaque };
  Kind kind = Kind::kOpaque;
  std::optional<Term> symbol;  // kSetref, kUnset
  std::optional<Term> term;    // value, formula or the opaque program
};

enum class Answer { kYes, kNo, kUnknown };
std::string answer_name(Answer answer);

struct ContextState {
  std::vector<Instruction> history;
  std::map<std::string, Term> store;  // by reference symbol name
  std::vector<Term> facts;
  std::vector<std::pair<Term, Answer>> responses;
  std::vector<std::string> transcript;
};

// Steps of a program in execution order, innermost first. Throws
// IllTypedInstruction unless the program has type c -> c.
std::vector<Instruction> decompose(const Term &program,
                                   const Sorts &sorts = Sorts{});

// Deref S applied to a context built by the program's own chain takes the
// value of the latest Setref S below it, unless an Unset S intervenes.
// Reaching the base context consults `session` when given. The result is
// simplified.
Term resolve_refs(const Term &program, const ContextState *session = nullptr,
                  const Sorts &sorts = Sorts{});

// Reference symbols still dereferenced in `program`.
std::vector<std::string> unresolved_refs(const Term &program);

// Runs the program against `state` and returns the Test answers it gave.
std::vector<Answer> execute(const Term &program, ContextState &state,
                            const Sorts &sorts = Sorts{},
                            const Alphabet *alphabet = nullptr);

// Three-valued entailment: exact facts, conjuncts of facts and one step of
// instantiating universally quantified implications at the individuals
// named in the facts.
Answer entails(const std::vector<Term> &facts, const Term &formula);

struct Interpretation {
  Term program;
  std::vector<std::string> diagnostics;
};

// Program of one sentence, with references resolved against the session.
// Throws NoParse and Ambiguous.
Interpretation interpret_sentence(const Grammar &grammar,
                                  const std::string &input,
                                  const ContextState &session,
                                  const std::string &component = "St");

// Program of a text, executed against the session.
std::pair<Term, std::vector<Answer>> interpret_text(
    const Grammar &grammar, const std::string &input, ContextState &session,
    const std::string &component = "");

// Store rebuilt from the Setref and Unset steps of the history.
std::map<std::string, Term> fold_store(const std::vector<Instruction> &history);

// Reruns the `> input` lines of a transcript in a fresh session.
ContextState replay(const Grammar &grammar,
                    const std::vector<std::string> &transcript,
                    const std::string &component = "");

}  // namespace uhog

#endif  // UHOG_CONTEXT_HPP_
