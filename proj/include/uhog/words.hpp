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

#ifndef UHOG_WORDS_HPP_
#define UHOG_WORDS_HPP_

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "uhog/term.hpp"
#include "uhog/type.hpp"

namespace uhog {

// Splits UTF-8 text into code points, each as its own string.
std::vector<std::string> utf8_chars(std::string_view text);

// Ordered set of symbols; symbol i (1-based) is the constant C<i> of type s.
class Alphabet {
 public:
  // Throws Error on duplicate symbols or an empty alphabet.
  explicit Alphabet(std::string_view symbols);

  // Latin letters, digits, space, period, comma, question mark, hyphen and
  // apostrophe.
  static const Alphabet &standard();

  int size() const { return static_cast<int>(symbols_.size()); }
  // 1-based index of a symbol, 0 when absent.
  int index_of(std::string_view symbol) const;
  const std::string &symbol(int index) const { return symbols_[index - 1]; }
  std::string spec() const;

  bool operator==(const Alphabet &other) const {
    return symbols_ == other.symbols_;
  }

 private:
  std::vector<std::string> symbols_;
  std::map<std::string, int, std::less<>> index_;
};

enum class WordEq { kEqual, kDistinct };

// Right-associated chain of alphabet constants; the empty word is C0.
// Throws UnknownSymbol.
Term encode(std::string_view word, const Alphabet &alphabet,
            const Sorts &sorts = Sorts{});

// Word denoted by an s-term built from alphabet constants, the empty word
// and concatenation, in any association. Throws NotAWordTerm.
std::string decode(const Term &term, const Alphabet &alphabet);
std::optional<std::string> try_decode(const Term &term,
                                      const Alphabet &alphabet);

// True if the term is built only from alphabet constants, C0 and concat.
bool is_word_term(const Term &term);

// Symbol indices of a word term without normalizing, empty words dropped.
std::optional<std::vector<int>> word_symbols(const Term &term);

WordEq word_eq_decide(const Term &a, const Term &b, const Alphabet &alphabet);

// All (head, tail) splits in position order, counted in code points.
std::vector<std::pair<std::string, std::string>> splits(std::string_view word);

// Rewrites every maximal concatenation subterm into right-associated normal
// form, dropping empty words. Non-word operands are kept as opaque leaves.
Term normalize_concat(const Term &term, const Sorts &sorts = Sorts{});

}  // namespace uhog

#endif  // UHOG_WORDS_HPP_
