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

#ifndef UHOG_SEXPR_HPP_
#define UHOG_SEXPR_HPP_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace uhog {

// Generic S-expression: atom, double-quoted string, or parenthesized list.
struct Sexp {
  enum class Kind { kAtom, kString, kList };

  Kind kind = Kind::kAtom;
  std::string text;  // atom or string contents
  std::vector<Sexp> items;
  int line = 1;
  int col = 1;

  bool is_atom() const { return kind == Kind::kAtom; }
  bool is_atom(std::string_view s) const {
    return kind == Kind::kAtom && text == s;
  }
  bool is_string() const { return kind == Kind::kString; }
  bool is_list() const { return kind == Kind::kList; }
  // List whose first item is the atom `head`.
  bool is_form(std::string_view head) const {
    return is_list() && !items.empty() && items[0].is_atom(head);
  }

  std::string str() const;
};

// Incremental reader over a text buffer. Whitespace is skipped; a `#`
// outside strings starts a comment running to the end of the line when
// `hash_comments` is set.
class SexpReader {
 public:
  explicit SexpReader(std::string_view text, bool hash_comments = false,
                      int line = 1, int col = 1);

  // Skips whitespace and comments; true if input remains.
  bool more();
  // Reads one S-expression. Throws ParseError.
  Sexp read();

  std::size_t pos() const { return pos_; }
  int line() const { return line_; }
  int col() const { return col_; }

 private:
  char peek() const { return text_[pos_]; }
  void advance();
  void skip_space();
  std::string read_string();

  std::string_view text_;
  bool hash_comments_;
  std::size_t pos_ = 0;
  int line_;
  int col_;
};

// Parses every S-expression in `text`.
std::vector<Sexp> parse_sexps(std::string_view text);
// Parses exactly one S-expression.
Sexp parse_sexp(std::string_view text);

// Quotes a string with backslash escapes for " and \.
std::string quote(std::string_view s);

}  // namespace uhog

#endif  // UHOG_SEXPR_HPP_
