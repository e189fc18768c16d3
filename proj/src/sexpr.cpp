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

#include "uhog/sexpr.hpp"

#include "uhog/errors.hpp"

namespace uhog {

namespace {

bool IsDelimiter(char c) {
  return c == '(' || c == ')' || c == '"' || c == ' ' || c == '\t' ||
         c == '\n' || c == '\r';
}

}  // namespace

std::string quote(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    if (c == '\n') {
      out += "\\n";
      continue;
    }
    out += c;
  }
  out += '"';
  return out;
}

std::string Sexp::str() const {
  switch (kind) {
    case Kind::kAtom:
      return text;
    case Kind::kString:
      return quote(text);
    case Kind::kList: {
      std::string out = "(";
      for (std::size_t i = 0; i < items.size(); ++i) {
        if (i > 0) out += ' ';
        out += items[i].str();
      }
      return out + ")";
    }
  }
  return text;
}

SexpReader::SexpReader(std::string_view text, bool hash_comments, int line,
                       int col)
    : text_(text), hash_comments_(hash_comments), line_(line), col_(col) {}

void SexpReader::advance() {
  if (text_[pos_] == '\n') {
    ++line_;
    col_ = 1;
  } else if ((static_cast<unsigned char>(text_[pos_]) & 0xC0) != 0x80) {
    ++col_;
  }
  ++pos_;
}

void SexpReader::skip_space() {
  while (pos_ < text_.size()) {
    char c = peek();
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
      advance();
    } else if (hash_comments_ && c == '#') {
      while (pos_ < text_.size() && peek() != '\n') advance();
    } else {
      break;
    }
  }
}

bool SexpReader::more() {
  skip_space();
  return pos_ < text_.size();
}

std::string SexpReader::read_string() {
  int line = line_, col = col_;
  advance();  // opening quote
  std::string out;
  while (true) {
    if (pos_ >= text_.size()) throw ParseError("unterminated string", line, col);
    char c = peek();
    if (c == '"') {
      advance();
      return out;
    }
    if (c == '\\') {
      advance();
      if (pos_ >= text_.size()) {
        throw ParseError("unterminated string", line, col);
      }
      char e = peek();
      out += e == 'n' ? '\n' : e == 't' ? '\t' : e;
      advance();
      continue;
    }
    out += c;
    advance();
  }
}

Sexp SexpReader::read() {
  skip_space();
  if (pos_ >= text_.size()) {
    throw ParseError("unexpected end of input", line_, col_);
  }
  Sexp out;
  out.line = line_;
  out.col = col_;
  char c = peek();
  if (c == ')') throw ParseError("unexpected ')'", line_, col_);
  if (c == '"') {
    out.kind = Sexp::Kind::kString;
    out.text = read_string();
    return out;
  }
  if (c == '(') {
    out.kind = Sexp::Kind::kList;
    advance();
    while (true) {
      skip_space();
      if (pos_ >= text_.size()) {
        throw ParseError("unbalanced '('", out.line, out.col);
      }
      if (peek() == ')') {
        advance();
        return out;
      }
      out.items.push_back(read());
    }
  }
  out.kind = Sexp::Kind::kAtom;
  while (pos_ < text_.size() && !IsDelimiter(peek()) &&
         !(hash_comments_ && peek() == '#')) {
    out.text += peek();
    advance();
  }
  return out;
}

std::vector<Sexp> parse_sexps(std::string_view text) {
  SexpReader reader(text);
  std::vector<Sexp> out;
  while (reader.more()) out.push_back(reader.read());
  return out;
}

Sexp parse_sexp(std::string_view text) {
  SexpReader reader(text);
  Sexp out = reader.read();
  if (reader.more()) {
    throw ParseError("trailing input after expression", reader.line(),
                     reader.col());
  }
  return out;
}

}  // namespace uhog
