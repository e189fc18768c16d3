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

#include "uhog/words.hpp"

#include "uhog/builtins.hpp"
#include "uhog/errors.hpp"
#include "uhog/term_ops.hpp"

namespace uhog {

using Kind = Term::Kind;

std::vector<std::string> utf8_chars(std::string_view text) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < text.size()) {
    unsigned char c = static_cast<unsigned char>(text[i]);
    std::size_t len = c < 0x80 ? 1 : (c >> 5) == 0x6 ? 2 : (c >> 4) == 0xE ? 3
                                                      : (c >> 3) == 0x1E ? 4
                                                                         : 1;
    if (i + len > text.size()) len = text.size() - i;
    out.emplace_back(text.substr(i, len));
    i += len;
  }
  return out;
}

Alphabet::Alphabet(std::string_view symbols) {
  for (auto &ch : utf8_chars(symbols)) {
    if (index_.count(ch) > 0) {
      throw Error("duplicate alphabet symbol '" + ch + "'");
    }
    symbols_.push_back(ch);
    index_.emplace(ch, static_cast<int>(symbols_.size()));
  }
  if (symbols_.empty()) throw Error("empty alphabet");
}

const Alphabet &Alphabet::standard() {
  static const Alphabet kStandard(
      "abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789 .,?-'");
  return kStandard;
}

int Alphabet::index_of(std::string_view symbol) const {
  auto it = index_.find(symbol);
  return it == index_.end() ? 0 : it->second;
}

std::string Alphabet::spec() const {
  std::string out;
  for (const auto &s : symbols_) out += s;
  return out;
}

Term encode(std::string_view word, const Alphabet &alphabet,
            const Sorts &sorts) {
  auto chars = utf8_chars(word);
  if (chars.empty()) return mk_empty_word(sorts);
  std::vector<int> indices;
  for (std::size_t i = 0; i < chars.size(); ++i) {
    int idx = alphabet.index_of(chars[i]);
    if (idx == 0) throw UnknownSymbol(chars[i], i);
    indices.push_back(idx);
  }
  Term out = mk_symbol(indices.back(), sorts);
  for (int i = static_cast<int>(indices.size()) - 2; i >= 0; --i) {
    out = mk_concat(mk_symbol(indices[i], sorts), out, sorts);
  }
  return out;
}

namespace {

bool IsConcatApp(const Term &t) {
  return t.is(Kind::kApp) && t.fn().is(Kind::kApp) &&
         t.fn().fn().is_con(names::kConcat);
}

// Appends the symbol indices of a word term; false if not a word term.
bool Collect(const Term &t, std::vector<int> &out) {
  if (IsConcatApp(t)) {
    return Collect(t.fn().arg(), out) && Collect(t.arg(), out);
  }
  if (t.is(Kind::kCon)) {
    int idx = symbol_index(t.name());
    if (idx < 0) return false;
    if (idx > 0) out.push_back(idx);
    return true;
  }
  return false;
}

void Leaves(const Term &t, std::vector<Term> &out) {
  if (IsConcatApp(t)) {
    Leaves(t.fn().arg(), out);
    Leaves(t.arg(), out);
  } else {
    out.push_back(t);
  }
}

}  // namespace

bool is_word_term(const Term &term) {
  std::vector<int> ignored;
  return Collect(term, ignored);
}

std::optional<std::vector<int>> word_symbols(const Term &term) {
  std::vector<int> out;
  if (!Collect(term, out)) return std::nullopt;
  return out;
}

std::optional<std::string> try_decode(const Term &term,
                                      const Alphabet &alphabet) {
  std::vector<int> indices;
  if (!Collect(term, indices)) {
    if (!Collect(normalize(term), indices)) return std::nullopt;
  }
  std::string out;
  for (int idx : indices) {
    if (idx > alphabet.size()) return std::nullopt;
    out += alphabet.symbol(idx);
  }
  return out;
}

std::string decode(const Term &term, const Alphabet &alphabet) {
  auto out = try_decode(term, alphabet);
  if (!out) throw NotAWordTerm("not a word term");
  return *out;
}

WordEq word_eq_decide(const Term &a, const Term &b, const Alphabet &alphabet) {
  return decode(a, alphabet) == decode(b, alphabet) ? WordEq::kEqual
                                                    : WordEq::kDistinct;
}

std::vector<std::pair<std::string, std::string>> splits(std::string_view word) {
  auto chars = utf8_chars(word);
  std::vector<std::pair<std::string, std::string>> out;
  std::size_t offset = 0;
  for (std::size_t i = 0; i <= chars.size(); ++i) {
    out.emplace_back(std::string(word.substr(0, offset)),
                     std::string(word.substr(offset)));
    if (i < chars.size()) offset += chars[i].size();
  }
  return out;
}

Term normalize_concat(const Term &term, const Sorts &sorts) {
  switch (term.kind()) {
    case Kind::kVar:
    case Kind::kCon:
      return term;
    case Kind::kApp: {
      if (IsConcatApp(term)) {
        std::vector<Term> leaves;
        Leaves(term, leaves);
        std::vector<Term> kept;
        for (auto &leaf : leaves) {
          Term n = normalize_concat(leaf, sorts);
          if (n.is_con(names::kEmptyWord)) continue;
          if (IsConcatApp(n)) {
            Leaves(n, kept);
          } else {
            kept.push_back(n);
          }
        }
        if (kept.empty()) return mk_empty_word(sorts);
        Term out = kept.back();
        for (int i = static_cast<int>(kept.size()) - 2; i >= 0; --i) {
          out = mk_concat(kept[i], out, sorts);
        }
        return out;
      }
      Term f = normalize_concat(term.fn(), sorts);
      Term a = normalize_concat(term.arg(), sorts);
      if (f.same_node(term.fn()) && a.same_node(term.arg())) return term;
      return Term::app(f, a);
    }
    case Kind::kLam: {
      Term b = normalize_concat(term.body(), sorts);
      if (b.same_node(term.body())) return term;
      return Term::lam(term.name(), term.type(), b);
    }
    case Kind::kEq: {
      Term l = normalize_concat(term.lhs(), sorts);
      Term r = normalize_concat(term.rhs(), sorts);
      if (l.same_node(term.lhs()) && r.same_node(term.rhs())) return term;
      return Term::eq(l, r);
    }
    case Kind::kPair: {
      Term l = normalize_concat(term.left(), sorts);
      Term r = normalize_concat(term.right(), sorts);
      if (l.same_node(term.left()) && r.same_node(term.right())) return term;
      return Term::pair(l, r);
    }
    case Kind::kProj1:
    case Kind::kProj2: {
      Term o = normalize_concat(term.operand(), sorts);
      if (o.same_node(term.operand())) return term;
      return term.is(Kind::kProj1) ? Term::proj1(o) : Term::proj2(o);
    }
  }
  return term;
}

}  // namespace uhog
