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

// Grammar files:
//
//   sorts 4;
//   alphabet "abc ";
//   type NP = (-> (-> e t) t);
//   const Jack Mary : e;
//   def O = (lam (n NP) ...);
//   rule R : (-> e t) { Jack => true; Mary => true false; }
//   lexicon Noun : et extend { "house" => House; }
//   lang NP : NP = Det +. Noun |>> (id ...) | Name |>> ...;
//   main St;
//
// Expression operators from loosest to tightest: `|`; the postfix forms
// `|> NAME`, `|>> TERM`, `raise TERM`, `at TERM`, `extend`; `~>` and `<~`
// (with a separating space); `++` and `+.` (with a separating space).

#include <cctype>
#include <fstream>
#include <sstream>

#include "uhog/builtins.hpp"
#include "uhog/errors.hpp"
#include "uhog/grammar.hpp"
#include "uhog/term_ops.hpp"

namespace uhog {

namespace {

struct Expr {
  enum class Kind {
    kName,
    kLit,
    kJoin,
    kConcat,
    kPhrase,
    kAnaphoric,
    kCataphoric,
    kRule,
    kFun,
    kRaise,
    kAt,
    kExtend,
  };
  Kind kind = Kind::kName;
  std::string text;  // name, literal or rule name
  std::optional<Sexp> sexp;
  std::vector<Expr> kids;
  int line = 0;
  int col = 0;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  void Skip() {
    while (pos_ < text_.size()) {
      char ch = text_[pos_];
      if (ch == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') Advance(1);
      } else if (std::isspace(static_cast<unsigned char>(ch))) {
        Advance(1);
      } else {
        break;
      }
    }
  }

  bool AtEnd() {
    Skip();
    return pos_ >= text_.size();
  }

  bool Peek(std::string_view tok) {
    Skip();
    if (text_.substr(pos_, tok.size()) != tok) return false;
    if (IsIdentChar(tok.back())) {
      std::size_t end = pos_ + tok.size();
      if (end < text_.size() && IsIdentChar(text_[end])) return false;
    }
    return true;
  }

  bool Accept(std::string_view tok) {
    if (!Peek(tok)) return false;
    Advance(tok.size());
    return true;
  }

  void Expect(std::string_view tok) {
    if (!Accept(tok)) Fail("expected '" + std::string(tok) + "'");
  }

  bool PeekIdent() {
    Skip();
    return pos_ < text_.size() &&
           (std::isalpha(static_cast<unsigned char>(text_[pos_])) ||
            text_[pos_] == '_');
  }

  std::string Ident() {
    if (!PeekIdent()) Fail("expected a name");
    std::size_t start = pos_;
    while (pos_ < text_.size() && IsIdentChar(text_[pos_])) Advance(1);
    return std::string(text_.substr(start, pos_ - start));
  }

  bool PeekString() {
    Skip();
    return pos_ < text_.size() && text_[pos_] == '"';
  }

  std::string String() {
    if (!PeekString()) Fail("expected a string");
    return ReadSexp().text;
  }

  Sexp ReadSexp() {
    Skip();
    if (pos_ >= text_.size()) Fail("expected a term");
    if (text_[pos_] != '(' && text_[pos_] != '"') {
      // Bare atoms stop at statement punctuation.
      Sexp atom;
      atom.line = line_;
      atom.col = col_;
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             !std::isspace(static_cast<unsigned char>(text_[pos_])) &&
             std::string_view("();{}\"#").find(text_[pos_]) ==
                 std::string_view::npos) {
        Advance(1);
      }
      if (pos_ == start) Fail("expected a term");
      atom.text = std::string(text_.substr(start, pos_ - start));
      return atom;
    }
    SexpReader reader(text_.substr(pos_), true, line_, col_);
    Sexp s = reader.read();
    pos_ += reader.pos();
    line_ = reader.line();
    col_ = reader.col();
    return s;
  }

  int line() const { return line_; }
  int col() const { return col_; }

  [[noreturn]] void Fail(const std::string &msg) {
    Skip();
    throw ParseError(msg, line_, col_);
  }

 private:
  static bool IsIdentChar(char ch) {
    return std::isalnum(static_cast<unsigned char>(ch)) || ch == '_' ||
           ch == '\'';
  }

  void Advance(std::size_t n) {
    for (std::size_t i = 0; i < n && pos_ < text_.size(); ++i, ++pos_) {
      if (text_[pos_] == '\n') {
        ++line_;
        col_ = 1;
      } else {
        ++col_;
      }
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

struct Decl {
  enum class Kind { kType, kConst, kDef, kRule, kLexicon, kLang };
  Kind kind;
  std::vector<std::string> names;
  std::optional<Sexp> type;
  std::optional<Sexp> term;
  // kRule: (input, outputs); kLexicon: (word as string Sexp, meaning).
  std::vector<std::pair<Sexp, std::vector<Sexp>>> cases;
  bool extend = false;
  Expr expr;
  int line = 0;
};

class Reader {
 public:
  explicit Reader(std::string_view text) : lex_(text) {}

  void Run() {
    while (!lex_.AtEnd()) Statement();
  }

  std::optional<int> sorts;
  std::optional<std::string> alphabet;
  std::optional<std::string> main;
  int main_line = 0;
  std::vector<Decl> decls;

 private:
  void Statement() {
    int line = lex_.line();
    std::string kw = lex_.Ident();
    Decl d;
    d.line = line;
    if (kw == "sorts") {
      Sexp n = lex_.ReadSexp();
      try {
        sorts = std::stoi(n.text);
      } catch (...) {
        throw ParseError("expected a sort count", n.line, n.col);
      }
      if (*sorts < 3) throw ParseError("at least 3 sorts", n.line, n.col);
    } else if (kw == "alphabet") {
      alphabet = lex_.String();
    } else if (kw == "main") {
      main_line = lex_.line();
      main = lex_.Ident();
    } else if (kw == "type") {
      d.kind = Decl::Kind::kType;
      d.names.push_back(lex_.Ident());
      lex_.Expect("=");
      d.type = lex_.ReadSexp();
      decls.push_back(std::move(d));
    } else if (kw == "const") {
      d.kind = Decl::Kind::kConst;
      while (lex_.PeekIdent()) d.names.push_back(lex_.Ident());
      if (d.names.empty()) lex_.Fail("expected a constant name");
      lex_.Expect(":");
      d.type = lex_.ReadSexp();
      decls.push_back(std::move(d));
    } else if (kw == "def") {
      d.kind = Decl::Kind::kDef;
      d.names.push_back(lex_.Ident());
      lex_.Expect("=");
      d.term = lex_.ReadSexp();
      decls.push_back(std::move(d));
    } else if (kw == "rule") {
      d.kind = Decl::Kind::kRule;
      d.names.push_back(lex_.Ident());
      lex_.Expect(":");
      d.type = lex_.ReadSexp();
      lex_.Expect("{");
      while (!lex_.Accept("}")) {
        Sexp in = lex_.ReadSexp();
        lex_.Expect("=>");
        std::vector<Sexp> outs;
        while (!lex_.Peek(";") && !lex_.Peek("}")) outs.push_back(lex_.ReadSexp());
        lex_.Accept(";");
        d.cases.emplace_back(std::move(in), std::move(outs));
      }
      decls.push_back(std::move(d));
      return;
    } else if (kw == "lexicon") {
      d.kind = Decl::Kind::kLexicon;
      d.names.push_back(lex_.Ident());
      lex_.Expect(":");
      d.type = lex_.ReadSexp();
      d.extend = lex_.Accept("extend");
      lex_.Expect("{");
      while (!lex_.Accept("}")) {
        if (!lex_.PeekString()) lex_.Fail("expected a quoted word");
        Sexp word = lex_.ReadSexp();
        lex_.Expect("=>");
        std::vector<Sexp> meaning{lex_.ReadSexp()};
        if (!lex_.Accept(";") && !lex_.Peek("}")) lex_.Fail("expected ';'");
        d.cases.emplace_back(std::move(word), std::move(meaning));
      }
      decls.push_back(std::move(d));
      return;
    } else if (kw == "lang") {
      d.kind = Decl::Kind::kLang;
      d.names.push_back(lex_.Ident());
      lex_.Expect(":");
      d.type = lex_.ReadSexp();
      lex_.Expect("=");
      d.expr = JoinExpr();
      decls.push_back(std::move(d));
    } else {
      throw ParseError("unknown statement '" + kw + "'", line, 1);
    }
    lex_.Expect(";");
  }

  Expr Make(Expr::Kind kind) {
    Expr e;
    e.kind = kind;
    e.line = lex_.line();
    e.col = lex_.col();
    return e;
  }

  Expr JoinExpr() {
    Expr first = AppExpr();
    if (!lex_.Peek("|") || lex_.Peek("|>")) return first;
    Expr join = Make(Expr::Kind::kJoin);
    join.kids.push_back(std::move(first));
    while (lex_.Peek("|") && !lex_.Peek("|>")) {
      lex_.Accept("|");
      join.kids.push_back(AppExpr());
    }
    return join;
  }

  Expr AppExpr() {
    Expr e = AnaExpr();
    for (;;) {
      Expr post;
      if (lex_.Accept("|>>")) {
        post = Make(Expr::Kind::kFun);
        post.sexp = lex_.ReadSexp();
      } else if (lex_.Accept("|>")) {
        post = Make(Expr::Kind::kRule);
        post.text = lex_.Ident();
      } else if (lex_.Accept("raise")) {
        post = Make(Expr::Kind::kRaise);
        post.sexp = lex_.ReadSexp();
      } else if (lex_.Accept("at")) {
        post = Make(Expr::Kind::kAt);
        post.sexp = lex_.ReadSexp();
      } else if (lex_.Accept("extend")) {
        post = Make(Expr::Kind::kExtend);
      } else {
        return e;
      }
      post.kids.push_back(std::move(e));
      e = std::move(post);
    }
  }

  Expr AnaExpr() {
    Expr e = CatExpr();
    for (;;) {
      Expr::Kind kind;
      if (lex_.Accept("~>")) {
        kind = Expr::Kind::kAnaphoric;
      } else if (lex_.Accept("<~")) {
        kind = Expr::Kind::kCataphoric;
      } else {
        return e;
      }
      Expr node = Make(kind);
      node.kids.push_back(std::move(e));
      node.kids.push_back(CatExpr());
      e = std::move(node);
    }
  }

  // Right-nested chain so that products nest to the right.
  Expr CatExpr() {
    std::vector<Expr> items{Atom()};
    std::vector<Expr::Kind> ops;
    for (;;) {
      if (lex_.Accept("++")) {
        ops.push_back(Expr::Kind::kConcat);
      } else if (lex_.Accept("+.")) {
        ops.push_back(Expr::Kind::kPhrase);
      } else {
        break;
      }
      items.push_back(Atom());
    }
    Expr e = std::move(items.back());
    for (std::size_t i = ops.size(); i-- > 0;) {
      Expr node = Make(ops[i]);
      node.line = items[i].line;
      node.col = items[i].col;
      node.kids.push_back(std::move(items[i]));
      node.kids.push_back(std::move(e));
      e = std::move(node);
    }
    return e;
  }

  Expr Atom() {
    if (lex_.Accept("(")) {
      Expr e = JoinExpr();
      lex_.Expect(")");
      return e;
    }
    if (lex_.PeekString()) {
      Expr e = Make(Expr::Kind::kLit);
      e.text = lex_.String();
      return e;
    }
    Expr e = Make(Expr::Kind::kName);
    e.text = lex_.Ident();
    return e;
  }

  Lexer lex_;
};

class Builder {
 public:
  Builder(Reader &r, Grammar &g) : r_(r), g_(g) {}

  void Run() {
    TermScope &scope = g_.mutable_scope();
    if (r_.sorts) g_.set_sorts(Sorts{*r_.sorts});
    if (r_.alphabet) {
      try {
        g_.set_alphabet(Alphabet(*r_.alphabet));
      } catch (const Error &e) {
        throw ParseError(e.what(), 1, 1);
      }
    }
    for (const auto &d : r_.decls) {
      switch (d.kind) {
        case Decl::Kind::kType:
          scope.type_aliases.insert_or_assign(d.names[0], Type_(*d.type));
          break;
        case Decl::Kind::kConst: {
          Type t = Type_(*d.type);
          for (const auto &n : d.names) {
            if (is_reserved_constant(n) || symbol_index(n) >= 0) {
              throw ParseError("reserved constant '" + n + "'", d.line, 1);
            }
            scope.constants.insert_or_assign(n, t);
          }
          break;
        }
        case Decl::Kind::kDef:
          scope.definitions.insert_or_assign(d.names[0], Term_(*d.term));
          break;
        default:
          break;
      }
    }
    for (const auto &d : r_.decls) {
      if (d.kind == Decl::Kind::kLexicon || d.kind == Decl::Kind::kLang) {
        scope.components.insert_or_assign(d.names[0], Type_(*d.type));
      }
    }
    for (const auto &d : r_.decls) {
      if (d.kind == Decl::Kind::kRule) Rule(d);
    }
    // Named components get the first indices, in file order.
    for (const auto &d : r_.decls) {
      if (d.kind != Decl::Kind::kLexicon && d.kind != Decl::Kind::kLang) {
        continue;
      }
      Component c;
      c.name = d.names[0];
      c.line = d.line;
      c.declared = Type_(*d.type);
      if (g_.find(c.name) >= 0) {
        throw ParseError("duplicate component '" + c.name + "'", d.line, 1);
      }
      if (d.kind == Decl::Kind::kLexicon) {
        c.op = Component::Op::kLexicon;
        c.extend = d.extend;
        c.lexicon = Lex(d, *c.declared);
      }
      g_.add(std::move(c));
    }
    for (const auto &d : r_.decls) {
      if (d.kind != Decl::Kind::kLang) continue;
      int id = g_.find(d.names[0]);
      owner_ = d.names[0];
      counter_ = 0;
      Fill(id, d.expr);
    }
    if (r_.main) {
      if (g_.find(*r_.main) < 0) throw UnknownComponent(*r_.main, r_.main_line);
      g_.set_main(*r_.main);
    }
  }

 private:
  Type Type_(const Sexp &s) {
    try {
      return parse_type(s, g_.scope());
    } catch (const ParseError &) {
      throw;
    } catch (const Error &e) {
      throw ParseError(e.what(), s.line, s.col);
    }
  }

  Term Term_(const Sexp &s) {
    try {
      return parse_term(s, g_.scope());
    } catch (const ParseError &) {
      throw;
    } catch (const TypeError &) {
      throw;
    } catch (const Error &e) {
      throw ParseError(e.what(), s.line, s.col);
    }
  }

  std::shared_ptr<const Lexicon> Lex(const Decl &d, const Type &type) {
    auto lex = std::make_shared<Lexicon>(Lexicon{type, {}});
    for (const auto &[word, meaning] : d.cases) {
      for (const auto &ch : utf8_chars(word.text)) {
        if (g_.alphabet().index_of(ch) == 0) {
          throw ParseError("unknown symbol '" + ch + "' in word", word.line,
                           word.col);
        }
      }
      Term m = Term_(meaning[0]);
      Type found = typecheck(m, g_.sorts());
      if (!(found == type)) {
        throw TypeError(d.names[0], type.sexpr(g_.sorts()),
                        found.sexpr(g_.sorts()));
      }
      bool dup = false;
      for (const auto &[w, old] : lex->entries) {
        if (w == word.text && alpha_eq(normalize(old), normalize(m))) dup = true;
      }
      if (!dup) lex->entries.emplace_back(word.text, m);
    }
    return lex;
  }

  void Rule(const Decl &d) {
    Type t = Type_(*d.type);
    if (!t.is_fun()) {
      throw ParseError("rule type must be a function type", d.type->line,
                       d.type->col);
    }
    std::vector<std::pair<Term, std::vector<Term>>> cases;
    for (const auto &[in, outs] : d.cases) {
      Term a = Term_(in);
      if (!(typecheck(a, g_.sorts()) == t.from())) {
        throw TypeError(d.names[0], t.from().sexpr(g_.sorts()),
                        typecheck(a, g_.sorts()).sexpr(g_.sorts()));
      }
      std::vector<Term> bs;
      for (const auto &o : outs) {
        Term b = Term_(o);
        if (!(typecheck(b, g_.sorts()) == t.to())) {
          throw TypeError(d.names[0], t.to().sexpr(g_.sorts()),
                          typecheck(b, g_.sorts()).sexpr(g_.sorts()));
        }
        bs.push_back(b);
      }
      cases.emplace_back(a, bs);
    }
    rules_.insert_or_assign(d.names[0], SemanticRule::table(t.from(), t.to(),
                                                            cases, d.names[0]));
  }

  // Writes the body of `e` into component `id`.
  void Fill(int id, const Expr &e) {
    using K = Expr::Kind;
    using Op = Component::Op;
    Component body;
    body.line = e.line;
    switch (e.kind) {
      case K::kName:
      case K::kLit:
        body.op = Op::kJoin;
        body.kids.push_back(Node(e));
        break;
      case K::kJoin:
        body.op = Op::kJoin;
        for (const auto &k : e.kids) body.kids.push_back(Node(k));
        break;
      case K::kConcat:
        body.op = Op::kConcat;
        body.kids = {Node(e.kids[0]), Node(e.kids[1])};
        break;
      case K::kPhrase:
        body.op = Op::kConcat;
        body.kids = {Node(e.kids[0]), Spaced(e.kids[1], e.line)};
        break;
      case K::kAnaphoric:
      case K::kCataphoric:
        body.op = e.kind == K::kAnaphoric ? Op::kAnaphoric : Op::kCataphoric;
        body.kids = {Node(e.kids[0]), Spaced(e.kids[1], e.line)};
        break;
      case K::kRule:
        body.op = Op::kRuleApp;
        body.kids = {Node(e.kids[0])};
        body.rule = NamedRule(e);
        break;
      case K::kFun:
        body.op = Op::kFunApp;
        body.kids = {Node(e.kids[0])};
        body.term = Term_(*e.sexp);
        break;
      case K::kRaise:
        body.op = Op::kRaise;
        body.kids = {Node(e.kids[0])};
        body.term = Term_(*e.sexp);
        break;
      case K::kAt:
        body.op = Op::kInstantiate;
        body.kids = {Node(e.kids[0])};
        body.term = Term_(*e.sexp);
        break;
      case K::kExtend:
        body.op = Op::kSelfExtend;
        body.kids = {Node(e.kids[0])};
        break;
    }
    // Node() may have grown the component vector.
    Component &target = g_.mutable_components()[id];
    target.op = body.op;
    target.kids = std::move(body.kids);
    target.rule = std::move(body.rule);
    target.term = std::move(body.term);
  }

  // Component for a subexpression: named references resolve directly.
  int Node(const Expr &e) {
    if (e.kind == Expr::Kind::kName) {
      int id = g_.find(e.text);
      if (id < 0) throw UnknownComponent(e.text, e.line);
      return id;
    }
    if (e.kind == Expr::Kind::kLit) return Literal(e.text, e.line);
    Component c;
    c.name = owner_ + "." + std::to_string(++counter_);
    c.hidden = true;
    c.line = e.line;
    int id = g_.add(std::move(c));
    Fill(id, e);
    return id;
  }

  // " " followed by `e`.
  int Spaced(const Expr &e, int line) {
    Component c;
    c.name = owner_ + "." + std::to_string(++counter_);
    c.hidden = true;
    c.line = line;
    c.op = Component::Op::kConcat;
    int space = Literal(" ", line);
    int id = g_.add(std::move(c));
    int right = Node(e);
    g_.mutable_components()[id].kids = {space, right};
    return id;
  }

  int Literal(const std::string &word, int line) {
    auto it = literals_.find(word);
    if (it != literals_.end()) return it->second;
    for (const auto &ch : utf8_chars(word)) {
      if (g_.alphabet().index_of(ch) == 0) {
        throw ParseError("unknown symbol '" + ch + "' in literal", line, 1);
      }
    }
    Component c;
    c.name = "lit." + std::to_string(literals_.size() + 1);
    c.hidden = true;
    c.line = line;
    c.op = Component::Op::kLiteral;
    c.literal = word;
    int id = g_.add(std::move(c));
    literals_.emplace(word, id);
    return id;
  }

  SemanticRule NamedRule(const Expr &e) {
    auto r = rules_.find(e.text);
    if (r != rules_.end()) return r->second;
    int id = g_.find(e.text);
    if (id >= 0) {
      const Component &c = g_.component(id);
      if (c.op != Component::Op::kLexicon || !c.lexicon) {
        throw ParseError("'" + e.text + "' is not a lexicon", e.line, e.col);
      }
      return SemanticRule::lexicon_rule(c.lexicon, e.text);
    }
    auto def = g_.scope().definitions.find(e.text);
    if (def != g_.scope().definitions.end()) {
      return SemanticRule::functional(def->second, e.text);
    }
    throw ParseError("unknown rule '" + e.text + "'", e.line, e.col);
  }

  Reader &r_;
  Grammar &g_;
  std::map<std::string, SemanticRule> rules_;
  std::map<std::string, int> literals_;
  std::string owner_;
  int counter_ = 0;
};

}  // namespace

Grammar load_grammar(std::string_view text) {
  Reader reader(text);
  reader.Run();
  Grammar g;
  Builder builder(reader, g);
  builder.Run();
  validate(g);
  return g;
}

Grammar load_grammar_file(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot read grammar file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return load_grammar(ss.str());
}

}  // namespace uhog
