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

#include "uhog/parser.hpp"

#include <algorithm>
#include <climits>
#include <functional>
#include <sstream>
#include <unordered_map>

#include "json.hpp"
#include "uhog/builtins.hpp"
#include "uhog/errors.hpp"
#include "uhog/robustness.hpp"
#include "uhog/sexpr.hpp"
#include "uhog/term_ops.hpp"

namespace uhog {

using Op = Component::Op;
using SK = Skeleton::Kind;

Skeleton build_skeleton(const Grammar &grammar) {
  Skeleton sk;
  sk.grammar = &grammar;
  const auto &comps = grammar.components();
  sk.nodes.resize(comps.size());
  for (std::size_t i = 0; i < comps.size(); ++i) {
    const Component &c = comps[i];
    Skeleton::Node &n = sk.nodes[i];
    switch (c.op) {
      case Op::kLexicon:
        n.kind = SK::kTerminal;
        for (const auto &[w, m] : c.lexicon->entries) n.words.insert(w);
        n.extend = c.extend;
        break;
      case Op::kLiteral:
        n.kind = SK::kTerminal;
        n.words.insert(c.literal);
        break;
      case Op::kConcat:
      case Op::kAnaphoric:
      case Op::kCataphoric:
        n.kind = SK::kBinary;
        n.kids = c.kids;
        break;
      default:
        n.kind = SK::kUnit;
        n.kids = c.kids;
        n.extend = c.op == Op::kSelfExtend;
    }
  }
  // Tarjan over unit edges; groups come out kids first.
  int count = static_cast<int>(comps.size()), next = 0;
  std::vector<int> index(count, -1), low(count, 0), stack;
  std::vector<bool> on(count, false);
  std::function<void(int)> visit = [&](int v) {
    index[v] = low[v] = next++;
    stack.push_back(v);
    on[v] = true;
    if (sk.nodes[v].kind == SK::kUnit) {
      for (int w : sk.nodes[v].kids) {
        if (index[w] < 0) {
          visit(w);
          low[v] = std::min(low[v], low[w]);
        } else if (on[w]) {
          low[v] = std::min(low[v], index[w]);
        }
      }
    }
    if (low[v] == index[v]) {
      std::vector<int> group;
      int w;
      do {
        w = stack.back();
        stack.pop_back();
        on[w] = false;
        group.push_back(w);
      } while (w != v);
      std::sort(group.begin(), group.end());
      sk.groups.push_back(std::move(group));
    }
  };
  for (int v = 0; v < count; ++v) {
    if (index[v] < 0) visit(v);
  }
  return sk;
}

Chart::Chart(const Skeleton &skeleton, std::vector<std::string> chars)
    : skeleton_(&skeleton), chars_(std::move(chars)) {
  offsets_.push_back(0);
  for (const auto &ch : chars_) {
    text_ += ch;
    offsets_.push_back(text_.size());
  }
  std::size_t n = chars_.size() + 1;
  bits_.assign(skeleton.nodes.size() * n * n, 0);
}

std::string Chart::slice(int start, int end) const {
  return text_.substr(offsets_[start], offsets_[end] - offsets_[start]);
}

ChartItem Chart::item(int component, int start, int end) const {
  ChartItem it;
  it.component = component;
  it.start = start;
  it.end = end;
  it.placeholder = placeholder(component, start, end);
  if (!has(component, start, end) || it.placeholder) return it;
  const Skeleton::Node &n = skeleton_->nodes[component];
  if (n.kind == SK::kBinary) {
    for (int m = start; m <= end; ++m) {
      if (has(n.kids[0], start, m) && has(n.kids[1], m, end)) {
        it.children.push_back({{n.kids[0], start, m}, {n.kids[1], m, end}});
      }
    }
  } else if (n.kind == SK::kUnit) {
    for (int k : n.kids) {
      if (has(k, start, end)) it.children.push_back({{k, start, end}});
    }
  }
  return it;
}

bool is_separator(const std::string &ch) {
  static const std::set<std::string> kSeparators = {" ", ".", ",", "?",
                                                     "!", ";", ":"};
  return kSeparators.count(ch) != 0;
}

namespace {

bool Derives(const Chart &chart, const Skeleton::Node &n, int i, int j) {
  switch (n.kind) {
    case SK::kTerminal:
      return n.words.count(chart.slice(i, j)) != 0;
    case SK::kUnit:
      for (int k : n.kids) {
        if (chart.has(k, i, j)) return true;
      }
      return false;
    case SK::kBinary:
      for (int m = i; m <= j; ++m) {
        if (chart.has(n.kids[0], i, m) && chart.has(n.kids[1], m, j)) {
          return true;
        }
      }
      return false;
  }
  return false;
}

}  // namespace

Chart recognize(const Skeleton &skeleton, const std::string &input,
                bool partial) {
  std::vector<std::string> chars = utf8_chars(input);
  const Alphabet &alphabet = skeleton.grammar->alphabet();
  for (std::size_t p = 0; p < chars.size(); ++p) {
    if (alphabet.index_of(chars[p]) == 0) throw UnknownSymbol(chars[p], p);
  }
  Chart chart(skeleton, chars);
  int n = chart.length();
  int count = static_cast<int>(skeleton.nodes.size());
  for (int len = 0; len <= n; ++len) {
    for (int i = 0; i + len <= n; ++i) {
      int j = i + len;
      bool word = len > 0;
      for (int p = i; word && p < j; ++p) word = !is_separator(chars[p]);
      auto fixpoint = [&] {
        for (bool changed = true; changed;) {
          changed = false;
          for (int c = 0; c < count; ++c) {
            if (chart.has(c, i, j)) continue;
            if (Derives(chart, skeleton.nodes[c], i, j)) {
              chart.mark(c, i, j, false);
              changed = true;
            }
          }
        }
      };
      fixpoint();
      if (partial && word) {
        bool added = false;
        for (int c = 0; c < count; ++c) {
          if (skeleton.nodes[c].extend && !chart.has(c, i, j)) {
            chart.mark(c, i, j, true);
            added = true;
          }
        }
        if (added) fixpoint();
      }
    }
  }
  return chart;
}

namespace {

class Attributor {
 public:
  Attributor(const Grammar &g, const Chart &chart, const ParseOptions &opts)
      : g_(g), chart_(chart), opts_(opts), sorts_(g.sorts()) {
    const auto &groups = chart.skeleton().groups;
    bound_.assign(g.components().size(), 1);
    for (const auto &grp : groups) {
      for (int c : grp) bound_[c] = static_cast<int>(grp.size()) + 1;
    }
  }

  std::vector<Term> Get(int c, int i, int j) {
    int low = INT_MAX;
    return Attr(c, i, j, low);
  }

  std::vector<std::string> diagnostics;

 private:
  struct Entry {
    std::vector<Term> vals;
    int state = 0;  // 0 open, 1 on the stack, 2 final
    int depth = 0;
  };

  std::vector<Term> Attr(int c, int i, int j, int &low) {
    std::size_t n = chart_.length() + 1;
    std::size_t key = (static_cast<std::size_t>(c) * n + i) * n + j;
    Entry &e = memo_[key];
    if (e.state == 2) return e.vals;
    if (e.state == 1) {
      low = std::min(low, e.depth);
      return e.vals;
    }
    e.state = 1;
    e.depth = ++depth_;
    int mine = e.depth;
    for (int round = 0;; ++round) {
      int sub = INT_MAX;
      std::vector<Term> v = Compute(c, i, j, sub);
      Entry &cur = memo_[key];
      bool changed = v.size() != cur.vals.size();
      cur.vals = std::move(v);
      if (sub < mine) {
        // Provisional: an enclosing item is still being computed.
        cur.state = 0;
        --depth_;
        low = std::min(low, sub);
        return cur.vals;
      }
      if (sub > mine || !changed || round + 1 >= bound_[c]) {
        cur.state = 2;
        --depth_;
        return cur.vals;
      }
    }
  }

  std::vector<Term> Compute(int c, int i, int j, int &low) {
    const Component &comp = g_.component(c);
    std::vector<Term> raw;
    if (chart_.placeholder(c, i, j)) {
      int named = comp.op == Op::kSelfExtend ? comp.kids[0] : c;
      raw.push_back(make_placeholder(g_, named, chart_.slice(i, j)));
      return Finish(c, raw);
    }
    switch (comp.op) {
      case Op::kLexicon: {
        std::string w = chart_.slice(i, j);
        for (const auto &[word, m] : comp.lexicon->entries) {
          if (word == w) raw.push_back(m);
        }
        break;
      }
      case Op::kLiteral:
        raw.push_back(mk_star());
        break;
      case Op::kJoin:
      case Op::kSelfExtend:
        for (int k : comp.kids) {
          if (!chart_.has(k, i, j)) continue;
          for (auto &m : Attr(k, i, j, low)) raw.push_back(m);
        }
        break;
      case Op::kConcat:
      case Op::kAnaphoric:
      case Op::kCataphoric: {
        int a = comp.kids[0], b = comp.kids[1];
        for (int m = i; m <= j; ++m) {
          if (!chart_.has(a, i, m) || !chart_.has(b, m, j)) continue;
          std::vector<Term> left = Attr(a, i, m, low);
          if (left.empty()) continue;
          std::vector<Term> right = Attr(b, m, j, low);
          for (const auto &x : left) {
            for (const auto &y : right) {
              if (comp.op == Op::kConcat) {
                raw.push_back(concat_meaning(x, y, sorts_));
              } else if (comp.op == Op::kAnaphoric) {
                raw.push_back(compose_anaphoric(x, y, sorts_));
              } else {
                raw.push_back(compose_cataphoric(x, y, sorts_));
              }
            }
          }
        }
        break;
      }
      case Op::kRuleApp:
        for (auto &m : Attr(comp.kids[0], i, j, low)) {
          for (auto &o : apply_rule(*comp.rule, m, g_.alphabet(), sorts_)) {
            raw.push_back(o);
          }
        }
        break;
      case Op::kFunApp: {
        Type src = *g_.component(comp.kids[0]).type;
        Type f = typecheck(*comp.term, sorts_);
        bool constant = src.is_unit() && !(f.is_fun() && f.from().is_unit());
        for (auto &m : Attr(comp.kids[0], i, j, low)) {
          raw.push_back(constant ? *comp.term
                                 : spread_apply(*comp.term, m, sorts_));
        }
        break;
      }
      case Op::kRaise:
        for (auto &m : Attr(comp.kids[0], i, j, low)) {
          raw.push_back(context_raise(m, *comp.term, sorts_));
        }
        break;
      case Op::kInstantiate:
        for (auto &m : Attr(comp.kids[0], i, j, low)) {
          raw.push_back(context_instantiate(m, *comp.term, sorts_));
        }
        break;
    }
    return Finish(c, raw);
  }

  std::vector<Term> Finish(int c, const std::vector<Term> &raw) {
    GeneratorSet set(*g_.component(c).type);
    const RuleSet &rules = RuleSet::bundled();
    for (const auto &t : raw) {
      if (set.size() >= opts_.width) {
        diagnostics.push_back("generator set of '" + g_.component(c).name +
                              "' truncated at " + std::to_string(opts_.width));
        break;
      }
      set.insert(simplify(normalize(t, opts_.budget), rules, opts_.budget),
                 rules);
    }
    return set.terms();
  }

  const Grammar &g_;
  const Chart &chart_;
  const ParseOptions &opts_;
  Sorts sorts_;
  std::vector<int> bound_;
  std::unordered_map<std::size_t, Entry> memo_;
  int depth_ = 0;
};

}  // namespace

GeneratorSet attribute(const Grammar &grammar, const Chart &chart,
                       int component, int start, int end,
                       const ParseOptions &options) {
  GeneratorSet out(*grammar.component(component).type);
  if (!chart.has(component, start, end)) return out;
  Attributor attr(grammar, chart, options);
  for (const auto &t : attr.Get(component, start, end)) out.insert(t);
  return out;
}

std::vector<std::string> forest_dump(const Grammar &grammar, const Chart &chart,
                                     int component) {
  std::vector<std::string> out;
  int n = chart.length();
  if (!chart.has(component, 0, n)) return out;
  auto label = [&](const SpanRef &r) {
    return grammar.component(r.component).name + "[" +
           std::to_string(r.start) + "," + std::to_string(r.end) + "]";
  };
  std::vector<SpanRef> todo{{component, 0, n}};
  std::vector<SpanRef> seen;
  while (!todo.empty()) {
    SpanRef r = todo.back();
    todo.pop_back();
    if (std::find(seen.begin(), seen.end(), r) != seen.end()) continue;
    seen.push_back(r);
    ChartItem it = chart.item(r.component, r.start, r.end);
    if (it.placeholder) {
      out.push_back(label(r) + " -> placeholder " + quote(chart.slice(r.start, r.end)));
      continue;
    }
    if (it.children.empty()) {
      out.push_back(label(r) + " -> " + quote(chart.slice(r.start, r.end)));
      continue;
    }
    for (const auto &d : it.children) {
      std::string line = label(r) + " ->";
      for (const auto &k : d) {
        line += " " + label(k);
        todo.push_back(k);
      }
      out.push_back(line);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

ParseResult parse(const Grammar &grammar, const std::string &component,
                  const std::string &input, const ParseOptions &options) {
  ParseResult result;
  result.input = input;
  result.component = component;
  int id = grammar.require(component);
  result.meanings = GeneratorSet(*grammar.component(id).type);
  Skeleton sk = build_skeleton(grammar);
  Chart chart = recognize(sk, input, options.partial);
  int n = chart.length();
  if (!chart.has(id, 0, n)) return result;
  Attributor attr(grammar, chart, options);
  for (const auto &t : attr.Get(id, 0, n)) result.meanings.insert(t);
  result.diagnostics = attr.diagnostics;
  std::sort(result.diagnostics.begin(), result.diagnostics.end());
  result.diagnostics.erase(
      std::unique(result.diagnostics.begin(), result.diagnostics.end()),
      result.diagnostics.end());
  for (const auto &t : result.meanings.terms()) {
    if (!holes_of(t, grammar.alphabet()).empty()) result.partial = true;
  }
  if (options.forest) result.forest = forest_dump(grammar, chart, id);
  return result;
}

std::string to_text(const ParseResult &result, const Grammar &grammar) {
  std::ostringstream out;
  const Sorts &sorts = grammar.sorts();
  out << "input: " << quote(result.input) << "\n";
  out << "component: " << result.component << "\n";
  out << "partial: " << (result.partial ? "true" : "false") << "\n";
  for (const auto &t : result.meanings.terms()) {
    out << "meaning: " << print_term(t, sorts, &grammar.alphabet()) << "\n";
  }
  std::set<Hole> holes;
  for (const auto &t : result.meanings.terms()) {
    for (const auto &h : holes_of(t, grammar.alphabet())) holes.insert(h);
  }
  for (const auto &h : holes) out << "hole: " << hole_sexpr(h) << "\n";
  for (const auto &d : result.diagnostics) out << "diagnostic: " << d << "\n";
  for (const auto &f : result.forest) out << "forest: " << f << "\n";
  return out.str();
}

std::string to_json(const ParseResult &result, const Grammar &grammar) {
  using nlohmann::ordered_json;
  const Sorts &sorts = grammar.sorts();
  ordered_json j;
  j["input"] = result.input;
  j["component"] = result.component;
  j["partial"] = result.partial;
  ordered_json meanings = ordered_json::array();
  ordered_json holes = ordered_json::array();
  std::set<Hole> all;
  for (const auto &t : result.meanings.terms()) {
    meanings.push_back(print_term(t, sorts, &grammar.alphabet()));
    for (const auto &h : holes_of(t, grammar.alphabet())) all.insert(h);
  }
  for (const auto &h : all) holes.push_back(hole_sexpr(h));
  j["meanings"] = meanings;
  j["holes"] = holes;
  j["diagnostics"] = result.diagnostics;
  if (!result.forest.empty()) j["forest"] = result.forest;
  return j.dump(2);
}

}  // namespace uhog
