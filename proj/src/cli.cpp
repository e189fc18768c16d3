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

#include "uhog/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "uhog/context.hpp"
#include "uhog/errors.hpp"
#include "uhog/grammar.hpp"
#include "uhog/parser.hpp"
#include "uhog/robustness.hpp"
#include "uhog/syntax.hpp"

namespace uhog {

namespace {

using Json = nlohmann::ordered_json;

struct Options {
  std::string command;
  std::string grammar;
  std::string component;
  bool partial = false;
  bool json = false;
  bool forest = false;
  std::size_t width = 64;
  long budget = kDefaultBudget;
  int depth = 8;
  std::vector<std::string> inputs;
};

std::string Component(const Grammar &grammar, const Options &opts) {
  if (!opts.component.empty()) return opts.component;
  if (grammar.main()) return *grammar.main();
  const auto named = grammar.named();
  if (named.empty()) throw UnknownComponent("(none)", 0);
  return named.back();
}

std::string ReadFile(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot read " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

int Check(Grammar &grammar, const Options &opts, std::ostream &out,
          std::ostream &err) {
  TypeTable table = validate(grammar);
  if (opts.json) {
    Json doc = Json::object();
    Json comps = Json::array();
    for (const auto &[name, type] : table.types) {
      comps.push_back({{"name", name}, {"type", type.sexpr(grammar.sorts())}});
    }
    doc["components"] = comps;
    doc["warnings"] = table.warnings;
    out << doc.dump(2) << "\n";
    return kExitOk;
  }
  for (const auto &[name, type] : table.types) {
    out << name << " : " << type.sexpr(grammar.sorts()) << "\n";
  }
  for (const auto &w : table.warnings) err << "warning: " << w << "\n";
  return kExitOk;
}

int Axioms(const Grammar &grammar, const Options &opts, std::ostream &out) {
  AxiomSet ax = emit_axioms(grammar);
  const Sorts &sorts = grammar.sorts();
  const Alphabet *alpha = &grammar.alphabet();
  if (opts.json) {
    Json doc = Json::object();
    Json formulas = Json::array();
    for (const auto &[name, f] : ax.formulas) {
      formulas.push_back({{"component", name}, {"formula", print_term(f, sorts, alpha)}});
    }
    doc["formulas"] = formulas;
    Json consts = Json::array();
    for (const auto &c : ax.constants) consts.push_back(print_term(c, sorts));
    doc["constants"] = consts;
    if (ax.compact) doc["compact"] = print_term(*ax.compact, sorts, alpha);
    out << doc.dump(2) << "\n";
    return kExitOk;
  }
  for (const auto &[name, f] : ax.formulas) {
    out << name << ": " << print_term(f, sorts, alpha) << "\n";
  }
  if (ax.compact) out << "compact: " << print_term(*ax.compact, sorts, alpha) << "\n";
  return kExitOk;
}

int Parse(const Grammar &grammar, const Options &opts, std::ostream &out) {
  ParseOptions po;
  po.partial = opts.partial;
  po.width = opts.width;
  po.budget = opts.budget;
  po.forest = opts.forest;
  std::string comp = Component(grammar, opts);
  int code = kExitOk;
  Json all = Json::array();
  for (const auto &input : opts.inputs) {
    ParseResult r = opts.partial ? partial_parse(grammar, comp, input, po)
                                 : parse(grammar, comp, input, po);
    if (r.meanings.empty()) code = kExitNoParse;
    if (opts.json) {
      all.push_back(Json::parse(to_json(r, grammar)));
    } else {
      out << to_text(r, grammar);
    }
  }
  if (opts.json) out << (all.size() == 1 ? all[0] : all).dump(2) << "\n";
  return code;
}

int Translate(const Grammar &grammar, const Options &opts, std::ostream &out) {
  std::string comp = Component(grammar, opts);
  for (const auto &input : opts.inputs) {
    Term t = translate(grammar, comp, input);
    if (opts.json) {
      Json doc = {{"input", input},
                  {"component", comp},
                  {"meaning", print_term(t, grammar.sorts(), &grammar.alphabet())}};
      out << doc.dump(2) << "\n";
    } else {
      out << print_term(t, grammar.sorts(), &grammar.alphabet()) << "\n";
    }
  }
  return kExitOk;
}

int Generate(const Grammar &grammar, const Options &opts, std::ostream &out) {
  std::string comp = Component(grammar, opts);
  int code = kExitOk;
  for (const auto &input : opts.inputs) {
    Term meaning = parse_term(input, grammar.scope());
    Expression e = express(grammar, comp, meaning, opts.depth);
    std::string text = e.found ? e.word
                               : print_term(*e.placeholder, grammar.sorts(),
                                            &grammar.alphabet());
    if (!e.found) code = kExitNoParse;
    if (opts.json) {
      Json doc = {{"meaning", input}, {"found", e.found}, {"expression", text}};
      out << doc.dump(2) << "\n";
    } else {
      out << (e.found ? "expression: " : "placeholder: ") << text << "\n";
    }
  }
  return code;
}

int Resolve(const Grammar &grammar, const Options &opts, std::ostream &out) {
  const Sorts &sorts = grammar.sorts();
  const Alphabet *alpha = &grammar.alphabet();
  for (const auto &path : opts.inputs) {
    StoredParse stored = read_stored_parse(ReadFile(path), grammar);
    Json doc = Json::object();
    doc["input"] = stored.input;
    Json meanings = Json::array();
    for (const auto &m : stored.meanings) {
      PartialMeaning p =
          resolve_placeholders(partial_meaning(m, grammar.alphabet()), grammar);
      Json holes = Json::array();
      for (const auto &h : p.holes) holes.push_back(hole_sexpr(h));
      meanings.push_back(
          {{"meaning", print_term(p.meaning, sorts, alpha)}, {"holes", holes}});
      if (!opts.json) {
        out << "meaning: " << print_term(p.meaning, sorts, alpha) << "\n";
        for (const auto &h : p.holes) out << "hole: " << hole_sexpr(h) << "\n";
      }
    }
    doc["meanings"] = meanings;
    if (opts.json) out << doc.dump(2) << "\n";
  }
  return kExitOk;
}

void PrintState(const ContextState &state, std::size_t from, std::ostream &out) {
  for (std::size_t i = from; i < state.transcript.size(); ++i) {
    const std::string &line = state.transcript[i];
    if (line.rfind("> ", 0) == 0) continue;
    out << line << "\n";
  }
}

int Repl(const Grammar &grammar, const Options &opts, std::istream &in,
         std::ostream &out) {
  if (opts.component.empty() && !grammar.main()) {
    throw Error("grammar declares no main component");
  }
  const Sorts &sorts = grammar.sorts();
  const Alphabet *alpha = &grammar.alphabet();
  ContextState state;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line == ":quit") break;
    if (line == ":facts") {
      for (const auto &f : state.facts) out << print_term(f, sorts, alpha) << "\n";
      continue;
    }
    if (line == ":store") {
      for (const auto &[sym, v] : state.store) {
        out << sym << " = " << print_term(v, sorts, alpha) << "\n";
      }
      continue;
    }
    if (line.rfind(":save ", 0) == 0) {
      std::ofstream file(line.substr(6));
      for (const auto &l : state.transcript) file << l << "\n";
      out << (file ? "saved" : "cannot write") << "\n";
      continue;
    }
    std::size_t mark = state.transcript.size();
    try {
      auto [program, answers] =
          interpret_text(grammar, line, state, opts.component);
      PrintState(state, mark, out);
      for (const auto &a : answers) out << answer_name(a) << "\n";
    } catch (const NoParse &) {
      out << "no parse\n";
    } catch (const Ambiguous &e) {
      out << "ambiguous: " << e.what() << "\n";
    }
  }
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string> &args, std::istream &in,
            std::ostream &out, std::ostream &err) {
  CLI::App app{"Higher order grammar engine", "uhog"};
  app.require_subcommand(1);
  Options opts;
  auto add = [&](const std::string &name, const std::string &desc,
                 bool needs_inputs) {
    CLI::App *sub = app.add_subcommand(name, desc);
    sub->add_option("-g,--grammar", opts.grammar, "grammar file")->required();
    sub->add_option("-s,--component", opts.component, "component name");
    sub->add_flag("--partial", opts.partial, "partial translation mode");
    sub->add_flag("--json", opts.json, "JSON output");
    sub->add_flag("--forest", opts.forest, "include the parse forest");
    sub->add_option("--width", opts.width, "generator set cap");
    sub->add_option("--budget", opts.budget, "normalization step budget");
    sub->add_option("--depth", opts.depth, "generation depth");
    auto *inputs = sub->add_option("inputs", opts.inputs, "inputs");
    if (needs_inputs) inputs->required();
    sub->callback([&opts, name] { opts.command = name; });
  };
  add("check", "list component types", false);
  add("axioms", "emit the grammar axioms", false);
  add("parse", "parse inputs", true);
  add("translate", "unique meaning of inputs", true);
  add("generate", "expression of meaning terms", true);
  add("repl", "interactive interpretation", false);
  add("resolve", "resolve placeholders of stored parses", true);

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError &e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  Grammar grammar = load_grammar("");
  try {
    grammar = load_grammar_file(opts.grammar);
  } catch (const Error &e) {
    err << opts.grammar << ":" << e.what() << "\n";
    return kExitGrammar;
  }
  try {
    if (opts.command == "check") return Check(grammar, opts, out, err);
    if (opts.command == "axioms") return Axioms(grammar, opts, out);
    if (opts.command == "parse") return Parse(grammar, opts, out);
    if (opts.command == "translate") return Translate(grammar, opts, out);
    if (opts.command == "generate") return Generate(grammar, opts, out);
    if (opts.command == "resolve") return Resolve(grammar, opts, out);
    if (opts.command == "repl") return Repl(grammar, opts, in, out);
  } catch (const NoParse &e) {
    err << e.what() << "\n";
    return kExitNoParse;
  } catch (const Ambiguous &e) {
    err << e.what() << "\n";
    return kExitNoParse;
  } catch (const UnknownSymbol &e) {
    err << e.what() << "\n";
    return kExitNoParse;
  } catch (const UnknownComponent &e) {
    err << e.what() << "\n";
    return kExitUsage;
  } catch (const Error &e) {
    err << e.what() << "\n";
    return kExitGrammar;
  }
  return kExitUsage;
}

}  // namespace uhog
