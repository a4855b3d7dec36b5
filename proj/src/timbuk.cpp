// Copyright 2026 The tacomp Authors.
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

#include "tacomp/timbuk.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

namespace tacomp {

namespace {

enum class Tok { Ident, LParen, RParen, Comma, Colon, Arrow, ArrowR, ArrowE, Equals, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t line;
  std::size_t col;
};

bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
}

std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> out;
  std::size_t line = 1, col = 1, i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (s[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  while (i < s.size()) {
    char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    if (c == '#') {
      while (i < s.size() && s[i] != '\n') advance(1);
      continue;
    }
    const std::size_t l = line, k = col;
    auto single = [&](Tok t) {
      out.push_back({t, std::string(1, c), l, k});
      advance(1);
    };
    switch (c) {
      case '(': single(Tok::LParen); continue;
      case ')': single(Tok::RParen); continue;
      case ',': single(Tok::Comma); continue;
      case ':': single(Tok::Colon); continue;
      case '=': single(Tok::Equals); continue;
      default: break;
    }
    if (c == '-' && i + 1 < s.size() && s[i + 1] == '>') {
      // "->R" / "->E" only when the color letter stands alone.
      if (i + 2 < s.size() && (s[i + 2] == 'R' || s[i + 2] == 'E') &&
          (i + 3 >= s.size() || !ident_char(s[i + 3]))) {
        Tok t = s[i + 2] == 'R' ? Tok::ArrowR : Tok::ArrowE;
        out.push_back({t, std::string(s.substr(i, 3)), l, k});
        advance(3);
      } else {
        out.push_back({Tok::Arrow, "->", l, k});
        advance(2);
      }
      continue;
    }
    if (ident_char(c)) {
      std::size_t j = i;
      while (j < s.size() && ident_char(s[j])) ++j;
      out.push_back({Tok::Ident, std::string(s.substr(i, j - i)), l, k});
      advance(j - i);
      continue;
    }
    throw ParseError(ErrorKind::Syntax, std::string("unexpected character '") + c + "'", l, k);
  }
  out.push_back({Tok::End, "", line, col});
  return out;
}

const std::set<std::string>& section_keywords() {
  static const std::set<std::string> k{"Ops", "Vars", "TRS", "Automaton", "Equations"};
  return k;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : toks_(tokenize(text)) {}

  Specification spec() {
    Specification out;
    while (peek().kind != Tok::End) {
      const Token& t = expect(Tok::Ident, "a section keyword");
      if (t.text == "Ops") {
        while (at_plain_ident()) {
          const Token& name = next();
          expect(Tok::Colon, "':'");
          const Token& ar = expect(Tok::Ident, "an arity");
          std::size_t arity = parse_number(ar);
          if (std::find(out.variables.begin(), out.variables.end(), name.text) !=
              out.variables.end())
            throw ParseError(ErrorKind::DuplicateSymbol,
                             "symbol '" + name.text + "' is also a variable",
                             name.line, name.col);
          try {
            out.signature.add(name.text, arity);
          } catch (const Error& e) {
            throw ParseError(e.kind(), e.what(), name.line, name.col);
          }
        }
      } else if (t.text == "Vars") {
        while (at_plain_ident()) {
          const Token& name = next();
          if (out.signature.contains(name.text))
            throw ParseError(ErrorKind::DuplicateSymbol,
                             "variable '" + name.text + "' is also a symbol",
                             name.line, name.col);
          out.variables.push_back(name.text);
        }
      } else if (t.text == "TRS") {
        std::string name = expect(Tok::Ident, "a rewrite system name").text;
        std::vector<Rule> rules;
        while (at_plain_ident()) {
          Term l = term(out.signature, out.variables);
          expect(Tok::Arrow, "'->'");
          Term r = term(out.signature, out.variables);
          rules.push_back({std::move(l), std::move(r)});
        }
        out.trss.emplace_back(std::move(name), std::move(rules));
      } else if (t.text == "Automaton") {
        std::string name = expect(Tok::Ident, "an automaton name").text;
        out.automata.emplace_back(std::move(name), automaton_body(out.signature));
      } else if (t.text == "Equations") {
        std::string name = expect(Tok::Ident, "an equation set name").text;
        keyword("Rules");
        std::vector<Equation> eqs;
        while (at_plain_ident()) {
          Term l = term(out.signature, out.variables);
          expect(Tok::Equals, "'='");
          Term r = term(out.signature, out.variables);
          eqs.push_back({std::move(l), std::move(r)});
        }
        out.equation_sets.emplace_back(std::move(name), std::move(eqs));
      } else {
        fail(t, "unknown section '" + t.text + "'");
      }
    }
    return out;
  }

  TreeAutomaton automaton_body(const Signature& sig) {
    TreeAutomaton A(sig);
    keyword("States");
    while (at_plain_ident() && peek().text != "Final") {
      const Token& q = next();
      if (A.find_state(q.text)) fail(q, "duplicate state '" + q.text + "'", ErrorKind::DuplicateState);
      A.add_state(q.text);
      if (peek().kind == Tok::Colon) {
        next();
        expect(Tok::Ident, "a state arity");
      }
    }
    keyword("Final");
    keyword("States");
    while (at_plain_ident() && peek().text != "Transitions") A.set_final(state(A, next()));
    keyword("Transitions");
    while (at_plain_ident() && peek().text != "States") transition(A);
    return A;
  }

  Term term(const Signature& sig, const std::vector<std::string>& vars) {
    const Token& t = expect(Tok::Ident, "a term");
    if (auto ar = sig.arity(t.text)) {
      std::vector<Term> args;
      if (*ar > 0) {
        expect(Tok::LParen, "'('");
        for (std::size_t i = 0; i < *ar; ++i) {
          if (i) expect(Tok::Comma, "','");
          args.push_back(term(sig, vars));
        }
        if (peek().kind == Tok::Comma)
          fail(peek(), "too many arguments for '" + t.text + "'", ErrorKind::ArityMismatch);
        expect(Tok::RParen, "')'");
      } else if (peek().kind == Tok::LParen) {
        fail(peek(), "constant '" + t.text + "' takes no arguments", ErrorKind::ArityMismatch);
      }
      return Term::apply(t.text, std::move(args));
    }
    if (std::find(vars.begin(), vars.end(), t.text) != vars.end()) {
      if (peek().kind == Tok::LParen) fail(peek(), "variable '" + t.text + "' applied to arguments");
      return Term::variable(t.text);
    }
    fail(t, "undeclared symbol or variable '" + t.text + "'", ErrorKind::UndeclaredName);
  }

  void expect_end() {
    if (peek().kind != Tok::End) fail(peek(), "trailing input '" + peek().text + "'");
  }

 private:
  std::vector<Token> toks_;
  std::size_t pos_ = 0;

  const Token& peek() const { return toks_[pos_]; }
  const Token& next() { return toks_[pos_ == toks_.size() - 1 ? pos_ : pos_++]; }

  [[noreturn]] void fail(const Token& t, const std::string& msg,
                         ErrorKind kind = ErrorKind::Syntax) const {
    throw ParseError(kind, msg, t.line, t.col);
  }

  const Token& expect(Tok k, const std::string& what) {
    if (peek().kind != k)
      fail(peek(), "expected " + what + (peek().kind == Tok::End ? " at end of input"
                                                               : ", found '" + peek().text + "'"));
    return next();
  }

  void keyword(const std::string& word) {
    const Token& t = expect(Tok::Ident, "'" + word + "'");
    if (t.text != word) fail(t, "expected '" + word + "', found '" + t.text + "'");
  }

  bool at_plain_ident() const {
    return peek().kind == Tok::Ident && !section_keywords().count(peek().text);
  }

  std::size_t parse_number(const Token& t) const {
    if (t.text.empty() ||
        !std::all_of(t.text.begin(), t.text.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
      fail(t, "expected a number, found '" + t.text + "'");
    return std::stoul(t.text);
  }

  StateId state(const TreeAutomaton& A, const Token& t) const {
    auto q = A.find_state(t.text);
    if (!q) fail(t, "undeclared state '" + t.text + "'", ErrorKind::UnknownState);
    return *q;
  }

  void transition(TreeAutomaton& A) {
    const Token& head = next();
    const Signature& sig = A.signature();
    auto ar = sig.arity(head.text);
    bool is_symbol = ar && (*ar > 0 || (peek().kind != Tok::ArrowR && peek().kind != Tok::ArrowE));
    if (!is_symbol) {
      StateId from = state(A, head);
      const Token& arrow = next();
      if (arrow.kind == Tok::Arrow)
        fail(arrow, "epsilon transitions need a color (->R or ->E)", ErrorKind::UncoloredEpsilon);
      if (arrow.kind != Tok::ArrowR && arrow.kind != Tok::ArrowE)
        fail(arrow, "expected '->R' or '->E'");
      StateId to = state(A, expect(Tok::Ident, "a state"));
      A.add_epsilon(from, to, arrow.kind == Tok::ArrowR ? Color::R : Color::E);
      return;
    }
    std::vector<StateId> args;
    if (*ar > 0) {
      expect(Tok::LParen, "'('");
      for (std::size_t i = 0; i < *ar; ++i) {
        if (i) expect(Tok::Comma, "','");
        args.push_back(state(A, expect(Tok::Ident, "a state")));
      }
      if (peek().kind == Tok::Comma)
        fail(peek(), "too many arguments for '" + head.text + "'", ErrorKind::ArityMismatch);
      expect(Tok::RParen, "')'");
    }
    expect(Tok::Arrow, "'->'");
    StateId target = state(A, expect(Tok::Ident, "a target state"));
    A.add_delta(head.text, std::move(args), target);
  }
};

template <class Named>
const auto& pick(const std::vector<Named>& items, std::string_view name,
                 const char* what) {
  if (items.empty()) throw Error(ErrorKind::UndeclaredName, std::string("no ") + what + " section");
  if (name.empty()) return items.front().second;
  for (const auto& [n, v] : items)
    if (n == name) return v;
  throw Error(ErrorKind::UndeclaredName,
              std::string("no ") + what + " named '" + std::string(name) + "'");
}

}  // namespace

Trs Specification::trs(std::string_view name) const {
  return Trs(signature, pick(trss, name, "TRS"));
}

const TreeAutomaton& Specification::automaton(std::string_view name) const {
  return pick(automata, name, "Automaton");
}

const std::vector<Equation>& Specification::equations(std::string_view name) const {
  return pick(equation_sets, name, "Equations");
}

Specification parse_spec(std::string_view text) { return Parser(text).spec(); }

Specification parse_spec_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::UndeclaredName, "cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_spec(ss.str());
}

TreeAutomaton parse_automaton_body(std::string_view text, const Signature& sig) {
  Parser p(text);
  TreeAutomaton A = p.automaton_body(sig);
  p.expect_end();
  return A;
}

Term parse_term(std::string_view text, const Signature& sig,
                const std::vector<std::string>& variables) {
  Parser p(text);
  Term t = p.term(sig, variables);
  p.expect_end();
  return t;
}

// ---------------------------------------------------------------------------
// Rendering

std::string render_ops(const Signature& sig) {
  std::string out = "Ops";
  for (const Symbol& s : sig.symbols()) out += " " + s.name + ":" + std::to_string(s.arity);
  return out + "\n";
}

std::string render_automaton(const TreeAutomaton& A, std::string_view name) {
  std::string out = "Automaton " + std::string(name) + "\nStates";
  for (StateId q = 0; q < A.num_states(); ++q) out += " " + A.name(q);
  out += "\nFinal States";
  for (StateId q : A.finals()) out += " " + A.name(q);
  out += "\nTransitions\n";
  for (const Delta& d : A.deltas()) {
    out += A.signature().symbol(d.symbol).name;
    if (!d.args.empty()) {
      out += '(';
      for (std::size_t i = 0; i < d.args.size(); ++i) {
        if (i) out += ',';
        out += A.name(d.args[i]);
      }
      out += ')';
    }
    out += "->" + A.name(d.target) + "\n";
  }
  for (const Epsilon& e : A.epsilons())
    out += A.name(e.from) + " ->" + to_string(e.color) + " " + A.name(e.to) + "\n";
  return out;
}

std::string render_rules(std::string_view name, std::span<const Rule> rules) {
  std::string out = "TRS " + std::string(name) + "\n";
  for (const Rule& r : rules) out += r.to_string() + "\n";
  return out;
}

std::string render_equations(std::string_view name,
                             std::span<const Equation> equations) {
  std::string out = "Equations " + std::string(name) + "\nRules\n";
  for (const Equation& e : equations) out += e.to_string() + "\n";
  return out;
}

std::string render_spec(
    const Signature& sig,
    const std::vector<std::pair<std::string, const TreeAutomaton*>>& automata) {
  std::string out = render_ops(sig);
  for (const auto& [name, A] : automata) out += "\n" + render_automaton(*A, name);
  return out;
}

}  // namespace tacomp
