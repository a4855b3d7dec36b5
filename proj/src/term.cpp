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

#include "tacomp/term.hpp"

#include <algorithm>

namespace tacomp {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidPosition: return "invalid-position";
    case ErrorKind::NonLinearPattern: return "non-linear-pattern";
    case ErrorKind::UnknownSymbol: return "unknown-symbol";
    case ErrorKind::ArityMismatch: return "arity-mismatch";
    case ErrorKind::DuplicateSymbol: return "duplicate-symbol";
    case ErrorKind::UnboundVariable: return "unbound-variable";
    case ErrorKind::VariableLhs: return "variable-lhs";
    case ErrorKind::NotLeftLinear: return "not-left-linear";
    case ErrorKind::ColoredInput: return "colored-input";
    case ErrorKind::UncoloredEpsilon: return "uncolored-epsilon";
    case ErrorKind::SignatureMismatch: return "signature-mismatch";
    case ErrorKind::NotPairAutomaton: return "not-pair-automaton";
    case ErrorKind::UnknownState: return "unknown-state";
    case ErrorKind::DuplicateState: return "duplicate-state";
    case ErrorKind::Syntax: return "syntax-error";
    case ErrorKind::UndeclaredName: return "undeclared-name";
    case ErrorKind::StateLimit: return "state-limit-exceeded";
  }
  return "unknown";
}

// ---------------------------------------------------------------------------
// Term

Term Term::variable(std::string name) {
  auto n = std::make_shared<TermNode>();
  n->kind = TermKind::Variable;
  n->name = std::move(name);
  n->ground = false;
  return Term(std::move(n));
}

Term Term::apply(std::string symbol, std::vector<Term> args) {
  auto n = std::make_shared<TermNode>();
  n->kind = TermKind::Application;
  n->name = std::move(symbol);
  for (const Term& a : args) {
    n->size += a.size();
    n->height = std::max(n->height, a.height() + 1);
    n->ground = n->ground && a.is_ground();
    n->has_states = n->has_states || a.has_states();
  }
  n->args = std::move(args);
  return Term(std::move(n));
}

Term Term::state(StateId id) {
  auto n = std::make_shared<TermNode>();
  n->kind = TermKind::State;
  n->state = id;
  n->has_states = true;
  return Term(std::move(n));
}

TermKind Term::kind() const { return node_->kind; }
const std::string& Term::name() const { return node_->name; }
StateId Term::state_id() const { return node_->state; }
const std::vector<Term>& Term::args() const { return node_->args; }
std::size_t Term::size() const { return node_->size; }
std::size_t Term::height() const { return node_->height; }
bool Term::is_ground() const { return node_->ground; }
bool Term::has_states() const { return node_->has_states; }

std::string Term::to_string() const {
  return to_string([](StateId s) { return "@" + std::to_string(s); });
}

std::string Term::to_string(
    const std::function<std::string(StateId)>& state_name) const {
  std::string out;
  std::function<void(const Term&)> rec = [&](const Term& t) {
    switch (t.kind()) {
      case TermKind::State: out += state_name(t.state_id()); return;
      case TermKind::Variable: out += t.name(); return;
      case TermKind::Application:
        out += t.name();
        if (t.arity() == 0) return;
        out += '(';
        for (std::size_t i = 0; i < t.arity(); ++i) {
          if (i) out += ',';
          rec(t.arg(i));
        }
        out += ')';
        return;
    }
  };
  rec(*this);
  return out;
}

bool operator==(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind() || a.size() != b.size()) return false;
  if (a.state_id() != b.state_id() || a.name() != b.name()) return false;
  return a.args() == b.args();
}

std::strong_ordering operator<=>(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  if (auto c = a.kind() <=> b.kind(); c != 0) return c;
  if (auto c = a.name().compare(b.name()); c != 0)
    return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  if (auto c = a.state_id() <=> b.state_id(); c != 0) return c;
  const auto& x = a.args();
  const auto& y = b.args();
  for (std::size_t i = 0; i < x.size() && i < y.size(); ++i)
    if (auto c = x[i] <=> y[i]; c != 0) return c;
  return x.size() <=> y.size();
}

// ---------------------------------------------------------------------------
// Signature

Signature::Signature(std::vector<Symbol> symbols) {
  for (auto& s : symbols) add(std::move(s.name), s.arity);
}

void Signature::reindex() {
  std::sort(symbols_.begin(), symbols_.end());
  index_.clear();
  for (SymbolId i = 0; i < symbols_.size(); ++i) index_[symbols_[i].name] = i;
}

void Signature::add(std::string name, std::size_t arity) {
  if (name.empty()) throw Error(ErrorKind::Syntax, "empty symbol name");
  if (auto it = index_.find(name); it != index_.end()) {
    if (symbols_[it->second].arity == arity) return;
    throw Error(ErrorKind::DuplicateSymbol,
                "symbol '" + name + "' declared with two arities");
  }
  symbols_.push_back({std::move(name), arity});
  reindex();
}

bool Signature::contains(std::string_view name) const {
  return index_.find(name) != index_.end();
}

std::optional<std::size_t> Signature::arity(std::string_view name) const {
  auto it = index_.find(name);
  if (it == index_.end()) return std::nullopt;
  return symbols_[it->second].arity;
}

std::optional<SymbolId> Signature::id(std::string_view name) const {
  auto it = index_.find(name);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

void Signature::validate(const Term& t, bool allow_variables,
                         bool allow_states) const {
  switch (t.kind()) {
    case TermKind::Variable:
      if (!allow_variables)
        throw Error(ErrorKind::UnboundVariable,
                    "variable '" + t.name() + "' not allowed here");
      return;
    case TermKind::State:
      if (!allow_states)
        throw Error(ErrorKind::UnknownSymbol, "state leaf not allowed here");
      return;
    case TermKind::Application: {
      auto a = arity(t.name());
      if (!a) throw Error(ErrorKind::UnknownSymbol,
                          "unknown symbol '" + t.name() + "'");
      if (*a != t.arity())
        throw Error(ErrorKind::ArityMismatch,
                    "symbol '" + t.name() + "' expects " + std::to_string(*a) +
                        " arguments, got " + std::to_string(t.arity()));
      for (const Term& c : t.args()) validate(c, allow_variables, allow_states);
      return;
    }
  }
}

// ---------------------------------------------------------------------------
// Positions

std::string to_string(const Position& p) {
  if (p.empty()) return "e";
  std::string out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) out += '.';
    out += std::to_string(p[i]);
  }
  return out;
}

std::vector<Position> positions(const Term& t) {
  std::vector<Position> out;
  Position cur;
  std::function<void(const Term&)> rec = [&](const Term& u) {
    out.push_back(cur);
    for (std::size_t i = 0; i < u.arity(); ++i) {
      cur.push_back(i + 1);
      rec(u.arg(i));
      cur.pop_back();
    }
  };
  rec(t);
  return out;
}

const Term& subterm_at(const Term& t, const Position& p) {
  const Term* cur = &t;
  for (std::size_t i : p) {
    if (i == 0 || i > cur->arity())
      throw Error(ErrorKind::InvalidPosition,
                  "position " + to_string(p) + " not in " + t.to_string());
    cur = &cur->arg(i - 1);
  }
  return *cur;
}

namespace {

Term replace_rec(const Term& t, const Position& p, std::size_t depth,
                 const Term& replacement) {
  if (depth == p.size()) return replacement;
  std::size_t i = p[depth];
  if (i == 0 || i > t.arity() || !t.is_application())
    throw Error(ErrorKind::InvalidPosition,
                "position " + to_string(p) + " not in term");
  std::vector<Term> args = t.args();
  args[i - 1] = replace_rec(t.arg(i - 1), p, depth + 1, replacement);
  return Term::apply(t.name(), std::move(args));
}

}  // namespace

Term replace_at(const Term& t, const Position& p, const Term& replacement) {
  return replace_rec(t, p, 0, replacement);
}

bool is_strict_prefix(const Position& p, const Position& q) {
  return p.size() < q.size() && std::equal(p.begin(), p.end(), q.begin());
}

// ---------------------------------------------------------------------------
// Substitutions

Term substitute(const Substitution& sigma, const Term& t) {
  switch (t.kind()) {
    case TermKind::Variable: {
      auto it = sigma.find(t.name());
      return it == sigma.end() ? t : it->second;
    }
    case TermKind::State: return t;
    case TermKind::Application: {
      if (t.is_ground() && !t.has_states()) return t;
      std::vector<Term> args;
      args.reserve(t.arity());
      for (const Term& a : t.args()) args.push_back(substitute(sigma, a));
      return Term::apply(t.name(), std::move(args));
    }
  }
  return t;
}

std::vector<std::string> variables(const Term& t) {
  std::vector<std::string> out;
  std::function<void(const Term&)> rec = [&](const Term& u) {
    if (u.is_variable()) {
      if (std::find(out.begin(), out.end(), u.name()) == out.end())
        out.push_back(u.name());
      return;
    }
    for (const Term& a : u.args()) rec(a);
  };
  rec(t);
  return out;
}

std::set<std::string> variable_set(const Term& t) {
  auto v = variables(t);
  return {v.begin(), v.end()};
}

bool is_linear(const Term& t) {
  std::set<std::string> seen;
  bool ok = true;
  std::function<void(const Term&)> rec = [&](const Term& u) {
    if (!ok) return;
    if (u.is_variable()) {
      ok = seen.insert(u.name()).second;
      return;
    }
    for (const Term& a : u.args()) rec(a);
  };
  rec(t);
  return ok;
}

namespace {

bool match_rec(const Term& p, const Term& s, Substitution& sigma) {
  if (p.is_variable()) {
    auto [it, fresh] = sigma.emplace(p.name(), s);
    return fresh || it->second == s;
  }
  if (p.kind() != s.kind()) return false;
  if (p.is_state()) return p.state_id() == s.state_id();
  if (p.name() != s.name() || p.arity() != s.arity()) return false;
  for (std::size_t i = 0; i < p.arity(); ++i)
    if (!match_rec(p.arg(i), s.arg(i), sigma)) return false;
  return true;
}

}  // namespace

std::optional<Substitution> match_nonlinear(const Term& pattern,
                                            const Term& subject) {
  Substitution sigma;
  if (!match_rec(pattern, subject, sigma)) return std::nullopt;
  return sigma;
}

std::optional<Substitution> match(const Term& pattern, const Term& subject) {
  if (!is_linear(pattern))
    throw Error(ErrorKind::NonLinearPattern,
                "pattern " + pattern.to_string() + " is not linear");
  return match_nonlinear(pattern, subject);
}

std::string to_string(const Substitution& sigma) {
  std::string out = "{";
  bool first = true;
  for (const auto& [x, t] : sigma) {
    if (!first) out += ", ";
    first = false;
    out += x + "->" + t.to_string();
  }
  return out + "}";
}

}  // namespace tacomp
