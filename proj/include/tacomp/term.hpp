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

// First-order terms, positions and substitutions.
//
// A Term is an immutable shared tree. Besides variables and function
// applications it has a third leaf kind, State, so that configurations of a
// tree automaton (terms with automaton states at some leaves) share the same
// representation as ordinary terms.

#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "tacomp/error.hpp"

namespace tacomp {

using StateId = std::uint32_t;

enum class TermKind : std::uint8_t { Variable, Application, State };

struct TermNode;

class Term {
 public:
  static Term variable(std::string name);
  static Term apply(std::string symbol, std::vector<Term> args = {});
  static Term state(StateId id);

  TermKind kind() const;
  bool is_variable() const { return kind() == TermKind::Variable; }
  bool is_application() const { return kind() == TermKind::Application; }
  bool is_state() const { return kind() == TermKind::State; }

  // Symbol name for applications, variable name for variables.
  const std::string& name() const;
  StateId state_id() const;
  const std::vector<Term>& args() const;
  std::size_t arity() const { return args().size(); }
  // 0-based child access.
  const Term& arg(std::size_t i) const { return args().at(i); }

  // Number of nodes.
  std::size_t size() const;
  std::size_t height() const;
  bool is_ground() const;
  bool has_states() const;

  std::string to_string() const;
  // Renders state leaves through `state_name`.
  std::string to_string(
      const std::function<std::string(StateId)>& state_name) const;

  // Identity of the shared node; stable for the lifetime of the term.
  const void* identity() const { return node_.get(); }

  friend bool operator==(const Term& a, const Term& b);
  // Canonical total order: kind, symbol/variable name, state, then children
  // lexicographically.
  friend std::strong_ordering operator<=>(const Term& a, const Term& b);

 private:
  explicit Term(std::shared_ptr<const TermNode> node) : node_(std::move(node)) {}
  std::shared_ptr<const TermNode> node_;
};

struct TermNode {
  TermKind kind;
  std::string name;
  StateId state = 0;
  std::vector<Term> args;
  std::size_t size = 1;
  std::size_t height = 0;
  bool ground = true;
  bool has_states = false;
};

// Size first, then canonical order. Used to pick smallest witnesses.
struct BySizeThenCanonical {
  bool operator()(const Term& a, const Term& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

// ---------------------------------------------------------------------------
// Signatures

struct Symbol {
  std::string name;
  std::size_t arity = 0;
  friend bool operator==(const Symbol&, const Symbol&) = default;
  friend auto operator<=>(const Symbol&, const Symbol&) = default;
};

using SymbolId = std::uint32_t;

// A finite ranked alphabet. Symbols are kept sorted by name, so a SymbolId is
// also the symbol's rank in the canonical order.
class Signature {
 public:
  Signature() = default;
  explicit Signature(std::vector<Symbol> symbols);

  void add(std::string name, std::size_t arity);
  bool contains(std::string_view name) const;
  std::optional<std::size_t> arity(std::string_view name) const;
  std::optional<SymbolId> id(std::string_view name) const;
  const Symbol& symbol(SymbolId id) const { return symbols_.at(id); }
  const std::vector<Symbol>& symbols() const { return symbols_; }
  std::size_t size() const { return symbols_.size(); }

  // Throws UnknownSymbol / ArityMismatch. State leaves are accepted only when
  // `allow_states` is set, variables only when `allow_variables` is set.
  void validate(const Term& t, bool allow_variables = true,
                bool allow_states = false) const;

  friend bool operator==(const Signature&, const Signature&) = default;

 private:
  std::vector<Symbol> symbols_;
  std::map<std::string, SymbolId, std::less<>> index_;
  void reindex();
};

// ---------------------------------------------------------------------------
// Positions

// A position is a word of 1-based child indices; the empty word is the root.
using Position = std::vector<std::size_t>;

std::string to_string(const Position& p);
// All positions of `t` in lexicographic order (root first).
std::vector<Position> positions(const Term& t);
const Term& subterm_at(const Term& t, const Position& p);
Term replace_at(const Term& t, const Position& p, const Term& replacement);
// True when `p` is a strict prefix of `q`.
bool is_strict_prefix(const Position& p, const Position& q);

// ---------------------------------------------------------------------------
// Substitutions

using Substitution = std::map<std::string, Term>;

Term substitute(const Substitution& sigma, const Term& t);
// Variable names in first-occurrence (left-to-right, pre-order) order.
std::vector<std::string> variables(const Term& t);
std::set<std::string> variable_set(const Term& t);
bool is_linear(const Term& t);
// Linear syntactic matching; throws NonLinearPattern for non-linear patterns.
std::optional<Substitution> match(const Term& pattern, const Term& subject);
// Matching that also accepts non-linear patterns (repeated variables must
// bind syntactically equal subterms).
std::optional<Substitution> match_nonlinear(const Term& pattern,
                                            const Term& subject);

std::string to_string(const Substitution& sigma);

}  // namespace tacomp
