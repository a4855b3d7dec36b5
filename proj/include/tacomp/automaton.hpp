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

// Bottom-up tree automata with colored epsilon transitions.
//
// States are dense integer ids. Epsilon transitions carry a color: R for
// rewriting edges, E for equation edges. Forward and backward epsilon
// closures are maintained incrementally on every epsilon insertion, so all
// const queries are safe to run concurrently.

#pragma once

#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "tacomp/term.hpp"

namespace tacomp {

enum class Color : std::uint8_t { R, E };

const char* to_string(Color c);

// Component names of a product state.
struct PairComponents {
  std::string left;
  std::string right;
  friend bool operator==(const PairComponents&, const PairComponents&) = default;
};

struct StateInfo {
  std::string name;
  std::optional<PairComponents> pair;
};

struct Delta {
  SymbolId symbol;
  std::vector<StateId> args;
  StateId target;
};

struct Epsilon {
  StateId from;
  StateId to;
  Color color;
};

class TreeAutomaton {
 public:
  explicit TreeAutomaton(Signature sig = {});

  const Signature& signature() const { return sig_; }

  StateId add_state(std::string name, std::optional<PairComponents> pair = {});
  std::optional<StateId> find_state(std::string_view name) const;
  StateId state_id(std::string_view name) const;  // throws UnknownState
  std::size_t num_states() const { return states_.size(); }
  const StateInfo& state(StateId q) const { return states_.at(q); }
  const std::string& name(StateId q) const { return states_.at(q).name; }

  void set_final(StateId q, bool final = true);
  bool is_final(StateId q) const { return finals_.count(q) != 0; }
  const std::set<StateId>& finals() const { return finals_; }

  // Both return true when the transition was not present before.
  bool add_delta(SymbolId f, std::vector<StateId> args, StateId target);
  bool add_delta(std::string_view f, std::vector<StateId> args, StateId target);
  bool add_epsilon(StateId from, StateId to, Color color);

  const std::vector<Delta>& deltas() const { return deltas_; }
  const std::vector<Epsilon>& epsilons() const { return epsilons_; }
  std::size_t num_transitions() const {
    return deltas_.size() + epsilons_.size();
  }

  // Indices into deltas().
  const std::vector<std::size_t>& deltas_with_symbol(SymbolId f) const {
    return by_symbol_.at(f);
  }
  const std::vector<std::size_t>& deltas_into(StateId q) const {
    return into_.at(q);
  }
  const std::vector<std::size_t>& deltas_using(StateId q) const {
    return using_.at(q);
  }
  // Indices into epsilons().
  const std::vector<std::size_t>& epsilons_from(StateId q) const {
    return eps_from_.at(q);
  }

  // Targets of the exact configuration f(args), empty when there is none.
  const std::set<StateId>& targets(SymbolId f,
                                   const std::vector<StateId>& args) const;
  bool has_delta(SymbolId f, const std::vector<StateId>& args,
                 StateId target) const;
  bool has_epsilon(StateId from, StateId to, Color color) const;

  // States reachable from q through epsilon transitions, q included.
  const std::set<StateId>& closure(StateId q) const { return fwd_.at(q); }
  // States from which q is reachable through epsilon transitions.
  const std::set<StateId>& coclosure(StateId q) const { return bwd_.at(q); }

 private:
  Signature sig_;
  std::vector<StateInfo> states_;
  std::map<std::string, StateId, std::less<>> by_name_;
  std::set<StateId> finals_;
  std::vector<Delta> deltas_;
  std::map<std::pair<SymbolId, std::vector<StateId>>, std::set<StateId>> lhs_;
  std::vector<std::vector<std::size_t>> by_symbol_;
  std::vector<std::vector<std::size_t>> into_;
  std::vector<std::vector<std::size_t>> using_;
  std::vector<Epsilon> epsilons_;
  std::set<std::tuple<StateId, StateId, Color>> eps_set_;
  std::vector<std::vector<std::size_t>> eps_from_;
  std::vector<std::set<StateId>> fwd_;
  std::vector<std::set<StateId>> bwd_;
};

// States q with c ->* q. Configurations may mix symbols and state leaves.
std::set<StateId> derive_states(const TreeAutomaton& A, const Term& c);
bool recognizes(const TreeAutomaton& A, const Term& t, StateId q);
// Ground terms of size <= max_size recognized in some state of `targets`.
std::set<Term> enumerate_language(const TreeAutomaton& A,
                                  const std::set<StateId>& targets,
                                  std::size_t max_size);
// Per-state languages up to max_size.
std::vector<std::set<Term>> enumerate_by_state(const TreeAutomaton& A,
                                               std::size_t max_size);
// nullopt when the language of `targets` is empty, otherwise a smallest
// witness (least size, then canonical order).
std::optional<Term> language_witness(const TreeAutomaton& A,
                                     const std::set<StateId>& targets);
bool language_empty(const TreeAutomaton& A, const std::set<StateId>& targets);
std::vector<bool> accessible_states(const TreeAutomaton& A);
TreeAutomaton prune_inaccessible(const TreeAutomaton& A);
bool is_deterministic(const TreeAutomaton& A);
bool is_complete(const TreeAutomaton& A);
// Synchronized product. Requires both automata to be epsilon-free over the
// same signature.
TreeAutomaton product(const TreeAutomaton& A, const TreeAutomaton& B);
// Maps each pair state to its left component.
TreeAutomaton project_left(const TreeAutomaton& A);
// Drops epsilon transitions of the given color.
TreeAutomaton strip_color(const TreeAutomaton& A, Color c);
// Merges the classes of mutual E-reachability. Each class is named after its
// smallest member.
TreeAutomaton quotient(const TreeAutomaton& A);
// q == q' or both q ->E q' and q' ->E q are present.
bool e_equivalent(const TreeAutomaton& A, StateId q, StateId q2);
// Keeps only delta transitions whose symbol is in `allowed`.
TreeAutomaton restrict_symbols(const TreeAutomaton& A,
                               const std::set<std::string>& allowed);
// Same automaton with a different final set.
TreeAutomaton with_finals(const TreeAutomaton& A,
                          const std::set<StateId>& finals);

}  // namespace tacomp
