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

// Innermost-strategy tree automata completion.
//
// The working automaton runs over pair states <q, p>: q is a state of the
// initial automaton or a fresh state created by normalization, p is a state
// of the normal-form automaton for the rewrite system. Every delta transition
// f(<q1,p1>,...,<qn,pn>) -> <q,p> satisfies f(p1,...,pn) -> p in the
// normal-form automaton, and epsilon transitions keep p unchanged.

#pragma once

#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tacomp/airr.hpp"
#include "tacomp/automaton.hpp"
#include "tacomp/rewriting.hpp"

namespace tacomp {

struct Limits {
  std::size_t max_steps = 100;
  std::size_t max_states = 20000;
};

// Variable -> state, sorted by variable name.
using StateBinding = std::vector<std::pair<std::string, StateId>>;

struct CriticalPair {
  std::size_t rule = 0;
  StateBinding sigma;
  StateId target = 0;
  // Argument states of a transition through which l.sigma reaches target
  // with every direct argument irreducible. Empty for constant lhs.
  std::vector<StateId> witness;
};

struct EquationSituation {
  std::size_t equation = 0;
  StateBinding theta;
  StateId left = 0;
  StateId right = 0;
};

struct StepStats {
  std::size_t step = 0;
  std::size_t cp_solved = 0;
  std::size_t eq_applied = 0;
  std::size_t states = 0;
  std::size_t transitions = 0;
  std::string to_string() const;
};

enum class Outcome { Fixpoint, StepLimit, StateLimit };

const char* to_string(Outcome o);

class CompletionState {
 public:
  // Builds the pruned product of `initial` with the normal-form automaton.
  // Throws ColoredInput, NotLeftLinear or SignatureMismatch.
  static CompletionState init(const TreeAutomaton& initial, const Trs& R,
                              Strategy strategy = Strategy::Innermost);

  const TreeAutomaton& automaton() const { return A_; }
  const NormalFormAutomaton& airr() const { return airr_; }
  const Trs& trs() const { return trs_; }
  Strategy strategy() const { return strategy_; }
  StateId reducible() const { return airr_.reducible(); }

  const std::string& left_name(StateId q) const { return left_names_.at(left_of_.at(q)); }
  StateId right(StateId q) const { return right_of_.at(q); }
  bool same_left(StateId a, StateId b) const { return left_of_.at(a) == left_of_.at(b); }
  bool left_is_final(StateId q) const { return left_final_.at(left_of_.at(q)); }
  // States present in the initial pruned product.
  bool is_original(StateId q) const { return q < original_count_; }
  std::optional<StateId> find_pair(std::string_view left, StateId right) const;

  std::vector<CriticalPair> find_critical_pairs(Exec exec = Exec::Parallel) const;
  // Re-checks that r.sigma is not yet recognized in any <q, p'>.
  bool still_critical(const CriticalPair& cp) const;
  Term instantiate_rhs(const CriticalPair& cp) const;

  // Pair state with a fresh left component.
  StateId fresh_state(StateId right);
  // Adds transitions so that `config` (a non-state configuration) reaches
  // `target`. Existing exact transitions are reused for proper subterms.
  // Returns the number of transitions added.
  std::size_t normalize(const Term& config, StateId target);
  void resolve(const CriticalPair& cp);

  std::vector<EquationSituation> find_equation_situations(
      std::span<const Equation> E) const;
  // False when the two states were already E-equivalent.
  bool apply_equation(const EquationSituation& s);

  // One completion step: resolves `cps` (skipping those solved meanwhile),
  // then saturates the equations.
  StepStats step(std::span<const CriticalPair> cps, std::span<const Equation> E);

  // Every delta agrees with the normal-form automaton on right components
  // and every epsilon keeps the right component.
  bool check_consistency(std::string* why = nullptr) const;

  void set_state_cap(std::size_t cap) { state_cap_ = cap; }
  bool over_state_cap() const { return A_.num_states() > state_cap_; }
  std::size_t steps_done() const { return trace_.size(); }
  const std::vector<StepStats>& trace() const { return trace_; }
  std::string state_label(StateId q) const { return A_.name(q); }

  // Receives one line per resolved critical pair and applied equation.
  using EventSink = std::function<void(const std::string&)>;
  void set_event_sink(EventSink sink) { events_ = std::move(sink); }
  std::string describe(const CriticalPair& cp) const;
  std::string describe(const EquationSituation& s,
                       std::span<const Equation> E) const;

 private:
  CompletionState(Trs R, NormalFormAutomaton airr, Strategy s);

  using Anchors = StateBinding;
  using MatchMemo = std::map<std::pair<const void*, StateId>, std::vector<Anchors>>;
  // Bindings under which `pattern` reaches `s`; variables are bound to the
  // argument states of the matching transitions.
  const std::vector<Anchors>& match_into(const Term& pattern, StateId s,
                                         MatchMemo& memo) const;
  std::vector<std::pair<Anchors, StateId>> match_anywhere(const Term& pattern,
                                                          MatchMemo& memo) const;
  StateId right_state(const Term& config) const;
  StateId pair_state(std::uint32_t left, StateId right);
  std::uint32_t add_left(std::string name, bool final);
  StateId normalize_sub(const Term& config);
  void note_delta(bool added);
  void note_epsilon(bool added);
  void settle();
  void copy_delta(std::size_t idx);
  void copy_epsilon(std::size_t idx);
  std::vector<StateId> irreducible_variants(std::uint32_t left) const;

  Trs trs_;
  NormalFormAutomaton airr_;
  TreeAutomaton A_;
  Strategy strategy_;
  std::vector<std::string> left_names_;
  std::map<std::string, std::uint32_t, std::less<>> left_ids_;
  std::vector<bool> left_final_;
  std::vector<std::uint32_t> left_of_;
  std::vector<StateId> right_of_;
  std::map<std::pair<std::uint32_t, StateId>, StateId> pairs_;
  std::vector<std::vector<StateId>> by_left_;
  std::size_t original_count_ = 0;
  std::size_t fresh_ = 0;
  std::size_t state_cap_ = static_cast<std::size_t>(-1);
  std::vector<StateId> pending_states_;
  std::vector<std::size_t> pending_deltas_;
  std::vector<std::size_t> pending_epsilons_;
  std::vector<StepStats> trace_;
  EventSink events_;
};

struct CompletionResult {
  Outcome outcome;
  CompletionState state;
  bool is_fixpoint() const { return outcome == Outcome::Fixpoint; }
};

using TraceSink = std::function<void(const StepStats&)>;

CompletionResult run_completion(const TreeAutomaton& initial, const Trs& R,
                                std::span<const Equation> E, Strategy s,
                                Limits limits, const TraceSink& trace = {},
                                Exec exec = Exec::Parallel,
                                CompletionState::EventSink events = {});

// Over-approximation of the strategy-reachable terms: every pair state whose
// left component is final in the initial automaton is final.
TreeAutomaton reachable_view(const CompletionState& S);
// Reachable irreducible terms: final pair states with irreducible right
// component.
TreeAutomaton normalized_view(const CompletionState& S);
// Left projection of the working automaton, final on initial final states.
TreeAutomaton projected_view(const CompletionState& S);

}  // namespace tacomp
