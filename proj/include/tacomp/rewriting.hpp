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

// Rewrite systems, strategy-restricted rewriting and bounded exploration.
//
// The bounded_* functions are brute-force reference semantics; the test
// suites use them as oracles for the automaton-based analysis.

#pragma once

#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "tacomp/term.hpp"

namespace tacomp {

enum class Exec { Serial, Parallel };

enum class Strategy { Innermost, Leftmost, Rightmost };

const char* to_string(Strategy s);
std::optional<Strategy> parse_strategy(std::string_view name);

struct Rule {
  Term lhs;
  Term rhs;
  std::string to_string() const;
  friend bool operator==(const Rule&, const Rule&) = default;
};

struct Equation {
  Term lhs;
  Term rhs;
  std::string to_string() const;
  friend bool operator==(const Equation&, const Equation&) = default;
  friend auto operator<=>(const Equation&, const Equation&) = default;
};

// A rewrite system over a fixed signature. Construction checks that every
// rule is well formed: lhs is not a variable and Var(rhs) is a subset of
// Var(lhs).
class Trs {
 public:
  Trs(Signature sig, std::vector<Rule> rules);

  const Signature& signature() const { return sig_; }
  const std::vector<Rule>& rules() const { return rules_; }
  bool left_linear() const { return left_linear_; }
  // Root symbols of left-hand sides.
  std::set<std::string> defined_symbols() const;

 private:
  Signature sig_;
  std::vector<Rule> rules_;
  bool left_linear_ = true;
};

struct Redex {
  Position position;
  std::size_t rule;
  Substitution sigma;
};

// Every (position, rule) pair where the rule's lhs matches, ordered by
// position then rule index.
std::vector<Redex> redexes(const Trs& R, const Term& t);
bool is_normal_form(const Trs& R, const Term& t);
// Redexes whose strict subterms are all normal forms.
std::vector<Redex> innermost_redexes(const Trs& R, const Term& t);
// The redexes a strategy may contract. Innermost redex positions are pairwise
// parallel; Leftmost keeps the lexicographically least of them, Rightmost the
// greatest.
std::vector<Redex> strategy_redexes(const Trs& R, const Term& t, Strategy s);

Term contract(const Trs& R, const Term& t, const Redex& r);
std::set<Term> one_step(const Trs& R, const Term& t);
std::set<Term> innermost_one_step(const Trs& R, const Term& t,
                                  Strategy s = Strategy::Innermost);

struct Bounds {
  std::size_t max_steps = 20;
  std::size_t max_size = 8;
};

struct BoundedSet {
  std::set<Term> terms;
  // True iff exploration ran out of new terms before hitting max_steps and no
  // term was dropped for exceeding max_size.
  bool saturated = false;
};

// Breadth-first exploration from `seeds`. With no strategy the relation is
// unrestricted one-step rewriting.
BoundedSet bounded_reachable(const Trs& R, std::span<const Term> seeds,
                             std::optional<Strategy> s, Bounds b,
                             Exec exec = Exec::Parallel);
// The normal forms among the reachable set.
BoundedSet bounded_normal_forms(const Trs& R, std::span<const Term> seeds,
                                std::optional<Strategy> s, Bounds b,
                                Exec exec = Exec::Parallel);

// The E-equivalence class of `t` restricted to terms of size <= max_size.
// Variables that occur only on the introduced side of an equation are
// instantiated with ground terms over `sig` that fit the size budget.
BoundedSet bounded_class(const Signature& sig, std::span<const Equation> E,
                         const Term& t, std::size_t max_size);

// Alternates E-class closure and strategy steps.
BoundedSet bounded_reachable_modulo(const Trs& R, std::span<const Equation> E,
                                    std::span<const Term> seeds, Strategy s,
                                    Bounds b, Exec exec = Exec::Parallel);

// All ground terms over `sig` with at most `max_size` nodes, smallest first.
std::vector<Term> ground_terms(const Signature& sig, std::size_t max_size);

}  // namespace tacomp
