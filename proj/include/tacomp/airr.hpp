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

// Deterministic complete automaton for the ground normal forms of a
// left-linear rewrite system.
//
// A state is the set of lhs fragments (strict, non-variable subterms of
// left-hand sides, variables erased) that match the term, plus one absorbing
// state for reducible terms. Every state except the reducible one is final.

#pragma once

#include <span>
#include <vector>

#include "tacomp/automaton.hpp"
#include "tacomp/rewriting.hpp"

namespace tacomp {

class NormalFormAutomaton {
 public:
  const TreeAutomaton& automaton() const { return automaton_; }
  StateId reducible() const { return red_; }
  // The empty fragment set: normal forms matching no fragment.
  StateId plain() const { return plain_; }
  StateId successor(SymbolId f, const std::vector<StateId>& args) const;
  // State of a ground term, or of a configuration whose state leaves are
  // already states of this automaton.
  StateId state_of(const Term& t) const;
  // Fragment patterns tracked by each state (wildcards printed as "_").
  std::vector<Term> fragments(StateId q) const;

 private:
  friend NormalFormAutomaton build_airr(const Trs& R);
  TreeAutomaton automaton_;
  StateId red_ = 0;
  StateId plain_ = 0;
  std::vector<Term> patterns_;
  std::vector<std::vector<std::size_t>> members_;
};

// Throws NotLeftLinear for systems with a non-linear left-hand side.
NormalFormAutomaton build_airr(const Trs& R);

}  // namespace tacomp
