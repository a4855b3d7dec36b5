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

// Reader and writer for Timbuk-style specification files:
//
//   Ops cons:2 nil:0 a:0
//   Vars X Y
//   TRS R  <lhs> -> <rhs> ...
//   Automaton A0  States q0 q1  Final States q1  Transitions a->q0 ...
//   Equations E  Rules <lhs> = <rhs> ...
//
// `#` starts a comment running to the end of the line. Epsilon transitions
// are written `q1 ->R q2` or `q1 ->E q2`; an uncolored `q1 -> q2` is
// rejected.

#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tacomp/automaton.hpp"
#include "tacomp/rewriting.hpp"

namespace tacomp {

struct Specification {
  Signature signature;
  std::vector<std::string> variables;
  std::vector<std::pair<std::string, std::vector<Rule>>> trss;
  std::vector<std::pair<std::string, TreeAutomaton>> automata;
  std::vector<std::pair<std::string, std::vector<Equation>>> equation_sets;

  // Empty name selects the first section of that kind.
  Trs trs(std::string_view name = {}) const;
  const TreeAutomaton& automaton(std::string_view name = {}) const;
  const std::vector<Equation>& equations(std::string_view name = {}) const;
};

Specification parse_spec(std::string_view text);
Specification parse_spec_file(const std::string& path);
// A bare automaton body: States ... Final States ... Transitions ...
TreeAutomaton parse_automaton_body(std::string_view text, const Signature& sig);
Term parse_term(std::string_view text, const Signature& sig,
                const std::vector<std::string>& variables = {});

std::string render_ops(const Signature& sig);
std::string render_automaton(const TreeAutomaton& A, std::string_view name);
std::string render_rules(std::string_view name, std::span<const Rule> rules);
std::string render_equations(std::string_view name,
                             std::span<const Equation> equations);
// Ops section followed by the given automata.
std::string render_spec(
    const Signature& sig,
    const std::vector<std::pair<std::string, const TreeAutomaton*>>& automata);

}  // namespace tacomp
