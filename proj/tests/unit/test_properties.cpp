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

// Invariants checked over the example systems and random small systems.

#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "random_trs.hpp"
#include "tacomp/completion.hpp"

using namespace tacomp;
using tacomp::testing::load;
using tacomp::testing::RandomCases;
using tacomp::testing::term;

namespace {

bool subset(const std::set<Term>& a, const std::set<Term>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

// Runs completion step by step and checks the per-step invariants.
void check_steps(const TreeAutomaton& initial, const Trs& R,
                 std::span<const Equation> E, Strategy s, std::size_t steps,
                 std::size_t enum_size) {
  auto S = CompletionState::init(initial, R, s);
  std::string why;
  REQUIRE(S.check_consistency(&why));
  std::set<Term> lang = enumerate_language(reachable_view(S),
                                           reachable_view(S).finals(), enum_size);
  std::set<StateId> finals = S.automaton().finals();
  std::size_t transitions = S.automaton().num_transitions();
  for (std::size_t i = 0; i < steps; ++i) {
    auto cps = S.find_critical_pairs(Exec::Serial);
    if (cps.empty() && S.find_equation_situations(E).empty()) break;
    S.step(cps, E);
    CHECK_MESSAGE(S.check_consistency(&why), why);
    TreeAutomaton view = reachable_view(S);
    auto next = enumerate_language(view, view.finals(), enum_size);
    CHECK(subset(lang, next));
    CHECK(std::includes(S.automaton().finals().begin(), S.automaton().finals().end(),
                        finals.begin(), finals.end()));
    CHECK(S.automaton().num_transitions() >= transitions);
    lang = std::move(next);
    finals = S.automaton().finals();
    transitions = S.automaton().num_transitions();
  }
}

}  // namespace

TEST_CASE("per-step invariants on the example systems") {
  auto running = load("running.tbk");
  check_steps(running.automaton(), running.trs(), {}, Strategy::Innermost, 20, 8);
  auto rm = load("rightmost.tbk");
  check_steps(rm.automaton(), rm.trs(), {}, Strategy::Rightmost, 20, 6);
  auto sup = load("supplementary.tbk");
  check_steps(sup.automaton(), sup.trs(), {}, Strategy::Innermost, 20, 6);
  auto sum = load("sum.tbk");
  check_steps(sum.automaton(), sum.trs(), sum.equations("Simpl"),
              Strategy::Innermost, 20, 6);
  auto del = load("delete.tbk");
  check_steps(del.automaton(), del.trs(), {}, Strategy::Innermost, 6, 6);
}

TEST_CASE("per-step invariants on random systems") {
  RandomCases gen(7);
  for (int i = 0; i < 60; ++i) {
    auto c = gen.next();
    CAPTURE(c.start.to_string());
    check_steps(c.initial, c.trs, {}, Strategy::Innermost, 8, 5);
  }
}

TEST_CASE("reruns are byte-identical") {
  auto sum = load("sum.tbk");
  auto once = [&] {
    std::string events;
    auto r = run_completion(sum.automaton(), sum.trs(), sum.equations("Simpl"),
                            Strategy::Innermost, {}, {}, Exec::Parallel,
                            [&](const std::string& e) { events += e + "\n"; });
    return events + render_automaton(r.state.automaton(), "A") +
           render_automaton(normalized_view(r.state), "N");
  };
  std::string first = once();
  CHECK(first == once());
  CHECK(first == once());
}

TEST_CASE("substitution and matching are inverse on linear patterns") {
  RandomCases gen(11);
  std::mt19937 rng(3);
  for (int i = 0; i < 200; ++i) {
    auto c = gen.next();
    for (const Rule& r : c.trs.rules()) {
      Substitution sigma;
      for (const auto& x : variables(r.lhs)) sigma.emplace(x, c.start);
      Term inst = substitute(sigma, r.lhs);
      auto m = match(r.lhs, inst);
      REQUIRE(m);
      CHECK(*m == sigma);
      CHECK(substitute(*m, r.lhs) == inst);
      // Every redex found in an instance rewrites to a term of the signature.
      for (const Term& u : one_step(c.trs, inst))
        CHECK_NOTHROW(c.trs.signature().validate(u, false));
    }
  }
}

TEST_CASE("replace at a position then read it back") {
  auto spec = load("mapeven.tbk");
  Term t = term(spec, "app(app(map,even),cons(s(o),cons(o,nil)))");
  Term r = term(spec, "nil");
  for (const Position& p : positions(t)) {
    Term u = replace_at(t, p, r);
    CHECK(subterm_at(u, p) == r);
    CHECK(replace_at(u, p, subterm_at(t, p)) == t);
  }
}

TEST_CASE("E-equivalence is symmetric after every application") {
  auto sum = load("sum.tbk");
  auto r = run_completion(sum.automaton(), sum.trs(), sum.equations("Simpl"),
                          Strategy::Innermost, {});
  const TreeAutomaton& A = r.state.automaton();
  for (const Epsilon& e : A.epsilons())
    if (e.color == Color::E) CHECK(A.has_epsilon(e.to, e.from, Color::E));
}
