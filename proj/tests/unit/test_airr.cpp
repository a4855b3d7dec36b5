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

#include "doctest.h"
#include "fixtures.hpp"
#include "tacomp/airr.hpp"

using namespace tacomp;
using tacomp::testing::load;
using tacomp::testing::term;

namespace {

void check_structure(const NormalFormAutomaton& N) {
  const TreeAutomaton& A = N.automaton();
  CHECK(is_deterministic(A));
  CHECK(is_complete(A));
  CHECK(A.epsilons().empty());
  std::size_t non_final = 0;
  for (StateId q = 0; q < A.num_states(); ++q)
    if (!A.is_final(q)) ++non_final;
  CHECK(non_final == 1);
  CHECK_FALSE(A.is_final(N.reducible()));
  for (const Delta& d : A.deltas())
    for (StateId a : d.args)
      if (a == N.reducible()) CHECK(d.target == N.reducible());
}

// Every ground term up to  lands in the reducible state exactly when
// it is not a normal form.
void check_against_rewriting(const Trs& R, const NormalFormAutomaton& N,
                             std::size_t size) {
  std::size_t mismatches = 0;
  for (const Term& t : ground_terms(R.signature(), size)) {
    bool red = N.state_of(t) == N.reducible();
    if (red == is_normal_form(R, t)) ++mismatches;
    auto qs = derive_states(N.automaton(), t);
    if (qs.size() != 1 || *qs.begin() != N.state_of(t)) ++mismatches;
  }
  CHECK(mismatches == 0);
}

}  // namespace

TEST_CASE("normal forms of the running example") {
  auto spec = load("running.tbk");
  Trs R = spec.trs();
  auto N = build_airr(R);
  check_structure(N);
  CHECK(N.state_of(term(spec, "a(s(0))")) == N.reducible());
  CHECK(N.state_of(term(spec, "f(c(0,n))")) == N.reducible());
  CHECK(N.state_of(term(spec, "c(0,n)")) != N.reducible());
  CHECK(N.state_of(term(spec, "n")) != N.reducible());
  CHECK(N.state_of(term(spec, "0")) != N.reducible());
  // 0 and s(0) match different fragments.
  CHECK(N.state_of(term(spec, "0")) != N.state_of(term(spec, "s(0)")));
  CHECK(N.automaton().is_final(N.state_of(term(spec, "n"))));
  check_against_rewriting(R, N, 7);
}

TEST_CASE("reserved state numbering") {
  auto spec = load("running.tbk");
  auto N = build_airr(spec.trs());
  CHECK(N.reducible() == 0);
  CHECK(N.plain() == 1);
  CHECK(N.fragments(N.plain()).empty());
  auto frag = N.fragments(N.state_of(term(spec, "0")));
  CHECK_FALSE(frag.empty());
}

TEST_CASE("differential check on the example systems") {
  for (const char* file : {"delete.tbk", "rightmost.tbk", "supplementary.tbk"}) {
    CAPTURE(file);
    auto spec = load(file);
    Trs R = spec.trs();
    auto N = build_airr(R);
    check_structure(N);
    check_against_rewriting(R, N, 6);
  }
  auto sum = load("sum.tbk");
  auto N = build_airr(sum.trs());
  check_structure(N);
  check_against_rewriting(sum.trs(), N, 6);
}

TEST_CASE("empty system gives a single final sink") {
  Signature sig({{"a", 0}, {"f", 2}});
  auto N = build_airr(Trs(sig, {}));
  const TreeAutomaton& A = N.automaton();
  std::size_t finals = 0;
  for (StateId q = 0; q < A.num_states(); ++q) {
    if (!A.is_final(q)) continue;
    ++finals;
    CHECK(accessible_states(A)[q]);
  }
  CHECK(finals == 1);
  CHECK(N.state_of(Term::apply("f", {Term::apply("a"), Term::apply("a")})) ==
        N.plain());
  check_structure(N);
}

TEST_CASE("non-left-linear systems are rejected") {
  Signature sig({{"eq", 2}, {"tt", 0}, {"a", 0}});
  Term x = Term::variable("X");
  Trs R(sig, {{Term::apply("eq", {x, x}), Term::apply("tt")}});
  CHECK_FALSE(R.left_linear());
  try {
    (void)build_airr(R);
    FAIL("expected not-left-linear");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotLeftLinear);
  }
}

TEST_CASE("successor agrees with the transition table") {
  auto spec = load("running.tbk");
  auto N = build_airr(spec.trs());
  const TreeAutomaton& A = N.automaton();
  for (const Delta& d : A.deltas()) CHECK(N.successor(d.symbol, d.args) == d.target);
}
