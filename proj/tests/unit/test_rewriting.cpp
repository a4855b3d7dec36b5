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

using namespace tacomp;
using tacomp::testing::load;
using tacomp::testing::term;
using tacomp::testing::terms;

TEST_CASE("redex positions") {
  auto spec = load("running.tbk");
  Trs R = spec.trs();
  auto rs = redexes(R, term(spec, "f(c(a(s(0)),n))"));
  std::set<std::string> where;
  for (const auto& r : rs) where.insert(to_string(r.position));
  CHECK(where == std::set<std::string>{"e", "1.1"});
  auto inner = innermost_redexes(R, term(spec, "f(c(a(s(0)),n))"));
  REQUIRE(inner.size() == 1);
  CHECK(to_string(inner[0].position) == "1.1");
  CHECK(is_normal_form(R, term(spec, "c(0,n)")));
  CHECK_FALSE(is_normal_form(R, term(spec, "f(n)")));
}

TEST_CASE("innermost step contracts only innermost redexes") {
  auto spec = load("running.tbk");
  Trs R = spec.trs();
  Term t = term(spec, "f(c(a(s(0)),n))");
  CHECK(innermost_one_step(R, t) == terms(spec, {"f(c(0,n))"}));
  CHECK(one_step(R, t) == terms(spec, {"f(c(0,n))", "c(a(s(0)),f(n))"}));
}

TEST_CASE("rightmost and leftmost innermost") {
  auto spec = load("rightmost.tbk");
  Trs R = spec.trs();
  Term t = term(spec, "f(a,c)");
  CHECK(innermost_one_step(R, t, Strategy::Rightmost) == terms(spec, {"f(a,c)"}));
  CHECK(innermost_one_step(R, t, Strategy::Leftmost) == terms(spec, {"f(b,c)"}));
  CHECK(innermost_one_step(R, t) == terms(spec, {"f(a,c)", "f(b,c)"}));
  Term seed[] = {t};
  auto rm = bounded_reachable(R, seed, Strategy::Rightmost, {20, 8});
  CHECK(rm.saturated);
  CHECK(rm.terms == terms(spec, {"f(a,c)"}));
  auto gi = bounded_reachable(R, seed, Strategy::Innermost, {20, 8});
  CHECK(gi.terms == terms(spec, {"f(a,c)", "f(b,c)"}));
}

TEST_CASE("strategy names") {
  CHECK(parse_strategy("rightmost") == Strategy::Rightmost);
  CHECK(parse_strategy("innermost") == Strategy::Innermost);
  CHECK_FALSE(parse_strategy("outermost"));
  CHECK(std::string(to_string(Strategy::Leftmost)) == "leftmost");
}

TEST_CASE("bounded reachability on the running example saturates") {
  auto spec = load("running.tbk");
  Trs R = spec.trs();
  Term seed[] = {term(spec, "f(c(a(s(0)),n))")};
  auto reach = bounded_reachable(R, seed, Strategy::Innermost, {20, 8});
  CHECK(reach.saturated);
  CHECK(reach.terms ==
        terms(spec, {"f(c(a(s(0)),n))", "f(c(0,n))", "f(n)", "n"}));
  auto nf = bounded_normal_forms(R, seed, Strategy::Innermost, {20, 8});
  CHECK(nf.terms == terms(spec, {"n"}));
}

TEST_CASE("non-terminating system does not saturate") {
  auto spec = load("sum.tbk");
  Trs R = spec.trs();
  Term seed[] = {term(spec, "sum(zero)")};
  auto reach = bounded_reachable(R, seed, Strategy::Innermost, {20, 7});
  CHECK_FALSE(reach.saturated);
  CHECK(reach.terms.count(term(spec, "nth(zero,sumList(zero))")));
}

TEST_CASE("serial and parallel exploration agree") {
  auto spec = load("delete.tbk");
  Trs R = spec.trs();
  Term seed[] = {term(spec, "delete(a,cons(b,cons(a,nil)))")};
  auto s = bounded_reachable(R, seed, Strategy::Innermost, {40, 30}, Exec::Serial);
  auto p = bounded_reachable(R, seed, Strategy::Innermost, {40, 30}, Exec::Parallel);
  CHECK(s.terms == p.terms);
  CHECK(s.saturated == p.saturated);
  CHECK(s.saturated);
  auto nf = bounded_normal_forms(R, seed, Strategy::Innermost, {40, 30});
  CHECK(nf.terms == terms(spec, {"cons(b,nil)"}));
}

TEST_CASE("equivalence classes under bounded size") {
  auto spec = load("sum.tbk");
  Equation e[] = {tacomp::testing::equation(spec, "s(s(X))", "s(X)")};
  auto cls = bounded_class(spec.signature, e, term(spec, "s(s(zero))"), 4);
  CHECK(cls.terms == terms(spec, {"s(zero)", "s(s(zero))", "s(s(s(zero)))"}));
}

TEST_CASE("reachability modulo equations") {
  Signature sig({{"a", 0}, {"b", 0}, {"c", 0}});
  Trs R(sig, {{Term::apply("a"), Term::apply("b")}});
  Equation E[] = {{Term::apply("b"), Term::apply("c")}};
  Term seed[] = {Term::apply("a")};
  auto out = bounded_reachable_modulo(R, E, seed, Strategy::Innermost, {10, 4});
  CHECK(out.saturated);
  CHECK(out.terms ==
        std::set<Term>{Term::apply("a"), Term::apply("b"), Term::apply("c")});
}

TEST_CASE("rule validation") {
  Signature sig({{"f", 1}, {"a", 0}});
  Term x = Term::variable("X");
  try {
    Trs R(sig, {{x, Term::apply("a")}});
    FAIL("expected variable-lhs");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::VariableLhs);
  }
  try {
    Trs R(sig, {{Term::apply("f", {Term::apply("a")}), x}});
    FAIL("expected unbound-variable");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::UnboundVariable);
  }
}

TEST_CASE("ground term enumeration") {
  Signature sig({{"s", 1}, {"z", 0}, {"p", 2}});
  auto ts = ground_terms(sig, 3);
  // z, s(z), s(s(z)), p(z,z)
  CHECK(ts.size() == 4);
  for (std::size_t i = 1; i < ts.size(); ++i)
    CHECK(ts[i - 1].size() <= ts[i].size());
}
