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

TEST_CASE("positions enumerate every node in pre-order") {
  auto spec = load("running.tbk");
  Term t = term(spec, "f(c(a(s(0)),n))");
  auto ps = positions(t);
  REQUIRE(ps.size() == 6);
  CHECK(to_string(ps[0]) == "e");
  CHECK(to_string(ps[1]) == "1");
  CHECK(to_string(ps[2]) == "1.1");
  CHECK(to_string(ps.back()) == "1.2");
  CHECK(t.size() == 6);
  CHECK(t.height() == 4);
}

TEST_CASE("subterm and replacement") {
  auto spec = load("running.tbk");
  Term t = term(spec, "f(c(a(s(0)),n))");
  CHECK(subterm_at(t, {1, 1}) == term(spec, "a(s(0))"));
  CHECK(replace_at(t, {1, 1}, term(spec, "0")) == term(spec, "f(c(0,n))"));
  CHECK(replace_at(t, {}, term(spec, "n")) == term(spec, "n"));
  Term u = term(spec, "c(0,n)");
  try {
    (void)subterm_at(u, {3});
    FAIL("expected invalid-position");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InvalidPosition);
  }
  CHECK_THROWS_AS(replace_at(u, {1, 1}, u), Error);
}

TEST_CASE("prefix relation is strict") {
  CHECK(is_strict_prefix({}, {1}));
  CHECK(is_strict_prefix({1}, {1, 2}));
  CHECK_FALSE(is_strict_prefix({1}, {1}));
  CHECK_FALSE(is_strict_prefix({2}, {1, 2}));
}

TEST_CASE("substitution application") {
  auto spec = load("running.tbk");
  Substitution sigma{{"X", term(spec, "0")}, {"Y", term(spec, "n")}};
  CHECK(substitute(sigma, term(spec, "c(s(X),f(Y))")) ==
        term(spec, "c(s(0),f(n))"));
  // Unbound variables stay in place.
  CHECK(substitute({}, term(spec, "s(X)")) == term(spec, "s(X)"));
}

TEST_CASE("linearity and matching") {
  auto spec = load("delete.tbk");
  CHECK_FALSE(is_linear(term(spec, "eq(X,X)")));
  CHECK(is_linear(term(spec, "eq(X,Y)")));
  CHECK_THROWS_AS(match(term(spec, "eq(X,X)"), term(spec, "eq(a,a)")), Error);
  auto nl = match_nonlinear(term(spec, "eq(X,X)"), term(spec, "eq(a,a)"));
  REQUIRE(nl);
  CHECK(nl->at("X") == term(spec, "a"));
  CHECK_FALSE(match_nonlinear(term(spec, "eq(X,X)"), term(spec, "eq(a,b)")));

  auto run = load("running.tbk");
  auto m = match(term(run, "a(s(X))"), term(run, "a(s(0))"));
  REQUIRE(m);
  CHECK(m->size() == 1);
  CHECK(m->at("X") == term(run, "0"));
  CHECK_FALSE(match(term(run, "a(s(X))"), term(run, "s(a(0))")));
}

TEST_CASE("variables keep first-occurrence order") {
  auto spec = load("delete.tbk");
  auto vs = variables(term(spec, "ite(eq(X,Y),delete(X,Z),cons(Y,Z))"));
  CHECK(vs == std::vector<std::string>{"X", "Y", "Z"});
}

TEST_CASE("signature validation") {
  Signature sig({{"f", 1}, {"a", 0}});
  CHECK(sig.size() == 2);
  CHECK(sig.symbol(0).name == "a");
  CHECK_NOTHROW(sig.validate(Term::apply("f", {Term::apply("a")})));
  try {
    sig.validate(Term::apply("g"));
    FAIL("expected unknown-symbol");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::UnknownSymbol);
  }
  try {
    sig.validate(Term::apply("f"));
    FAIL("expected arity-mismatch");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ArityMismatch);
  }
  CHECK_THROWS_AS(sig.add("f", 2), Error);
  CHECK_NOTHROW(sig.add("f", 1));
}

TEST_CASE("canonical order is total and consistent with equality") {
  auto spec = load("running.tbk");
  Term a = term(spec, "s(0)");
  Term b = term(spec, "s(0)");
  Term c = term(spec, "s(n)");
  CHECK(a == b);
  CHECK((a <=> b) == 0);
  CHECK(a != c);
  CHECK(((a < c) != (c < a)));
  BySizeThenCanonical less;
  CHECK(less(term(spec, "n"), term(spec, "s(0)")));
}
