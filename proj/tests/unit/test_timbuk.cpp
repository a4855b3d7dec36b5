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

#include <fstream>
#include <sstream>

#include "doctest.h"
#include "fixtures.hpp"

using namespace tacomp;
using tacomp::testing::data_path;
using tacomp::testing::load;
using tacomp::testing::term;

namespace {

std::string slurp(const std::string& file) {
  std::ifstream in(data_path(file));
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::set<std::string> delta_lines(const TreeAutomaton& A) {
  std::set<std::string> out;
  for (const Delta& d : A.deltas()) {
    std::string s = A.signature().symbol(d.symbol).name + "(";
    for (StateId a : d.args) s += A.name(a) + ",";
    out.insert(s + ")->" + A.name(d.target));
  }
  return out;
}

ErrorKind parse_error_kind(std::string_view text) {
  try {
    (void)parse_spec(text);
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("parse unexpectedly succeeded");
  return ErrorKind::Syntax;
}

}  // namespace

TEST_CASE("delete listing") {
  auto spec = load("delete.tbk");
  CHECK(spec.signature.size() == 9);
  CHECK(spec.variables.size() == 3);
  CHECK(spec.trs("R").rules().size() == 8);
  const TreeAutomaton& A = spec.automaton("A0");
  CHECK(A.num_states() == 6);
  CHECK(A.deltas().size() == 6);
  CHECK(A.finals().size() == 1);
}

TEST_CASE("sum and map listings") {
  auto sum = load("sum.tbk");
  CHECK(sum.trs("R1").rules().size() == 6);
  CHECK(sum.automaton("A0").deltas().size() == 3);
  auto map = load("mapeven.tbk");
  CHECK(map.trs().rules().size() == 8);
  CHECK(map.automaton().num_states() == 13);
  CHECK(map.automaton().deltas().size() == 24);
}

TEST_CASE("malformed input is reported with a location") {
  try {
    (void)parse_spec("Ops f:1 q:0\nAutomaton A States q1 q Final States q\n"
                     "Transitions f(q1 -> q");
    FAIL("expected a syntax error");
  } catch (const ParseError& e) {
    CHECK(e.kind() == ErrorKind::Syntax);
    CHECK(e.line() == 3);
  }
  CHECK(parse_error_kind("Ops f:1\nTRS R\ng -> f(g)") == ErrorKind::UndeclaredName);
  CHECK(parse_error_kind("Ops f:1 a:0\nTRS R\nf(a,a) -> a") == ErrorKind::ArityMismatch);
  CHECK(parse_error_kind("Ops a:0\nAutomaton A States q Final States r\n"
                         "Transitions a -> q") == ErrorKind::UnknownState);
  CHECK(parse_error_kind("Ops a:0\nAutomaton A States q r Final States r\n"
                         "Transitions a -> q q -> r") == ErrorKind::UncoloredEpsilon);
  CHECK(parse_error_kind("Ops a:0 a:1") == ErrorKind::DuplicateSymbol);
  CHECK(parse_error_kind("Ops a:0 X:0\nVars X") == ErrorKind::DuplicateSymbol);
  CHECK(parse_error_kind("Vars X\nOps X:0") == ErrorKind::DuplicateSymbol);
  CHECK_THROWS_AS(parse_spec_file(data_path("no-such-file.tbk")), Error);
}

TEST_CASE("comments, colored epsilons and state arities") {
  auto spec = parse_spec(
      "Ops a:0 # constants\nAutomaton A States q:0 r:0 Final States r\n"
      "Transitions a -> q q ->R r r ->E q");
  const TreeAutomaton& A = spec.automaton();
  CHECK(A.has_epsilon(A.state_id("q"), A.state_id("r"), Color::R));
  CHECK(A.has_epsilon(A.state_id("r"), A.state_id("q"), Color::E));
}

TEST_CASE("rendering the delete result") {
  auto spec = load("delete.tbk");
  TreeAutomaton A = parse_automaton_body(slurp("delete_result.tbk"), spec.signature);
  std::string text = render_automaton(A, "Result");
  CHECK(text.find("cons(q8,q0)->q0") != std::string::npos);
  CHECK(text.find("b->q8") != std::string::npos);
  CHECK(text.find("Final States q6") != std::string::npos);
}

TEST_CASE("empty automaton renders empty sections") {
  TreeAutomaton A(Signature({{"a", 0}}));
  std::string text = render_automaton(A, "E");
  CHECK(text.find("States") != std::string::npos);
  CHECK(text.find("Transitions") != std::string::npos);
  CHECK(text.find("->") == std::string::npos);
}

TEST_CASE("automata round trip through text") {
  for (const char* file : {"delete.tbk", "running.tbk", "mapeven.tbk", "sum.tbk"}) {
    CAPTURE(file);
    auto spec = load(file);
    TreeAutomaton A = spec.automaton();
    A.add_epsilon(0, 1, Color::R);
    A.add_epsilon(1, 0, Color::E);
    std::string text = render_spec(spec.signature, {{"A", &A}});
    auto back = parse_spec(text);
    const TreeAutomaton& B = back.automaton("A");
    CHECK(delta_lines(A) == delta_lines(B));
    CHECK(B.has_epsilon(0, 1, Color::R));
    CHECK(B.has_epsilon(1, 0, Color::E));
    CHECK(A.finals() == B.finals());
    CHECK(render_spec(back.signature, {{"A", &B}}) == text);
  }
}

TEST_CASE("rules and equations render in listing syntax") {
  auto spec = load("running.tbk");
  std::string rules = render_rules("R", spec.trs().rules());
  auto back = parse_spec(render_ops(spec.signature) + "Vars X Y\n" + rules);
  CHECK(back.trs().rules() == spec.trs().rules());
  std::vector<Equation> E{tacomp::testing::equation(spec, "s(a(X))", "X")};
  auto eq = parse_spec(render_ops(spec.signature) + "Vars X\n" +
                       render_equations("E", E));
  CHECK(eq.equations("E") == E);
}

TEST_CASE("terms parse against the declared signature") {
  auto spec = load("running.tbk");
  CHECK(term(spec, "f(c(a(s(0)),n))").size() == 6);
  CHECK(term(spec, " c( X , n ) ").is_ground() == false);
  CHECK_THROWS_AS(term(spec, "f(c(0,n)"), Error);
  CHECK_THROWS_AS(term(spec, "g(n)"), Error);
}
