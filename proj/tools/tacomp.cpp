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

// Command-line front end.
//
// Exit codes: 0 fixpoint or success, 1 input error, 2 limit reached,
// 3 not a member, 4 soundness violation.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "tacomp/airr.hpp"
#include "tacomp/completion.hpp"
#include "tacomp/equations.hpp"
#include "tacomp/timbuk.hpp"

namespace {

using namespace tacomp;

enum Exit : int {
  kOk = 0,
  kInputError = 1,
  kLimit = 2,
  kNotMember = 3,
  kUnsound = 4,
};

struct RunConfig {
  std::string spec_path;
  std::string trs_name;
  std::string automaton_name;
  std::string equations_name;
  std::vector<std::string> contracting;
  std::string strategy = "innermost";
  std::size_t max_steps = 100;
  std::size_t max_states = 20000;
  std::size_t enum_size = 8;
  std::string output;
  std::string query;
  int verbose = 0;
};

void report(const std::string& key, const std::string& value) {
  std::cout << key << '=' << value << '\n';
}

std::string join(const std::set<Term>& ts) {
  std::string out;
  for (const Term& t : ts) {
    if (!out.empty()) out += ' ';
    out += t.to_string();
  }
  return out;
}

Strategy strategy_of(const std::string& name) {
  auto s = parse_strategy(name);
  if (!s) throw Error(ErrorKind::Syntax, "unknown strategy '" + name + "'");
  return *s;
}

// Named equation set, followed by the generated set when contracting
// equations are given on the command line.
std::vector<Equation> equations_for(const RunConfig& cfg, const Specification& spec,
                                    const Trs& R) {
  std::vector<Equation> E;
  if (!cfg.equations_name.empty()) E = spec.equations(cfg.equations_name);
  if (!cfg.contracting.empty()) {
    std::vector<Equation> ec;
    for (const std::string& text : cfg.contracting) {
      auto eq = text.find('=');
      if (eq == std::string::npos)
        throw Error(ErrorKind::Syntax, "equation '" + text + "' has no '='");
      ec.push_back({parse_term(text.substr(0, eq), spec.signature, spec.variables),
                    parse_term(text.substr(eq + 1), spec.signature, spec.variables)});
    }
    auto gen = generate_equations(R, ec);
    for (const auto& w : gen.warnings) std::cerr << "warning: " << w << '\n';
    E.insert(E.end(), gen.equations.begin(), gen.equations.end());
  }
  return E;
}

bool accepts(const TreeAutomaton& A, const Term& t) {
  for (StateId q : A.finals())
    if (recognizes(A, t, q)) return true;
  return false;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::Syntax, "cannot write '" + path + "'");
  out << text;
}

CompletionResult complete(const RunConfig& cfg, const Specification& spec,
                          const Trs& R, std::span<const Equation> E) {
  TraceSink trace;
  CompletionState::EventSink events;
  if (cfg.verbose >= 1)
    trace = [](const StepStats& s) { std::cerr << s.to_string() << '\n'; };
  if (cfg.verbose >= 2) events = [](const std::string& e) { std::cerr << e << '\n'; };
  return run_completion(spec.automaton(cfg.automaton_name), R, E,
                        strategy_of(cfg.strategy), {cfg.max_steps, cfg.max_states},
                        trace, Exec::Parallel, std::move(events));
}

int cmd_complete(const RunConfig& cfg) {
  auto spec = parse_spec_file(cfg.spec_path);
  Trs R = spec.trs(cfg.trs_name);
  auto E = equations_for(cfg, spec, R);
  auto res = complete(cfg, spec, R, E);
  const CompletionState& S = res.state;
  TreeAutomaton reach = reachable_view(S);
  TreeAutomaton norm = normalized_view(S);

  report("outcome", to_string(res.outcome));
  report("strategy", to_string(S.strategy()));
  report("steps", std::to_string(S.steps_done()));
  report("states", std::to_string(S.automaton().num_states()));
  report("transitions", std::to_string(S.automaton().num_transitions()));
  report("equations", std::to_string(E.size()));
  report("reachable", join(enumerate_language(reach, reach.finals(), cfg.enum_size)));
  report("normalized", join(enumerate_language(norm, norm.finals(), cfg.enum_size)));
  report("normalized-empty", language_empty(norm, norm.finals()) ? "true" : "false");
  bool member = true;
  if (!cfg.query.empty()) {
    member = accepts(reach, parse_term(cfg.query, spec.signature));
    report("query", cfg.query);
    report("member", member ? "true" : "false");
  }
  if (!cfg.output.empty()) {
    TreeAutomaton completed = with_finals(S.automaton(), reach.finals());
    write_file(cfg.output, render_spec(spec.signature, {{"Completed", &completed},
                                                        {"Normalized", &norm}}));
  }
  std::cout << (res.is_fixpoint() ? "FIXPOINT" : "LIMIT") << '\n';
  if (!res.is_fixpoint()) return kLimit;
  return member ? kOk : kNotMember;
}

int cmd_airr(const RunConfig& cfg, bool check) {
  auto spec = parse_spec_file(cfg.spec_path);
  Trs R = spec.trs(cfg.trs_name);
  auto N = build_airr(R);
  std::cout << render_automaton(N.automaton(), "Irreducible");
  if (!check) return kOk;
  std::size_t mismatches = 0, examined = 0;
  for (const Term& t : ground_terms(R.signature(), cfg.enum_size)) {
    ++examined;
    if ((N.state_of(t) == N.reducible()) == is_normal_form(R, t)) {
      if (mismatches++ == 0) std::cerr << "mismatch on " << t.to_string() << '\n';
    }
  }
  report("check-terms", std::to_string(examined));
  report("check-mismatches", std::to_string(mismatches));
  return mismatches == 0 ? kOk : kUnsound;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Syntax, "cannot read '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int cmd_member(const std::string& file, const std::string& text,
               const std::string& automaton, const std::string& signature_from) {
  TreeAutomaton A;
  Signature sig;
  if (signature_from.empty()) {
    auto spec = parse_spec_file(file);
    sig = spec.signature;
    A = spec.automaton(automaton);
  } else {
    sig = parse_spec_file(signature_from).signature;
    A = parse_automaton_body(slurp(file), sig);
  }
  bool member = accepts(A, parse_term(text, sig));
  report("member", member ? "true" : "false");
  return member ? kOk : kNotMember;
}

int cmd_oracle(const RunConfig& cfg, std::size_t oracle_steps, bool drop_rewrites) {
  auto spec = parse_spec_file(cfg.spec_path);
  Trs R = spec.trs(cfg.trs_name);
  auto E = equations_for(cfg, spec, R);
  Strategy s = strategy_of(cfg.strategy);
  auto res = complete(cfg, spec, R, E);
  TreeAutomaton view = reachable_view(res.state);
  // Harness self-test: forgetting rewrite steps must be caught.
  if (drop_rewrites) view = strip_color(view, Color::R);

  const TreeAutomaton& A0 = spec.automaton(cfg.automaton_name);
  auto seeds_set = enumerate_language(A0, A0.finals(), cfg.enum_size);
  std::vector<Term> seeds(seeds_set.begin(), seeds_set.end());
  Bounds b{oracle_steps, cfg.enum_size};
  auto reach = bounded_reachable(R, seeds, s, b);
  auto modulo = E.empty() ? reach : bounded_reachable_modulo(R, E, seeds, s, b);

  std::set<Term> missing, extra;
  for (const Term& t : reach.terms)
    if (!accepts(view, t)) missing.insert(t);
  for (const Term& t : enumerate_language(view, view.finals(), cfg.enum_size))
    if (!modulo.terms.count(t)) extra.insert(t);

  report("outcome", to_string(res.outcome));
  report("seeds", std::to_string(seeds.size()));
  report("oracle-terms", std::to_string(reach.terms.size()));
  report("oracle-saturated", reach.saturated ? "true" : "false");
  report("missing", std::to_string(missing.size()));
  report("extra", std::to_string(extra.size()));
  if (!missing.empty()) report("missing-terms", join(missing));
  if (!extra.empty()) report("extra-terms", join(extra));
  if (!missing.empty()) return kUnsound;
  return res.is_fixpoint() ? kOk : kLimit;
}

void add_run_options(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("spec", cfg.spec_path, "Specification file")->required();
  cmd->add_option("--trs", cfg.trs_name, "TRS section name (default: first)");
  cmd->add_option("--automaton", cfg.automaton_name,
                  "Automaton section name (default: first)");
  cmd->add_option("--equations", cfg.equations_name, "Equations section name");
  cmd->add_option("--ec", cfg.contracting,
                  "Contracting equation 'lhs=rhs'; adds rule and reflexivity equations");
  cmd->add_option("--strategy", cfg.strategy, "innermost, leftmost or rightmost")
      ->check(CLI::IsMember({"innermost", "leftmost", "rightmost"}));
  cmd->add_option("--max-steps", cfg.max_steps, "Completion step limit")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--max-states", cfg.max_states, "Completion state limit")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--enum-size", cfg.enum_size, "Term size bound for enumeration")
      ->check(CLI::PositiveNumber);
  cmd->add_flag("-v,--verbose", cfg.verbose,
                "Step trace on stderr; repeat for resolved pairs and equations");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Innermost tree automata completion"};
  app.require_subcommand(1);
  // One config per subcommand: CLI11 resets flags bound to an unused
  // subcommand, so sharing storage would lose counts.
  RunConfig cfg, airr_cfg, oracle_cfg;

  auto* complete_cmd = app.add_subcommand("complete", "Run completion");
  add_run_options(complete_cmd, cfg);
  complete_cmd->add_option("--output", cfg.output, "Write the completed automata here");
  complete_cmd->add_option("--query", cfg.query,
                           "Ground term to test against the reachable view");

  bool check = false;
  auto* airr_cmd = app.add_subcommand("airr", "Print the normal-form automaton");
  airr_cmd->add_option("spec", airr_cfg.spec_path, "Specification file")->required();
  airr_cmd->add_option("--trs", airr_cfg.trs_name, "TRS section name");
  airr_cmd->add_option("--enum-size", airr_cfg.enum_size, "Term size bound for --check")
      ->check(CLI::PositiveNumber);
  airr_cmd->add_flag("--check", check, "Compare against the rewriting engine");

  std::string member_file, member_term, member_automaton, member_signature;
  auto* member_cmd = app.add_subcommand("member", "Test membership of a ground term");
  member_cmd->add_option("file", member_file, "Specification or automaton file")
      ->required();
  member_cmd->add_option("term", member_term, "Ground term")->required();
  member_cmd->add_option("--automaton", member_automaton, "Automaton section name");
  member_cmd->add_option("--signature", member_signature,
                         "Take Ops from this file and read a bare automaton body");

  std::size_t oracle_steps = 20;
  bool drop_rewrites = false;
  auto* oracle_cmd = app.add_subcommand("oracle", "Compare completion with rewriting");
  add_run_options(oracle_cmd, oracle_cfg);
  oracle_cmd->add_option("--oracle-steps", oracle_steps, "Rewrite step bound");
  oracle_cmd->add_flag("--drop-rewrites", drop_rewrites,
                       "Discard rewrite transitions before comparing (self-test)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }
  try {
    if (*complete_cmd) return cmd_complete(cfg);
    if (*airr_cmd) return cmd_airr(airr_cfg, check);
    if (*member_cmd)
      return cmd_member(member_file, member_term, member_automaton, member_signature);
    if (*oracle_cmd) return cmd_oracle(oracle_cfg, oracle_steps, drop_rewrites);
  } catch (const Error& e) {
    std::cerr << "error: " << to_string(e.kind()) << ": " << e.what() << '\n';
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}
