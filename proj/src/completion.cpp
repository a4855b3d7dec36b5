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

#include "tacomp/completion.hpp"

#include <algorithm>
#include <tuple>

namespace tacomp {

std::string StepStats::to_string() const {
  return "step=" + std::to_string(step) + " cp-solved=" + std::to_string(cp_solved) +
         " eq-applied=" + std::to_string(eq_applied) +
         " states=" + std::to_string(states) +
         " transitions=" + std::to_string(transitions);
}

const char* to_string(Outcome o) {
  switch (o) {
    case Outcome::Fixpoint: return "fixpoint";
    case Outcome::StepLimit: return "step-limit";
    case Outcome::StateLimit: return "state-limit";
  }
  return "?";
}

namespace {

// Cartesian product of per-argument binding lists; bindings are concatenated
// and kept sorted.
std::vector<StateBinding> combine(
    const std::vector<const std::vector<StateBinding>*>& kids) {
  std::vector<StateBinding> acc{{}};
  for (const auto* options : kids) {
    std::vector<StateBinding> next;
    next.reserve(acc.size() * options->size());
    for (const auto& a : acc)
      for (const auto& b : *options) {
        StateBinding m;
        m.reserve(a.size() + b.size());
        std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(m));
        next.push_back(std::move(m));
      }
    acc = std::move(next);
  }
  return acc;
}

Substitution to_substitution(const StateBinding& b) {
  Substitution s;
  for (const auto& [x, q] : b) s.insert_or_assign(x, Term::state(q));
  return s;
}

}  // namespace

// ---------------------------------------------------------------------------
// Construction

CompletionState::CompletionState(Trs R, NormalFormAutomaton airr, Strategy s)
    : trs_(std::move(R)), airr_(std::move(airr)), A_(trs_.signature()), strategy_(s) {}

std::uint32_t CompletionState::add_left(std::string name, bool final) {
  auto it = left_ids_.find(name);
  if (it != left_ids_.end()) return it->second;
  auto id = static_cast<std::uint32_t>(left_names_.size());
  left_ids_.emplace(name, id);
  left_names_.push_back(std::move(name));
  left_final_.push_back(final);
  by_left_.emplace_back();
  return id;
}

CompletionState CompletionState::init(const TreeAutomaton& initial, const Trs& R,
                                      Strategy strategy) {
  if (!initial.epsilons().empty())
    throw Error(ErrorKind::ColoredInput,
                "initial automaton must not contain epsilon transitions");
  if (!(initial.signature() == R.signature()))
    throw Error(ErrorKind::SignatureMismatch,
                "initial automaton and rewrite system use different signatures");
  NormalFormAutomaton airr = build_airr(R);
  TreeAutomaton prod = prune_inaccessible(product(initial, airr.automaton()));

  CompletionState S(R, std::move(airr), strategy);
  for (StateId q = 0; q < initial.num_states(); ++q)
    S.add_left(initial.name(q), initial.is_final(q));
  for (StateId q = 0; q < prod.num_states(); ++q) {
    const PairComponents& pc = *prod.state(q).pair;
    StateId id = S.A_.add_state(prod.name(q), pc);
    std::uint32_t left = S.left_ids_.at(pc.left);
    StateId right = S.airr_.automaton().state_id(pc.right);
    S.left_of_.push_back(left);
    S.right_of_.push_back(right);
    S.pairs_.emplace(std::make_pair(left, right), id);
    S.by_left_[left].push_back(id);
    if (prod.is_final(q)) S.A_.set_final(id);
  }
  for (const Delta& d : prod.deltas()) S.A_.add_delta(d.symbol, d.args, d.target);
  S.original_count_ = prod.num_states();
  return S;
}

std::optional<StateId> CompletionState::find_pair(std::string_view left,
                                                  StateId right) const {
  auto l = left_ids_.find(left);
  if (l == left_ids_.end()) return std::nullopt;
  auto it = pairs_.find({l->second, right});
  if (it == pairs_.end()) return std::nullopt;
  return it->second;
}

StateId CompletionState::pair_state(std::uint32_t left, StateId right) {
  if (auto it = pairs_.find({left, right}); it != pairs_.end()) return it->second;
  std::string name = left_names_[left] + "_" + airr_.automaton().name(right);
  while (A_.find_state(name)) name += "'";
  StateId id = A_.add_state(name, PairComponents{left_names_[left],
                                                 airr_.automaton().name(right)});
  left_of_.push_back(left);
  right_of_.push_back(right);
  pairs_.emplace(std::make_pair(left, right), id);
  by_left_[left].push_back(id);
  if (left_final_[left] && right != reducible()) A_.set_final(id);
  pending_states_.push_back(id);
  return id;
}

StateId CompletionState::fresh_state(StateId right) {
  std::string name;
  do {
    name = "n" + std::to_string(++fresh_);
  } while (left_ids_.count(name));
  return pair_state(add_left(std::move(name), false), right);
}

// ---------------------------------------------------------------------------
// Matching

const std::vector<StateBinding>& CompletionState::match_into(const Term& pattern,
                                                             StateId s,
                                                             MatchMemo& memo) const {
  auto key = std::make_pair(pattern.identity(), s);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  std::vector<StateBinding> out;
  if (pattern.is_variable()) {
    out.push_back({{pattern.name(), s}});
  } else {
    auto f = A_.signature().id(pattern.name());
    if (f) {
      for (StateId u : A_.coclosure(s))
        for (std::size_t idx : A_.deltas_into(u)) {
          const Delta& d = A_.deltas()[idx];
          if (d.symbol != *f) continue;
          std::vector<const std::vector<StateBinding>*> kids;
          bool ok = true;
          for (std::size_t k = 0; ok && k < d.args.size(); ++k) {
            kids.push_back(&match_into(pattern.arg(k), d.args[k], memo));
            ok = !kids.back()->empty();
          }
          if (!ok) continue;
          for (auto& b : combine(kids)) out.push_back(std::move(b));
        }
      std::sort(out.begin(), out.end());
      out.erase(std::unique(out.begin(), out.end()), out.end());
    }
  }
  return memo.emplace(key, std::move(out)).first->second;
}

std::vector<std::pair<StateBinding, StateId>> CompletionState::match_anywhere(
    const Term& pattern, MatchMemo& memo) const {
  std::vector<std::pair<StateBinding, StateId>> out;
  auto f = A_.signature().id(pattern.name());
  if (!f) return out;
  for (std::size_t idx : A_.deltas_with_symbol(*f)) {
    const Delta& d = A_.deltas()[idx];
    std::vector<const std::vector<StateBinding>*> kids;
    bool ok = true;
    for (std::size_t k = 0; ok && k < d.args.size(); ++k) {
      kids.push_back(&match_into(pattern.arg(k), d.args[k], memo));
      ok = !kids.back()->empty();
    }
    if (!ok) continue;
    for (auto& b : combine(kids)) out.emplace_back(std::move(b), d.target);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Critical pairs

Term CompletionState::instantiate_rhs(const CriticalPair& cp) const {
  return substitute(to_substitution(cp.sigma), trs_.rules().at(cp.rule).rhs);
}

bool CompletionState::still_critical(const CriticalPair& cp) const {
  for (StateId q : derive_states(A_, instantiate_rhs(cp)))
    if (left_of_[q] == left_of_[cp.target]) return false;
  return true;
}

std::vector<CriticalPair> CompletionState::find_critical_pairs(Exec exec) const {
  struct Task {
    std::size_t rule;
    std::size_t delta;
  };
  std::vector<Task> tasks;
  for (std::size_t i = 0; i < trs_.rules().size(); ++i) {
    SymbolId f = *A_.signature().id(trs_.rules()[i].lhs.name());
    for (std::size_t idx : A_.deltas_with_symbol(f)) tasks.push_back({i, idx});
  }
  const StateId red = reducible();
  auto run_task = [&](const Task& t, MatchMemo& memo,
                      std::vector<CriticalPair>& out) {
    const Term& lhs = trs_.rules()[t.rule].lhs;
    const Delta& d = A_.deltas()[t.delta];
    for (StateId a : d.args)
      if (right_of_[a] == red) return;
    std::vector<const std::vector<StateBinding>*> kids;
    for (std::size_t k = 0; k < d.args.size(); ++k) {
      kids.push_back(&match_into(lhs.arg(k), d.args[k], memo));
      if (kids.back()->empty()) return;
    }
    for (auto& sigma : combine(kids))
      for (StateId T : A_.closure(d.target))
        out.push_back({t.rule, sigma, T, d.args});
  };

  std::vector<std::vector<CriticalPair>> found(tasks.size());
  const long n = static_cast<long>(tasks.size());
  if (exec == Exec::Serial) {
    MatchMemo memo;
    for (long i = 0; i < n; ++i) run_task(tasks[i], memo, found[i]);
  } else {
#pragma omp parallel
    {
      MatchMemo memo;
#pragma omp for schedule(dynamic)
      for (long i = 0; i < n; ++i) run_task(tasks[i], memo, found[i]);
    }
  }

  std::vector<CriticalPair> cands;
  for (auto& v : found)
    for (auto& c : v) cands.push_back(std::move(c));
  // Within one (rule, sigma) group, targets with larger epsilon closures come
  // first: resolving upstream of a chain also solves the states below it.
  auto key = [&](const CriticalPair& c) {
    return std::make_tuple(c.rule, std::cref(c.sigma),
                           -static_cast<long>(A_.closure(c.target).size()), c.target);
  };
  std::stable_sort(cands.begin(), cands.end(),
                   [&](const auto& a, const auto& b) { return key(a) < key(b); });
  cands.erase(std::unique(cands.begin(), cands.end(),
                          [&](const auto& a, const auto& b) { return key(a) == key(b); }),
              cands.end());

  std::vector<char> keep(cands.size(), 0);
  const long m = static_cast<long>(cands.size());
  if (exec == Exec::Serial) {
    for (long i = 0; i < m; ++i) keep[i] = still_critical(cands[i]);
  } else {
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < m; ++i) keep[i] = still_critical(cands[i]);
  }
  std::vector<CriticalPair> out;
  for (long i = 0; i < m; ++i)
    if (keep[i]) out.push_back(std::move(cands[i]));
  return out;
}

// ---------------------------------------------------------------------------
// Normalization and resolution

StateId CompletionState::right_state(const Term& config) const {
  if (config.is_state()) return right_of_.at(config.state_id());
  std::vector<StateId> args;
  for (const Term& a : config.args()) args.push_back(right_state(a));
  return airr_.successor(*A_.signature().id(config.name()), args);
}

void CompletionState::note_delta(bool added) {
  if (added) pending_deltas_.push_back(A_.deltas().size() - 1);
}

void CompletionState::note_epsilon(bool added) {
  if (added) pending_epsilons_.push_back(A_.epsilons().size() - 1);
}

StateId CompletionState::normalize_sub(const Term& config) {
  if (config.is_state()) return config.state_id();
  std::vector<StateId> args;
  for (const Term& a : config.args()) args.push_back(normalize_sub(a));
  SymbolId f = *A_.signature().id(config.name());
  const auto& existing = A_.targets(f, args);
  if (!existing.empty()) return *existing.begin();
  std::vector<StateId> rights;
  for (StateId a : args) rights.push_back(right_of_[a]);
  StateId q = fresh_state(airr_.successor(f, rights));
  note_delta(A_.add_delta(f, std::move(args), q));
  return q;
}

std::size_t CompletionState::normalize(const Term& config, StateId target) {
  if (!config.is_application())
    throw Error(ErrorKind::UnknownSymbol, "only applications can be normalized");
  A_.signature().validate(config, false, true);
  const std::size_t before = A_.num_transitions();
  std::vector<StateId> args;
  for (const Term& a : config.args()) args.push_back(normalize_sub(a));
  note_delta(A_.add_delta(config.name(), std::move(args), target));
  return A_.num_transitions() - before;
}

void CompletionState::resolve(const CriticalPair& cp) {
  Term rs = instantiate_rhs(cp);
  const std::uint32_t left = left_of_[cp.target];
  if (rs.is_state()) {
    StateId s = rs.state_id();
    StateId tgt = pair_state(left, right_of_[s]);
    note_epsilon(A_.add_epsilon(s, tgt, Color::R));
  } else {
    StateId p = right_state(rs);
    StateId fresh = fresh_state(p);
    normalize(rs, fresh);
    StateId tgt = pair_state(left, p);
    note_epsilon(A_.add_epsilon(fresh, tgt, Color::R));
  }
  settle();
}

// ---------------------------------------------------------------------------
// Copies of transitions for rewritten arguments

std::vector<StateId> CompletionState::irreducible_variants(std::uint32_t left) const {
  std::vector<StateId> out;
  for (StateId q : by_left_[left])
    if (right_of_[q] != reducible()) out.push_back(q);
  return out;
}

void CompletionState::copy_delta(std::size_t idx) {
  const Delta d = A_.deltas()[idx];
  const StateId red = reducible();
  const std::size_t n = d.args.size();
  for (std::size_t k = 0; k < n; ++k) {
    if (right_of_[d.args[k]] != red) continue;
    for (StateId v : irreducible_variants(left_of_[d.args[k]])) {
      std::vector<std::vector<StateId>> choices(n);
      bool ok = true;
      for (std::size_t j = 0; ok && j < n; ++j) {
        if (j == k) {
          choices[j] = {v};
          continue;
        }
        bool constrained = (strategy_ == Strategy::Rightmost && j > k) ||
                           (strategy_ == Strategy::Leftmost && j < k);
        if (constrained && right_of_[d.args[j]] == red) {
          choices[j] = irreducible_variants(left_of_[d.args[j]]);
          ok = !choices[j].empty();
        } else {
          choices[j] = {d.args[j]};
        }
      }
      if (!ok) continue;
      std::vector<StateId> args(n);
      std::function<void(std::size_t)> rec = [&](std::size_t j) {
        if (j == n) {
          std::vector<StateId> rights;
          for (StateId a : args) rights.push_back(right_of_[a]);
          StateId tgt = pair_state(left_of_[d.target], airr_.successor(d.symbol, rights));
          note_delta(A_.add_delta(d.symbol, args, tgt));
          return;
        }
        for (StateId c : choices[j]) {
          args[j] = c;
          rec(j + 1);
        }
      };
      rec(0);
    }
  }
}

void CompletionState::copy_epsilon(std::size_t idx) {
  const Epsilon e = A_.epsilons()[idx];
  if (right_of_[e.from] != reducible()) return;
  for (StateId v : irreducible_variants(left_of_[e.from])) {
    StateId to = pair_state(left_of_[e.to], right_of_[v]);
    note_epsilon(A_.add_epsilon(v, to, e.color));
  }
}

void CompletionState::settle() {
  while (!pending_deltas_.empty() || !pending_epsilons_.empty() ||
         !pending_states_.empty()) {
    if (over_state_cap()) {
      pending_deltas_.clear();
      pending_epsilons_.clear();
      pending_states_.clear();
      return;
    }
    if (!pending_deltas_.empty()) {
      std::size_t idx = pending_deltas_.back();
      pending_deltas_.pop_back();
      copy_delta(idx);
      continue;
    }
    if (!pending_epsilons_.empty()) {
      std::size_t idx = pending_epsilons_.back();
      pending_epsilons_.pop_back();
      copy_epsilon(idx);
      continue;
    }
    StateId s = pending_states_.back();
    pending_states_.pop_back();
    if (right_of_[s] == reducible()) continue;
    auto r = pairs_.find({left_of_[s], reducible()});
    if (r == pairs_.end()) continue;
    const std::vector<std::size_t> users = A_.deltas_using(r->second);
    for (std::size_t idx : users) copy_delta(idx);
    const std::vector<std::size_t> eps = A_.epsilons_from(r->second);
    for (std::size_t idx : eps) copy_epsilon(idx);
  }
}

// ---------------------------------------------------------------------------
// Equations

namespace {

// Candidate states for each variable: those reaching every anchor. nullopt
// when some variable has no candidate.
std::optional<std::map<std::string, std::set<StateId>>> candidates(
    const TreeAutomaton& A, const StateBinding& anchors) {
  std::map<std::string, std::set<StateId>> out;
  for (const auto& [x, a] : anchors) {
    auto it = out.find(x);
    if (it == out.end()) {
      out.emplace(x, A.coclosure(a));
      continue;
    }
    std::set<StateId> keep;
    const auto& co = A.coclosure(a);
    std::set_intersection(it->second.begin(), it->second.end(), co.begin(),
                          co.end(), std::inserter(keep, keep.end()));
    if (keep.empty()) return std::nullopt;
    it->second = std::move(keep);
  }
  return out;
}

// Variables bound once keep their anchor; shared ones take the least
// common candidate.
StateBinding pick_theta(const StateBinding& anchors,
                        const std::map<std::string, std::set<StateId>>& cands) {
  StateBinding out;
  for (const auto& [x, c] : cands) {
    std::size_t occurrences = 0;
    StateId anchor = 0;
    for (const auto& [y, a] : anchors)
      if (y == x) {
        ++occurrences;
        anchor = a;
      }
    out.emplace_back(x, occurrences == 1 ? anchor : *c.begin());
  }
  return out;
}

}  // namespace

std::vector<EquationSituation> CompletionState::find_equation_situations(
    std::span<const Equation> E) const {
  std::map<std::tuple<std::size_t, StateId, StateId>, EquationSituation> found;
  MatchMemo memo;
  auto consider = [&](std::size_t ei, const StateBinding& theta, StateId q1,
                      StateId q2) {
    if (q1 == q2 || right_of_[q1] != right_of_[q2] || e_equivalent(A_, q1, q2))
      return;
    auto key = std::make_tuple(ei, std::min(q1, q2), std::max(q1, q2));
    found.try_emplace(key, EquationSituation{ei, theta, q1, q2});
  };
  for (std::size_t ei = 0; ei < E.size(); ++ei) {
    const Equation& eq = E[ei];
    if (eq.lhs.is_variable() && eq.rhs.is_variable()) continue;
    const Term& s = eq.lhs.is_variable() ? eq.rhs : eq.lhs;
    const Term& t = eq.lhs.is_variable() ? eq.lhs : eq.rhs;
    auto ms = match_anywhere(s, memo);
    if (t.is_variable()) {
      for (const auto& [anchors, t1] : ms) {
        auto cands = candidates(A_, anchors);
        if (!cands) continue;
        auto xc = cands->find(t.name());
        if (xc == cands->end()) continue;
        StateBinding theta = pick_theta(anchors, *cands);
        for (StateId c : xc->second) {
          for (auto& [x, q] : theta)
            if (x == t.name()) q = c;
          for (StateId q1 : A_.closure(t1))
            for (StateId q2 : A_.closure(c)) consider(ei, theta, q1, q2);
        }
      }
      continue;
    }
    auto mt = match_anywhere(t, memo);
    for (const auto& [a1, t1] : ms)
      for (const auto& [a2, t2] : mt) {
        StateBinding anchors;
        std::merge(a1.begin(), a1.end(), a2.begin(), a2.end(),
                   std::back_inserter(anchors));
        // Cheap pre-check: the targets' closures must share a right component.
        if (right_of_[t1] != right_of_[t2]) continue;
        auto cands = candidates(A_, anchors);
        if (!cands) continue;
        StateBinding theta = pick_theta(anchors, *cands);
        for (StateId q1 : A_.closure(t1))
          for (StateId q2 : A_.closure(t2)) consider(ei, theta, q1, q2);
      }
  }
  std::vector<EquationSituation> out;
  for (auto& [k, v] : found) out.push_back(std::move(v));
  return out;
}

bool CompletionState::apply_equation(const EquationSituation& s) {
  if (e_equivalent(A_, s.left, s.right)) return false;
  note_epsilon(A_.add_epsilon(s.left, s.right, Color::E));
  note_epsilon(A_.add_epsilon(s.right, s.left, Color::E));
  const std::uint32_t l1 = left_of_[s.left];
  const std::uint32_t l2 = left_of_[s.right];
  const std::vector<StateId> lefts = by_left_[l1];
  for (StateId x : lefts) {
    if (right_of_[x] == right_of_[s.left]) continue;
    auto y = pairs_.find({l2, right_of_[x]});
    if (y == pairs_.end() || y->second == x) continue;
    note_epsilon(A_.add_epsilon(x, y->second, Color::E));
    note_epsilon(A_.add_epsilon(y->second, x, Color::E));
  }
  settle();
  return true;
}

// ---------------------------------------------------------------------------
// Steps

StepStats CompletionState::step(std::span<const CriticalPair> cps,
                                std::span<const Equation> E) {
  StepStats st;
  st.step = trace_.size() + 1;
  for (const CriticalPair& cp : cps) {
    if (over_state_cap()) break;
    if (!still_critical(cp)) continue;
    if (events_) events_("resolve " + describe(cp));
    resolve(cp);
    ++st.cp_solved;
  }
  while (!over_state_cap()) {
    auto sits = find_equation_situations(E);
    if (sits.empty()) break;
    for (const auto& s : sits) {
      if (over_state_cap()) break;
      if (e_equivalent(A_, s.left, s.right)) continue;
      if (events_) events_("apply " + describe(s, E));
      if (apply_equation(s)) ++st.eq_applied;
    }
  }
  st.states = A_.num_states();
  st.transitions = A_.num_transitions();
  trace_.push_back(st);
  return st;
}

namespace {

std::string binding_text(const TreeAutomaton& A, const StateBinding& b) {
  std::string out = "{";
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (i) out += ",";
    out += b[i].first + "->" + A.name(b[i].second);
  }
  return out + "}";
}

}  // namespace

std::string CompletionState::describe(const CriticalPair& cp) const {
  return trs_.rules().at(cp.rule).to_string() + " " + binding_text(A_, cp.sigma) +
         " at " + A_.name(cp.target);
}

std::string CompletionState::describe(const EquationSituation& s,
                                      std::span<const Equation> E) const {
  return E[s.equation].to_string() + " " + binding_text(A_, s.theta) + " " +
         A_.name(s.left) + " = " + A_.name(s.right);
}

bool CompletionState::check_consistency(std::string* why) const {
  for (const Delta& d : A_.deltas()) {
    std::vector<StateId> rights;
    for (StateId a : d.args) rights.push_back(right_of_[a]);
    if (airr_.successor(d.symbol, rights) != right_of_[d.target]) {
      if (why) *why = "transition into " + A_.name(d.target) + " disagrees on right component";
      return false;
    }
  }
  for (const Epsilon& e : A_.epsilons()) {
    if (right_of_[e.from] != right_of_[e.to]) {
      if (why) *why = "epsilon " + A_.name(e.from) + " -> " + A_.name(e.to) + " changes right component";
      return false;
    }
  }
  return true;
}

CompletionResult run_completion(const TreeAutomaton& initial, const Trs& R,
                                std::span<const Equation> E, Strategy s,
                                Limits limits, const TraceSink& trace, Exec exec,
                                CompletionState::EventSink events) {
  CompletionState S = CompletionState::init(initial, R, s);
  S.set_event_sink(std::move(events));
  S.set_state_cap(limits.max_states);
  if (S.over_state_cap()) return {Outcome::StateLimit, std::move(S)};
  while (true) {
    auto cps = S.find_critical_pairs(exec);
    if (cps.empty() && S.find_equation_situations(E).empty())
      return {Outcome::Fixpoint, std::move(S)};
    if (S.steps_done() >= limits.max_steps) return {Outcome::StepLimit, std::move(S)};
    StepStats st = S.step(cps, E);
    if (trace) trace(st);
    if (S.over_state_cap()) return {Outcome::StateLimit, std::move(S)};
  }
}

TreeAutomaton reachable_view(const CompletionState& S) {
  std::set<StateId> finals;
  for (StateId q = 0; q < S.automaton().num_states(); ++q)
    if (S.left_is_final(q)) finals.insert(q);
  return with_finals(S.automaton(), finals);
}

TreeAutomaton normalized_view(const CompletionState& S) {
  std::set<StateId> finals;
  for (StateId q = 0; q < S.automaton().num_states(); ++q)
    if (S.left_is_final(q) && S.right(q) != S.reducible()) finals.insert(q);
  return with_finals(S.automaton(), finals);
}

TreeAutomaton projected_view(const CompletionState& S) {
  return project_left(reachable_view(S));
}

}  // namespace tacomp
