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

#include "tacomp/automaton.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace tacomp {

const char* to_string(Color c) { return c == Color::R ? "R" : "E"; }

TreeAutomaton::TreeAutomaton(Signature sig)
    : sig_(std::move(sig)), by_symbol_(sig_.size()) {}

StateId TreeAutomaton::add_state(std::string name,
                                 std::optional<PairComponents> pair) {
  if (by_name_.count(name))
    throw Error(ErrorKind::DuplicateState, "duplicate state '" + name + "'");
  StateId id = static_cast<StateId>(states_.size());
  by_name_.emplace(name, id);
  states_.push_back({std::move(name), std::move(pair)});
  into_.emplace_back();
  using_.emplace_back();
  eps_from_.emplace_back();
  fwd_.push_back({id});
  bwd_.push_back({id});
  return id;
}

std::optional<StateId> TreeAutomaton::find_state(std::string_view name) const {
  auto it = by_name_.find(name);
  if (it == by_name_.end()) return std::nullopt;
  return it->second;
}

StateId TreeAutomaton::state_id(std::string_view name) const {
  auto q = find_state(name);
  if (!q) throw Error(ErrorKind::UnknownState,
                      "unknown state '" + std::string(name) + "'");
  return *q;
}

void TreeAutomaton::set_final(StateId q, bool final) {
  if (q >= states_.size())
    throw Error(ErrorKind::UnknownState, "unknown state id");
  if (final)
    finals_.insert(q);
  else
    finals_.erase(q);
}

bool TreeAutomaton::add_delta(SymbolId f, std::vector<StateId> args,
                              StateId target) {
  if (f >= sig_.size()) throw Error(ErrorKind::UnknownSymbol, "unknown symbol id");
  if (sig_.symbol(f).arity != args.size())
    throw Error(ErrorKind::ArityMismatch,
                "transition for '" + sig_.symbol(f).name + "' has " +
                    std::to_string(args.size()) + " arguments");
  if (target >= states_.size())
    throw Error(ErrorKind::UnknownState, "unknown target state");
  for (StateId a : args)
    if (a >= states_.size())
      throw Error(ErrorKind::UnknownState, "unknown argument state");
  auto& tgts = lhs_[{f, args}];
  if (!tgts.insert(target).second) return false;
  std::size_t idx = deltas_.size();
  by_symbol_[f].push_back(idx);
  into_[target].push_back(idx);
  for (std::size_t i = 0; i < args.size(); ++i) {
    // Record each argument state once even if it repeats.
    if (std::find(args.begin(), args.begin() + i, args[i]) == args.begin() + i)
      using_[args[i]].push_back(idx);
  }
  deltas_.push_back({f, std::move(args), target});
  return true;
}

bool TreeAutomaton::add_delta(std::string_view f, std::vector<StateId> args,
                              StateId target) {
  auto id = sig_.id(f);
  if (!id) throw Error(ErrorKind::UnknownSymbol,
                       "unknown symbol '" + std::string(f) + "'");
  return add_delta(*id, std::move(args), target);
}

bool TreeAutomaton::add_epsilon(StateId from, StateId to, Color color) {
  if (from >= states_.size() || to >= states_.size())
    throw Error(ErrorKind::UnknownState, "unknown epsilon endpoint");
  if (!eps_set_.insert({from, to, color}).second) return false;
  eps_from_[from].push_back(epsilons_.size());
  epsilons_.push_back({from, to, color});
  if (fwd_[from].count(to)) return true;
  const std::vector<StateId> sources(bwd_[from].begin(), bwd_[from].end());
  const std::vector<StateId> sinks(fwd_[to].begin(), fwd_[to].end());
  for (StateId x : sources)
    for (StateId y : sinks) {
      fwd_[x].insert(y);
      bwd_[y].insert(x);
    }
  return true;
}

const std::set<StateId>& TreeAutomaton::targets(
    SymbolId f, const std::vector<StateId>& args) const {
  static const std::set<StateId> kEmpty;
  auto it = lhs_.find({f, args});
  return it == lhs_.end() ? kEmpty : it->second;
}

bool TreeAutomaton::has_delta(SymbolId f, const std::vector<StateId>& args,
                              StateId target) const {
  return targets(f, args).count(target) != 0;
}

bool TreeAutomaton::has_epsilon(StateId from, StateId to, Color color) const {
  return eps_set_.count({from, to, color}) != 0;
}

// ---------------------------------------------------------------------------
// Recognition

std::set<StateId> derive_states(const TreeAutomaton& A, const Term& c) {
  switch (c.kind()) {
    case TermKind::Variable:
      throw Error(ErrorKind::UnboundVariable,
                  "configuration contains variable " + c.name());
    case TermKind::State:
      if (c.state_id() >= A.num_states())
        throw Error(ErrorKind::UnknownState, "unknown state in configuration");
      return A.closure(c.state_id());
    case TermKind::Application: break;
  }
  auto f = A.signature().id(c.name());
  if (!f) throw Error(ErrorKind::UnknownSymbol,
                      "unknown symbol '" + c.name() + "'");
  if (A.signature().symbol(*f).arity != c.arity())
    throw Error(ErrorKind::ArityMismatch, "arity mismatch for " + c.name());
  std::vector<std::set<StateId>> kids;
  std::size_t combos = 1;
  for (const Term& a : c.args()) {
    kids.push_back(derive_states(A, a));
    if (kids.back().empty()) return {};
    combos *= kids.back().size();
  }
  std::set<StateId> out;
  auto reach = [&](StateId t) {
    const auto& cl = A.closure(t);
    out.insert(cl.begin(), cl.end());
  };
  const auto& candidates = A.deltas_with_symbol(*f);
  if (combos <= candidates.size()) {
    std::vector<StateId> args(kids.size());
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
      if (i == kids.size()) {
        for (StateId t : A.targets(*f, args)) reach(t);
        return;
      }
      for (StateId q : kids[i]) {
        args[i] = q;
        rec(i + 1);
      }
    };
    rec(0);
  } else {
    for (std::size_t idx : candidates) {
      const Delta& d = A.deltas()[idx];
      bool ok = true;
      for (std::size_t i = 0; ok && i < d.args.size(); ++i)
        ok = kids[i].count(d.args[i]) != 0;
      if (ok) reach(d.target);
    }
  }
  return out;
}

bool recognizes(const TreeAutomaton& A, const Term& t, StateId q) {
  return derive_states(A, t).count(q) != 0;
}

std::vector<std::set<Term>> enumerate_by_state(const TreeAutomaton& A,
                                               std::size_t max_size) {
  const std::size_t n = A.num_states();
  // exact[k][q]: terms of size exactly k recognized in q.
  std::vector<std::vector<std::set<Term>>> exact(
      max_size + 1, std::vector<std::set<Term>>(n));
  for (std::size_t k = 1; k <= max_size; ++k) {
    for (const Delta& d : A.deltas()) {
      const std::string& f = A.signature().symbol(d.symbol).name;
      const std::size_t ar = d.args.size();
      std::vector<Term> made;
      if (ar == 0) {
        if (k == 1) made.push_back(Term::apply(f));
      } else if (k >= ar + 1) {
        std::vector<Term> args;
        std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t i,
                                                                 std::size_t left) {
          if (i == ar) {
            if (left == 0) made.push_back(Term::apply(f, args));
            return;
          }
          std::size_t rest = ar - i - 1;
          for (std::size_t sz = 1; sz + rest <= left; ++sz)
            for (const Term& a : exact[sz][d.args[i]]) {
              args.push_back(a);
              rec(i + 1, left - sz);
              args.pop_back();
            }
        };
        rec(0, k - 1);
      }
      if (made.empty()) continue;
      for (StateId q : A.closure(d.target))
        exact[k][q].insert(made.begin(), made.end());
    }
  }
  std::vector<std::set<Term>> out(n);
  for (std::size_t k = 1; k <= max_size; ++k)
    for (std::size_t q = 0; q < n; ++q)
      out[q].insert(exact[k][q].begin(), exact[k][q].end());
  return out;
}

std::set<Term> enumerate_language(const TreeAutomaton& A,
                                  const std::set<StateId>& targets,
                                  std::size_t max_size) {
  auto per = enumerate_by_state(A, max_size);
  std::set<Term> out;
  for (StateId q : targets) out.insert(per.at(q).begin(), per.at(q).end());
  return out;
}

std::optional<Term> language_witness(const TreeAutomaton& A,
                                     const std::set<StateId>& targets) {
  std::vector<std::optional<Term>> best(A.num_states());
  BySizeThenCanonical less;
  bool changed = true;
  while (changed) {
    changed = false;
    for (const Delta& d : A.deltas()) {
      std::vector<Term> args;
      bool ok = true;
      for (StateId a : d.args) {
        if (!best[a]) {
          ok = false;
          break;
        }
        args.push_back(*best[a]);
      }
      if (!ok) continue;
      Term t = Term::apply(A.signature().symbol(d.symbol).name, std::move(args));
      for (StateId q : A.closure(d.target)) {
        if (!best[q] || less(t, *best[q])) {
          best[q] = t;
          changed = true;
        }
      }
    }
  }
  std::optional<Term> out;
  for (StateId q : targets)
    if (best.at(q) && (!out || less(*best[q], *out))) out = best[q];
  return out;
}

bool language_empty(const TreeAutomaton& A, const std::set<StateId>& targets) {
  return !language_witness(A, targets).has_value();
}

std::vector<bool> accessible_states(const TreeAutomaton& A) {
  std::vector<bool> acc(A.num_states(), false);
  bool changed = true;
  while (changed) {
    changed = false;
    for (const Delta& d : A.deltas()) {
      if (acc[d.target] && A.closure(d.target).size() == 1) continue;
      if (!std::all_of(d.args.begin(), d.args.end(),
                       [&](StateId a) { return acc[a]; }))
        continue;
      for (StateId q : A.closure(d.target))
        if (!acc[q]) acc[q] = changed = true;
    }
  }
  return acc;
}

namespace {

// Copies the states selected by `keep` (in id order) with their finality.
// Returns the old-to-new id map.
std::vector<std::optional<StateId>> copy_states(const TreeAutomaton& A,
                                                const std::vector<bool>& keep,
                                                TreeAutomaton& out) {
  std::vector<std::optional<StateId>> map(A.num_states());
  for (StateId q = 0; q < A.num_states(); ++q) {
    if (!keep[q]) continue;
    map[q] = out.add_state(A.state(q).name, A.state(q).pair);
    if (A.is_final(q)) out.set_final(*map[q]);
  }
  return map;
}

}  // namespace

TreeAutomaton prune_inaccessible(const TreeAutomaton& A) {
  auto acc = accessible_states(A);
  TreeAutomaton out(A.signature());
  auto map = copy_states(A, acc, out);
  for (const Delta& d : A.deltas()) {
    if (!map[d.target]) continue;
    std::vector<StateId> args;
    bool ok = true;
    for (StateId a : d.args) {
      if (!map[a]) {
        ok = false;
        break;
      }
      args.push_back(*map[a]);
    }
    if (ok) out.add_delta(d.symbol, std::move(args), *map[d.target]);
  }
  for (const Epsilon& e : A.epsilons())
    if (map[e.from] && map[e.to]) out.add_epsilon(*map[e.from], *map[e.to], e.color);
  return out;
}

bool is_deterministic(const TreeAutomaton& A) {
  if (!A.epsilons().empty()) return false;
  for (const Delta& d : A.deltas())
    if (A.targets(d.symbol, d.args).size() > 1) return false;
  return true;
}

bool is_complete(const TreeAutomaton& A) {
  const std::size_t n = A.num_states();
  for (SymbolId f = 0; f < A.signature().size(); ++f) {
    std::set<std::vector<StateId>> seen;
    for (std::size_t idx : A.deltas_with_symbol(f)) seen.insert(A.deltas()[idx].args);
    std::size_t need = 1;
    for (std::size_t i = 0; i < A.signature().symbol(f).arity; ++i) need *= n;
    if (seen.size() != need) return false;
  }
  return true;
}

TreeAutomaton product(const TreeAutomaton& A, const TreeAutomaton& B) {
  if (!(A.signature() == B.signature()))
    throw Error(ErrorKind::SignatureMismatch, "product of automata over different signatures");
  if (!A.epsilons().empty() || !B.epsilons().empty())
    throw Error(ErrorKind::ColoredInput, "product expects epsilon-free automata");
  TreeAutomaton out(A.signature());
  const std::size_t nb = B.num_states();
  auto pair_id = [&](StateId a, StateId b) {
    return static_cast<StateId>(a * nb + b);
  };
  for (StateId a = 0; a < A.num_states(); ++a)
    for (StateId b = 0; b < nb; ++b) {
      std::string name = A.name(a) + "_" + B.name(b);
      while (out.find_state(name)) name += "'";
      StateId q = out.add_state(name, PairComponents{A.name(a), B.name(b)});
      if (A.is_final(a) && B.is_final(b)) out.set_final(q);
    }
  for (SymbolId f = 0; f < A.signature().size(); ++f)
    for (std::size_t i : A.deltas_with_symbol(f))
      for (std::size_t j : B.deltas_with_symbol(f)) {
        const Delta& da = A.deltas()[i];
        const Delta& db = B.deltas()[j];
        std::vector<StateId> args(da.args.size());
        for (std::size_t k = 0; k < args.size(); ++k)
          args[k] = pair_id(da.args[k], db.args[k]);
        out.add_delta(f, std::move(args), pair_id(da.target, db.target));
      }
  return out;
}

TreeAutomaton project_left(const TreeAutomaton& A) {
  TreeAutomaton out(A.signature());
  std::vector<StateId> map(A.num_states());
  for (StateId q = 0; q < A.num_states(); ++q) {
    const auto& info = A.state(q);
    if (!info.pair)
      throw Error(ErrorKind::NotPairAutomaton,
                  "state '" + info.name + "' is not a pair state");
    auto existing = out.find_state(info.pair->left);
    map[q] = existing ? *existing : out.add_state(info.pair->left);
    if (A.is_final(q)) out.set_final(map[q]);
  }
  for (const Delta& d : A.deltas()) {
    std::vector<StateId> args;
    for (StateId a : d.args) args.push_back(map[a]);
    out.add_delta(d.symbol, std::move(args), map[d.target]);
  }
  for (const Epsilon& e : A.epsilons())
    if (map[e.from] != map[e.to]) out.add_epsilon(map[e.from], map[e.to], e.color);
  return out;
}

TreeAutomaton strip_color(const TreeAutomaton& A, Color c) {
  TreeAutomaton out(A.signature());
  copy_states(A, std::vector<bool>(A.num_states(), true), out);
  for (const Delta& d : A.deltas()) out.add_delta(d.symbol, d.args, d.target);
  for (const Epsilon& e : A.epsilons())
    if (e.color != c) out.add_epsilon(e.from, e.to, e.color);
  return out;
}

bool e_equivalent(const TreeAutomaton& A, StateId q, StateId q2) {
  return q == q2 ||
         (A.has_epsilon(q, q2, Color::E) && A.has_epsilon(q2, q, Color::E));
}

TreeAutomaton quotient(const TreeAutomaton& A) {
  std::vector<StateId> parent(A.num_states());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<StateId(StateId)> find = [&](StateId x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const Epsilon& e : A.epsilons()) {
    if (e.color != Color::E || !A.has_epsilon(e.to, e.from, Color::E)) continue;
    StateId a = find(e.from), b = find(e.to);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  TreeAutomaton out(A.signature());
  std::map<StateId, StateId> cls;
  std::vector<StateId> map(A.num_states());
  for (StateId q = 0; q < A.num_states(); ++q) {
    StateId r = find(q);
    auto it = cls.find(r);
    if (it == cls.end()) it = cls.emplace(r, out.add_state(A.name(r), A.state(r).pair)).first;
    map[q] = it->second;
    if (A.is_final(q)) out.set_final(map[q]);
  }
  for (const Delta& d : A.deltas()) {
    std::vector<StateId> args;
    for (StateId a : d.args) args.push_back(map[a]);
    out.add_delta(d.symbol, std::move(args), map[d.target]);
  }
  for (const Epsilon& e : A.epsilons())
    if (map[e.from] != map[e.to]) out.add_epsilon(map[e.from], map[e.to], e.color);
  return out;
}

TreeAutomaton restrict_symbols(const TreeAutomaton& A,
                               const std::set<std::string>& allowed) {
  TreeAutomaton out(A.signature());
  copy_states(A, std::vector<bool>(A.num_states(), true), out);
  for (const Delta& d : A.deltas())
    if (allowed.count(A.signature().symbol(d.symbol).name))
      out.add_delta(d.symbol, d.args, d.target);
  for (const Epsilon& e : A.epsilons()) out.add_epsilon(e.from, e.to, e.color);
  return out;
}

TreeAutomaton with_finals(const TreeAutomaton& A,
                          const std::set<StateId>& finals) {
  TreeAutomaton out = A;
  for (StateId q : A.finals()) out.set_final(q, false);
  for (StateId q : finals) out.set_final(q);
  return out;
}

}  // namespace tacomp
