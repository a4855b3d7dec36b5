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

#include "tacomp/airr.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace tacomp {

namespace {

const Term& wildcard() {
  static const Term w = Term::variable("_");
  return w;
}

Term erase_variables(const Term& t) {
  if (t.is_variable()) return wildcard();
  std::vector<Term> args;
  for (const Term& a : t.args()) args.push_back(erase_variables(a));
  return Term::apply(t.name(), std::move(args));
}

struct Pattern {
  Term term;
  SymbolId symbol;
  // Child pattern index, or -1 for a wildcard.
  std::vector<long> children;
  bool tracked = false;
  bool lhs = false;
};

}  // namespace

NormalFormAutomaton build_airr(const Trs& R) {
  if (!R.left_linear())
    throw Error(ErrorKind::NotLeftLinear, "rewrite system is not left-linear");
  const Signature& sig = R.signature();

  // Collect fragments.
  std::map<Term, std::pair<bool, bool>> found;  // term -> (strict, root of lhs)
  std::function<void(const Term&, bool)> collect = [&](const Term& t, bool root) {
    if (t.is_variable()) return;
    auto& flags = found[t];
    if (root) flags.second = true; else flags.first = true;
    for (const Term& a : t.args()) collect(a, false);
  };
  for (const Rule& r : R.rules()) collect(erase_variables(r.lhs), true);

  std::vector<Pattern> pats;
  std::map<Term, long> index;
  for (const auto& [t, flags] : found) {
    index[t] = static_cast<long>(pats.size());
    pats.push_back({t, *sig.id(t.name()), {}, flags.first, flags.second});
  }
  for (Pattern& p : pats)
    for (const Term& a : p.term.args())
      p.children.push_back(a.is_variable() ? -1 : index.at(a));

  std::vector<std::vector<long>> by_symbol(sig.size());
  for (long i = 0; i < static_cast<long>(pats.size()); ++i)
    by_symbol[pats[i].symbol].push_back(i);

  NormalFormAutomaton out;
  out.patterns_.reserve(pats.size());
  for (const Pattern& p : pats) out.patterns_.push_back(p.term);

  // State 0 is the reducible sink, state 1 the empty fragment set.
  std::vector<std::vector<std::size_t>> sets{{}, {}};
  std::map<std::vector<std::size_t>, StateId> ids{{{}, 1}};
  const StateId red = 0;

  auto step = [&](SymbolId f, const std::vector<StateId>& args) -> StateId {
    for (StateId a : args)
      if (a == red) return red;
    std::vector<std::size_t> matched;
    for (long pi : by_symbol[f]) {
      const Pattern& p = pats[pi];
      bool ok = true;
      for (std::size_t k = 0; ok && k < p.children.size(); ++k) {
        if (p.children[k] < 0) continue;
        const auto& s = sets[args[k]];
        ok = std::binary_search(s.begin(), s.end(),
                                static_cast<std::size_t>(p.children[k]));
      }
      if (!ok) continue;
      if (p.lhs) return red;
      if (p.tracked) matched.push_back(static_cast<std::size_t>(pi));
    }
    auto [it, fresh] = ids.emplace(matched, static_cast<StateId>(sets.size()));
    if (fresh) sets.push_back(matched);
    return it->second;
  };

  // Enumerates every argument tuple over states [0, n) for symbol f.
  auto for_tuples = [](std::size_t arity, std::size_t n,
                       const std::function<void(const std::vector<StateId>&)>& fn) {
    std::vector<StateId> args(arity, 0);
    while (true) {
      fn(args);
      std::size_t k = arity;
      while (k > 0) {
        --k;
        if (++args[k] < n) break;
        args[k] = 0;
        if (k == 0) return;
      }
      if (arity == 0) return;
    }
  };

  std::size_t known = 0;
  while (known != sets.size()) {
    known = sets.size();
    for (SymbolId f = 0; f < sig.size(); ++f)
      for_tuples(sig.symbol(f).arity, known,
                 [&](const std::vector<StateId>& args) { step(f, args); });
  }

  TreeAutomaton A(sig);
  for (StateId q = 0; q < sets.size(); ++q) {
    std::string name = q == red ? "p_red" : q == 1 ? "p_var" : "p" + std::to_string(q - 1);
    A.add_state(name);
    if (q != red) A.set_final(q);
  }
  for (SymbolId f = 0; f < sig.size(); ++f)
    for_tuples(sig.symbol(f).arity, sets.size(),
               [&](const std::vector<StateId>& args) { A.add_delta(f, args, step(f, args)); });

  out.automaton_ = std::move(A);
  out.red_ = red;
  out.plain_ = 1;
  out.members_ = std::move(sets);
  return out;
}

StateId NormalFormAutomaton::successor(SymbolId f,
                                       const std::vector<StateId>& args) const {
  const auto& t = automaton_.targets(f, args);
  if (t.size() != 1)
    throw Error(ErrorKind::UnknownState, "normal-form automaton has no transition");
  return *t.begin();
}

StateId NormalFormAutomaton::state_of(const Term& t) const {
  if (t.is_state()) {
    if (t.state_id() >= automaton_.num_states())
      throw Error(ErrorKind::UnknownState, "state leaf out of range");
    return t.state_id();
  }
  if (t.is_variable())
    throw Error(ErrorKind::UnboundVariable, "variable in ground term");
  auto f = automaton_.signature().id(t.name());
  if (!f) throw Error(ErrorKind::UnknownSymbol, "unknown symbol '" + t.name() + "'");
  std::vector<StateId> args;
  for (const Term& a : t.args()) args.push_back(state_of(a));
  return successor(*f, args);
}

std::vector<Term> NormalFormAutomaton::fragments(StateId q) const {
  std::vector<Term> out;
  for (std::size_t i : members_.at(q)) out.push_back(patterns_[i]);
  return out;
}

}  // namespace tacomp
