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

#include "tacomp/equations.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace tacomp {

SymbolSplit split_symbols(const Trs& R) {
  SymbolSplit out;
  out.defined = R.defined_symbols();
  for (const Symbol& s : R.signature().symbols())
    if (!out.defined.count(s.name)) out.constructors.insert(s.name);
  return out;
}

std::vector<Equation> rule_equations(const Trs& R) {
  std::vector<Equation> out;
  for (const Rule& r : R.rules()) out.push_back({r.lhs, r.rhs});
  return out;
}

std::vector<Equation> reflexivity_equations(const Signature& sig) {
  std::vector<Equation> out;
  for (const Symbol& s : sig.symbols()) {
    std::vector<Term> xs;
    for (std::size_t i = 1; i <= s.arity; ++i)
      xs.push_back(Term::variable("X" + std::to_string(i)));
    Term t = Term::apply(s.name, xs);
    out.push_back({t, t});
  }
  return out;
}

GeneratedEquations generate_equations(const Trs& R,
                                      std::span<const Equation> contracting) {
  GeneratedEquations out;
  auto add = [&](const Equation& e) {
    if (std::find(out.equations.begin(), out.equations.end(), e) == out.equations.end())
      out.equations.push_back(e);
  };
  for (const auto& e : rule_equations(R)) add(e);
  for (const auto& e : reflexivity_equations(R.signature())) add(e);
  const auto defined = R.defined_symbols();
  for (const Equation& e : contracting) {
    R.signature().validate(e.lhs);
    R.signature().validate(e.rhs);
    std::set<std::string> hit;
    std::function<void(const Term&)> scan = [&](const Term& t) {
      if (t.is_application() && defined.count(t.name())) hit.insert(t.name());
      for (const Term& a : t.args()) scan(a);
    };
    scan(e.lhs);
    scan(e.rhs);
    for (const auto& f : hit)
      out.warnings.push_back("equation " + e.to_string() +
                             " mentions defined symbol " + f);
    add(e);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Sorts

SortAssignment infer_sorts(const Signature& sig, std::span<const Rule> rules,
                           std::span<const Equation> equations,
                           std::span<const Term> hints) {
  // Slot layout: for each symbol, one result slot followed by its arguments.
  std::map<std::string, std::size_t> base;
  std::size_t n = 0;
  for (const Symbol& s : sig.symbols()) {
    base[s.name] = n;
    n += 1 + s.arity;
  }
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  // Variables get slots on demand.
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto unite = [&](std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  };
  auto fresh = [&]() {
    parent.push_back(parent.size());
    return parent.size() - 1;
  };

  std::map<std::string, std::size_t> vars;
  std::function<std::size_t(const Term&)> slot = [&](const Term& t) -> std::size_t {
    if (t.is_variable()) {
      auto it = vars.find(t.name());
      if (it == vars.end()) it = vars.emplace(t.name(), fresh()).first;
      return it->second;
    }
    if (!sig.contains(t.name()))
      throw Error(ErrorKind::UnknownSymbol, "unknown symbol '" + t.name() + "'");
    std::size_t b = base.at(t.name());
    for (std::size_t i = 0; i < t.arity(); ++i) unite(b + 1 + i, slot(t.arg(i)));
    return b;
  };
  auto pair = [&](const Term& l, const Term& r) {
    vars.clear();
    unite(slot(l), slot(r));
  };
  for (const Rule& r : rules) pair(r.lhs, r.rhs);
  for (const Equation& e : equations) pair(e.lhs, e.rhs);
  for (const Term& t : hints) {
    vars.clear();
    slot(t);
  }

  SortAssignment out;
  std::map<std::size_t, std::size_t> renumber;
  auto sort_of = [&](std::size_t s) {
    auto [it, fresh_sort] = renumber.emplace(find(s), renumber.size());
    (void)fresh_sort;
    return it->second;
  };
  for (const Symbol& s : sig.symbols()) {
    std::size_t b = base.at(s.name);
    std::vector<std::size_t> args;
    std::size_t res = sort_of(b);
    for (std::size_t i = 0; i < s.arity; ++i) args.push_back(sort_of(b + 1 + i));
    out.slots_[s.name] = {res, std::move(args)};
  }
  out.num_sorts_ = renumber.size();
  return out;
}

// ---------------------------------------------------------------------------
// Census

namespace {

std::vector<Term> constructor_pool(const Signature& sig, const SymbolSplit& split,
                                   std::size_t max_size,
                                   const SortAssignment* sorts) {
  std::vector<Symbol> cons;
  for (const Symbol& s : sig.symbols())
    if (split.constructors.count(s.name)) cons.push_back(s);
  if (!sorts) return ground_terms(Signature(cons), max_size);

  // exact[k][sort]: well-sorted terms with k nodes.
  const std::size_t ns = sorts->num_sorts();
  std::vector<std::vector<std::vector<Term>>> exact(
      max_size + 1, std::vector<std::vector<Term>>(ns));
  for (std::size_t k = 1; k <= max_size; ++k) {
    for (const Symbol& f : cons) {
      auto& bucket = exact[k][sorts->result(f.name)];
      if (f.arity == 0) {
        if (k == 1) bucket.push_back(Term::apply(f.name));
        continue;
      }
      std::vector<Term> args;
      std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t i,
                                                               std::size_t left) {
        if (i == f.arity) {
          if (left == 0) bucket.push_back(Term::apply(f.name, args));
          return;
        }
        std::size_t rest = f.arity - i - 1;
        for (std::size_t sz = 1; sz + rest <= left; ++sz)
          for (const Term& a : exact[sz][sorts->argument(f.name, i)]) {
            args.push_back(a);
            rec(i + 1, left - sz);
            args.pop_back();
          }
      };
      if (k >= f.arity + 1) rec(0, k - 1);
    }
  }
  std::vector<Term> out;
  for (std::size_t k = 1; k <= max_size; ++k) {
    std::vector<Term> level;
    for (auto& v : exact[k]) level.insert(level.end(), v.begin(), v.end());
    std::sort(level.begin(), level.end());
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

std::vector<Term> census_at(const Signature& sig, const SymbolSplit& split,
                            std::span<const Equation> equations,
                            std::size_t max_size, const SortAssignment* sorts,
                            std::size_t& examined) {
  std::vector<Term> pool = constructor_pool(sig, split, max_size, sorts);
  examined = pool.size();
  std::map<Term, std::size_t> index;
  for (std::size_t i = 0; i < pool.size(); ++i) index.emplace(pool[i], i);
  std::vector<std::size_t> parent(pool.size());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto unite = [&](std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  };

  for (std::size_t i = 0; i < pool.size(); ++i) {
    const Term& u = pool[i];
    for (const Equation& e : equations) {
      for (int dir = 0; dir < 2; ++dir) {
        const Term& from = dir == 0 ? e.lhs : e.rhs;
        const Term& to = dir == 0 ? e.rhs : e.lhs;
        if (from.is_variable()) continue;
        std::vector<std::string> extra;
        auto fv = variable_set(from);
        for (const auto& x : variables(to))
          if (!fv.count(x)) extra.push_back(x);
        for (const Position& p : positions(u)) {
          auto sigma = match_nonlinear(from, subterm_at(u, p));
          if (!sigma) continue;
          std::function<void(std::size_t)> rec = [&](std::size_t k) {
            if (k == extra.size()) {
              auto it = index.find(replace_at(u, p, substitute(*sigma, to)));
              if (it != index.end()) unite(i, it->second);
              return;
            }
            for (const Term& g : pool) {
              if (g.size() > max_size) break;
              sigma->insert_or_assign(extra[k], g);
              rec(k + 1);
            }
            sigma->erase(extra[k]);
          };
          rec(0);
        }
      }
    }
  }

  std::map<std::size_t, Term> best;
  BySizeThenCanonical less;
  for (std::size_t i = 0; i < pool.size(); ++i) {
    std::size_t r = find(i);
    auto it = best.find(r);
    if (it == best.end())
      best.emplace(r, pool[i]);
    else if (less(pool[i], it->second))
      it->second = pool[i];
  }
  std::vector<Term> reps;
  for (auto& [r, t] : best) reps.push_back(t);
  std::sort(reps.begin(), reps.end(), less);
  return reps;
}

}  // namespace

Census class_census(const Signature& sig, const SymbolSplit& split,
                    std::span<const Equation> equations, std::size_t max_size,
                    const SortAssignment* sorts) {
  Census out;
  out.representatives =
      census_at(sig, split, equations, max_size, sorts, out.terms_examined);
  if (max_size > 1) {
    std::size_t ignored = 0;
    auto smaller = census_at(sig, split, equations, max_size - 1, sorts, ignored);
    out.stable = smaller == out.representatives;
  }
  return out;
}

}  // namespace tacomp
