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

#include "tacomp/rewriting.hpp"

#include <algorithm>
#include <functional>

namespace tacomp {

const char* to_string(Strategy s) {
  switch (s) {
    case Strategy::Innermost: return "innermost";
    case Strategy::Leftmost: return "leftmost";
    case Strategy::Rightmost: return "rightmost";
  }
  return "?";
}

std::optional<Strategy> parse_strategy(std::string_view name) {
  if (name == "innermost") return Strategy::Innermost;
  if (name == "leftmost") return Strategy::Leftmost;
  if (name == "rightmost") return Strategy::Rightmost;
  return std::nullopt;
}

std::string Rule::to_string() const {
  return lhs.to_string() + " -> " + rhs.to_string();
}

std::string Equation::to_string() const {
  return lhs.to_string() + " = " + rhs.to_string();
}

Trs::Trs(Signature sig, std::vector<Rule> rules)
    : sig_(std::move(sig)), rules_(std::move(rules)) {
  for (const Rule& r : rules_) {
    if (r.lhs.is_variable())
      throw Error(ErrorKind::VariableLhs,
                  "rule " + r.to_string() + " has a variable left-hand side");
    sig_.validate(r.lhs);
    sig_.validate(r.rhs);
    auto lv = variable_set(r.lhs);
    for (const auto& x : variables(r.rhs))
      if (!lv.count(x))
        throw Error(ErrorKind::UnboundVariable,
                    "variable " + x + " of rule " + r.to_string() +
                        " does not occur on the left");
    left_linear_ = left_linear_ && is_linear(r.lhs);
  }
}

std::set<std::string> Trs::defined_symbols() const {
  std::set<std::string> out;
  for (const Rule& r : rules_) out.insert(r.lhs.name());
  return out;
}

// ---------------------------------------------------------------------------
// One-step rewriting

std::vector<Redex> redexes(const Trs& R, const Term& t) {
  std::vector<Redex> out;
  for (const Position& p : positions(t)) {
    const Term& u = subterm_at(t, p);
    if (!u.is_application()) continue;
    for (std::size_t i = 0; i < R.rules().size(); ++i) {
      if (auto sigma = match_nonlinear(R.rules()[i].lhs, u))
        out.push_back({p, i, std::move(*sigma)});
    }
  }
  return out;
}

bool is_normal_form(const Trs& R, const Term& t) {
  if (t.is_application()) {
    for (const Rule& r : R.rules())
      if (match_nonlinear(r.lhs, t)) return false;
  }
  for (const Term& a : t.args())
    if (!is_normal_form(R, a)) return false;
  return true;
}

std::vector<Redex> innermost_redexes(const Trs& R, const Term& t) {
  auto all = redexes(R, t);
  std::vector<Redex> out;
  for (const Redex& r : all) {
    bool inner = std::none_of(all.begin(), all.end(), [&](const Redex& o) {
      return is_strict_prefix(r.position, o.position);
    });
    if (inner) out.push_back(r);
  }
  return out;
}

std::vector<Redex> strategy_redexes(const Trs& R, const Term& t, Strategy s) {
  auto inner = innermost_redexes(R, t);
  if (s == Strategy::Innermost || inner.empty()) return inner;
  // Positions are sorted lexicographically already.
  const Position& pick =
      s == Strategy::Leftmost ? inner.front().position : inner.back().position;
  std::vector<Redex> out;
  for (auto& r : inner)
    if (r.position == pick) out.push_back(std::move(r));
  return out;
}

Term contract(const Trs& R, const Term& t, const Redex& r) {
  return replace_at(t, r.position, substitute(r.sigma, R.rules()[r.rule].rhs));
}

std::set<Term> one_step(const Trs& R, const Term& t) {
  std::set<Term> out;
  for (const Redex& r : redexes(R, t)) out.insert(contract(R, t, r));
  return out;
}

std::set<Term> innermost_one_step(const Trs& R, const Term& t, Strategy s) {
  std::set<Term> out;
  for (const Redex& r : strategy_redexes(R, t, s)) out.insert(contract(R, t, r));
  return out;
}

// ---------------------------------------------------------------------------
// Bounded exploration

namespace {

// Expands every frontier term with `succ`, one task per term. Results are
// merged in frontier order so the outcome does not depend on scheduling.
std::vector<std::vector<Term>> expand_frontier(
    const std::vector<Term>& frontier,
    const std::function<std::vector<Term>(const Term&)>& succ, Exec exec) {
  std::vector<std::vector<Term>> out(frontier.size());
  const long n = static_cast<long>(frontier.size());
  if (exec == Exec::Serial) {
    for (long i = 0; i < n; ++i) out[i] = succ(frontier[i]);
    return out;
  }
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < n; ++i) out[i] = succ(frontier[i]);
  return out;
}

BoundedSet explore(std::span<const Term> seeds,
                   const std::function<std::vector<Term>(const Term&)>& succ,
                   Bounds b, Exec exec) {
  BoundedSet res;
  bool dropped = false;
  std::vector<Term> frontier;
  for (const Term& s : seeds)
    if (res.terms.insert(s).second) frontier.push_back(s);
  for (std::size_t level = 0; !frontier.empty(); ++level) {
    if (level == b.max_steps) {
      // Frontier not yet expanded: only saturated if it has no successors.
      bool more = false;
      for (const auto& v : expand_frontier(frontier, succ, exec))
        for (const Term& t : v)
          if (!res.terms.count(t)) more = true;
      res.saturated = !more && !dropped;
      return res;
    }
    std::vector<Term> next;
    for (auto& v : expand_frontier(frontier, succ, exec)) {
      for (Term& t : v) {
        if (t.size() > b.max_size) {
          dropped = true;
          continue;
        }
        if (res.terms.insert(t).second) next.push_back(std::move(t));
      }
    }
    frontier = std::move(next);
  }
  res.saturated = !dropped;
  return res;
}

}  // namespace

BoundedSet bounded_reachable(const Trs& R, std::span<const Term> seeds,
                             std::optional<Strategy> s, Bounds b, Exec exec) {
  auto succ = [&](const Term& t) {
    auto next = s ? innermost_one_step(R, t, *s) : one_step(R, t);
    return std::vector<Term>(next.begin(), next.end());
  };
  return explore(seeds, succ, b, exec);
}

BoundedSet bounded_normal_forms(const Trs& R, std::span<const Term> seeds,
                                std::optional<Strategy> s, Bounds b,
                                Exec exec) {
  BoundedSet all = bounded_reachable(R, seeds, s, b, exec);
  BoundedSet out;
  out.saturated = all.saturated;
  for (const Term& t : all.terms)
    if (is_normal_form(R, t)) out.terms.insert(t);
  return out;
}

std::vector<Term> ground_terms(const Signature& sig, std::size_t max_size) {
  // by_size[k] = all ground terms with exactly k nodes.
  std::vector<std::vector<Term>> by_size(max_size + 1);
  for (std::size_t k = 1; k <= max_size; ++k) {
    for (const Symbol& f : sig.symbols()) {
      if (f.arity == 0) {
        if (k == 1) by_size[k].push_back(Term::apply(f.name));
        continue;
      }
      if (k < f.arity + 1) continue;
      std::vector<Term> args;
      std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t i,
                                                               std::size_t left) {
        if (i == f.arity) {
          if (left == 0) by_size[k].push_back(Term::apply(f.name, args));
          return;
        }
        std::size_t rest = f.arity - i - 1;
        for (std::size_t sz = 1; sz + rest <= left; ++sz) {
          for (const Term& a : by_size[sz]) {
            args.push_back(a);
            rec(i + 1, left - sz);
            args.pop_back();
          }
        }
      };
      rec(0, k - 1);
    }
    std::sort(by_size[k].begin(), by_size[k].end());
  }
  std::vector<Term> out;
  for (auto& v : by_size) out.insert(out.end(), v.begin(), v.end());
  return out;
}

namespace {

// All results of replacing one instance of `from` by `to` anywhere in `t`.
void equation_successors(const Signature& sig, const Term& t, const Term& from,
                         const Term& to, std::size_t max_size,
                         const std::vector<Term>& pool, bool& dropped,
                         std::vector<Term>& out) {
  std::vector<std::string> extra;
  {
    auto fv = variable_set(from);
    for (const auto& x : variables(to))
      if (!fv.count(x)) extra.push_back(x);
  }
  (void)sig;
  for (const Position& p : positions(t)) {
    auto sigma = match_nonlinear(from, subterm_at(t, p));
    if (!sigma) continue;
    if (extra.empty()) {
      Term u = replace_at(t, p, substitute(*sigma, to));
      if (u.size() > max_size) {
        dropped = true;
        continue;
      }
      out.push_back(std::move(u));
      continue;
    }
    // Instantiate the introduced variables from the pool.
    std::function<void(std::size_t, Substitution&)> rec =
        [&](std::size_t i, Substitution& s) {
          if (i == extra.size()) {
            Term u = replace_at(t, p, substitute(s, to));
            if (u.size() > max_size) {
              dropped = true;
              return;
            }
            out.push_back(std::move(u));
            return;
          }
          for (const Term& g : pool) {
            if (g.size() + t.size() > max_size + subterm_at(t, p).size()) {
              dropped = true;
              break;
            }
            s.insert_or_assign(extra[i], g);
            rec(i + 1, s);
          }
          s.erase(extra[i]);
        };
    Substitution s = *sigma;
    rec(0, s);
  }
}

}  // namespace

BoundedSet bounded_class(const Signature& sig, std::span<const Equation> E,
                         const Term& t, std::size_t max_size) {
  bool needs_pool = false;
  for (const Equation& e : E) {
    if (variable_set(e.lhs) != variable_set(e.rhs)) needs_pool = true;
  }
  std::vector<Term> pool;
  if (needs_pool) {
    pool = ground_terms(sig, max_size);
    std::stable_sort(pool.begin(), pool.end(), BySizeThenCanonical{});
  }
  BoundedSet res;
  bool dropped = false;
  std::vector<Term> work{t};
  res.terms.insert(t);
  while (!work.empty()) {
    Term u = work.back();
    work.pop_back();
    std::vector<Term> next;
    for (const Equation& e : E) {
      if (!e.lhs.is_variable())
        equation_successors(sig, u, e.lhs, e.rhs, max_size, pool, dropped, next);
      if (!e.rhs.is_variable())
        equation_successors(sig, u, e.rhs, e.lhs, max_size, pool, dropped, next);
    }
    for (Term& v : next)
      if (res.terms.insert(v).second) work.push_back(std::move(v));
  }
  res.saturated = !dropped;
  return res;
}

BoundedSet bounded_reachable_modulo(const Trs& R, std::span<const Equation> E,
                                    std::span<const Term> seeds, Strategy s,
                                    Bounds b, Exec exec) {
  const Signature& sig = R.signature();
  bool dropped = false;
  BoundedSet res;
  std::vector<Term> frontier;
  auto close = [&](const Term& t) {
    BoundedSet c = bounded_class(sig, E, t, b.max_size);
    if (!c.saturated) dropped = true;
    for (const Term& u : c.terms)
      if (res.terms.insert(u).second) frontier.push_back(u);
  };
  for (const Term& t : seeds) close(t);
  auto succ = [&](const Term& t) {
    auto next = innermost_one_step(R, t, s);
    return std::vector<Term>(next.begin(), next.end());
  };
  for (std::size_t level = 0; !frontier.empty(); ++level) {
    auto expanded = expand_frontier(frontier, succ, exec);
    frontier.clear();
    std::vector<Term> fresh;
    for (auto& v : expanded)
      for (Term& t : v) {
        if (t.size() > b.max_size) {
          dropped = true;
          continue;
        }
        if (!res.terms.count(t)) fresh.push_back(std::move(t));
      }
    if (level == b.max_steps) {
      res.saturated = fresh.empty() && !dropped;
      return res;
    }
    for (const Term& t : fresh)
      if (!res.terms.count(t)) close(t);
  }
  res.saturated = !dropped;
  return res;
}

}  // namespace tacomp
