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

// Approximation equation sets and a bounded census of the equivalence
// classes they induce on constructor terms.

#pragma once

#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "tacomp/rewriting.hpp"

namespace tacomp {

struct SymbolSplit {
  // Root symbols of left-hand sides.
  std::set<std::string> defined;
  // Everything else in the signature.
  std::set<std::string> constructors;
};

SymbolSplit split_symbols(const Trs& R);

// Each rule read as an equation.
std::vector<Equation> rule_equations(const Trs& R);
// f(X1,...,Xn) = f(X1,...,Xn) for every symbol, in signature order.
std::vector<Equation> reflexivity_equations(const Signature& sig);

struct GeneratedEquations {
  std::vector<Equation> equations;
  std::vector<std::string> warnings;
};

// Rule equations, then reflexivity equations, then `contracting`, with
// repeats dropped. Warns when a contracting equation mentions a defined
// symbol.
GeneratedEquations generate_equations(const Trs& R,
                                      std::span<const Equation> contracting);

// Many-sorted typing recovered by unification over symbol argument and
// result slots.
class SortAssignment {
 public:
  std::size_t result(const std::string& f) const { return slots_.at(f).first; }
  std::size_t argument(const std::string& f, std::size_t i) const {
    return slots_.at(f).second.at(i);
  }
  std::size_t num_sorts() const { return num_sorts_; }
  bool same_sort(const std::string& f, const std::string& g) const {
    return result(f) == result(g);
  }

 private:
  friend SortAssignment infer_sorts(const Signature&, std::span<const Rule>,
                                    std::span<const Equation>,
                                    std::span<const Term>);
  std::map<std::string, std::pair<std::size_t, std::vector<std::size_t>>> slots_;
  std::size_t num_sorts_ = 0;
};

// Terms in `hints` contribute typing constraints only (useful for symbols
// that occur in no rule or equation).
SortAssignment infer_sorts(const Signature& sig, std::span<const Rule> rules,
                           std::span<const Equation> equations,
                           std::span<const Term> hints = {});

struct Census {
  // Smallest member of each class, ordered by size then canonical order.
  std::vector<Term> representatives;
  // Representatives at max_size - 1 and max_size coincide.
  bool stable = false;
  std::size_t terms_examined = 0;
};

// Constructor ground terms of size <= max_size are grouped by the smallest
// equivalence generated by `equations` within that bound. When `sorts` is
// given only well-sorted terms are enumerated.
Census class_census(const Signature& sig, const SymbolSplit& split,
                    std::span<const Equation> equations, std::size_t max_size,
                    const SortAssignment* sorts = nullptr);

}  // namespace tacomp
