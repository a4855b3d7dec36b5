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

// Shared helpers for the test programs: fixture loading and term shorthands.

#pragma once

#include <set>
#include <string>
#include <vector>

#include "tacomp/timbuk.hpp"

namespace tacomp::testing {

inline std::string data_path(const std::string& file) {
  return std::string(TACOMP_DATA_DIR) + "/" + file;
}

inline Specification load(const std::string& file) {
  return parse_spec_file(data_path(file));
}

// Parses a term against a specification's signature and variables.
inline Term term(const Specification& spec, const std::string& text) {
  return parse_term(text, spec.signature, spec.variables);
}

inline std::set<Term> terms(const Specification& spec,
                            const std::vector<std::string>& texts) {
  std::set<Term> out;
  for (const auto& t : texts) out.insert(term(spec, t));
  return out;
}

inline Equation equation(const Specification& spec, const std::string& lhs,
                         const std::string& rhs) {
  return {term(spec, lhs), term(spec, rhs)};
}

inline std::string show(const std::set<Term>& ts) {
  std::string out = "{";
  for (const Term& t : ts) {
    if (out.size() > 1) out += ", ";
    out += t.to_string();
  }
  return out + "}";
}

// Rule equations restricted to rules whose left-hand side mentions one of
// the given symbols.
inline std::vector<Equation> rule_equations_mentioning(
    const Trs& R, const std::set<std::string>& symbols) {
  std::vector<Equation> out;
  for (const Rule& r : R.rules()) {
    bool hit = false;
    for (const Position& p : positions(r.lhs)) {
      const Term& u = subterm_at(r.lhs, p);
      if (u.is_application() && symbols.count(u.name())) hit = true;
    }
    if (hit) out.push_back({r.lhs, r.rhs});
  }
  return out;
}

}  // namespace tacomp::testing
