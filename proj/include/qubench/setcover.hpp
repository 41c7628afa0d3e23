// Copyright 2026 The qubench developers
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

#pragma once

#include <algorithm>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "qubench/domain.hpp"
#include "qubench/rng.hpp"

namespace qubench {

/// Weighted set cover over universe {0 .. universe_size-1}. Instances are
/// generated feasible: every element occurs in at least one subset.
struct SetCoverSubset {
  double cost = 1.0;
  std::set<std::size_t> elements;
};

struct SetCoverInstance {
  std::size_t universe_size = 0;
  std::vector<SetCoverSubset> subsets;

  bool covers_universe() const {
    std::vector<bool> seen(universe_size, false);
    for (const auto& s : subsets)
      for (auto e : s.elements) seen[e] = true;
    return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
  }

  double max_cost() const {
    double m = 0.0;
    for (const auto& s : subsets) m = std::max(m, s.cost);
    return m;
  }

  double total_cost() const {
    double m = 0.0;
    for (const auto& s : subsets) m += s.cost;
    return m;
  }
};

/// Random instance: each subset contains each element with probability
/// `density`; uncovered elements are then patched into a random subset so the
/// instance is feasible by construction. Costs are drawn from {1, 2, 3}.
inline SetCoverInstance gen_setcover(std::size_t universe_size,
                                     std::size_t n_subsets, double density,
                                     std::uint64_t seed) {
  if (universe_size == 0 || n_subsets == 0)
    throw std::invalid_argument("gen_setcover: empty universe or subset pool");
  if (!(density > 0.0) || density > 1.0)
    throw std::invalid_argument("gen_setcover: density must be in (0,1]");
  auto eng = make_engine(seed);
  SetCoverInstance inst;
  inst.universe_size = universe_size;
  inst.subsets.resize(n_subsets);
  for (auto& s : inst.subsets) {
    s.cost = 1.0 + static_cast<double>(uniform_index(eng, 3));
    for (std::size_t e = 0; e < universe_size; ++e)
      if (uniform01(eng) < density) s.elements.insert(e);
  }
  for (std::size_t e = 0; e < universe_size; ++e) {
    bool covered = false;
    for (const auto& s : inst.subsets)
      if (s.elements.count(e)) {
        covered = true;
        break;
      }
    if (!covered)
      inst.subsets[uniform_index(eng, n_subsets)].elements.insert(e);
  }
  return inst;
}

/// Cost of the chosen subsets; feasible iff their union covers the universe.
inline DomainSolution eval_setcover(const SetCoverInstance& inst,
                                    const std::vector<std::size_t>& chosen) {
  DomainSolution sol;
  sol.problem = "setcover";
  std::vector<bool> covered(inst.universe_size, false);
  for (auto j : chosen) {
    if (j >= inst.subsets.size())
      throw std::out_of_range("eval_setcover: subset index out of range");
    sol.assignment.push_back(static_cast<int>(j));
    sol.objective += inst.subsets[j].cost;
    for (auto e : inst.subsets[j].elements) covered[e] = true;
  }
  for (std::size_t e = 0; e < inst.universe_size; ++e)
    if (!covered[e])
      sol.violations.push_back("element " + std::to_string(e) + " uncovered");
  sol.feasible = sol.violations.empty();
  return sol;
}

}  // namespace qubench
