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
#include <istream>
#include <ostream>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qubench/domain.hpp"
#include "qubench/qubo.hpp"
#include "qubench/rng.hpp"

namespace qubench {

/// Simple assembly line balancing (type 1): assign every task to exactly one
/// of the stations 1..max_stations, keep each station's summed task time
/// within the cycle time, respect precedence order, and minimize
/// sum_{s used} s.
struct SalbpInstance {
  std::size_t n_tasks = 0;
  std::vector<double> times;  // v_t > 0, v_t <= cycle_time
  double cycle_time = 0.0;
  std::vector<std::pair<std::size_t, std::size_t>> precedence;  // (t, t')
  std::size_t max_stations = 0;

  void validate() const {
    if (n_tasks == 0 || times.size() != n_tasks)
      throw std::invalid_argument("salbp: inconsistent task count");
    if (!(cycle_time > 0.0))
      throw std::invalid_argument("salbp: cycle time must be positive");
    if (max_stations == 0)
      throw std::invalid_argument("salbp: need at least one station");
    for (double v : times)
      if (!(v > 0.0) || v > cycle_time)
        throw std::invalid_argument("salbp: task time must be in (0, c]");
    for (auto [t, u] : precedence)
      if (t >= n_tasks || u >= n_tasks || t == u)
        throw std::invalid_argument("salbp: bad precedence pair");
    if (has_cycle())
      throw std::invalid_argument("salbp: precedence graph has a cycle");
  }

  bool has_cycle() const {
    std::vector<std::size_t> indeg(n_tasks, 0);
    std::vector<std::vector<std::size_t>> next(n_tasks);
    for (auto [t, u] : precedence) {
      next[t].push_back(u);
      ++indeg[u];
    }
    std::vector<std::size_t> queue;
    for (std::size_t t = 0; t < n_tasks; ++t)
      if (indeg[t] == 0) queue.push_back(t);
    std::size_t seen = 0;
    while (!queue.empty()) {
      auto t = queue.back();
      queue.pop_back();
      ++seen;
      for (auto u : next[t])
        if (--indeg[u] == 0) queue.push_back(u);
    }
    return seen != n_tasks;
  }
};

/// Layered random DAG instance. Task times are drawn uniformly from
/// (0.1c, 0.7c) and quantized to the c/20 grid, which keeps capacity slack
/// encodings exact. `precedence_density` is the probability of an edge
/// between tasks in consecutive layers.
inline SalbpInstance gen_salbp(std::size_t n_tasks, std::size_t max_stations,
                               double precedence_density, std::uint64_t seed) {
  if (n_tasks == 0) throw std::invalid_argument("gen_salbp: no tasks");
  auto eng = make_engine(seed);
  SalbpInstance inst;
  inst.n_tasks = n_tasks;
  inst.cycle_time = 1.0;
  inst.max_stations = max_stations;
  inst.times.resize(n_tasks);
  const double grid = inst.cycle_time / 20.0;
  for (auto& v : inst.times) {
    double raw = uniform_real(eng, 0.1 * inst.cycle_time, 0.7 * inst.cycle_time);
    v = std::max(grid, std::round(raw / grid) * grid);
  }
  // Two to four layers; edges only go from earlier to later layers, so the
  // DAG property holds by construction.
  const std::size_t n_layers = 2 + uniform_index(eng, std::min<std::size_t>(3, n_tasks) - 1);
  std::vector<std::size_t> layer(n_tasks);
  for (std::size_t t = 0; t < n_tasks; ++t)
    layer[t] = t * n_layers / n_tasks;
  for (std::size_t t = 0; t < n_tasks; ++t)
    for (std::size_t u = t + 1; u < n_tasks; ++u)
      if (layer[u] == layer[t] + 1 && uniform01(eng) < precedence_density)
        inst.precedence.emplace_back(t, u);
  inst.validate();
  return inst;
}

/// Evaluates a station assignment (1-based station per task, 0 = unassigned).
/// Objective: sum of indices of used stations. Violations cover assignment,
/// capacity, and precedence breaches.
inline DomainSolution eval_salbp(const SalbpInstance& inst,
                                 const std::vector<std::size_t>& assignment) {
  if (assignment.size() != inst.n_tasks)
    throw std::invalid_argument("eval_salbp: assignment length != n_tasks");
  DomainSolution sol;
  sol.problem = "salbp";
  std::vector<double> load(inst.max_stations + 1, 0.0);
  std::set<std::size_t> used;
  for (std::size_t t = 0; t < inst.n_tasks; ++t) {
    const std::size_t s = assignment[t];
    sol.assignment.push_back(static_cast<int>(s));
    if (s == 0) {
      sol.violations.push_back("task " + std::to_string(t) + " unassigned");
      continue;
    }
    if (s > inst.max_stations)
      throw std::out_of_range("eval_salbp: station index out of range");
    load[s] += inst.times[t];
    used.insert(s);
  }
  for (std::size_t s = 1; s <= inst.max_stations; ++s)
    if (load[s] > inst.cycle_time + 1e-9)
      sol.violations.push_back("station " + std::to_string(s) +
                               " load exceeds cycle time");
  for (auto [t, u] : inst.precedence)
    if (assignment[t] != 0 && assignment[u] != 0 &&
        assignment[t] > assignment[u])
      sol.violations.push_back("precedence " + std::to_string(t) + "->" +
                               std::to_string(u) + " violated");
  for (auto s : used) sol.objective += static_cast<double>(s);
  sol.feasible = sol.violations.empty();
  return sol;
}

// Instance file: "n_tasks max_stations cycle_time", task times, "m" and
// m precedence pairs.

inline void write_salbp(std::ostream& os, const SalbpInstance& inst) {
  os << inst.n_tasks << " " << inst.max_stations << " "
     << format_double(inst.cycle_time) << "\n";
  for (std::size_t t = 0; t < inst.n_tasks; ++t)
    os << format_double(inst.times[t]) << (t + 1 < inst.n_tasks ? " " : "\n");
  os << inst.precedence.size() << "\n";
  for (auto [t, u] : inst.precedence) os << t << " " << u << "\n";
}

inline SalbpInstance read_salbp(std::istream& is) {
  SalbpInstance inst;
  std::size_t m;
  if (!(is >> inst.n_tasks >> inst.max_stations >> inst.cycle_time))
    throw std::runtime_error("salbp parse: bad header");
  inst.times.resize(inst.n_tasks);
  for (auto& v : inst.times)
    if (!(is >> v)) throw std::runtime_error("salbp parse: bad task time");
  if (!(is >> m)) throw std::runtime_error("salbp parse: bad pair count");
  for (std::size_t i = 0; i < m; ++i) {
    std::size_t t, u;
    if (!(is >> t >> u)) throw std::runtime_error("salbp parse: bad pair");
    inst.precedence.emplace_back(t, u);
  }
  inst.validate();
  return inst;
}

}  // namespace qubench
