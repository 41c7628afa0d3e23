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

// Test-only reference implementations. Everything here is deliberately
// naive and independent of the library's solve/transform paths: dense
// matrix forms, direct enumeration, closed-form statistics.

#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <limits>
#include <vector>

#include "qubench/graph.hpp"
#include "qubench/portfolio.hpp"
#include "qubench/qubo.hpp"
#include "qubench/salbp.hpp"
#include "qubench/setcover.hpp"

namespace oracle {

using qubench::Bits;

inline Bits bits_of(std::uint64_t x, std::size_t n) {
  Bits b(n, 0);
  for (std::size_t i = 0; i < n; ++i) b[i] = (x >> i) & 1;
  return b;
}

/// Dense-matrix QUBO energy: offset + l.b + b^T Q b with Q strictly upper.
inline double dense_qubo_energy(const qubench::QuboModel& q, const Bits& bits) {
  const auto n = static_cast<Eigen::Index>(q.n_vars);
  Eigen::VectorXd b(n), l(n);
  Eigen::MatrixXd quad = Eigen::MatrixXd::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    b(i) = bits[static_cast<std::size_t>(i)];
    l(i) = q.linear[static_cast<std::size_t>(i)];
  }
  for (const auto& [ij, c] : q.quadratic)
    quad(static_cast<Eigen::Index>(ij.first),
         static_cast<Eigen::Index>(ij.second)) = c;
  return q.offset + l.dot(b) + b.dot(quad * b);
}

/// Plain 2^n loop over full energies (no incremental tricks).
inline std::pair<double, Bits> naive_qubo_minimum(const qubench::QuboModel& q) {
  double best = std::numeric_limits<double>::infinity();
  Bits arg;
  for (std::uint64_t x = 0; x < (1ULL << q.n_vars); ++x) {
    const auto b = bits_of(x, q.n_vars);
    const double e = qubench::qubo_energy(q, b);
    if (e < best) {
      best = e;
      arg = b;
    }
  }
  return {best, arg};
}

/// Largest cut over all bipartitions by direct enumeration.
inline double max_cut_exhaustive(const qubench::ProblemGraph& g) {
  double best = 0.0;
  for (std::uint64_t x = 0; x < (1ULL << g.n); ++x) {
    double cut = 0.0;
    for (const auto& e : g.edges)
      if (((x >> e.u) & 1) != ((x >> e.v) & 1)) cut += e.weight;
    best = std::max(best, cut);
  }
  return best;
}

/// Cheapest feasible cover over all subset combinations.
inline double setcover_optimum(const qubench::SetCoverInstance& inst) {
  double best = std::numeric_limits<double>::infinity();
  const std::size_t m = inst.subsets.size();
  for (std::uint64_t x = 0; x < (1ULL << m); ++x) {
    std::vector<bool> covered(inst.universe_size, false);
    double cost = 0.0;
    for (std::size_t j = 0; j < m; ++j)
      if ((x >> j) & 1) {
        cost += inst.subsets[j].cost;
        for (auto e : inst.subsets[j].elements) covered[e] = true;
      }
    bool ok = true;
    for (bool c : covered) ok = ok && c;
    if (ok) best = std::min(best, cost);
  }
  return best;
}

/// Classic greedy cover: repeatedly take the subset with the best
/// cost-per-new-element ratio.
inline double setcover_greedy(const qubench::SetCoverInstance& inst) {
  std::vector<bool> covered(inst.universe_size, false);
  std::size_t remaining = inst.universe_size;
  double cost = 0.0;
  while (remaining > 0) {
    double best_ratio = std::numeric_limits<double>::infinity();
    std::size_t best_j = 0;
    std::size_t best_new = 0;
    for (std::size_t j = 0; j < inst.subsets.size(); ++j) {
      std::size_t fresh = 0;
      for (auto e : inst.subsets[j].elements)
        if (!covered[e]) ++fresh;
      if (fresh == 0) continue;
      const double ratio = inst.subsets[j].cost / static_cast<double>(fresh);
      if (ratio < best_ratio) {
        best_ratio = ratio;
        best_j = j;
        best_new = fresh;
      }
    }
    if (best_new == 0) break;  // infeasible remainder
    cost += inst.subsets[best_j].cost;
    for (auto e : inst.subsets[best_j].elements) covered[e] = true;
    remaining -= best_new;
  }
  return cost;
}

/// Best feasible SALBP objective over all station assignments (S^T states).
inline double salbp_optimum(const qubench::SalbpInstance& inst) {
  double best = std::numeric_limits<double>::infinity();
  std::vector<std::size_t> assignment(inst.n_tasks, 1);
  while (true) {
    const auto sol = qubench::eval_salbp(inst, assignment);
    if (sol.feasible) best = std::min(best, sol.objective);
    std::size_t t = 0;
    while (t < inst.n_tasks) {
      if (++assignment[t] <= inst.max_stations) break;
      assignment[t] = 1;
      ++t;
    }
    if (t == inst.n_tasks) break;
  }
  return best;
}

/// Best feasible portfolio objective over all 2^n selections.
inline double portfolio_optimum(const qubench::PortfolioInstance& inst) {
  double best = std::numeric_limits<double>::infinity();
  for (std::uint64_t x = 1; x < (1ULL << inst.n); ++x) {
    const auto sol = qubench::portfolio_objective(inst, bits_of(x, inst.n));
    if (sol.feasible) best = std::min(best, sol.objective);
  }
  return best;
}

}  // namespace oracle
