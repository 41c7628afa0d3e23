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

#include <chrono>
#include <cmath>
#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "qubench/graph.hpp"
#include "qubench/mappings.hpp"
#include "qubench/metrics.hpp"
#include "qubench/solvers.hpp"

namespace qubench {

/// A solver under Q-score test: consumes a QUBO, respects a time budget,
/// returns its samples. The reported per-instance cut is the best sample's
/// unless `average` is set (the random-baseline convention).
struct QScoreSolver {
  std::string name;
  std::function<SampleSet(const QuboModel&, double time_limit_s,
                          std::uint64_t seed)>
      run;
  bool average = false;
};

struct QScoreRow {
  std::size_t n = 0;
  double c = 0.0;
  double c_opt = 0.0;
  double c_rand = 0.0;
  double beta = 0.0;
  double elapsed_s = 0.0;
  bool c_opt_estimated = false;
};

struct QScoreResult {
  std::vector<QScoreRow> per_size;
  std::optional<std::size_t> q_score;  // largest passing N, if any
  double threshold = 0.2;
  double time_limit_s = 60.0;
};

struct QScoreOptions {
  std::vector<std::size_t> sizes;
  std::size_t instances_per_size = 20;
  double time_limit_s = 60.0;
  double threshold = 0.2;
  double edge_prob = 0.5;         // Erdos-Renyi density of the instances
  std::size_t random_samples = 1000;  // per-instance C_rand estimator
  bool stop_at_first_failure = true;
  std::uint64_t seed = 0;
};

/// Scan ascending MaxCut sizes: C is the mean best cut found by the solver
/// within the per-instance budget, C_rand the mean cut of uniform samples,
/// C_opt exact by exhaustion up to 26 vertices and the N^2/8 + 0.178 N^{3/2}
/// estimate beyond. The Q-score is the largest N with beta >= threshold;
/// by default the scan stops at the first failing size.
inline QScoreResult q_score(const QScoreSolver& solver,
                            const QScoreOptions& opt) {
  if (opt.sizes.empty()) throw std::invalid_argument("q_score: empty sizes");
  for (std::size_t i = 1; i < opt.sizes.size(); ++i)
    if (opt.sizes[i] <= opt.sizes[i - 1])
      throw std::invalid_argument("q_score: sizes must be strictly ascending");

  QScoreResult res;
  res.threshold = opt.threshold;
  res.time_limit_s = opt.time_limit_s;
  for (std::size_t si = 0; si < opt.sizes.size(); ++si) {
    const std::size_t n = opt.sizes[si];
    const auto t0 = std::chrono::steady_clock::now();
    double sum_c = 0.0, sum_opt = 0.0, sum_rand = 0.0;
    bool estimated = false;
    for (std::size_t inst = 0; inst < opt.instances_per_size; ++inst) {
      const std::uint64_t inst_seed =
          derive_seed(opt.seed, si * opt.instances_per_size + inst);
      const auto g = gen_maxcut(n, opt.edge_prob, inst_seed);
      const auto mapping = maxcut_to_qubo(g);

      const auto solved = solver.run(mapping.model, opt.time_limit_s,
                                     derive_seed(inst_seed, 1));
      sum_c += solver.average ? -solved.mean_energy() : -solved.best_energy();

      const auto rnd = random_sampling(mapping.model, opt.random_samples,
                                       derive_seed(inst_seed, 2));
      sum_rand += -rnd.mean_energy();

      if (n <= 26) {
        sum_opt += -brute_force(mapping.model).best_energy();
      } else {
        const double dn = static_cast<double>(n);
        sum_opt += dn * dn / 8.0 + 0.178 * std::pow(dn, 1.5);
        estimated = true;
      }
    }
    const double inv = 1.0 / static_cast<double>(opt.instances_per_size);
    QScoreRow row;
    row.n = n;
    row.c = sum_c * inv;
    row.c_opt = sum_opt * inv;
    row.c_rand = sum_rand * inv;
    row.beta = beta_score(row.c, row.c_opt, row.c_rand);
    row.c_opt_estimated = estimated;
    const std::chrono::duration<double> elapsed =
        std::chrono::steady_clock::now() - t0;
    row.elapsed_s = elapsed.count();
    res.per_size.push_back(row);
    if (row.beta >= opt.threshold) {
      res.q_score = n;
    } else if (opt.stop_at_first_failure) {
      break;
    }
  }
  return res;
}

/// One CSV row per size, ready for external plotting.
inline void write_qscore_csv(std::ostream& os, const QScoreResult& r) {
  os << "n,c,c_opt,c_rand,beta,elapsed_s,c_opt_estimated\n";
  for (const auto& row : r.per_size)
    os << row.n << "," << format_double(row.c) << ","
       << format_double(row.c_opt) << "," << format_double(row.c_rand) << ","
       << format_double(row.beta) << "," << format_double(row.elapsed_s) << ","
       << (row.c_opt_estimated ? 1 : 0) << "\n";
}

// Ready-made solver handles.

inline QScoreSolver sa_qscore_solver(std::size_t sweeps, std::size_t reads) {
  QScoreSolver s;
  s.name = "simulated_annealing";
  s.run = [sweeps, reads](const QuboModel& q, double limit, std::uint64_t seed) {
    AnnealSchedule sched;
    sched.sweeps = sweeps;
    sched.reads = reads;
    return simulated_annealing(q, sched, seed, limit);
  };
  return s;
}

inline QScoreSolver brute_qscore_solver() {
  QScoreSolver s;
  s.name = "brute_force";
  s.run = [](const QuboModel& q, double, std::uint64_t) {
    return brute_force(q);
  };
  return s;
}

/// Uniform baseline: reports the average cut of its samples (the Eq. 2
/// C_rand convention), so its beta is ~0 by construction.
inline QScoreSolver random_qscore_solver(std::size_t n_samples = 1000) {
  QScoreSolver s;
  s.name = "random_sampling";
  s.average = true;
  s.run = [n_samples](const QuboModel& q, double, std::uint64_t seed) {
    return random_sampling(q, n_samples, seed);
  };
  return s;
}

}  // namespace qubench
