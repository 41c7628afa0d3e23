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
#include <bit>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "qubench/qubo.hpp"
#include "qubench/rng.hpp"

namespace qubench {

/// One distinct sampled bitstring with its exact energy and multiplicity.
struct Sample {
  Bits bits;
  double energy = 0.0;
  std::size_t count = 1;
};

/// Bitstring as a hex-packed string; variable 0 is the least significant bit
/// of the value, most significant nibble printed first.
inline std::string bits_to_hex(const Bits& bits) {
  const std::size_t nibbles = (bits.size() + 3) / 4;
  std::vector<int> nib(nibbles, 0);
  for (std::size_t i = 0; i < bits.size(); ++i)
    if (bits[i]) nib[i / 4] |= 1 << (i % 4);
  std::string out(nibbles, '0');
  for (std::size_t k = 0; k < nibbles; ++k)
    out[nibbles - 1 - k] = "0123456789abcdef"[nib[k]];
  return out;
}

inline Bits bits_from_hex(const std::string& hex, std::size_t n_vars) {
  Bits bits(n_vars, 0);
  for (std::size_t i = 0; i < n_vars; ++i) {
    const std::size_t nib = i / 4;
    if (nib >= hex.size()) break;
    const char c = hex[hex.size() - 1 - nib];
    const int v = (c >= '0' && c <= '9') ? c - '0'
                : (c >= 'a' && c <= 'f') ? c - 'a' + 10
                : (c >= 'A' && c <= 'F') ? c - 'A' + 10
                                         : throw std::invalid_argument(
                                               "bits_from_hex: bad digit");
    bits[i] = (v >> (i % 4)) & 1;
  }
  return bits;
}

/// Multiset of solver samples, aggregated by bitstring and sorted ascending
/// by (energy, bits) on finalize so identical inputs give identical sets.
struct SampleSet {
  std::vector<Sample> samples;
  std::string solver;
  double runtime_s = 0.0;
  std::uint64_t seed = 0;

  void add(Bits bits, double energy) {
    for (auto& s : samples)
      if (s.bits == bits) {
        ++s.count;
        return;
      }
    samples.push_back({std::move(bits), energy, 1});
  }

  void finalize() {
    std::sort(samples.begin(), samples.end(),
              [](const Sample& a, const Sample& b) {
                if (a.energy != b.energy) return a.energy < b.energy;
                return a.bits < b.bits;
              });
  }

  const Sample& best() const {
    if (samples.empty()) throw std::runtime_error("SampleSet is empty");
    return samples.front();
  }

  double best_energy() const { return best().energy; }

  std::size_t total_count() const {
    std::size_t n = 0;
    for (const auto& s : samples) n += s.count;
    return n;
  }

  /// Count-weighted mean energy (the random-baseline estimator).
  double mean_energy() const {
    if (samples.empty()) throw std::runtime_error("SampleSet is empty");
    double sum = 0.0;
    for (const auto& s : samples) sum += s.energy * static_cast<double>(s.count);
    return sum / static_cast<double>(total_count());
  }
};

/// Geometric inverse-temperature ladder for simulated annealing.
struct AnnealSchedule {
  std::size_t sweeps = 1000;
  double beta_start = 0.0;  // <= 0: scale-aware default from the model
  double beta_end = 0.0;
  std::size_t reads = 1;

  void validate() const {
    if (sweeps < 1 || reads < 1)
      throw std::invalid_argument("anneal: sweeps and reads must be >= 1");
    if (beta_start > 0.0 || beta_end > 0.0) {
      if (!(beta_start > 0.0) || !(beta_end >= beta_start))
        throw std::invalid_argument("anneal: need beta_end >= beta_start > 0");
    }
  }

  /// Defaults estimated from coefficient magnitudes: hot enough to accept
  /// almost any move, cold enough to freeze the smallest energy scale.
  std::pair<double, double> resolved_betas(const QuboModel& q) const {
    if (beta_start > 0.0) return {beta_start, beta_end};
    double max_field = 0.0;
    std::vector<double> reach(q.n_vars, 0.0);
    double min_coeff = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < q.n_vars; ++i) {
      reach[i] = std::abs(q.linear[i]);
      if (q.linear[i] != 0.0) min_coeff = std::min(min_coeff, std::abs(q.linear[i]));
    }
    for (const auto& [ij, c] : q.quadratic) {
      reach[ij.first] += std::abs(c);
      reach[ij.second] += std::abs(c);
      if (c != 0.0) min_coeff = std::min(min_coeff, std::abs(c));
    }
    for (double r : reach) max_field = std::max(max_field, r);
    if (!std::isfinite(min_coeff) || min_coeff == 0.0) min_coeff = 1.0;
    if (max_field == 0.0) max_field = 1.0;
    return {0.1 / max_field, 10.0 / min_coeff};
  }
};

namespace detail {

// Per-variable adjacency in CSR form for O(degree) delta-energy updates.
struct QuboAdjacency {
  std::vector<std::size_t> offsets;
  std::vector<std::size_t> neighbor;
  std::vector<double> coeff;

  explicit QuboAdjacency(const QuboModel& q) {
    std::vector<std::size_t> degree(q.n_vars, 0);
    for (const auto& [ij, c] : q.quadratic) {
      (void)c;
      ++degree[ij.first];
      ++degree[ij.second];
    }
    offsets.assign(q.n_vars + 1, 0);
    for (std::size_t i = 0; i < q.n_vars; ++i)
      offsets[i + 1] = offsets[i] + degree[i];
    neighbor.resize(offsets.back());
    coeff.resize(offsets.back());
    std::vector<std::size_t> cursor(offsets.begin(), offsets.end() - 1);
    for (const auto& [ij, c] : q.quadratic) {
      neighbor[cursor[ij.first]] = ij.second;
      coeff[cursor[ij.first]++] = c;
      neighbor[cursor[ij.second]] = ij.first;
      coeff[cursor[ij.second]++] = c;
    }
  }
};

// Local fields f_i = linear_i + sum_j q_ij b_j; flipping i changes the energy
// by (1 - 2 b_i) f_i.
inline std::vector<double> local_fields(const QuboModel& q,
                                        const QuboAdjacency& adj,
                                        const Bits& bits) {
  std::vector<double> f(q.linear);
  for (std::size_t i = 0; i < q.n_vars; ++i)
    for (std::size_t a = adj.offsets[i]; a < adj.offsets[i + 1]; ++a)
      if (bits[adj.neighbor[a]]) f[i] += adj.coeff[a];
  return f;
}

}  // namespace detail

/// Metropolis single-bit-flip annealer: `reads` independent chains, one
/// proposal per variable per sweep, inverse temperature interpolated
/// geometrically from beta_start to beta_end. Deterministic per seed; chain
/// energies are recomputed exactly at the end of each read.
inline SampleSet simulated_annealing(const QuboModel& q,
                                     const AnnealSchedule& sched,
                                     std::uint64_t seed,
                                     double time_limit_s = 0.0) {
  sched.validate();
  if (q.n_vars < 1)
    throw std::invalid_argument("simulated_annealing: empty model");
  const auto t0 = std::chrono::steady_clock::now();
  const auto [b0, b1] = sched.resolved_betas(q);
  const detail::QuboAdjacency adj(q);

  SampleSet out;
  out.solver = "simulated_annealing";
  out.seed = seed;
  const double ratio = b1 / b0;
  for (std::size_t read = 0; read < sched.reads; ++read) {
    if (time_limit_s > 0.0 && read > 0) {
      // Budget is sampled at read boundaries to keep chains deterministic.
      const std::chrono::duration<double> el =
          std::chrono::steady_clock::now() - t0;
      if (el.count() >= time_limit_s) break;
    }
    auto eng = make_engine(derive_seed(seed, read));
    Bits bits(q.n_vars);
    for (auto& b : bits) b = static_cast<std::uint8_t>(eng() & 1);
    auto fields = detail::local_fields(q, adj, bits);

    for (std::size_t sweep = 0; sweep < sched.sweeps; ++sweep) {
      const double frac = sched.sweeps > 1
                              ? static_cast<double>(sweep) /
                                    static_cast<double>(sched.sweeps - 1)
                              : 1.0;
      const double beta = b0 * std::pow(ratio, frac);
      for (std::size_t i = 0; i < q.n_vars; ++i) {
        const double delta = (bits[i] ? -1.0 : 1.0) * fields[i];
        if (delta <= 0.0 || uniform01(eng) < std::exp(-beta * delta)) {
          const double sign = bits[i] ? -1.0 : 1.0;
          bits[i] ^= 1;
          for (std::size_t a = adj.offsets[i]; a < adj.offsets[i + 1]; ++a)
            fields[adj.neighbor[a]] += sign * adj.coeff[a];
        }
      }
    }
    out.add(bits, qubo_energy(q, bits));
  }
  out.finalize();
  const std::chrono::duration<double> elapsed =
      std::chrono::steady_clock::now() - t0;
  out.runtime_s = elapsed.count();
  return out;
}

/// Exhaustive Gray-code scan. Exact global optimum plus the full optimal set
/// (up to `optimal_cap` bitstrings). Guarded at 30 variables.
inline SampleSet brute_force(const QuboModel& q, std::size_t optimal_cap = 1024) {
  if (q.n_vars > 30)
    throw std::invalid_argument("brute_force: too many variables (max 30)");
  if (q.n_vars < 1) throw std::invalid_argument("brute_force: empty model");
  const auto t0 = std::chrono::steady_clock::now();
  const detail::QuboAdjacency adj(q);

  Bits bits(q.n_vars, 0);
  auto fields = detail::local_fields(q, adj, bits);
  double energy = q.offset;
  double best = energy;
  // First pass: find the minimum with a drift margin, resyncing the running
  // energy periodically against an exact evaluation.
  const std::uint64_t total = 1ULL << q.n_vars;
  std::vector<std::pair<double, Bits>> candidates;
  const double margin = 1e-6;
  const auto consider = [&](double e, const Bits& b) {
    if (e < best) best = e;
    if (e <= best + margin) candidates.emplace_back(e, b);
  };
  consider(energy, bits);
  for (std::uint64_t g = 1; g < total; ++g) {
    const std::size_t i = static_cast<std::size_t>(std::countr_zero(g));
    const double sign = bits[i] ? -1.0 : 1.0;
    energy += sign * fields[i];
    bits[i] ^= 1;
    for (std::size_t a = adj.offsets[i]; a < adj.offsets[i + 1]; ++a)
      fields[adj.neighbor[a]] += sign * adj.coeff[a];
    if ((g & 0xfff) == 0) energy = qubo_energy(q, bits);
    consider(energy, bits);
  }

  // Second pass over the shortlist with exact energies.
  double exact_best = std::numeric_limits<double>::infinity();
  for (auto& [e, b] : candidates) {
    e = qubo_energy(q, b);
    exact_best = std::min(exact_best, e);
  }
  SampleSet out;
  out.solver = "brute_force";
  for (const auto& [e, b] : candidates)
    if (e <= exact_best + 1e-9) out.add(b, e);
  out.finalize();
  while (out.samples.size() > optimal_cap) out.samples.pop_back();
  const std::chrono::duration<double> elapsed =
      std::chrono::steady_clock::now() - t0;
  out.runtime_s = elapsed.count();
  return out;
}

/// i.i.d. uniform bitstrings with exact energies; the count-weighted
/// mean_energy() of the result is the random-baseline estimator.
inline SampleSet random_sampling(const QuboModel& q, std::size_t n_samples,
                                 std::uint64_t seed) {
  if (n_samples < 1)
    throw std::invalid_argument("random_sampling: need n_samples >= 1");
  const auto t0 = std::chrono::steady_clock::now();
  auto eng = make_engine(seed);
  SampleSet out;
  out.solver = "random_sampling";
  out.seed = seed;
  for (std::size_t s = 0; s < n_samples; ++s) {
    Bits bits(q.n_vars);
    for (auto& b : bits) b = static_cast<std::uint8_t>(eng() & 1);
    out.add(std::move(bits), 0.0);
  }
  for (auto& s : out.samples) s.energy = qubo_energy(q, s.bits);
  out.finalize();
  const std::chrono::duration<double> elapsed =
      std::chrono::steady_clock::now() - t0;
  out.runtime_s = elapsed.count();
  return out;
}

}  // namespace qubench
