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

#include <cmath>
#include <cstdint>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qubench {

using Bits = std::vector<std::uint8_t>;

/// Upper-triangular quadratic binary objective
///
///   E(b) = offset + sum_i linear[i] b_i + sum_{i<j} quadratic[{i,j}] b_i b_j
///
/// with a per-variable decode label ("x[t=3,s=2]", "slack[e=1,bit=0]", ...)
/// so samples can be mapped back to the originating problem.
struct QuboModel {
  std::size_t n_vars = 0;
  std::vector<double> linear;
  std::map<std::pair<std::size_t, std::size_t>, double> quadratic;
  double offset = 0.0;
  std::string problem;                  // originating problem family
  std::vector<std::string> decode_map;  // one label per variable

  void add_linear(std::size_t i, double c) {
    check_index(i);
    linear[i] += c;
  }

  void add_quadratic(std::size_t i, std::size_t j, double c) {
    check_index(i);
    check_index(j);
    if (i == j) {
      // b^2 = b for binaries
      linear[i] += c;
      return;
    }
    if (i > j) std::swap(i, j);
    quadratic[{i, j}] += c;
  }

  /// Adds the expanded square lambda * (sum_k coeffs[k] b_{vars[k]} + c0)^2.
  void add_squared_penalty(const std::vector<std::size_t>& vars,
                           const std::vector<double>& coeffs, double c0,
                           double lambda) {
    offset += lambda * c0 * c0;
    for (std::size_t a = 0; a < vars.size(); ++a) {
      add_linear(vars[a], lambda * coeffs[a] * (coeffs[a] + 2.0 * c0));
      for (std::size_t b = a + 1; b < vars.size(); ++b)
        add_quadratic(vars[a], vars[b], 2.0 * lambda * coeffs[a] * coeffs[b]);
    }
  }

  static QuboModel with_size(std::size_t n, std::string problem_name = "") {
    QuboModel q;
    q.n_vars = n;
    q.linear.assign(n, 0.0);
    q.problem = std::move(problem_name);
    q.decode_map.assign(n, "");
    return q;
  }

 private:
  void check_index(std::size_t i) const {
    if (i >= n_vars) throw std::out_of_range("qubo variable index out of range");
  }
};

/// E(b) for a full assignment. bits.size() must equal n_vars.
inline double qubo_energy(const QuboModel& q, const Bits& bits) {
  if (bits.size() != q.n_vars)
    throw std::invalid_argument("qubo_energy: bit count != n_vars");
  double e = q.offset;
  for (std::size_t i = 0; i < q.n_vars; ++i)
    if (bits[i]) e += q.linear[i];
  for (const auto& [ij, c] : q.quadratic)
    if (bits[ij.first] && bits[ij.second]) e += c;
  return e;
}

/// Ising form of a QUBO under s = 1 - 2b (b = (1-s)/2): returns
/// (h, J, constant) with E(b) = constant + sum h_i s_i + sum J_ij s_i s_j.
struct IsingModel {
  std::vector<double> h;
  std::map<std::pair<std::size_t, std::size_t>, double> coupling;
  double constant = 0.0;
};

inline IsingModel to_ising(const QuboModel& q) {
  IsingModel m;
  m.h.assign(q.n_vars, 0.0);
  m.constant = q.offset;
  for (std::size_t i = 0; i < q.n_vars; ++i) {
    m.constant += 0.5 * q.linear[i];
    m.h[i] -= 0.5 * q.linear[i];
  }
  for (const auto& [ij, c] : q.quadratic) {
    m.constant += 0.25 * c;
    m.h[ij.first] -= 0.25 * c;
    m.h[ij.second] -= 0.25 * c;
    m.coupling[ij] += 0.25 * c;
  }
  return m;
}

// --- sparse text serialization ---------------------------------------------
//
//   qubo <n_vars> <problem>
//   offset <value>
//   l <i> <value>        (one line per nonzero linear term)
//   q <i> <j> <value>    (one line per quadratic term, i < j)
//   d <i> <label>
//
// Values use 17 significant digits so round-trips are bit-stable.

inline std::string format_double(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

inline void write_qubo(std::ostream& os, const QuboModel& q) {
  os << "qubo " << q.n_vars << " " << (q.problem.empty() ? "-" : q.problem)
     << "\n";
  os << "offset " << format_double(q.offset) << "\n";
  for (std::size_t i = 0; i < q.n_vars; ++i)
    if (q.linear[i] != 0.0)
      os << "l " << i << " " << format_double(q.linear[i]) << "\n";
  for (const auto& [ij, c] : q.quadratic)
    os << "q " << ij.first << " " << ij.second << " " << format_double(c)
       << "\n";
  for (std::size_t i = 0; i < q.n_vars; ++i)
    if (!q.decode_map[i].empty()) os << "d " << i << " " << q.decode_map[i] << "\n";
}

inline QuboModel read_qubo(std::istream& is) {
  std::string tag;
  if (!(is >> tag) || tag != "qubo")
    throw std::runtime_error("qubo parse: missing header");
  std::size_t n;
  std::string problem;
  is >> n >> problem;
  QuboModel q = QuboModel::with_size(n, problem == "-" ? "" : problem);
  while (is >> tag) {
    if (tag == "offset") {
      is >> q.offset;
    } else if (tag == "l") {
      std::size_t i;
      double v;
      is >> i >> v;
      q.add_linear(i, v);
    } else if (tag == "q") {
      std::size_t i, j;
      double v;
      is >> i >> j >> v;
      if (i >= j) throw std::runtime_error("qubo parse: not upper triangular");
      q.add_quadratic(i, j, v);
    } else if (tag == "d") {
      std::size_t i;
      std::string label;
      is >> i >> label;
      if (i >= n) throw std::runtime_error("qubo parse: decode index");
      q.decode_map[i] = label;
    } else {
      throw std::runtime_error("qubo parse: unknown tag " + tag);
    }
  }
  return q;
}

inline std::string qubo_to_string(const QuboModel& q) {
  std::ostringstream os;
  write_qubo(os, q);
  return os.str();
}

inline QuboModel qubo_from_string(const std::string& s) {
  std::istringstream is(s);
  return read_qubo(is);
}

}  // namespace qubench
