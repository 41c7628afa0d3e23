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
#include <optional>
#include <stdexcept>

namespace qubench {

/// Solution-quality report against a known optimum: absolute gap
/// delta_abs = f_qc - f_opt, relative gap delta_rel = delta_abs / f_opt and
/// approximation ratio theta = f_qc / f_opt (the latter two only when
/// f_opt > 0).
struct QualityReport {
  double f_qc = 0.0;
  double f_opt = 0.0;
  double delta_abs = 0.0;
  std::optional<double> delta_rel;
  std::optional<double> theta;
};

inline QualityReport quality(double f_qc, double f_opt) {
  if (f_qc < 0.0 || f_opt < 0.0)
    throw std::invalid_argument("quality: assumes f_qc, f_opt >= 0");
  QualityReport r;
  r.f_qc = f_qc;
  r.f_opt = f_opt;
  r.delta_abs = f_qc - f_opt;
  if (f_opt > 0.0) {
    r.delta_rel = (f_qc - f_opt) / f_opt;
    r.theta = f_qc / f_opt;
  }
  return r;
}

/// beta(N) = (C - C_rand) / (C_opt - C_rand). Places a solver between the
/// random baseline (0) and the optimum (1); reported unclamped.
inline double beta_score(double c, double c_opt, double c_rand) {
  const double denom = c_opt - c_rand;
  if (denom == 0.0)
    throw std::invalid_argument("beta_score: degenerate denominator");
  return (c - c_rand) / denom;
}

/// quantum_s / (quantum_s + classical_s).
inline double time_ratio(double quantum_s, double classical_s) {
  const double total = quantum_s + classical_s;
  if (total <= 0.0) throw std::invalid_argument("time_ratio: total time zero");
  return quantum_s / total;
}

}  // namespace qubench
