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

#include <Eigen/Dense>
#include <cmath>
#include <cstdint>
#include <istream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "qubench/domain.hpp"
#include "qubench/qubo.hpp"
#include "qubench/rng.hpp"

namespace qubench {

/// Markowitz-style binary portfolio selection: pick exactly k of n assets,
/// equal weights 1/k. Return mu = sum w_i r_i and volatility
/// sigma^2 = sum_ij w_i w_j sigma_ij over the selected assets.
enum class PortfolioFormulation { Minvola, Maxret, Multiobj };

inline const char* to_string(PortfolioFormulation f) {
  switch (f) {
    case PortfolioFormulation::Minvola: return "minvola";
    case PortfolioFormulation::Maxret: return "maxret";
    case PortfolioFormulation::Multiobj: return "multiobj";
  }
  return "?";
}

inline PortfolioFormulation portfolio_formulation_from_string(
    const std::string& s) {
  if (s == "minvola") return PortfolioFormulation::Minvola;
  if (s == "maxret") return PortfolioFormulation::Maxret;
  if (s == "multiobj") return PortfolioFormulation::Multiobj;
  throw std::invalid_argument("unknown portfolio formulation: " + s);
}

struct PortfolioInstance {
  std::size_t n = 0;
  std::vector<double> returns;   // r_i
  Eigen::MatrixXd covariance;    // sigma_ij, symmetric PSD
  PortfolioFormulation formulation = PortfolioFormulation::Minvola;
  double target = 0.0;  // R_min (Minvola), V_max (Maxret), lambda (Multiobj)
  std::size_t k = 1;    // cardinality

  void validate() const {
    if (n == 0 || returns.size() != n ||
        covariance.rows() != static_cast<Eigen::Index>(n) ||
        covariance.cols() != static_cast<Eigen::Index>(n))
      throw std::invalid_argument("portfolio: inconsistent dimensions");
    if (k < 1 || k > n)
      throw std::invalid_argument("portfolio: k must be in [1, n]");
    if (!covariance.isApprox(covariance.transpose(), 1e-12))
      throw std::invalid_argument("portfolio: covariance not symmetric");
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(covariance,
                                                      Eigen::EigenvaluesOnly);
    if (es.eigenvalues().minCoeff() < -1e-9)
      throw std::invalid_argument("portfolio: covariance not PSD");
  }
};

/// Synthetic instance with PSD covariance A A^T / n from seeded normals.
/// Returns are drawn on a 1e-3 grid so slack encodings of the return floor
/// are exact. The Minvola return floor defaults to the mean return.
inline PortfolioInstance gen_portfolio(std::size_t n, std::size_t k,
                                       PortfolioFormulation formulation,
                                       std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("gen_portfolio: n must be >= 1");
  auto eng = make_engine(seed);
  PortfolioInstance inst;
  inst.n = n;
  inst.k = k;
  inst.formulation = formulation;
  inst.returns.resize(n);
  double mean_r = 0.0;
  for (auto& r : inst.returns) {
    r = std::round(uniform_real(eng, 0.01, 0.15) * 1000.0) / 1000.0;
    mean_r += r;
  }
  mean_r /= static_cast<double>(n);
  Eigen::MatrixXd a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      a(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
          0.1 * normal(eng);
  inst.covariance = a * a.transpose() / static_cast<double>(n);
  switch (formulation) {
    case PortfolioFormulation::Minvola:
      inst.target = std::round(mean_r * 1000.0) / 1000.0;  // R_min
      break;
    case PortfolioFormulation::Maxret:
      inst.target = inst.covariance.trace() / static_cast<double>(n);  // V_max
      break;
    case PortfolioFormulation::Multiobj:
      inst.target = 0.5;  // trade-off lambda
      break;
  }
  inst.validate();
  return inst;
}

/// Evaluates a 0/1 selection under the instance's formulation. Weights are
/// 1/|selection| so they always sum to one; cardinality feasibility is
/// checked separately.
inline DomainSolution portfolio_objective(const PortfolioInstance& inst,
                                          const Bits& selection) {
  if (selection.size() != inst.n)
    throw std::invalid_argument("portfolio_objective: selection length != n");
  std::size_t m = 0;
  for (auto b : selection) m += b;
  if (m == 0)
    throw std::invalid_argument("portfolio_objective: no assets selected");

  const double w = 1.0 / static_cast<double>(m);
  double mu = 0.0;
  double var = 0.0;
  for (std::size_t i = 0; i < inst.n; ++i) {
    if (!selection[i]) continue;
    mu += w * inst.returns[i];
    for (std::size_t j = 0; j < inst.n; ++j)
      if (selection[j])
        var += w * w *
               inst.covariance(static_cast<Eigen::Index>(i),
                               static_cast<Eigen::Index>(j));
  }

  DomainSolution sol;
  sol.problem = "portfolio";
  for (auto b : selection) sol.assignment.push_back(b ? 1 : 0);
  if (m != inst.k)
    sol.violations.push_back("selected " + std::to_string(m) +
                             " assets, expected " + std::to_string(inst.k));
  switch (inst.formulation) {
    case PortfolioFormulation::Minvola:
      sol.objective = var;
      if (mu < inst.target)
        sol.violations.push_back("return " + std::to_string(mu) +
                                 " below floor " + std::to_string(inst.target));
      break;
    case PortfolioFormulation::Maxret:
      sol.objective = -mu;
      if (var > inst.target)
        sol.violations.push_back("volatility " + std::to_string(var) +
                                 " above cap " + std::to_string(inst.target));
      break;
    case PortfolioFormulation::Multiobj:
      sol.objective = -(mu - inst.target * var);
      break;
  }
  sol.feasible = sol.violations.empty();
  return sol;
}

/// CSV ingestion: one header row, then per asset
///   id, expected_return, cov_0, cov_1, ..., cov_{n-1}
inline PortfolioInstance read_portfolio_csv(std::istream& is, std::size_t k,
                                            PortfolioFormulation formulation,
                                            double target) {
  std::string line;
  if (!std::getline(is, line))
    throw std::runtime_error("portfolio csv: missing header");
  std::vector<std::vector<double>> rows;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::vector<double> fields;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) fields.push_back(std::stod(cell));
    rows.push_back(std::move(fields));
  }
  const std::size_t n = rows.size();
  PortfolioInstance inst;
  inst.n = n;
  inst.k = k;
  inst.formulation = formulation;
  inst.target = target;
  inst.covariance.resize(static_cast<Eigen::Index>(n),
                         static_cast<Eigen::Index>(n));
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n + 2)
      throw std::runtime_error("portfolio csv: row width mismatch");
    inst.returns.push_back(rows[i][1]);
    for (std::size_t j = 0; j < n; ++j)
      inst.covariance(static_cast<Eigen::Index>(i),
                      static_cast<Eigen::Index>(j)) = rows[i][j + 2];
  }
  inst.validate();
  return inst;
}

}  // namespace qubench
