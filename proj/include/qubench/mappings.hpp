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
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "qubench/domain.hpp"
#include "qubench/graph.hpp"
#include "qubench/portfolio.hpp"
#include "qubench/qubo.hpp"
#include "qubench/salbp.hpp"
#include "qubench/setcover.hpp"

namespace qubench {

/// Constraint-to-penalty strategy. Equalities always use the quadratic
/// penalty; the method selects how inequalities are handled: `Slack`
/// introduces binary-expanded slack bits and squares the residual,
/// `Unbalanced` applies the slack-free surrogate l1*g + l2*g^2 to the signed
/// violation g (positive = violated).
enum class PenaltyMethod { Slack, Unbalanced };

struct PenaltyConfig {
  PenaltyMethod method = PenaltyMethod::Slack;
  std::optional<double> lagrange;  // unset: 2x the unpenalized objective range
  double unbalanced_l1 = 0.96;
  double unbalanced_l2 = 0.0371;

  void validate() const {
    if (lagrange && *lagrange <= 0.0)
      throw std::invalid_argument("penalty: lagrange must be positive");
    if (unbalanced_l1 <= 0.0 || unbalanced_l2 <= 0.0)
      throw std::invalid_argument("penalty: unbalanced weights must be positive");
  }

  double lagrange_or(double fallback) const {
    return lagrange ? *lagrange : fallback;
  }
};

/// Binary slack expansion for an integer range [0, range]:
/// ceil(log2(range+1)) bits with coefficients 1, 2, ..., 2^{m-2} and a
/// remainder coefficient on the top bit so exactly [0, range] is covered.
struct SlackBits {
  std::vector<double> coefficients;

  static SlackBits for_range(long long range) {
    SlackBits s;
    if (range <= 0) return s;
    long long covered = 0;
    long long next = 1;
    while (covered + next < range) {
      s.coefficients.push_back(static_cast<double>(next));
      covered += next;
      next *= 2;
    }
    s.coefficients.push_back(static_cast<double>(range - covered));
    return s;
  }

  /// Greedy bit assignment representing `value` (must be within range).
  std::vector<std::uint8_t> encode(long long value) const {
    std::vector<std::uint8_t> bits(coefficients.size(), 0);
    for (std::size_t b = coefficients.size(); b-- > 0;) {
      const auto c = static_cast<long long>(coefficients[b]);
      if (value >= c) {
        bits[b] = 1;
        value -= c;
      }
    }
    if (value != 0)
      throw std::invalid_argument("slack encode: value outside range");
    return bits;
  }
};

/// Smallest integer factor (up to `max_scale`) that maps all values onto an
/// integer grid; 0 if none exists. Slack encodings of real-coefficient
/// inequalities go through this.
inline long long integer_scale(const std::vector<double>& values,
                               long long max_scale = 1000000) {
  for (long long k = 1; k <= max_scale; ++k) {
    bool ok = true;
    for (double v : values) {
      const double s = v * static_cast<double>(k);
      if (std::abs(s - std::round(s)) > 1e-9 + 1e-12 * std::abs(s)) {
        ok = false;
        break;
      }
    }
    if (ok) return k;
  }
  return 0;
}

namespace detail {

// l1*g + l2*g^2 for the signed violation g = sum coeffs[a] b_{vars[a]} + c0.
inline void add_unbalanced_penalty(QuboModel& q,
                                   const std::vector<std::size_t>& vars,
                                   const std::vector<double>& coeffs, double c0,
                                   const PenaltyConfig& cfg) {
  q.offset += cfg.unbalanced_l1 * c0;
  for (std::size_t a = 0; a < vars.size(); ++a)
    q.add_linear(vars[a], cfg.unbalanced_l1 * coeffs[a]);
  q.add_squared_penalty(vars, coeffs, c0, cfg.unbalanced_l2);
}

inline long long llround_checked(double v) {
  return static_cast<long long>(std::llround(v));
}

}  // namespace detail

// ---------------------------------------------------------------------------
// MaxCut
// ---------------------------------------------------------------------------

/// Cut maximization as minimization: energy(bits) = -cut(bits) exactly.
/// Per edge (u, v, w): -w b_u - w b_v + 2w b_u b_v.
struct MaxcutMapping {
  ProblemGraph graph;
  QuboModel model;

  DomainSolution decode(const Bits& bits) const {
    if (bits.size() != model.n_vars)
      throw std::invalid_argument("decode: bit count mismatch");
    DomainSolution sol;
    sol.problem = "maxcut";
    for (auto b : bits) sol.assignment.push_back(b ? 1 : 0);
    sol.objective = -eval_cut(graph, bits);
    sol.feasible = true;
    return sol;
  }

  Bits encode(const Bits& side) const {
    if (side.size() != graph.n)
      throw std::invalid_argument("encode: side length mismatch");
    return side;
  }
};

inline MaxcutMapping maxcut_to_qubo(const ProblemGraph& g) {
  MaxcutMapping m;
  m.graph = g;
  m.model = QuboModel::with_size(g.n, "maxcut");
  for (std::size_t i = 0; i < g.n; ++i)
    m.model.decode_map[i] = "side[v=" + std::to_string(i) + "]";
  for (const auto& e : g.edges) {
    m.model.add_linear(e.u, -e.weight);
    m.model.add_linear(e.v, -e.weight);
    m.model.add_quadratic(e.u, e.v, 2.0 * e.weight);
  }
  return m;
}

// ---------------------------------------------------------------------------
// Set cover
// ---------------------------------------------------------------------------

struct SetCoverMapping {
  SetCoverInstance instance;
  PenaltyConfig config;
  QuboModel model;
  // slack bit layout per element (empty when unbalanced or range 0)
  std::vector<std::size_t> slack_offset;
  std::vector<SlackBits> slack;

  DomainSolution decode(const Bits& bits) const {
    if (bits.size() != model.n_vars)
      throw std::invalid_argument("decode: bit count mismatch");
    std::vector<std::size_t> chosen;
    for (std::size_t j = 0; j < instance.subsets.size(); ++j)
      if (bits[j]) chosen.push_back(j);
    return eval_setcover(instance, chosen);
  }

  Bits encode(const std::vector<std::size_t>& chosen) const {
    Bits bits(model.n_vars, 0);
    for (auto j : chosen) bits.at(j) = 1;
    for (std::size_t e = 0; e < instance.universe_size; ++e) {
      if (slack.size() <= e || slack[e].coefficients.empty()) continue;
      long long coverage = 0;
      for (auto j : chosen)
        if (instance.subsets[j].elements.count(e)) ++coverage;
      auto sb = slack[e].encode(std::max(0LL, coverage - 1));
      for (std::size_t b = 0; b < sb.size(); ++b)
        bits[slack_offset[e] + b] = sb[b];
    }
    return bits;
  }
};

/// Cover constraint per element e: sum_{j: e in S_j} b_j >= 1, encoded as
/// lambda (sum b_j - 1 - s_e)^2 with s_e spanning [0, |N_e| - 1], or as the
/// unbalanced surrogate on g = 1 - sum b_j.
inline SetCoverMapping setcover_to_qubo(const SetCoverInstance& inst,
                                        const PenaltyConfig& cfg = {}) {
  cfg.validate();
  if (!inst.covers_universe())
    throw std::invalid_argument("setcover_to_qubo: instance is infeasible");

  const std::size_t n_sub = inst.subsets.size();
  std::vector<std::vector<std::size_t>> members(inst.universe_size);
  for (std::size_t j = 0; j < n_sub; ++j)
    for (auto e : inst.subsets[j].elements) members[e].push_back(j);

  SetCoverMapping m;
  m.instance = inst;
  m.config = cfg;
  const double lambda = cfg.lagrange_or(2.0 * inst.total_cost());

  std::size_t n_vars = n_sub;
  m.slack_offset.assign(inst.universe_size, 0);
  m.slack.resize(inst.universe_size);
  if (cfg.method == PenaltyMethod::Slack) {
    for (std::size_t e = 0; e < inst.universe_size; ++e) {
      m.slack[e] = SlackBits::for_range(
          static_cast<long long>(members[e].size()) - 1);
      m.slack_offset[e] = n_vars;
      n_vars += m.slack[e].coefficients.size();
    }
  }

  m.model = QuboModel::with_size(n_vars, "setcover");
  for (std::size_t j = 0; j < n_sub; ++j) {
    m.model.decode_map[j] = "choose[s=" + std::to_string(j) + "]";
    m.model.add_linear(j, inst.subsets[j].cost);
  }
  for (std::size_t e = 0; e < inst.universe_size; ++e) {
    std::vector<std::size_t> vars(members[e].begin(), members[e].end());
    std::vector<double> coeffs(vars.size(), 1.0);
    if (cfg.method == PenaltyMethod::Slack) {
      for (std::size_t b = 0; b < m.slack[e].coefficients.size(); ++b) {
        const std::size_t idx = m.slack_offset[e] + b;
        m.model.decode_map[idx] =
            "slack[e=" + std::to_string(e) + ",bit=" + std::to_string(b) + "]";
        vars.push_back(idx);
        coeffs.push_back(-m.slack[e].coefficients[b]);
      }
      m.model.add_squared_penalty(vars, coeffs, -1.0, lambda);
    } else {
      // g = 1 - sum b_j
      for (auto& c : coeffs) c = -1.0;
      detail::add_unbalanced_penalty(m.model, vars, coeffs, 1.0, cfg);
    }
  }
  return m;
}

// ---------------------------------------------------------------------------
// SALBP
// ---------------------------------------------------------------------------

struct SalbpMapping {
  SalbpInstance instance;
  PenaltyConfig config;
  QuboModel model;
  long long time_scale = 1;
  std::vector<std::size_t> cap_slack_offset;   // per station
  std::vector<SlackBits> cap_slack;            // per station
  std::vector<std::size_t> prec_slack_offset;  // per precedence pair
  std::vector<SlackBits> prec_slack;           // per precedence pair

  std::size_t x_index(std::size_t task, std::size_t station0) const {
    return task * instance.max_stations + station0;
  }
  std::size_t y_index(std::size_t station0) const {
    return instance.n_tasks * instance.max_stations + station0;
  }

  /// Station per task from the x block; violations from the domain check
  /// plus an explicit flag for multiply-assigned tasks.
  DomainSolution decode(const Bits& bits) const {
    if (bits.size() != model.n_vars)
      throw std::invalid_argument("decode: bit count mismatch");
    const std::size_t S = instance.max_stations;
    std::vector<std::size_t> assignment(instance.n_tasks, 0);
    std::vector<std::string> extra;
    for (std::size_t t = 0; t < instance.n_tasks; ++t) {
      std::size_t hits = 0;
      for (std::size_t s = 0; s < S; ++s)
        if (bits[x_index(t, s)]) {
          ++hits;
          if (assignment[t] == 0) assignment[t] = s + 1;
        }
      if (hits > 1)
        extra.push_back("task " + std::to_string(t) + " multiply assigned");
    }
    DomainSolution sol = eval_salbp(instance, assignment);
    sol.violations.insert(sol.violations.begin(), extra.begin(), extra.end());
    sol.feasible = sol.violations.empty();
    return sol;
  }

  /// Bits for a feasible station assignment, slacks filled consistently.
  Bits encode(const std::vector<std::size_t>& assignment) const {
    if (assignment.size() != instance.n_tasks)
      throw std::invalid_argument("encode: assignment length mismatch");
    const std::size_t S = instance.max_stations;
    Bits bits(model.n_vars, 0);
    std::vector<long long> load(S, 0);
    const auto scaled = [&](double v) {
      return detail::llround_checked(v * static_cast<double>(time_scale));
    };
    for (std::size_t t = 0; t < instance.n_tasks; ++t) {
      if (assignment[t] == 0 || assignment[t] > S)
        throw std::invalid_argument("encode: station out of range");
      bits[x_index(t, assignment[t] - 1)] = 1;
      load[assignment[t] - 1] += scaled(instance.times[t]);
    }
    for (std::size_t s = 0; s < S; ++s)
      if (load[s] > 0) bits[y_index(s)] = 1;
    if (config.method == PenaltyMethod::Slack) {
      const long long c_int = scaled(instance.cycle_time);
      for (std::size_t s = 0; s < S; ++s) {
        const long long surplus = bits[y_index(s)] ? c_int - load[s] : 0;
        auto sb = cap_slack[s].encode(surplus);
        for (std::size_t b = 0; b < sb.size(); ++b)
          bits[cap_slack_offset[s] + b] = sb[b];
      }
      for (std::size_t p = 0; p < instance.precedence.size(); ++p) {
        auto [t, u] = instance.precedence[p];
        const long long gap = static_cast<long long>(assignment[u]) -
                              static_cast<long long>(assignment[t]);
        auto sb = prec_slack[p].encode(gap);
        for (std::size_t b = 0; b < sb.size(); ++b)
          bits[prec_slack_offset[p] + b] = sb[b];
      }
    }
    return bits;
  }
};

/// Variables x_{ts} (task t on station s) and y_s (station s used), objective
/// sum_s s*y_s, with penalties for the assignment equality, the per-station
/// capacity inequality (slack of range c*y_s, binary expanded after integer
/// scaling), and the precedence inequality (slack of range S-1).
inline SalbpMapping salbp_to_qubo(const SalbpInstance& inst,
                                  const PenaltyConfig& cfg = {},
                                  std::size_t max_variables = 4096) {
  cfg.validate();
  inst.validate();
  const std::size_t T = inst.n_tasks;
  const std::size_t S = inst.max_stations;

  SalbpMapping m;
  m.instance = inst;
  m.config = cfg;

  std::vector<double> to_scale(inst.times);
  to_scale.push_back(inst.cycle_time);
  m.time_scale = integer_scale(to_scale);
  if (m.time_scale == 0) {
    // No exact grid; fall back to micro-unit rounding.
    m.time_scale = 1000000;
  }
  const auto scaled = [&](double v) {
    return detail::llround_checked(v * static_cast<double>(m.time_scale));
  };
  const long long c_int = scaled(inst.cycle_time);

  std::size_t n_vars = T * S + S;
  if (cfg.method == PenaltyMethod::Slack) {
    m.cap_slack_offset.assign(S, 0);
    m.cap_slack.resize(S);
    for (std::size_t s = 0; s < S; ++s) {
      m.cap_slack[s] = SlackBits::for_range(c_int);
      m.cap_slack_offset[s] = n_vars;
      n_vars += m.cap_slack[s].coefficients.size();
    }
    m.prec_slack_offset.assign(inst.precedence.size(), 0);
    m.prec_slack.resize(inst.precedence.size());
    for (std::size_t p = 0; p < inst.precedence.size(); ++p) {
      m.prec_slack[p] = SlackBits::for_range(static_cast<long long>(S) - 1);
      m.prec_slack_offset[p] = n_vars;
      n_vars += m.prec_slack[p].coefficients.size();
    }
  }
  if (n_vars > max_variables)
    throw std::invalid_argument("salbp_to_qubo: variable budget exceeded (" +
                                std::to_string(n_vars) + " > " +
                                std::to_string(max_variables) + ")");

  m.model = QuboModel::with_size(n_vars, "salbp");
  for (std::size_t t = 0; t < T; ++t)
    for (std::size_t s = 0; s < S; ++s)
      m.model.decode_map[m.x_index(t, s)] =
          "x[t=" + std::to_string(t) + ",s=" + std::to_string(s + 1) + "]";
  for (std::size_t s = 0; s < S; ++s)
    m.model.decode_map[m.y_index(s)] = "y[s=" + std::to_string(s + 1) + "]";

  // Objective range bound: sum_s s = S(S+1)/2.
  const double obj_range = 0.5 * static_cast<double>(S) * (S + 1.0);
  const double lambda = cfg.lagrange_or(2.0 * obj_range);

  for (std::size_t s = 0; s < S; ++s)
    m.model.add_linear(m.y_index(s), static_cast<double>(s + 1));

  // Assignment equality per task: (sum_s x_{ts} - 1)^2.
  for (std::size_t t = 0; t < T; ++t) {
    std::vector<std::size_t> vars;
    for (std::size_t s = 0; s < S; ++s) vars.push_back(m.x_index(t, s));
    m.model.add_squared_penalty(vars, std::vector<double>(S, 1.0), -1.0,
                                lambda);
  }

  // Capacity per station: sum_t v_t x_{ts} <= c y_s (in integer units).
  for (std::size_t s = 0; s < S; ++s) {
    std::vector<std::size_t> vars;
    std::vector<double> coeffs;
    for (std::size_t t = 0; t < T; ++t) {
      vars.push_back(m.x_index(t, s));
      coeffs.push_back(static_cast<double>(scaled(inst.times[t])));
    }
    vars.push_back(m.y_index(s));
    coeffs.push_back(-static_cast<double>(c_int));
    if (cfg.method == PenaltyMethod::Slack) {
      for (std::size_t b = 0; b < m.cap_slack[s].coefficients.size(); ++b) {
        const std::size_t idx = m.cap_slack_offset[s] + b;
        m.model.decode_map[idx] = "slack[cap,s=" + std::to_string(s + 1) +
                                  ",bit=" + std::to_string(b) + "]";
        vars.push_back(idx);
        coeffs.push_back(m.cap_slack[s].coefficients[b]);
      }
      m.model.add_squared_penalty(vars, coeffs, 0.0, lambda);
    } else {
      detail::add_unbalanced_penalty(m.model, vars, coeffs, 0.0, cfg);
    }
  }

  // Precedence: station(t) <= station(u), i.e.
  // sum_s (s+1) x_{us} - sum_s (s+1) x_{ts} - slack = 0, slack in [0, S-1].
  for (std::size_t p = 0; p < inst.precedence.size(); ++p) {
    auto [t, u] = inst.precedence[p];
    std::vector<std::size_t> vars;
    std::vector<double> coeffs;
    for (std::size_t s = 0; s < S; ++s) {
      vars.push_back(m.x_index(u, s));
      coeffs.push_back(static_cast<double>(s + 1));
      vars.push_back(m.x_index(t, s));
      coeffs.push_back(-static_cast<double>(s + 1));
    }
    if (cfg.method == PenaltyMethod::Slack) {
      for (std::size_t b = 0; b < m.prec_slack[p].coefficients.size(); ++b) {
        const std::size_t idx = m.prec_slack_offset[p] + b;
        m.model.decode_map[idx] = "slack[prec,t=" + std::to_string(t) + ",u=" +
                                  std::to_string(u) + ",bit=" +
                                  std::to_string(b) + "]";
        vars.push_back(idx);
        coeffs.push_back(-m.prec_slack[p].coefficients[b]);
      }
      m.model.add_squared_penalty(vars, coeffs, 0.0, lambda);
    } else {
      // g = station(t) - station(u)
      for (auto& c : coeffs) c = -c;
      detail::add_unbalanced_penalty(m.model, vars, coeffs, 0.0, cfg);
    }
  }
  return m;
}

// ---------------------------------------------------------------------------
// Portfolio
// ---------------------------------------------------------------------------

struct PortfolioMapping {
  PortfolioInstance instance;
  PenaltyConfig config;
  QuboModel model;
  long long return_scale = 1;
  std::size_t slack_offset = 0;
  SlackBits return_slack;  // Minvola only

  DomainSolution decode(const Bits& bits) const {
    if (bits.size() != model.n_vars)
      throw std::invalid_argument("decode: bit count mismatch");
    Bits selection(bits.begin(), bits.begin() + instance.n);
    return portfolio_objective(instance, selection);
  }

  Bits encode(const Bits& selection) const {
    if (selection.size() != instance.n)
      throw std::invalid_argument("encode: selection length mismatch");
    Bits bits(model.n_vars, 0);
    std::copy(selection.begin(), selection.end(), bits.begin());
    if (!return_slack.coefficients.empty()) {
      long long surplus = 0;
      for (std::size_t i = 0; i < instance.n; ++i)
        if (selection[i])
          surplus += detail::llround_checked(
              instance.returns[i] * static_cast<double>(return_scale));
      surplus -= detail::llround_checked(static_cast<double>(instance.k) *
                                         instance.target *
                                         static_cast<double>(return_scale));
      auto sb = return_slack.encode(surplus);
      for (std::size_t b = 0; b < sb.size(); ++b)
        bits[slack_offset + b] = sb[b];
    }
    return bits;
  }
};

/// Selection bits b_i with cardinality penalty lambda (sum b_i - k)^2.
/// Minvola: objective sigma^2/k^2 plus a return floor sum r_i b_i >= k R_min
/// (slack after integer scaling, or unbalanced). Multiobj: -(mu - lambda_t
/// sigma^2). Maxret: -mu with the volatility cap handled by the linear
/// unbalanced surrogate (an exact slack square on the already-quadratic
/// sigma^2 would leave QUBO form).
inline PortfolioMapping portfolio_to_qubo(const PortfolioInstance& inst,
                                          const PenaltyConfig& cfg = {}) {
  cfg.validate();
  inst.validate();
  const std::size_t n = inst.n;
  const double k = static_cast<double>(inst.k);

  PortfolioMapping m;
  m.instance = inst;
  m.config = cfg;

  double sum_abs_cov = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      sum_abs_cov += std::abs(inst.covariance(static_cast<Eigen::Index>(i),
                                              static_cast<Eigen::Index>(j)));
  double sum_abs_ret = 0.0;
  for (double r : inst.returns) sum_abs_ret += std::abs(r);

  double obj_range = 0.0;
  switch (inst.formulation) {
    case PortfolioFormulation::Minvola:
      obj_range = sum_abs_cov / (k * k);
      break;
    case PortfolioFormulation::Maxret:
      obj_range = sum_abs_ret / k + cfg.unbalanced_l1 * sum_abs_cov / (k * k);
      break;
    case PortfolioFormulation::Multiobj:
      obj_range = sum_abs_ret / k + inst.target * sum_abs_cov / (k * k);
      break;
  }
  const double lambda = cfg.lagrange_or(std::max(2.0 * obj_range, 1.0));

  const bool needs_return_slack =
      inst.formulation == PortfolioFormulation::Minvola &&
      cfg.method == PenaltyMethod::Slack;

  long long target_int = 0;
  long long slack_range = 0;
  if (needs_return_slack) {
    std::vector<double> to_scale(inst.returns);
    to_scale.push_back(k * inst.target);
    m.return_scale = integer_scale(to_scale);
    if (m.return_scale == 0) m.return_scale = 1000000;
    target_int = detail::llround_checked(k * inst.target *
                                         static_cast<double>(m.return_scale));
    // Max surplus: the k largest scaled returns minus the floor.
    std::vector<long long> scaled;
    for (double r : inst.returns)
      scaled.push_back(
          detail::llround_checked(r * static_cast<double>(m.return_scale)));
    std::sort(scaled.rbegin(), scaled.rend());
    long long best = 0;
    for (std::size_t i = 0; i < inst.k; ++i) best += scaled[i];
    slack_range = best - target_int;
    if (slack_range < 0)
      throw std::invalid_argument(
          "portfolio_to_qubo: return floor unreachable at cardinality k");
    m.return_slack = SlackBits::for_range(slack_range);
  }

  std::size_t n_vars = n;
  m.slack_offset = n;
  n_vars += m.return_slack.coefficients.size();
  m.model = QuboModel::with_size(n_vars, "portfolio");
  for (std::size_t i = 0; i < n; ++i)
    m.model.decode_map[i] = "select[a=" + std::to_string(i) + "]";
  for (std::size_t b = 0; b < m.return_slack.coefficients.size(); ++b)
    m.model.decode_map[n + b] = "slack[ret,bit=" + std::to_string(b) + "]";

  const auto add_variance = [&](double weight) {
    for (std::size_t i = 0; i < n; ++i) {
      m.model.add_linear(i, weight * inst.covariance(static_cast<Eigen::Index>(i),
                                                     static_cast<Eigen::Index>(i)));
      for (std::size_t j = i + 1; j < n; ++j)
        m.model.add_quadratic(
            i, j,
            2.0 * weight *
                inst.covariance(static_cast<Eigen::Index>(i),
                                static_cast<Eigen::Index>(j)));
    }
  };

  switch (inst.formulation) {
    case PortfolioFormulation::Minvola: {
      add_variance(1.0 / (k * k));
      if (needs_return_slack) {
        std::vector<std::size_t> vars;
        std::vector<double> coeffs;
        for (std::size_t i = 0; i < n; ++i) {
          vars.push_back(i);
          coeffs.push_back(static_cast<double>(detail::llround_checked(
              inst.returns[i] * static_cast<double>(m.return_scale))));
        }
        for (std::size_t b = 0; b < m.return_slack.coefficients.size(); ++b) {
          vars.push_back(n + b);
          coeffs.push_back(-m.return_slack.coefficients[b]);
        }
        m.model.add_squared_penalty(vars, coeffs,
                                    -static_cast<double>(target_int), lambda);
      } else if (cfg.method == PenaltyMethod::Unbalanced) {
        // g = k R_min - sum r_i b_i
        std::vector<std::size_t> vars;
        std::vector<double> coeffs;
        for (std::size_t i = 0; i < n; ++i) {
          vars.push_back(i);
          coeffs.push_back(-inst.returns[i]);
        }
        detail::add_unbalanced_penalty(m.model, vars, coeffs, k * inst.target,
                                       cfg);
      }
      break;
    }
    case PortfolioFormulation::Maxret: {
      for (std::size_t i = 0; i < n; ++i)
        m.model.add_linear(i, -inst.returns[i] / k);
      // Soft volatility cap: l1 * (sigma^2 - V_max). The quadratic surrogate
      // term would be quartic in the bits, so only the linear part applies.
      add_variance(cfg.unbalanced_l1 / (k * k));
      m.model.offset -= cfg.unbalanced_l1 * inst.target;
      break;
    }
    case PortfolioFormulation::Multiobj: {
      for (std::size_t i = 0; i < n; ++i)
        m.model.add_linear(i, -inst.returns[i] / k);
      add_variance(inst.target / (k * k));
      break;
    }
  }

  // Cardinality equality: (sum b_i - k)^2.
  {
    std::vector<std::size_t> vars;
    for (std::size_t i = 0; i < n; ++i) vars.push_back(i);
    m.model.add_squared_penalty(vars, std::vector<double>(n, 1.0), -k, lambda);
  }
  return m;
}

// ---------------------------------------------------------------------------
// Uniform mapping wrapper
// ---------------------------------------------------------------------------

using QuboMapping = std::variant<MaxcutMapping, SetCoverMapping, SalbpMapping,
                                 PortfolioMapping>;

inline const QuboModel& mapping_model(const QuboMapping& m) {
  return std::visit([](const auto& x) -> const QuboModel& { return x.model; },
                    m);
}

/// Reconstructs the domain assignment from decode_map semantics and
/// re-evaluates it with the problem-level evaluator; feasibility comes from
/// the domain check, never from penalty values.
inline DomainSolution decode(const QuboMapping& m, const Bits& bits) {
  return std::visit([&](const auto& x) { return x.decode(bits); }, m);
}

}  // namespace qubench
