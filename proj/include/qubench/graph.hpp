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
#include <ostream>
#include <stdexcept>
#include <vector>

#include "qubench/qubo.hpp"
#include "qubench/rng.hpp"

namespace qubench {

/// Undirected simple weighted graph. Edges are stored with u < v and no
/// duplicates; weights must be finite.
struct WeightedEdge {
  std::size_t u;
  std::size_t v;
  double weight;
};

struct ProblemGraph {
  std::size_t n = 0;
  std::vector<WeightedEdge> edges;

  void add_edge(std::size_t u, std::size_t v, double w) {
    if (u >= v || v >= n)
      throw std::invalid_argument("graph edge must satisfy 0 <= u < v < n");
    if (!std::isfinite(w))
      throw std::invalid_argument("graph edge weight must be finite");
    for (const auto& e : edges)
      if (e.u == u && e.v == v)
        throw std::invalid_argument("duplicate graph edge");
    edges.push_back({u, v, w});
  }

  double total_weight() const {
    double s = 0.0;
    for (const auto& e : edges) s += e.weight;
    return s;
  }
};

/// Erdos-Renyi G(n, edge_prob) with unit weights, deterministic per seed.
inline ProblemGraph gen_maxcut(std::size_t n, double edge_prob,
                               std::uint64_t seed) {
  if (n < 2) throw std::invalid_argument("gen_maxcut: n must be >= 2");
  if (!(edge_prob > 0.0) || edge_prob > 1.0)
    throw std::invalid_argument("gen_maxcut: edge_prob must be in (0,1]");
  ProblemGraph g;
  g.n = n;
  auto eng = make_engine(seed);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if (uniform01(eng) < edge_prob) g.edges.push_back({u, v, 1.0});
  return g;
}

/// Total weight of edges crossing the bipartition.
inline double eval_cut(const ProblemGraph& g, const Bits& side) {
  if (side.size() != g.n)
    throw std::invalid_argument("eval_cut: side length != vertex count");
  double cut = 0.0;
  for (const auto& e : g.edges)
    if (side[e.u] != side[e.v]) cut += e.weight;
  return cut;
}

// Edge-list text format: header "n m", then one "u v weight" line per edge.

inline void write_graph(std::ostream& os, const ProblemGraph& g) {
  os << g.n << " " << g.edges.size() << "\n";
  for (const auto& e : g.edges)
    os << e.u << " " << e.v << " " << format_double(e.weight) << "\n";
}

inline ProblemGraph read_graph(std::istream& is) {
  std::size_t n, m;
  if (!(is >> n >> m)) throw std::runtime_error("graph parse: bad header");
  ProblemGraph g;
  g.n = n;
  for (std::size_t k = 0; k < m; ++k) {
    std::size_t u, v;
    double w;
    if (!(is >> u >> v >> w)) throw std::runtime_error("graph parse: bad edge");
    g.add_edge(u, v, w);
  }
  return g;
}

}  // namespace qubench
