// Copyright 2026 The ptwalk Authors
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

#ifndef PTWALK_GRAPH_HPP_
#define PTWALK_GRAPH_HPP_

#include <Eigen/Dense>
#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ptwalk/errors.hpp"

namespace ptwalk {

// Simple directed graph. Vertices are 1-indexed in all I/O and 0-indexed
// internally. adjacency(i, j) = 1 iff edge i->j; no self-loops, no
// multi-edges.
struct DirectedGraph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;  // 0-indexed, lexicographically sorted
  Eigen::MatrixXd adjacency;

  int out_degree(int i) const { return static_cast<int>(adjacency.row(i).sum()); }
  int in_degree(int j) const { return static_cast<int>(adjacency.col(j).sum()); }
};

enum class HamiltonianSource {
  directed_laplacian,
  hermitized,
  kronecker_sum,
  interdependent,
  custom,
};

struct Hamiltonian {
  Eigen::MatrixXd matrix;
  HamiltonianSource source = HamiltonianSource::custom;
};

// Undirected complete graph with signed weights; self-loop weights on the
// diagonal. Symmetric exactly by construction.
struct WeightedGraph {
  int n = 0;
  Eigen::MatrixXd weights;
};

// Oriented incidence matrix over an explicit edge ordering. Non-self-loop
// columns hold one +1 and one -1; self-loop columns hold a single 2.
struct OrientedIncidence {
  Eigen::MatrixXd matrix;                        // n x m
  std::vector<std::pair<int, int>> edge_order;   // 0-indexed (i, j), i <= j
};

struct InterdependentSpec {
  Eigen::MatrixXd h1;
  Eigen::MatrixXd h2;
  Eigen::MatrixXd b0;  // n1 x n2, entries in {0,1}
};

// Theorem checker output. b0_pseudo_hermitian is empty when b0 is not
// square (condition inapplicable). The verdict asserts sufficiency only:
// a false verdict makes no claim about the composite system.
struct InterdependenceReport {
  std::optional<bool> b0_pseudo_hermitian;
  bool degree_regular = false;
  bool commutes_fwd = false;   // H1 B0 = B0 H2
  bool commutes_bwd = false;   // H2 B0' = B0' H1
  bool verdict = false;
};

inline DirectedGraph from_adjacency(const Eigen::MatrixXd& a) {
  const int n = static_cast<int>(a.rows());
  if (a.cols() != n) throw UsageError("adjacency matrix must be square");
  DirectedGraph g;
  g.n = n;
  g.adjacency = a;
  for (int i = 0; i < n; ++i) {
    if (a(i, i) != 0.0) throw UsageError("self-loop at vertex " + std::to_string(i + 1));
    for (int j = 0; j < n; ++j) {
      const double v = a(i, j);
      if (v != 0.0 && v != 1.0) throw UsageError("adjacency entries must be 0 or 1");
      if (v == 1.0) g.edges.emplace_back(i, j);
    }
  }
  return g;
}

// Builds a graph from 1-indexed (source, target) pairs.
inline DirectedGraph from_edge_list(int n, const std::vector<std::pair<int, int>>& edges) {
  if (n < 1) throw UsageError("vertex count must be positive");
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  for (const auto& [s, t] : edges) {
    if (s < 1 || s > n || t < 1 || t > n)
      throw UsageError("vertex index out of range: (" + std::to_string(s) + "," +
                       std::to_string(t) + ") with n=" + std::to_string(n));
    if (s == t) throw UsageError("self-loop at vertex " + std::to_string(s));
    if (a(s - 1, t - 1) != 0.0)
      throw UsageError("duplicate edge (" + std::to_string(s) + "," + std::to_string(t) + ")");
    a(s - 1, t - 1) = 1.0;
  }
  return from_adjacency(a);
}

// H = (D_out - A)': diagonal holds out-degrees, H(i, j) = -1 iff edge j->i.
// Amplitude flows along edge direction; decay rate at a vertex is its
// out-degree.
inline Hamiltonian hamiltonian(const DirectedGraph& g) {
  Eigen::MatrixXd d = g.adjacency.rowwise().sum().asDiagonal();
  return Hamiltonian{(d - g.adjacency).transpose(), HamiltonianSource::directed_laplacian};
}

// Kahn's condition: repeatedly removing zero-in-degree vertices empties the
// graph exactly when it is acyclic.
inline bool is_acyclic(const DirectedGraph& g) {
  std::vector<int> indeg(g.n, 0);
  for (const auto& [s, t] : g.edges) indeg[t]++;
  std::vector<int> queue;
  for (int v = 0; v < g.n; ++v)
    if (indeg[v] == 0) queue.push_back(v);
  int removed = 0;
  while (!queue.empty()) {
    int v = queue.back();
    queue.pop_back();
    ++removed;
    for (const auto& [s, t] : g.edges)
      if (s == v && --indeg[t] == 0) queue.push_back(t);
  }
  return removed == g.n;
}

// Incidence over the complete graph with self-loops: edge order is all
// self-loops (0,0)..(n-1,n-1) followed by pairs (i,j), i<j, lexicographic.
inline OrientedIncidence complete_incidence(int n) {
  OrientedIncidence inc;
  for (int i = 0; i < n; ++i) inc.edge_order.emplace_back(i, i);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) inc.edge_order.emplace_back(i, j);
  const int m = static_cast<int>(inc.edge_order.size());
  inc.matrix = Eigen::MatrixXd::Zero(n, m);
  for (int e = 0; e < m; ++e) {
    auto [i, j] = inc.edge_order[e];
    if (i == j) {
      inc.matrix(i, e) = 2.0;
    } else {
      inc.matrix(i, e) = 1.0;
      inc.matrix(j, e) = -1.0;
    }
  }
  return inc;
}

// L = M W M' over the explicit edge ordering.
inline Eigen::MatrixXd weighted_laplacian(const OrientedIncidence& inc,
                                          const Eigen::VectorXd& weights) {
  if (weights.size() != inc.matrix.cols())
    throw UsageError("weight count does not match edge count");
  return inc.matrix * weights.asDiagonal() * inc.matrix.transpose();
}

// Per-edge weight vector of a WeightedGraph in complete_incidence order.
inline Eigen::VectorXd edge_weights(const WeightedGraph& wg) {
  const OrientedIncidence inc = complete_incidence(wg.n);
  Eigen::VectorXd w(inc.edge_order.size());
  for (size_t e = 0; e < inc.edge_order.size(); ++e)
    w(static_cast<int>(e)) = wg.weights(inc.edge_order[e].first, inc.edge_order[e].second);
  return w;
}

// Direct formula for the complete-graph weighted Laplacian:
// L_ii = sum_k w_ik + 3 w_ii (the self-loop contributes 4 w_ii in total),
// L_ij = -w_ij.
inline Eigen::MatrixXd complete_laplacian_direct(const WeightedGraph& wg) {
  const int n = wg.n;
  Eigen::MatrixXd l = -wg.weights;
  for (int i = 0; i < n; ++i) l(i, i) = wg.weights.row(i).sum() + 3.0 * wg.weights(i, i);
  return l;
}

// Inverse of the direct formula: w_ij = -Ht_ij, w_ii = (1/4) sum_k Ht_ik.
// complete_laplacian_direct(weights_from_hermitized(S)) = S is an exact
// algebraic identity for symmetric S.
inline WeightedGraph weights_from_hermitized(const Hamiltonian& ht) {
  const Eigen::MatrixXd& s = ht.matrix;
  const int n = static_cast<int>(s.rows());
  if ((s - s.transpose()).cwiseAbs().maxCoeff() > 1e-10)
    throw MathError("hermitized Hamiltonian is not symmetric within 1e-10");
  WeightedGraph wg;
  wg.n = n;
  wg.weights = -s;
  for (int i = 0; i < n; ++i) wg.weights(i, i) = 0.25 * s.row(i).sum();
  wg.weights = ((wg.weights + wg.weights.transpose()) / 2.0).eval();
  return wg;
}

// H = [[H1 + diag(row sums of B0), -B0], [-B0', H2 + diag(col sums of B0)]].
inline Hamiltonian build_interdependent(const InterdependentSpec& spec) {
  const int n1 = static_cast<int>(spec.h1.rows());
  const int n2 = static_cast<int>(spec.h2.rows());
  if (spec.h1.cols() != n1 || spec.h2.cols() != n2)
    throw UsageError("component Hamiltonians must be square");
  if (spec.b0.rows() != n1 || spec.b0.cols() != n2)
    throw UsageError("interconnection matrix dimensions do not conform");
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(n1 + n2, n1 + n2);
  h.topLeftCorner(n1, n1) = spec.h1;
  h.topLeftCorner(n1, n1) += Eigen::MatrixXd(spec.b0.rowwise().sum().asDiagonal());
  h.bottomRightCorner(n2, n2) = spec.h2;
  h.bottomRightCorner(n2, n2) +=
      Eigen::MatrixXd(spec.b0.colwise().sum().transpose().asDiagonal());
  h.topRightCorner(n1, n2) = -spec.b0;
  h.bottomLeftCorner(n2, n1) = -spec.b0.transpose();
  return Hamiltonian{h, HamiltonianSource::interdependent};
}

}  // namespace ptwalk

#endif  // PTWALK_GRAPH_HPP_
