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

#ifndef PTWALK_CENTRALITY_HPP_
#define PTWALK_CENTRALITY_HPP_

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>
#include <string>
#include <vector>

#include "ptwalk/errors.hpp"
#include "ptwalk/graph.hpp"
#include "ptwalk/spectral.hpp"
#include "ptwalk/walk.hpp"

namespace ptwalk {

enum class Method { eta_ctqw, ctqw, pagerank, eigenvector };

inline const char* method_name(Method m) {
  switch (m) {
    case Method::eta_ctqw: return "eta_ctqw";
    case Method::ctqw: return "ctqw";
    case Method::pagerank: return "pagerank";
    case Method::eigenvector: return "eigenvector";
  }
  return "unknown";
}

inline Method method_from_string(const std::string& s) {
  if (s == "eta_ctqw") return Method::eta_ctqw;
  if (s == "ctqw") return Method::ctqw;
  if (s == "pagerank") return Method::pagerank;
  if (s == "eigenvector") return Method::eigenvector;
  throw UsageError("unknown centrality method: " + s);
}

constexpr double kRankTieTol = 1e-9;

struct CentralityScores {
  Eigen::VectorXd scores;
  Method method = Method::pagerank;
  std::vector<int> order;  // vertex indices, descending score, ties by index
  std::vector<int> ranks;  // 1-based competition ranks, ties share a rank
  bool degenerate = false;  // eigenvector centrality on a nilpotent adjacency
};

struct PageRankParams {
  double alpha = 0.85;
  double tolerance = 1e-12;
  int max_iterations = 100000;
};

namespace detail {

inline CentralityScores finalize(Eigen::VectorXd scores, Method m, bool degenerate = false) {
  const int n = static_cast<int>(scores.size());
  CentralityScores cs;
  cs.scores = std::move(scores);
  cs.method = m;
  cs.degenerate = degenerate;
  cs.order.resize(n);
  std::iota(cs.order.begin(), cs.order.end(), 0);
  std::sort(cs.order.begin(), cs.order.end(), [&](int a, int b) {
    if (cs.scores(a) != cs.scores(b)) return cs.scores(a) > cs.scores(b);
    return a < b;
  });
  cs.ranks.resize(n);
  for (int i = 0; i < n; ++i) {
    int above = 0;
    for (int j = 0; j < n; ++j)
      if (cs.scores(j) > cs.scores(i) + kRankTieTol) ++above;
    cs.ranks[i] = above + 1;
  }
  return cs;
}

// Infinite-time average of |<j|psi(t)>|^2 for psi(t) = B exp(-i lambda t) c:
// cross terms between distinct eigenvalues average to zero, so the limit is
// the sum over equal-eigenvalue groups of |sum_{k in group} B_jk c_k|^2.
inline Eigen::VectorXd grouped_time_average(const Eigen::MatrixXcd& basis,
                                            const Eigen::VectorXcd& lambda,
                                            const Eigen::VectorXcd& coeffs) {
  const int n = static_cast<int>(lambda.size());
  const std::vector<int> starts = group_boundaries(lambda, kEigenvalueGroupTol);
  Eigen::VectorXd avg = Eigen::VectorXd::Zero(basis.rows());
  for (size_t g = 0; g + 1 < starts.size(); ++g) {
    Eigen::VectorXcd contrib = Eigen::VectorXcd::Zero(basis.rows());
    for (int k = starts[g]; k < starts[g + 1]; ++k) contrib += basis.col(k) * coeffs(k);
    avg += contrib.cwiseAbs2();
  }
  return avg;
}

inline Eigen::VectorXcd uniform_state(int n) {
  return Eigen::VectorXcd::Constant(n, std::complex<double>(1.0 / std::sqrt(double(n)), 0.0));
}

}  // namespace detail

// Infinite-time average of the eta-walk from the uniform superposition,
// computed exactly through the spectral expansion of eta H eta^{-1}.
inline CentralityScores eta_ctqw_centrality(const Hamiltonian& h, const EtaDecomposition& ed) {
  const Hamiltonian ht = hermitize(h, ed);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> sa(ht.matrix);
  if (sa.info() != Eigen::Success) throw MathError("hermitized eigensolver failed");
  const int n = static_cast<int>(ht.matrix.rows());
  const Eigen::MatrixXcd s = sa.eigenvectors().cast<std::complex<double>>();
  const Eigen::VectorXcd lam = sa.eigenvalues().cast<std::complex<double>>();
  const Eigen::VectorXcd psi0 = detail::uniform_state(n);
  const Eigen::VectorXcd coeffs = s.adjoint() * psi0;
  Eigen::VectorXd v = detail::grouped_time_average(s, lam, coeffs);
  return detail::finalize(std::move(v), Method::eta_ctqw);
}

// Infinite-time average of the non-unitary walk from the uniform
// superposition, normalized by the time average of the total norm.
inline CentralityScores ctqw_centrality(const Hamiltonian& h) {
  const PHClassification c = classify(h);
  if (c.kind == PHKind::broken)
    throw MathError(c.max_imag > kImagTol
                        ? "non-unitary time average requires a real spectrum"
                        : "non-unitary time average requires a diagonalizable Hamiltonian");
  const SpectralData sd = eigen_biorthonormal(h);
  const int n = static_cast<int>(sd.eigenvalues.size());
  const Eigen::VectorXcd psi0 = detail::uniform_state(n);
  const Eigen::VectorXcd coeffs = sd.left_vectors.adjoint() * psi0;
  Eigen::VectorXd raw = detail::grouped_time_average(sd.right_vectors, sd.eigenvalues, coeffs);
  const double total = raw.sum();
  if (total <= 0.0) throw MathError("degenerate non-unitary time average");
  return detail::finalize(raw / total, Method::ctqw);
}

// Trapezoidal quadrature oracle for the closed-form averages above.
inline CentralityScores ctqw_centrality_quadrature(const Hamiltonian& h, WalkMode mode,
                                                   double t_max = 100.0 * M_PI,
                                                   double dt = 0.005) {
  const int n = static_cast<int>(h.matrix.rows());
  const Trajectory tr = trajectory(h, mode, detail::uniform_state(n), t_max, dt);
  const int samples = static_cast<int>(tr.times.size());
  Eigen::VectorXd acc = Eigen::VectorXd::Zero(n);
  double total_acc = 0.0;
  for (int s = 0; s < samples; ++s) {
    const double w = (s == 0 || s == samples - 1) ? 0.5 : 1.0;
    acc += w * tr.probabilities.row(s).transpose();
    total_acc += w * tr.totals[s];
  }
  Eigen::VectorXd v;
  if (mode == WalkMode::eta) {
    v = acc / double(samples - 1);
  } else {
    v = acc / total_acc;  // normalize by the total-norm time average
  }
  return detail::finalize(std::move(v),
                          mode == WalkMode::eta ? Method::eta_ctqw : Method::ctqw);
}

// Power iteration p <- (1-alpha)/N + alpha M' p with row-stochastic M from
// out-degree normalization; dangling rows redistribute uniformly.
inline CentralityScores pagerank(const DirectedGraph& g, const PageRankParams& params = {}) {
  const int n = g.n;
  Eigen::MatrixXd m(n, n);
  for (int i = 0; i < n; ++i) {
    const double deg = g.adjacency.row(i).sum();
    if (deg > 0.0) {
      m.row(i) = g.adjacency.row(i) / deg;
    } else {
      m.row(i).setConstant(1.0 / n);
    }
  }
  Eigen::VectorXd p = Eigen::VectorXd::Constant(n, 1.0 / n);
  const Eigen::MatrixXd mt = m.transpose();
  for (int it = 0; it < params.max_iterations; ++it) {
    Eigen::VectorXd next =
        Eigen::VectorXd::Constant(n, (1.0 - params.alpha) / n) + params.alpha * (mt * p);
    const double delta = (next - p).cwiseAbs().sum();
    p = next;
    if (delta < params.tolerance) return detail::finalize(std::move(p), Method::pagerank);
  }
  throw MathError("pagerank failed to converge");
}

// Principal eigenvector of A' (in-link based), sign-fixed, clamped at zero,
// L1-normalized. A nilpotent adjacency (zero spectral radius) has no Perron
// direction; that case returns uniform scores with the degenerate flag set.
inline CentralityScores eigenvector_centrality(const DirectedGraph& g) {
  const int n = g.n;
  Eigen::EigenSolver<Eigen::MatrixXd> es(g.adjacency.transpose(), true);
  if (es.info() != Eigen::Success) throw MathError("adjacency eigensolver failed");
  const Eigen::VectorXcd lam = es.eigenvalues();
  int best = 0;
  for (int k = 1; k < n; ++k) {
    const double dre = lam(k).real() - lam(best).real();
    if (dre > kRankTieTol ||
        (std::abs(dre) <= kRankTieTol && std::abs(lam(k).imag()) < std::abs(lam(best).imag())))
      best = k;
  }
  if (lam(best).real() <= 1e-12) {
    return detail::finalize(Eigen::VectorXd::Constant(n, 1.0 / n), Method::eigenvector,
                            /*degenerate=*/true);
  }
  Eigen::VectorXcd col = es.eigenvectors().col(best);
  int peak = 0;
  double bestabs = -1.0;
  for (int i = 0; i < n; ++i)
    if (std::abs(col(i)) > bestabs) {
      bestabs = std::abs(col(i));
      peak = i;
    }
  const std::complex<double> z = col(peak);
  if (std::abs(z) > 0.0) col *= std::conj(z) / std::abs(z);
  Eigen::VectorXd v = col.real().cwiseMax(0.0);
  const double total = v.sum();
  if (total <= 0.0) throw MathError("eigenvector centrality produced a null vector");
  return detail::finalize(v / total, Method::eigenvector);
}

}  // namespace ptwalk

#endif  // PTWALK_CENTRALITY_HPP_
