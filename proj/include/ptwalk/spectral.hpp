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

#ifndef PTWALK_SPECTRAL_HPP_
#define PTWALK_SPECTRAL_HPP_

#include <Eigen/Dense>
#include <algorithm>
#include <complex>
#include <numeric>
#include <vector>

#include "ptwalk/errors.hpp"
#include "ptwalk/graph.hpp"

namespace ptwalk {

constexpr double kHermitianTol = 1e-12;       // max |H - H'| for the Hermitian branch
constexpr double kImagTol = 1e-9;             // relative |Im lambda| bound
// Diagonalizability floor on the reciprocal condition of Psi. The metric
// V = Phi Phi' has eigenvalue ratio rcond(Psi)^2, and build_eta rejects
// ratios at or below 1e-12, so the floor is its square root: every
// classified Hamiltonian admits the metric construction.
constexpr double kDiagonalizableRcond = 1e-6;
constexpr double kEigenvalueGroupTol = 1e-8;  // absolute eigenvalue grouping

// Biorthonormal eigensystem: H psi_j = lambda_j psi_j, Phi' Psi = I.
// Columns of right_vectors are psi_j; columns of left_vectors are phi_j.
struct SpectralData {
  Eigen::VectorXcd eigenvalues;
  Eigen::MatrixXcd right_vectors;
  Eigen::MatrixXcd left_vectors;
  double condition = 0.0;  // reciprocal condition estimate of Psi
};

enum class PHKind { hermitian, pseudo_hermitian, broken };

struct PHClassification {
  PHKind kind = PHKind::broken;
  double max_imag = 0.0;
  double rcond = 0.0;
};

inline const char* ph_kind_name(PHKind k) {
  switch (k) {
    case PHKind::hermitian: return "hermitian";
    case PHKind::pseudo_hermitian: return "pseudo_hermitian";
    case PHKind::broken: return "broken";
  }
  return "unknown";
}

// eta, its inverse, and V = eta^2 = Phi Phi'. eta is the principal
// (Hermitian positive definite) square root of V.
struct EtaDecomposition {
  Eigen::MatrixXcd eta;
  Eigen::MatrixXcd eta_inv;
  Eigen::MatrixXcd v;
  SpectralData spectral;
};

// Factors of U(t) = basis diag(exp(-i lambda t)) basis_inv. For hermitized
// input the basis is unitary and basis_inv = basis'.
struct EvolutionDecomposition {
  Eigen::MatrixXcd basis;
  Eigen::MatrixXcd basis_inv;
  Eigen::VectorXcd eigenvalues;
  bool unitary = false;
};

namespace detail {

// Start indices of maximal runs of eigenvalues whose neighbours lie within
// tol of each other (chained grouping on a sorted sequence); the final
// element is the list length.
inline std::vector<int> group_boundaries(const Eigen::VectorXcd& lambda, double tol) {
  const int n = static_cast<int>(lambda.size());
  std::vector<int> starts{0};
  for (int i = 1; i < n; ++i)
    if (std::abs(lambda(i) - lambda(i - 1)) > tol) starts.push_back(i);
  starts.push_back(n);
  return starts;
}

inline std::vector<int> group_boundaries(const Eigen::VectorXd& lambda, double tol) {
  Eigen::VectorXcd c = lambda.cast<std::complex<double>>();
  return group_boundaries(c, tol);
}

// Rotates each column so its largest-modulus entry is real positive. Fixes
// the solver's arbitrary per-column phase without changing any projector.
inline void fix_column_phases(Eigen::MatrixXcd& m) {
  for (int j = 0; j < m.cols(); ++j) {
    int peak = 0;
    double best = -1.0;
    for (int i = 0; i < m.rows(); ++i) {
      const double a = std::abs(m(i, j));
      if (a > best) {
        best = a;
        peak = i;
      }
    }
    const std::complex<double> z = m(peak, j);
    if (std::abs(z) > 0.0) m.col(j) *= std::conj(z) / std::abs(z);
  }
}

struct RawEigen {
  Eigen::VectorXcd eigenvalues;
  Eigen::MatrixXcd psi;
  double rcond = 0.0;
  double max_imag = 0.0;
};

// General eigensolve with deterministic ordering (ascending by real part,
// ties by imaginary part, remaining ties by solver order) and unit columns.
inline RawEigen raw_eigen(const Eigen::MatrixXd& h) {
  Eigen::EigenSolver<Eigen::MatrixXd> es(h, true);
  if (es.info() != Eigen::Success) throw MathError("eigensolver failed to converge");
  const Eigen::VectorXcd lam = es.eigenvalues();
  const Eigen::MatrixXcd vec = es.eigenvectors();
  const int n = static_cast<int>(lam.size());

  std::vector<int> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) {
    if (lam(a).real() != lam(b).real()) return lam(a).real() < lam(b).real();
    return lam(a).imag() < lam(b).imag();
  });

  RawEigen out;
  out.eigenvalues.resize(n);
  out.psi.resize(n, n);
  for (int k = 0; k < n; ++k) {
    out.eigenvalues(k) = lam(idx[k]);
    out.psi.col(k) = vec.col(idx[k]).normalized();
  }
  fix_column_phases(out.psi);

  out.max_imag = 0.0;
  for (int k = 0; k < n; ++k)
    out.max_imag = std::max(out.max_imag, std::abs(out.eigenvalues(k).imag()));

  // Reciprocal condition from the Gram spectrum: the singular values of Psi
  // are the square roots of the eigenvalues of Psi' Psi. Resolves ratios to
  // about 1e-8, two orders below the classification floor; a rounding-
  // negative smallest eigenvalue reads as a dependent basis.
  const Eigen::MatrixXcd gram = out.psi.adjoint() * out.psi;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> sa(gram, Eigen::EigenvaluesOnly);
  const double wmin = sa.eigenvalues()(0);
  const double wmax = sa.eigenvalues()(n - 1);
  out.rcond = (wmax <= 0.0 || wmin <= 0.0) ? 0.0 : std::sqrt(wmin / wmax);
  return out;
}

}  // namespace detail

// Biorthonormal eigendecomposition. The left basis is Phi' = Psi^{-1}, which
// enforces Phi' Psi = I by construction. Within each group of equal
// eigenvalues the left block is replaced by an orthonormal basis of the same
// left eigenspace (thin QR) and Psi is recomputed as (Phi')^{-1}; degenerate
// groups then contribute basis-independent orthogonal projectors to
// V = Phi Phi', making the metric solver-independent. Columns outside
// degenerate groups are duals of unit right eigenvectors.
inline SpectralData eigen_biorthonormal(const Hamiltonian& h) {
  detail::RawEigen raw = detail::raw_eigen(h.matrix);
  if (raw.rcond < kDiagonalizableRcond)
    throw MathError("matrix is not diagonalizable: reciprocal condition " +
                    std::to_string(raw.rcond));
  const int n = static_cast<int>(raw.eigenvalues.size());
  Eigen::MatrixXcd psi = raw.psi;
  Eigen::MatrixXcd phi_dag = psi.inverse();

  const std::vector<int> starts =
      detail::group_boundaries(raw.eigenvalues, kEigenvalueGroupTol);
  bool degenerate = false;
  for (size_t g = 0; g + 1 < starts.size(); ++g)
    if (starts[g + 1] - starts[g] > 1) degenerate = true;

  if (degenerate) {
    Eigen::MatrixXcd phi = phi_dag.adjoint();
    for (size_t g = 0; g + 1 < starts.size(); ++g) {
      const int a = starts[g];
      const int k = starts[g + 1] - a;
      if (k < 2) continue;
      Eigen::HouseholderQR<Eigen::MatrixXcd> qr(phi.middleCols(a, k));
      Eigen::MatrixXcd q =
          qr.householderQ() * Eigen::MatrixXcd::Identity(n, k);
      phi.middleCols(a, k) = q;
    }
    detail::fix_column_phases(phi);
    phi_dag = phi.adjoint();
    psi = phi_dag.inverse();
  }

  SpectralData sd;
  sd.eigenvalues = raw.eigenvalues;
  sd.right_vectors = psi;
  sd.left_vectors = phi_dag.adjoint();
  sd.condition = raw.rcond;
  return sd;
}

// hermitian: max |H - H'| <= 1e-12. pseudo_hermitian: real spectrum within
// |Im lambda| <= 1e-9 max(1, |lambda|) and diagonalizable (rcond above the
// metric-compatible floor).
// Anything else is broken, which is a value, not an error.
inline PHClassification classify(const Hamiltonian& h) {
  PHClassification c;
  if ((h.matrix - h.matrix.transpose()).cwiseAbs().maxCoeff() <= kHermitianTol) {
    c.kind = PHKind::hermitian;
    c.max_imag = 0.0;
    c.rcond = 1.0;
    return c;
  }
  detail::RawEigen raw = detail::raw_eigen(h.matrix);
  double scale = 1.0;
  for (int k = 0; k < raw.eigenvalues.size(); ++k)
    scale = std::max(scale, std::abs(raw.eigenvalues(k)));
  c.max_imag = raw.max_imag;
  c.rcond = raw.rcond;
  if (raw.max_imag > kImagTol * scale) {
    c.kind = PHKind::broken;
  } else if (raw.rcond < kDiagonalizableRcond) {
    c.kind = PHKind::broken;
  } else {
    c.kind = PHKind::pseudo_hermitian;
  }
  return c;
}

// V = Phi Phi'; eta = principal square root of V via the Hermitian
// eigendecomposition V = Q D Q'.
inline EtaDecomposition build_eta(const SpectralData& sd) {
  const int n = static_cast<int>(sd.eigenvalues.size());
  Eigen::MatrixXcd v = sd.left_vectors * sd.left_vectors.adjoint();
  v = ((v + v.adjoint()) / 2.0).eval();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> sa(v);
  if (sa.info() != Eigen::Success) throw MathError("metric eigensolver failed");
  const Eigen::VectorXd w = sa.eigenvalues();
  if (w(0) <= 1e-12 * w(n - 1))
    throw MathError("metric V is numerically singular: smallest eigenvalue " +
                    std::to_string(w(0)));
  const Eigen::MatrixXcd q = sa.eigenvectors();
  Eigen::VectorXd sq = w.cwiseSqrt();
  EtaDecomposition ed;
  ed.eta = q * sq.asDiagonal() * q.adjoint();
  ed.eta_inv = q * sq.cwiseInverse().asDiagonal() * q.adjoint();
  ed.eta = ((ed.eta + ed.eta.adjoint()) / 2.0).eval();
  ed.eta_inv = ((ed.eta_inv + ed.eta_inv.adjoint()) / 2.0).eval();
  ed.v = v;
  ed.spectral = sd;
  return ed;
}

constexpr double kHermitizeAsymTol = 1e-7;

// Ht = eta H eta^{-1}, symmetrized after verifying the asymmetry is below
// 1e-7. The result is real for real pseudo-Hermitian input.
inline Hamiltonian hermitize(const Hamiltonian& h, const EtaDecomposition& ed) {
  const Eigen::MatrixXcd hc = h.matrix.cast<std::complex<double>>();
  Eigen::MatrixXcd ht = ed.eta * hc * ed.eta_inv;
  const double asym = (ht - ht.adjoint()).cwiseAbs().maxCoeff();
  if (asym > kHermitizeAsymTol)
    throw MathError("hermitized Hamiltonian asymmetry " + std::to_string(asym) +
                    " exceeds tolerance");
  ht = ((ht + ht.adjoint()) / 2.0).eval();
  const double residual_imag = ht.imag().cwiseAbs().maxCoeff();
  if (residual_imag > 1e-9)
    throw MathError("hermitized Hamiltonian has non-real entries");
  return Hamiltonian{ht.real(), HamiltonianSource::hermitized};
}

// Factors of the propagator. Without a metric: the non-unitary
// decomposition from the biorthonormal basis. With one: the unitary
// decomposition of eta H eta^{-1}.
inline EvolutionDecomposition decompose_evolution(const Hamiltonian& h,
                                                  const EtaDecomposition* ed = nullptr) {
  EvolutionDecomposition dec;
  if (ed == nullptr) {
    SpectralData sd = eigen_biorthonormal(h);
    dec.basis = sd.right_vectors;
    dec.basis_inv = sd.left_vectors.adjoint();
    dec.eigenvalues = sd.eigenvalues;
    dec.unitary = false;
    return dec;
  }
  const Hamiltonian ht = hermitize(h, *ed);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> sa(ht.matrix);
  if (sa.info() != Eigen::Success) throw MathError("hermitized eigensolver failed");
  dec.basis = sa.eigenvectors().cast<std::complex<double>>();
  dec.basis_inv = dec.basis.adjoint();
  dec.eigenvalues = sa.eigenvalues().cast<std::complex<double>>();
  dec.unitary = true;
  return dec;
}

// Condition (a): square B0 with real spectrum and a well-conditioned
// eigenbasis; (b): all row sums and all column sums share one value c;
// (c), (d): intertwining relations within 1e-10. Verdict true certifies
// pseudo-Hermiticity of the composite (sufficient, not necessary).
inline InterdependenceReport check_interdependent_theorem(const InterdependentSpec& spec) {
  const int n1 = static_cast<int>(spec.b0.rows());
  const int n2 = static_cast<int>(spec.b0.cols());
  if (spec.h1.rows() != n1 || spec.h2.rows() != n2)
    throw UsageError("interdependent dimensions do not conform");
  InterdependenceReport rep;

  if (n1 == n2) {
    const PHClassification c = classify(Hamiltonian{spec.b0, HamiltonianSource::custom});
    rep.b0_pseudo_hermitian = (c.kind != PHKind::broken);
  }

  const Eigen::VectorXd rows = spec.b0.rowwise().sum();
  const Eigen::VectorXd cols = spec.b0.colwise().sum();
  const double c0 = rows(0);
  rep.degree_regular = (rows.array() - c0).abs().maxCoeff() <= 1e-12 &&
                       (cols.array() - c0).abs().maxCoeff() <= 1e-12;

  rep.commutes_fwd =
      (spec.h1 * spec.b0 - spec.b0 * spec.h2).cwiseAbs().maxCoeff() <= 1e-10;
  rep.commutes_bwd =
      (spec.h2 * spec.b0.transpose() - spec.b0.transpose() * spec.h1).cwiseAbs().maxCoeff() <=
      1e-10;

  rep.verdict = rep.degree_regular && rep.commutes_fwd && rep.commutes_bwd &&
                rep.b0_pseudo_hermitian.value_or(true);
  return rep;
}

}  // namespace ptwalk

#endif  // PTWALK_SPECTRAL_HPP_
