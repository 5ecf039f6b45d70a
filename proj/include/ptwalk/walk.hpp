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

#ifndef PTWALK_WALK_HPP_
#define PTWALK_WALK_HPP_

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <optional>
#include <vector>

#include <unsupported/Eigen/KroneckerProduct>

#include "ptwalk/errors.hpp"
#include "ptwalk/graph.hpp"
#include "ptwalk/spectral.hpp"

namespace ptwalk {

enum class WalkMode { nonunitary, eta };

struct WalkState {
  Eigen::VectorXcd amplitudes;
  double time = 0.0;
};

struct Trajectory {
  std::vector<double> times;
  Eigen::MatrixXd probabilities;  // samples x n, squared moduli
  std::vector<double> totals;     // total squared norm per sample
  WalkMode mode = WalkMode::eta;
};

struct MultiParticleSystem {
  int particles = 1;
  Hamiltonian base;
  Hamiltonian composite;
  std::optional<Eigen::MatrixXd> interaction;
  std::optional<Eigen::MatrixXcd> eta_p;  // composite metric when available
};

// Caches one diagonal decomposition; every sample is the closed form at its
// own t, never a step-accumulated product.
class Propagator {
 public:
  static Propagator nonunitary(const Hamiltonian& h) {
    return Propagator(decompose_evolution(h, nullptr), WalkMode::nonunitary);
  }
  static Propagator eta(const Hamiltonian& h, const EtaDecomposition& ed) {
    return Propagator(decompose_evolution(h, &ed), WalkMode::eta);
  }

  Eigen::VectorXcd apply(const Eigen::VectorXcd& psi0, double t) const {
    const std::complex<double> mi(0.0, -1.0);
    Eigen::VectorXcd coeffs = dec_.basis_inv * psi0;
    for (int k = 0; k < coeffs.size(); ++k)
      coeffs(k) *= std::exp(mi * dec_.eigenvalues(k) * t);
    return dec_.basis * coeffs;
  }

  WalkMode mode() const { return mode_; }

 private:
  Propagator(EvolutionDecomposition dec, WalkMode mode)
      : dec_(std::move(dec)), mode_(mode) {}
  EvolutionDecomposition dec_;
  WalkMode mode_;
};

namespace detail {

inline void require_unit(const Eigen::VectorXcd& psi0) {
  if (std::abs(psi0.norm() - 1.0) > 1e-6)
    throw MathError("initial state must have unit norm");
}

}  // namespace detail

// psi(t) = B diag(exp(-i lambda t)) B^{-1} psi0; no norm conservation.
inline WalkState evolve_nonunitary(const Hamiltonian& h, const WalkState& psi0, double t) {
  detail::require_unit(psi0.amplitudes);
  const Propagator prop = Propagator::nonunitary(h);
  return WalkState{prop.apply(psi0.amplitudes, t), psi0.time + t};
}

// psi(t) = exp(-i eta H eta^{-1} t) psi0; unit norm preserved within 1e-9.
inline WalkState evolve_eta(const Hamiltonian& h, const EtaDecomposition& ed,
                            const WalkState& psi0, double t) {
  detail::require_unit(psi0.amplitudes);
  const Propagator prop = Propagator::eta(h, ed);
  WalkState out{prop.apply(psi0.amplitudes, t), psi0.time + t};
  if (std::abs(out.amplitudes.norm() - 1.0) > 1e-9)
    throw MathError("eta-mode evolution failed to preserve the norm");
  return out;
}

// Samples t = 0, dt, ..., <= t_max. eta mode builds the metric internally.
inline Trajectory trajectory(const Hamiltonian& h, WalkMode mode,
                             const Eigen::VectorXcd& psi0, double t_max, double dt) {
  if (dt <= 0.0) throw UsageError("dt must be positive");
  if (t_max < dt) throw UsageError("t_max must be at least dt");
  detail::require_unit(psi0);

  std::optional<Propagator> prop;
  if (mode == WalkMode::eta) {
    const EtaDecomposition ed = build_eta(eigen_biorthonormal(h));
    prop = Propagator::eta(h, ed);
  } else {
    prop = Propagator::nonunitary(h);
  }

  const int samples = static_cast<int>(std::floor(t_max / dt + 1e-9)) + 1;
  const int n = static_cast<int>(psi0.size());
  Trajectory tr;
  tr.mode = mode;
  tr.times.resize(samples);
  tr.totals.resize(samples);
  tr.probabilities.resize(samples, n);
  for (int s = 0; s < samples; ++s) {
    const double t = s * dt;
    const Eigen::VectorXcd psi = prop->apply(psi0, t);
    tr.times[s] = t;
    for (int j = 0; j < n; ++j) tr.probabilities(s, j) = std::norm(psi(j));
    tr.totals[s] = tr.probabilities.row(s).sum();
  }
  return tr;
}

// H^(P) = P-fold Kronecker sum of H, plus an optional interaction. Without
// interaction the composite metric is eta^{(P)} = eta tensor ... tensor eta;
// with one, pseudo-Hermitian matrices are not closed under addition, so the
// composite is re-classified and its metric rebuilt from scratch.
inline MultiParticleSystem kronecker_sum(const Hamiltonian& h, int p,
                                         const Eigen::MatrixXd* gamma = nullptr) {
  if (p < 1) throw UsageError("particle count must be at least 1");
  const int n = static_cast<int>(h.matrix.rows());

  Eigen::MatrixXd hp = h.matrix;
  for (int k = 1; k < p; ++k) {
    const int dim = static_cast<int>(hp.rows());
    hp = (Eigen::kroneckerProduct(hp, Eigen::MatrixXd::Identity(n, n)) +
          Eigen::kroneckerProduct(Eigen::MatrixXd::Identity(dim, dim), h.matrix))
             .eval();
  }

  MultiParticleSystem sys;
  sys.particles = p;
  sys.base = h;

  if (gamma != nullptr) {
    if (gamma->rows() != hp.rows() || gamma->cols() != hp.cols())
      throw UsageError("interaction dimension must be n^p");
    hp += *gamma;
    sys.interaction = *gamma;
    sys.composite = Hamiltonian{hp, HamiltonianSource::kronecker_sum};
    const PHClassification c = classify(sys.composite);
    if (c.kind == PHKind::broken)
      throw MathError("interacting composite is not pseudo-Hermitian");
    sys.eta_p = build_eta(eigen_biorthonormal(sys.composite)).eta;
    return sys;
  }

  sys.composite = Hamiltonian{hp, HamiltonianSource::kronecker_sum};
  const PHClassification c = classify(h);
  if (c.kind != PHKind::broken) {
    const Eigen::MatrixXcd eta1 = build_eta(eigen_biorthonormal(h)).eta;
    Eigen::MatrixXcd etap = eta1;
    for (int k = 1; k < p; ++k) etap = Eigen::kroneckerProduct(etap, eta1).eval();
    sys.eta_p = etap;
  }
  return sys;
}

}  // namespace ptwalk

#endif  // PTWALK_WALK_HPP_
