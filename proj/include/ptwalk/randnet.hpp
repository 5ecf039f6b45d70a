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

#ifndef PTWALK_RANDNET_HPP_
#define PTWALK_RANDNET_HPP_

#include <Eigen/Dense>
#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "ptwalk/errors.hpp"
#include "ptwalk/graph.hpp"
#include "ptwalk/spectral.hpp"

namespace ptwalk {

enum class Family { er_bidir, er_dag, er_dag_plus_one, ba_in_regular, ba_out_regular };

inline const char* family_name(Family f) {
  switch (f) {
    case Family::er_bidir: return "er_bidir";
    case Family::er_dag: return "er_dag";
    case Family::er_dag_plus_one: return "er_dag_plus_one";
    case Family::ba_in_regular: return "ba_in_regular";
    case Family::ba_out_regular: return "ba_out_regular";
  }
  return "unknown";
}

inline Family family_from_string(const std::string& s) {
  if (s == "er_bidir") return Family::er_bidir;
  if (s == "er_dag") return Family::er_dag;
  if (s == "er_dag_plus_one") return Family::er_dag_plus_one;
  if (s == "ba_in_regular") return Family::ba_in_regular;
  if (s == "ba_out_regular") return Family::ba_out_regular;
  throw UsageError("unknown graph family: " + s);
}

struct RandomGraphSpec {
  Family family = Family::er_dag;
  int n = 0;
  double p = 0.0;       // ER edge probability
  int m = 0;            // BA edges per new vertex
  std::uint64_t seed = 0;
  int max_attempts = 10000;
};

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

// Stream seed for graph `index` under `master`. Decorrelates indices so the
// ensemble is reproducible independent of scheduling.
inline std::uint64_t derive_stream(std::uint64_t master, std::uint64_t index) {
  return splitmix64(master ^ splitmix64(index * 0x9E3779B97F4A7C15ULL + 0xD1B54A32D192ED03ULL));
}

// Deterministic across platforms: mt19937_64 single-value seeding is fully
// specified by the standard, and no std:: distributions are used.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  double uniform() { return (eng_() >> 11) * 0x1.0p-53; }

  bool bernoulli(double p) { return uniform() < p; }

  // Unbiased integer in [0, n) by rejection.
  std::uint64_t bounded(std::uint64_t n) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t x;
    do {
      x = eng_();
    } while (x >= limit);
    return x % n;
  }

 private:
  std::mt19937_64 eng_;
};

struct GenResult {
  DirectedGraph graph;
  int attempts = 0;
};

namespace detail {

// One unfiltered draw: every ordered pair (i, j), i != j, included with
// probability p, visited in row-major order.
inline Eigen::MatrixXd er_bidir_draw(Rng& rng, int n, double p) {
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && rng.bernoulli(p)) a(i, j) = 1.0;
  return a;
}

// Upper-triangularized undirected ER draw: each unordered pair {i, j}
// becomes edge i->j (i < j) with probability p.
inline Eigen::MatrixXd er_dag_draw(Rng& rng, int n, double p) {
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (rng.bernoulli(p)) a(i, j) = 1.0;
  return a;
}

inline bool acceptable(const Eigen::MatrixXd& a) {
  const PHClassification c = classify(Hamiltonian{
      (Eigen::MatrixXd(a.rowwise().sum().asDiagonal()) - a).transpose(),
      HamiltonianSource::directed_laplacian});
  return c.kind != PHKind::broken;
}

// Cheap reject for the bidirectional family: most draws fail on a complex
// spectrum, which an eigenvalues-only solve detects at a fraction of the
// cost of the full classification.
inline bool spectrum_real_quick(const Eigen::MatrixXd& a) {
  const Eigen::MatrixXd h =
      (Eigen::MatrixXd(a.rowwise().sum().asDiagonal()) - a).transpose();
  Eigen::EigenSolver<Eigen::MatrixXd> es(h, /*computeEigenvectors=*/false);
  if (es.info() != Eigen::Success) return false;
  const Eigen::VectorXcd lam = es.eigenvalues();
  double scale = 1.0, imag = 0.0;
  for (int k = 0; k < lam.size(); ++k) {
    scale = std::max(scale, std::abs(lam(k)));
    imag = std::max(imag, std::abs(lam(k).imag()));
  }
  return imag <= kImagTol * scale;
}

}  // namespace detail

inline GenResult gen_er_bidir(const RandomGraphSpec& spec) {
  Rng rng(spec.seed);
  for (int attempt = 1; attempt <= spec.max_attempts; ++attempt) {
    Eigen::MatrixXd a = detail::er_bidir_draw(rng, spec.n, spec.p);
    if ((a - a.transpose()).cwiseAbs().maxCoeff() == 0.0)
      return GenResult{from_adjacency(a), attempt};  // symmetric: Hermitian H
    if (!detail::spectrum_real_quick(a)) continue;
    if (detail::acceptable(a)) return GenResult{from_adjacency(a), attempt};
  }
  throw BudgetError(family_name(spec.family), spec.seed, spec.max_attempts);
}

inline GenResult gen_er_dag(const RandomGraphSpec& spec) {
  Rng rng(spec.seed);
  for (int attempt = 1; attempt <= spec.max_attempts; ++attempt) {
    Eigen::MatrixXd a = detail::er_dag_draw(rng, spec.n, spec.p);
    if (detail::acceptable(a)) return GenResult{from_adjacency(a), attempt};
  }
  throw BudgetError(family_name(spec.family), spec.seed, spec.max_attempts);
}

// Accepted DAG draw plus the reverse of one uniformly chosen edge, then
// re-filtered. The base must pass the diagonalizability filter on its own
// before the edge is added. Every raw draw consumes one attempt; zero-edge
// draws and re-filter failures restart from a fresh draw.
inline GenResult gen_er_dag_plus_one(const RandomGraphSpec& spec) {
  Rng rng(spec.seed);
  for (int attempt = 1; attempt <= spec.max_attempts; ++attempt) {
    Eigen::MatrixXd a = detail::er_dag_draw(rng, spec.n, spec.p);
    if (!detail::acceptable(a)) continue;
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < spec.n; ++i)
      for (int j = i + 1; j < spec.n; ++j)
        if (a(i, j) == 1.0) edges.emplace_back(i, j);
    if (edges.empty()) continue;
    const auto [s, t] = edges[rng.bounded(edges.size())];
    a(t, s) = 1.0;
    if (detail::acceptable(a)) return GenResult{from_adjacency(a), attempt};
  }
  throw BudgetError(family_name(spec.family), spec.seed, spec.max_attempts);
}

// Directed preferential attachment. Seed graph: m isolated vertices plus
// vertex m connected to all of them. Each newcomer v brings m edges to
// distinct existing targets drawn sequentially with probability
// proportional to total degree. ba_in_regular points every new edge into
// the newcomer (in-degree m everywhere past the seed block);
// ba_out_regular points them out of it. Accepted iff diagonalizable.
inline GenResult gen_ba_directed(const RandomGraphSpec& spec) {
  const bool inward = spec.family == Family::ba_in_regular;
  const int n = spec.n, m = spec.m;
  Rng rng(spec.seed);
  for (int attempt = 1; attempt <= spec.max_attempts; ++attempt) {
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
    std::vector<double> deg(n, 0.0);
    for (int t = 0; t < m; ++t) {
      if (inward) a(t, m) = 1.0; else a(m, t) = 1.0;
      deg[t] += 1.0;
      deg[m] += 1.0;
    }
    for (int v = m + 1; v < n; ++v) {
      std::vector<double> w(deg.begin(), deg.begin() + v);
      std::vector<int> chosen;
      for (int d = 0; d < m; ++d) {
        double total = 0.0;
        for (double x : w) total += x;
        const double x = rng.uniform() * total;
        double cum = 0.0;
        int pick = -1;
        for (int i = 0; i < v; ++i) {
          cum += w[i];
          if (w[i] > 0.0 && x < cum) {
            pick = i;
            break;
          }
        }
        if (pick < 0) {  // x landed on the rounding boundary; take the last candidate
          for (int i = v - 1; i >= 0; --i)
            if (w[i] > 0.0) {
              pick = i;
              break;
            }
        }
        chosen.push_back(pick);
        w[pick] = 0.0;
        if (inward) a(pick, v) = 1.0; else a(v, pick) = 1.0;
      }
      for (int t : chosen) deg[t] += 1.0;
      deg[v] += m;
    }
    if (detail::acceptable(a)) return GenResult{from_adjacency(a), attempt};
  }
  throw BudgetError(family_name(spec.family), spec.seed, spec.max_attempts);
}

inline void validate(const RandomGraphSpec& spec) {
  if (spec.n < 1) throw UsageError("graph size must be positive");
  if (spec.max_attempts < 1) throw UsageError("max_attempts must be positive");
  switch (spec.family) {
    case Family::er_bidir:
    case Family::er_dag:
    case Family::er_dag_plus_one:
      if (spec.p < 0.0 || spec.p > 1.0) throw UsageError("edge probability must be in [0,1]");
      break;
    case Family::ba_in_regular:
    case Family::ba_out_regular:
      if (spec.m < 1 || spec.m >= spec.n)
        throw UsageError("BA parameter m must satisfy 1 <= m < n");
      break;
  }
}

inline GenResult generate_with_attempts(const RandomGraphSpec& spec) {
  validate(spec);
  switch (spec.family) {
    case Family::er_bidir: return gen_er_bidir(spec);
    case Family::er_dag: return gen_er_dag(spec);
    case Family::er_dag_plus_one: return gen_er_dag_plus_one(spec);
    case Family::ba_in_regular:
    case Family::ba_out_regular: return gen_ba_directed(spec);
  }
  throw UsageError("unknown graph family");
}

inline DirectedGraph generate(const RandomGraphSpec& spec) {
  return generate_with_attempts(spec).graph;
}

}  // namespace ptwalk

#endif  // PTWALK_RANDNET_HPP_
