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

#ifndef PTWALK_STATS_HPP_
#define PTWALK_STATS_HPP_

#include <Eigen/Dense>
#include <algorithm>
#include <array>
#include <atomic>
#include <cmath>
#include <mutex>
#include <numeric>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "ptwalk/centrality.hpp"
#include "ptwalk/errors.hpp"
#include "ptwalk/graph.hpp"
#include "ptwalk/randnet.hpp"
#include "ptwalk/spectral.hpp"

namespace ptwalk {

struct CorrelationResult {
  std::optional<double> value;  // empty when a side is entirely tied
  enum class Kind { kendall, vigna } kind = Kind::kendall;
  long long tie_pairs_x = 0;
  long long tie_pairs_y = 0;
};

namespace detail {

inline int sign_tol(double d) {
  if (std::abs(d) <= kRankTieTol) return 0;
  return d > 0.0 ? 1 : -1;
}

// Zero-based average ranks in descending score order, ties averaged.
inline std::vector<double> average_ranks_desc(const Eigen::VectorXd& x) {
  const int n = static_cast<int>(x.size());
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (x(a) != x(b)) return x(a) > x(b);
    return a < b;
  });
  std::vector<double> rank(n, 0.0);
  int i = 0;
  while (i < n) {
    int j = i + 1;
    while (j < n && std::abs(x(order[j]) - x(order[j - 1])) <= kRankTieTol) ++j;
    const double avg = (i + j - 1) / 2.0;
    for (int k = i; k < j; ++k) rank[order[k]] = avg;
    i = j;
  }
  return rank;
}

}  // namespace detail

// Tie-corrected tau_b: (concordant - discordant) over the geometric mean of
// tie-adjusted pair counts. Ties detected at 1e-9.
inline CorrelationResult kendall_tau(const Eigen::VectorXd& x, const Eigen::VectorXd& y) {
  const int n = static_cast<int>(x.size());
  if (n < 2 || y.size() != n) throw UsageError("kendall_tau needs two equal lists, length >= 2");
  long long conc = 0, disc = 0, tx = 0, ty = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const int sx = detail::sign_tol(x(j) - x(i));
      const int sy = detail::sign_tol(y(j) - y(i));
      if (sx == 0) ++tx;
      if (sy == 0) ++ty;
      if (sx != 0 && sy != 0) (sx == sy ? conc : disc)++;
    }
  const long long n0 = static_cast<long long>(n) * (n - 1) / 2;
  CorrelationResult r;
  r.kind = CorrelationResult::Kind::kendall;
  r.tie_pairs_x = tx;
  r.tie_pairs_y = ty;
  if (n0 - tx <= 0 || n0 - ty <= 0) return r;  // a side is all ties: undefined
  r.value = double(conc - disc) /
            std::sqrt(double(n0 - tx) * double(n0 - ty));
  return r;
}

// Vigna's weighted tau with additive hyperbolic weights. Each pair carries
// weight 1/(r(i)+1) + 1/(r(j)+1) under a ranking; the shipped form averages
// that weight over the two input rankings (average zero-based ranks for
// ties) and normalizes by the geometric mean of the per-list weighted
// totals over non-tied pairs. O(n^2) direct computation.
inline CorrelationResult vigna_tau(const Eigen::VectorXd& x, const Eigen::VectorXd& y) {
  const int n = static_cast<int>(x.size());
  if (n < 2 || y.size() != n) throw UsageError("vigna_tau needs two equal lists, length >= 2");
  const std::vector<double> rx = detail::average_ranks_desc(x);
  const std::vector<double> ry = detail::average_ranks_desc(y);
  double num = 0.0, wx = 0.0, wy = 0.0;
  long long tx = 0, ty = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const int sx = detail::sign_tol(x(i) - x(j));
      const int sy = detail::sign_tol(y(i) - y(j));
      if (sx == 0) ++tx;
      if (sy == 0) ++ty;
      const double wix = 1.0 / (rx[i] + 1.0) + 1.0 / (rx[j] + 1.0);
      const double wiy = 1.0 / (ry[i] + 1.0) + 1.0 / (ry[j] + 1.0);
      const double w = (wix + wiy) / 2.0;
      num += double(sx) * double(sy) * w;
      if (sx != 0) wx += w;
      if (sy != 0) wy += w;
    }
  CorrelationResult r;
  r.kind = CorrelationResult::Kind::vigna;
  r.tie_pairs_x = tx;
  r.tie_pairs_y = ty;
  if (wx <= 0.0 || wy <= 0.0) return r;
  r.value = num / std::sqrt(wx * wy);
  return r;
}

// The k highest-scoring vertices; boundary ties broken by ascending index.
inline std::vector<int> topk_vertices(const Eigen::VectorXd& x, int k) {
  const int n = static_cast<int>(x.size());
  if (k < 1 || k > n) throw UsageError("top-k size out of range");
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (x(a) != x(b)) return x(a) > x(b);
    return a < b;
  });
  order.resize(k);
  return order;
}

// |topk(x) intersect topk(y)| / k.
inline double jaccard_topk(const Eigen::VectorXd& x, const Eigen::VectorXd& y, int k) {
  const std::vector<int> tx = topk_vertices(x, k);
  std::vector<int> ty = topk_vertices(y, k);
  std::sort(ty.begin(), ty.end());
  int matches = 0;
  for (int v : tx)
    if (std::binary_search(ty.begin(), ty.end(), v)) ++matches;
  return double(matches) / k;
}

// 95% Agresti-Coull interval: z = 1.96, n~ = trials + z^2,
// p~ = (successes + z^2/2)/n~, p~ +- z sqrt(p~(1-p~)/n~), clamped to [0,1].
inline std::pair<double, double> agresti_coull(long long successes, long long trials) {
  if (trials < 1 || successes < 0 || successes > trials)
    throw UsageError("agresti_coull needs 0 <= successes <= trials, trials >= 1");
  const double z = 1.96;
  const double nt = double(trials) + z * z;
  const double pt = (double(successes) + z * z / 2.0) / nt;
  const double half = z * std::sqrt(pt * (1.0 - pt) / nt);
  return {std::max(0.0, pt - half), std::min(1.0, pt + half)};
}

enum class OrderBy { own, pagerank };

struct EnsembleOptions {
  std::vector<Method> methods{Method::pagerank, Method::ctqw, Method::eta_ctqw};
  int threads = 1;
  OrderBy order_by = OrderBy::own;
};

struct AgreementReport {
  int k = 0;
  std::vector<double> per_graph;  // match fraction per graph
  long long successes = 0;        // pooled matched vertices
  long long trials = 0;           // k * count
  double mean = 0.0;
  double low = 0.0;
  double high = 0.0;
};

struct PairStats {
  Method a = Method::pagerank;
  Method b = Method::eta_ctqw;
  std::optional<double> mean_vigna;
  std::vector<AgreementReport> agreement;  // k = 1..min(5, n)
};

struct MethodAggregate {
  Method method = Method::pagerank;
  Eigen::VectorXd position_mean;
  Eigen::VectorXd position_std;  // population standard deviation
};

struct EnsembleReport {
  RandomGraphSpec spec;
  int count = 0;
  std::vector<Method> methods;
  OrderBy order_by = OrderBy::own;
  std::vector<std::vector<CentralityScores>> per_graph;  // [graph][method index]
  std::vector<MethodAggregate> aggregates;
  std::vector<PairStats> pairs;
};

namespace detail {

struct GraphResult {
  std::vector<CentralityScores> scores;
  std::vector<int> pagerank_order;
};

inline GraphResult evaluate_graph(const RandomGraphSpec& spec_g,
                                  const std::vector<Method>& methods, bool want_pr_order) {
  const DirectedGraph g = generate(spec_g);
  const Hamiltonian h = hamiltonian(g);

  bool need_quantum = false;
  for (Method m : methods)
    if (m == Method::ctqw || m == Method::eta_ctqw) need_quantum = true;

  std::optional<SpectralData> sd;
  std::optional<EtaDecomposition> ed;
  if (need_quantum) {
    sd = eigen_biorthonormal(h);
  }

  GraphResult out;
  std::optional<CentralityScores> pr;
  for (Method m : methods) {
    switch (m) {
      case Method::pagerank:
        pr = pagerank(g);
        out.scores.push_back(*pr);
        break;
      case Method::eigenvector:
        out.scores.push_back(eigenvector_centrality(g));
        break;
      case Method::ctqw:
        out.scores.push_back(ctqw_centrality(h));
        break;
      case Method::eta_ctqw:
        if (!ed) ed = build_eta(*sd);
        out.scores.push_back(eta_ctqw_centrality(h, *ed));
        break;
    }
  }
  if (want_pr_order) {
    if (!pr) pr = pagerank(g);
    out.pagerank_order = pr->order;
  }
  return out;
}

}  // namespace detail

// Generates `count` graphs from per-graph seed streams, scores every
// requested method, and aggregates position-wise statistics, mean Vigna tau
// per method pair, and pooled top-k agreement with Agresti-Coull intervals.
// Results are bit-identical across runs and thread counts: per-graph streams
// depend only on (master seed, graph index) and merging follows index order.
inline EnsembleReport run_ensemble(const RandomGraphSpec& spec, int count,
                                   const EnsembleOptions& options = {}) {
  if (count < 1) throw UsageError("ensemble count must be positive");
  if (options.methods.empty()) throw UsageError("ensemble needs at least one method");
  validate(spec);

  const bool want_pr_order = options.order_by == OrderBy::pagerank;
  std::vector<detail::GraphResult> results(count);

  // A BudgetError already names the offending derived seed; any other math
  // failure gets the graph index and derived seed attached here.
  auto eval_one = [&](int g) {
    RandomGraphSpec sg = spec;
    sg.seed = derive_stream(spec.seed, g);
    try {
      results[g] = detail::evaluate_graph(sg, options.methods, want_pr_order);
    } catch (const BudgetError&) {
      throw;
    } catch (const MathError& e) {
      throw MathError("ensemble graph " + std::to_string(g) + " (derived seed " +
                      std::to_string(sg.seed) + "): " + e.what());
    }
  };

  const int threads = std::max(1, std::min(options.threads, count));
  if (threads == 1) {
    for (int g = 0; g < count; ++g) eval_one(g);
  } else {
    std::atomic<int> next{0};
    std::exception_ptr first_error;
    std::mutex error_mutex;
    auto worker = [&]() {
      for (;;) {
        const int g = next.fetch_add(1);
        if (g >= count) return;
        try {
          eval_one(g);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mutex);
          if (!first_error) first_error = std::current_exception();
          return;
        }
      }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    if (first_error) std::rethrow_exception(first_error);
  }

  EnsembleReport rep;
  rep.spec = spec;
  rep.count = count;
  rep.methods = options.methods;
  rep.order_by = options.order_by;
  rep.per_graph.reserve(count);
  for (auto& r : results) rep.per_graph.push_back(r.scores);

  const int n = spec.n;
  const int nm = static_cast<int>(options.methods.size());

  for (int mi = 0; mi < nm; ++mi) {
    Eigen::MatrixXd rows(count, n);
    for (int g = 0; g < count; ++g) {
      const Eigen::VectorXd& s = results[g].scores[mi].scores;
      if (options.order_by == OrderBy::own) {
        Eigen::VectorXd sorted = s;
        std::sort(sorted.data(), sorted.data() + n, std::greater<double>());
        rows.row(g) = sorted.transpose();
      } else {
        for (int p = 0; p < n; ++p) rows(g, p) = s(results[g].pagerank_order[p]);
      }
    }
    MethodAggregate agg;
    agg.method = options.methods[mi];
    agg.position_mean = rows.colwise().mean();
    Eigen::MatrixXd centered = rows.rowwise() - agg.position_mean.transpose();
    agg.position_std = (centered.array().square().colwise().sum() / count).sqrt();
    rep.aggregates.push_back(std::move(agg));
  }

  for (int a = 0; a < nm; ++a)
    for (int b = a + 1; b < nm; ++b) {
      PairStats ps;
      ps.a = options.methods[a];
      ps.b = options.methods[b];
      double vsum = 0.0;
      int vcount = 0;
      for (int g = 0; g < count; ++g) {
        const CorrelationResult cr =
            vigna_tau(results[g].scores[a].scores, results[g].scores[b].scores);
        if (cr.value) {
          vsum += *cr.value;
          ++vcount;
        }
      }
      if (vcount > 0) ps.mean_vigna = vsum / vcount;
      for (int k = 1; k <= std::min(5, n); ++k) {
        AgreementReport ar;
        ar.k = k;
        ar.trials = static_cast<long long>(k) * count;
        for (int g = 0; g < count; ++g) {
          const double frac =
              jaccard_topk(results[g].scores[a].scores, results[g].scores[b].scores, k);
          ar.per_graph.push_back(frac);
          ar.successes += std::llround(frac * k);
        }
        ar.mean = double(ar.successes) / double(ar.trials);
        std::tie(ar.low, ar.high) = agresti_coull(ar.successes, ar.trials);
        ps.agreement.push_back(std::move(ar));
      }
      rep.pairs.push_back(std::move(ps));
    }

  return rep;
}

}  // namespace ptwalk

#endif  // PTWALK_STATS_HPP_
