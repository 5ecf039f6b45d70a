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

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <optional>
#include <vector>

#include "ptwalk/randnet.hpp"
#include "ptwalk/stats.hpp"

using namespace ptwalk;
using Catch::Approx;

namespace {

Eigen::VectorXd vec(std::initializer_list<double> xs) {
  Eigen::VectorXd v(static_cast<int>(xs.size()));
  int i = 0;
  for (double x : xs) v(i++) = x;
  return v;
}

// Independent reference for the weighted tau: ranks by direct counting
// instead of sorting, then the definition verbatim. Valid on well-separated
// values (integer grids), where tolerance chaining cannot occur.
std::optional<double> oracle_vigna(const Eigen::VectorXd& x, const Eigen::VectorXd& y) {
  const int n = static_cast<int>(x.size());
  auto ranks = [n](const Eigen::VectorXd& v) {
    std::vector<double> r(n);
    for (int i = 0; i < n; ++i) {
      int greater = 0, tied = 0;
      for (int j = 0; j < n; ++j) {
        if (j == i) continue;
        if (v(j) > v(i) + kRankTieTol) ++greater;
        else if (std::abs(v(j) - v(i)) <= kRankTieTol) ++tied;
      }
      r[i] = greater + tied / 2.0;
    }
    return r;
  };
  const std::vector<double> rx = ranks(x), ry = ranks(y);
  auto sgn = [](double d) { return std::abs(d) <= kRankTieTol ? 0 : (d > 0 ? 1 : -1); };
  double num = 0.0, wx = 0.0, wy = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const double w = (1.0 / (rx[i] + 1.0) + 1.0 / (rx[j] + 1.0) +
                        1.0 / (ry[i] + 1.0) + 1.0 / (ry[j] + 1.0)) / 2.0;
      const int sx = sgn(x(i) - x(j));
      const int sy = sgn(y(i) - y(j));
      num += sx * sy * w;
      if (sx != 0) wx += w;
      if (sy != 0) wy += w;
    }
  if (wx <= 0.0 || wy <= 0.0) return std::nullopt;
  return num / std::sqrt(wx * wy);
}

void require_same(const std::optional<double>& got, const std::optional<double>& want) {
  REQUIRE(got.has_value() == want.has_value());
  if (got) REQUIRE(*got == Approx(*want).margin(1e-12));
}

}  // namespace

TEST_CASE("kendall tau reference values") {
  const Eigen::VectorXd a = vec({4, 3, 2, 1});
  Eigen::VectorXd rev = a.reverse();
  REQUIRE(*kendall_tau(a, a).value == Approx(1.0).margin(1e-15));
  REQUIRE(*kendall_tau(a, rev).value == Approx(-1.0).margin(1e-15));

  // one discordant pair out of six
  REQUIRE(*kendall_tau(vec({1, 2, 3, 4}), vec({1, 2, 4, 3})).value ==
          Approx(2.0 / 3.0).margin(1e-15));

  // tie-corrected: matching tie patterns still give full correlation
  const CorrelationResult tied = kendall_tau(vec({2, 1, 1}), vec({5, 0, 0}));
  REQUIRE(tied.tie_pairs_x == 1);
  REQUIRE(tied.tie_pairs_y == 1);
  REQUIRE(*tied.value == Approx(1.0).margin(1e-15));

  const CorrelationResult flat = kendall_tau(vec({1, 1, 1}), vec({1, 2, 3}));
  REQUIRE_FALSE(flat.value.has_value());
  REQUIRE(flat.tie_pairs_x == 3);

  REQUIRE_THROWS_AS(kendall_tau(vec({1}), vec({1})), UsageError);
  REQUIRE_THROWS_AS(kendall_tau(vec({1, 2}), vec({1, 2, 3})), UsageError);
}

TEST_CASE("weighted tau reference values") {
  const Eigen::VectorXd a = vec({4, 3, 2, 1});
  Eigen::VectorXd rev = a.reverse();
  REQUIRE(*vigna_tau(a, a).value == Approx(1.0).margin(1e-15));
  REQUIRE(*vigna_tau(a, rev).value == Approx(-1.0).margin(1e-15));
  REQUIRE(vigna_tau(a, a).kind == CorrelationResult::Kind::vigna);

  const CorrelationResult flat = vigna_tau(vec({1, 1, 1}), vec({1, 2, 3}));
  REQUIRE_FALSE(flat.value.has_value());

  // top-weighted: a swap at the head moves tau further from 1 than one at
  // the tail
  const double head = *vigna_tau(vec({4, 3, 2, 1}), vec({3, 4, 2, 1})).value;
  const double tail = *vigna_tau(vec({4, 3, 2, 1}), vec({4, 3, 1, 2})).value;
  REQUIRE(head < tail);

  REQUIRE_THROWS_AS(vigna_tau(vec({1}), vec({1})), UsageError);
}

TEST_CASE("weighted tau matches the counting oracle exhaustively") {
  // every pair of lists over {0,1,2,3}^n for n = 2, 3
  for (int n = 2; n <= 3; ++n) {
    const int total = static_cast<int>(std::pow(4, n));
    for (int cx = 0; cx < total; ++cx)
      for (int cy = 0; cy < total; ++cy) {
        Eigen::VectorXd x(n), y(n);
        int ax = cx, ay = cy;
        for (int i = 0; i < n; ++i) {
          x(i) = ax % 4;
          y(i) = ay % 4;
          ax /= 4;
          ay /= 4;
        }
        require_same(vigna_tau(x, y).value, oracle_vigna(x, y));
      }
  }
}

TEST_CASE("weighted tau matches the counting oracle on sampled ties") {
  Rng rng(20260816);
  for (int n = 4; n <= 8; ++n) {
    for (int trial = 0; trial < 400; ++trial) {
      Eigen::VectorXd x(n), y(n);
      for (int i = 0; i < n; ++i) {
        x(i) = double(rng.bounded(4));  // dense ties
        y(i) = double(rng.bounded(4));
      }
      require_same(vigna_tau(x, y).value, oracle_vigna(x, y));
    }
    for (int trial = 0; trial < 100; ++trial) {
      Eigen::VectorXd x(n), y(n);
      for (int i = 0; i < n; ++i) {
        x(i) = rng.uniform();  // continuous: no ties
        y(i) = rng.uniform();
      }
      require_same(vigna_tau(x, y).value, oracle_vigna(x, y));
    }
  }
}

TEST_CASE("rank correlations are invariant under monotone transforms") {
  const Eigen::VectorXd x = vec({5, 1, 3, 3, 0, 2});
  const Eigen::VectorXd y = vec({2, 2, 4, 1, 0, 5});
  Eigen::VectorXd xt(6), yt(6);
  for (int i = 0; i < 6; ++i) {
    xt(i) = std::exp(x(i));
    yt(i) = 3.0 * y(i) + 2.0;
  }
  REQUIRE(*kendall_tau(xt, yt).value == Approx(*kendall_tau(x, y).value).margin(1e-12));
  REQUIRE(*vigna_tau(xt, yt).value == Approx(*vigna_tau(x, y).value).margin(1e-12));
}

TEST_CASE("top-k selection and overlap") {
  const Eigen::VectorXd x = vec({5, 4, 3, 2});
  REQUIRE(topk_vertices(x, 2) == std::vector<int>{0, 1});
  REQUIRE_THROWS_AS(topk_vertices(x, 0), UsageError);
  REQUIRE_THROWS_AS(topk_vertices(x, 5), UsageError);

  // exact boundary ties resolve by index, deterministically
  const Eigen::VectorXd tied = vec({1, 1, 1, 0});
  REQUIRE(topk_vertices(tied, 2) == std::vector<int>{0, 1});

  REQUIRE(jaccard_topk(x, x, 3) == 1.0);
  REQUIRE(jaccard_topk(vec({5, 4, 0, 0}), vec({0, 0, 4, 5}), 2) == 0.0);
  REQUIRE(jaccard_topk(vec({5, 4, 0, 0}), vec({5, 0, 4, 0}), 2) == 0.5);
  REQUIRE(jaccard_topk(tied, tied, 2) == 1.0);
}

TEST_CASE("binomial interval reference values") {
  const auto [lo, hi] = agresti_coull(78, 100);
  REQUIRE(lo == Approx(0.688654180871291).margin(1e-12));
  REQUIRE(hi == Approx(0.850628726942148).margin(1e-12));

  // matches the definition evaluated independently
  const double z = 1.96;
  const double nt = 100.0 + z * z;
  const double pt = (78.0 + z * z / 2.0) / nt;
  REQUIRE(pt == Approx(0.769641453906719).margin(1e-12));
  const double half = z * std::sqrt(pt * (1.0 - pt) / nt);
  REQUIRE(lo == Approx(pt - half).margin(1e-15));
  REQUIRE(hi == Approx(pt + half).margin(1e-15));

  // clamped at the boundaries
  const auto [zlo, zhi] = agresti_coull(0, 10);
  REQUIRE(zlo == 0.0);
  REQUIRE(zhi == Approx(0.320895436202751).margin(1e-12));
  const auto [flo, fhi] = agresti_coull(10, 10);
  REQUIRE(flo == Approx(0.679104563797249).margin(1e-12));
  REQUIRE(fhi == 1.0);

  REQUIRE_THROWS_AS(agresti_coull(1, 0), UsageError);
  REQUIRE_THROWS_AS(agresti_coull(-1, 10), UsageError);
  REQUIRE_THROWS_AS(agresti_coull(11, 10), UsageError);
}

TEST_CASE("ensemble runs are reproducible across thread counts") {
  RandomGraphSpec spec;
  spec.family = Family::er_bidir;
  spec.n = 8;
  spec.p = 0.25;
  spec.seed = 7;
  spec.max_attempts = 500000;

  EnsembleOptions opt;
  opt.methods = {Method::pagerank, Method::eta_ctqw};

  opt.threads = 1;
  const EnsembleReport r1 = run_ensemble(spec, 8, opt);
  const EnsembleReport r2 = run_ensemble(spec, 8, opt);
  opt.threads = 4;
  const EnsembleReport r4 = run_ensemble(spec, 8, opt);

  REQUIRE(r1.count == 8);
  REQUIRE(r1.per_graph.size() == 8);
  for (const EnsembleReport* other : {&r2, &r4}) {
    for (int g = 0; g < 8; ++g)
      for (std::size_t mi = 0; mi < r1.methods.size(); ++mi)
        REQUIRE((r1.per_graph[g][mi].scores - other->per_graph[g][mi].scores)
                    .cwiseAbs()
                    .maxCoeff() == 0.0);
    for (std::size_t mi = 0; mi < r1.aggregates.size(); ++mi) {
      REQUIRE((r1.aggregates[mi].position_mean - other->aggregates[mi].position_mean)
                  .cwiseAbs()
                  .maxCoeff() == 0.0);
      REQUIRE((r1.aggregates[mi].position_std - other->aggregates[mi].position_std)
                  .cwiseAbs()
                  .maxCoeff() == 0.0);
    }
    REQUIRE(r1.pairs.size() == other->pairs.size());
    for (std::size_t pi = 0; pi < r1.pairs.size(); ++pi) {
      require_same(r1.pairs[pi].mean_vigna, other->pairs[pi].mean_vigna);
      for (std::size_t ki = 0; ki < r1.pairs[pi].agreement.size(); ++ki) {
        REQUIRE(r1.pairs[pi].agreement[ki].successes ==
                other->pairs[pi].agreement[ki].successes);
      }
    }
  }
}

TEST_CASE("ensemble agreement bookkeeping is self-consistent") {
  RandomGraphSpec spec;
  spec.family = Family::er_dag;
  spec.n = 10;
  spec.p = 0.3;
  spec.seed = 3;
  spec.max_attempts = 200000;

  EnsembleOptions opt;
  opt.methods = {Method::pagerank, Method::eta_ctqw};
  const EnsembleReport rep = run_ensemble(spec, 6, opt);

  REQUIRE(rep.pairs.size() == 1);
  const PairStats& ps = rep.pairs[0];
  REQUIRE(ps.agreement.size() == 5);
  for (const AgreementReport& ar : ps.agreement) {
    REQUIRE(ar.trials == static_cast<long long>(ar.k) * 6);
    long long successes = 0;
    for (double frac : ar.per_graph) successes += std::llround(frac * ar.k);
    REQUIRE(ar.successes == successes);
    REQUIRE(ar.mean == Approx(double(ar.successes) / double(ar.trials)).margin(1e-15));
    const auto [lo, hi] = agresti_coull(ar.successes, ar.trials);
    REQUIRE(ar.low == Approx(lo).margin(1e-15));
    REQUIRE(ar.high == Approx(hi).margin(1e-15));
  }
}

TEST_CASE("ensemble aggregates sort positions per method or by pagerank") {
  RandomGraphSpec spec;
  spec.family = Family::er_dag;
  spec.n = 8;
  spec.p = 0.3;
  spec.seed = 5;
  spec.max_attempts = 200000;

  EnsembleOptions own;
  own.methods = {Method::pagerank, Method::eta_ctqw};
  const EnsembleReport ro = run_ensemble(spec, 5, own);

  EnsembleOptions by_pr = own;
  by_pr.order_by = OrderBy::pagerank;
  const EnsembleReport rp = run_ensemble(spec, 5, by_pr);

  // own-order rows are descending, so the position means are too
  for (const MethodAggregate& agg : ro.aggregates)
    for (int pos = 1; pos < 8; ++pos)
      REQUIRE(agg.position_mean(pos - 1) >= agg.position_mean(pos) - 1e-12);

  // ordering by pagerank leaves the pagerank aggregate itself unchanged
  REQUIRE((ro.aggregates[0].position_mean - rp.aggregates[0].position_mean)
              .cwiseAbs()
              .maxCoeff() < 1e-15);

  // single-graph ensembles have zero spread
  const EnsembleReport r1 = run_ensemble(spec, 1, own);
  for (const MethodAggregate& agg : r1.aggregates)
    REQUIRE(agg.position_std.cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("ensemble input validation and failure reporting") {
  RandomGraphSpec spec;
  spec.family = Family::er_bidir;
  spec.n = 8;
  spec.p = 0.25;
  spec.seed = 7;
  spec.max_attempts = 500000;

  REQUIRE_THROWS_AS(run_ensemble(spec, 0), UsageError);
  EnsembleOptions no_methods;
  no_methods.methods.clear();
  REQUIRE_THROWS_AS(run_ensemble(spec, 2, no_methods), UsageError);

  // a hopeless budget surfaces as the generator's failure, seed included
  spec.n = 14;
  spec.p = 0.3;
  spec.max_attempts = 1;
  try {
    run_ensemble(spec, 2, EnsembleOptions{});
    FAIL("expected BudgetError");
  } catch (const BudgetError& e) {
    REQUIRE(e.attempts() == 1);
    REQUIRE(std::string(e.what()).find("seed=") != std::string::npos);
  }
}
