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

#include "ptwalk/fixtures.hpp"
#include "ptwalk/graph.hpp"
#include "ptwalk/randnet.hpp"

using namespace ptwalk;

namespace {

Eigen::MatrixXd mat3(std::initializer_list<double> v) {
  Eigen::MatrixXd m(3, 3);
  int i = 0;
  for (double x : v) m(i / 3, i % 3) = x, ++i;
  return m;
}

}  // namespace

TEST_CASE("from_edge_list builds the adjacency convention") {
  const DirectedGraph g = fixtures::three_vertex();
  Eigen::MatrixXd expect = mat3({0, 1, 0, 1, 0, 0, 1, 1, 0});
  REQUIRE((g.adjacency - expect).cwiseAbs().maxCoeff() == 0.0);
  REQUIRE(g.n == 3);
  REQUIRE(g.edges.size() == 4);
  REQUIRE(g.out_degree(2) == 2);  // vertex 3 is a pure source
  REQUIRE(g.in_degree(2) == 0);
}

TEST_CASE("from_edge_list: empty graph") {
  const DirectedGraph g = from_edge_list(2, {});
  REQUIRE(g.adjacency.cwiseAbs().maxCoeff() == 0.0);
  REQUIRE(hamiltonian(g).matrix.cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("from_edge_list rejects bad input") {
  REQUIRE_THROWS_AS(from_edge_list(3, {{1, 1}}), UsageError);
  REQUIRE_THROWS_AS(from_edge_list(3, {{1, 2}, {1, 2}}), UsageError);
  REQUIRE_THROWS_AS(from_edge_list(3, {{1, 4}}), UsageError);
  REQUIRE_THROWS_AS(from_edge_list(0, {}), UsageError);
}

TEST_CASE("hamiltonian: diagonal out-degrees, off-diagonal -A'") {
  const Hamiltonian h = hamiltonian(fixtures::three_vertex());
  Eigen::MatrixXd expect = mat3({1, -1, -1, -1, 1, -1, 0, 0, 2});
  REQUIRE((h.matrix - expect).cwiseAbs().maxCoeff() == 0.0);
  REQUIRE(h.source == HamiltonianSource::directed_laplacian);
}

TEST_CASE("hamiltonian: bidirectional pair is symmetric") {
  const DirectedGraph g = from_edge_list(2, {{1, 2}, {2, 1}});
  Eigen::MatrixXd expect(2, 2);
  expect << 1, -1, -1, 1;
  REQUIRE((hamiltonian(g).matrix - expect).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("hamiltonian structure holds on random graphs") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    RandomGraphSpec spec;
    spec.family = Family::er_bidir;
    spec.n = 9;
    spec.p = 0.35;
    spec.seed = seed;
    spec.max_attempts = 100000;
    const DirectedGraph g = generate(spec);
    const Eigen::MatrixXd h = hamiltonian(g).matrix;
    for (int i = 0; i < g.n; ++i) {
      REQUIRE(h(i, i) == double(g.out_degree(i)));
      for (int j = 0; j < g.n; ++j)
        if (i != j) REQUIRE(h(i, j) == -g.adjacency(j, i));
    }
  }
}

TEST_CASE("is_acyclic") {
  REQUIRE(is_acyclic(from_edge_list(3, {{1, 2}, {1, 3}, {2, 3}})));
  REQUIRE_FALSE(is_acyclic(fixtures::three_cycle()));
  REQUIRE_FALSE(is_acyclic(fixtures::three_vertex()));  // 1 <-> 2
}

TEST_CASE("complete_incidence columns") {
  const OrientedIncidence inc = complete_incidence(3);
  REQUIRE(inc.matrix.rows() == 3);
  REQUIRE(inc.matrix.cols() == 6);  // n(n+1)/2
  for (int e = 0; e < 6; ++e) {
    auto [i, j] = inc.edge_order[e];
    if (i == j) {
      REQUIRE(inc.matrix.col(e).cwiseAbs().sum() == 2.0);
      REQUIRE(inc.matrix(i, e) == 2.0);
    } else {
      REQUIRE(inc.matrix.col(e).sum() == 0.0);
      REQUIRE(inc.matrix.col(e).cwiseAbs().sum() == 2.0);
    }
  }
}

TEST_CASE("weighted_laplacian: single edge and single self-loop") {
  OrientedIncidence edge;
  edge.matrix = Eigen::MatrixXd(2, 1);
  edge.matrix << 1, -1;
  edge.edge_order = {{0, 1}};
  Eigen::VectorXd w1(1);
  w1 << 1.0;
  Eigen::MatrixXd l = weighted_laplacian(edge, w1);
  REQUIRE(l(0, 0) == 1.0);
  REQUIRE(l(0, 1) == -1.0);

  OrientedIncidence loop;
  loop.matrix = Eigen::MatrixXd(1, 1);
  loop.matrix << 2;
  loop.edge_order = {{0, 0}};
  Eigen::VectorXd w(1);
  w << 0.7;
  REQUIRE(weighted_laplacian(loop, w)(0, 0) == Catch::Approx(4 * 0.7));

  REQUIRE_THROWS_AS(weighted_laplacian(loop, w1.replicate(2, 1)), UsageError);
}

TEST_CASE("weighted_laplacian equals the direct formula on complete graphs") {
  Rng rng(7);
  for (int trial = 0; trial < 10; ++trial) {
    const int n = 3 + int(rng.bounded(4));
    WeightedGraph wg;
    wg.n = n;
    wg.weights = Eigen::MatrixXd(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j)
        wg.weights(i, j) = wg.weights(j, i) = rng.uniform() * 2.0 - 1.0;
    const Eigen::MatrixXd via_incidence =
        weighted_laplacian(complete_incidence(n), edge_weights(wg));
    const Eigen::MatrixXd direct = complete_laplacian_direct(wg);
    REQUIRE((via_incidence - direct).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("complete_laplacian_direct known values") {
  WeightedGraph unit;
  unit.n = 3;
  unit.weights = Eigen::MatrixXd::Identity(3, 3);
  REQUIRE((complete_laplacian_direct(unit) - 4.0 * Eigen::MatrixXd::Identity(3, 3))
              .cwiseAbs()
              .maxCoeff() == 0.0);

  WeightedGraph k3;
  k3.n = 3;
  k3.weights = Eigen::MatrixXd::Ones(3, 3) - Eigen::MatrixXd::Identity(3, 3);
  Eigen::MatrixXd expect = mat3({2, -1, -1, -1, 2, -1, -1, -1, 2});
  REQUIRE((complete_laplacian_direct(k3) - expect).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("weights_from_hermitized on the worked hermitized matrix") {
  Eigen::MatrixXd ht = mat3({10, -8, -4, -8, 10, -4, -4, -4, 16}) / 9.0;
  const WeightedGraph wg = weights_from_hermitized({ht, HamiltonianSource::hermitized});
  REQUIRE(wg.weights(0, 1) == Catch::Approx(8.0 / 9.0).margin(1e-14));
  REQUIRE(wg.weights(0, 2) == Catch::Approx(4.0 / 9.0).margin(1e-14));
  REQUIRE(wg.weights(1, 2) == Catch::Approx(4.0 / 9.0).margin(1e-14));
  REQUIRE(wg.weights(0, 0) == Catch::Approx(-1.0 / 18.0).margin(1e-14));
  REQUIRE(wg.weights(1, 1) == Catch::Approx(-1.0 / 18.0).margin(1e-14));
  REQUIRE(wg.weights(2, 2) == Catch::Approx(2.0 / 9.0).margin(1e-14));
  REQUIRE((complete_laplacian_direct(wg) - ht).cwiseAbs().maxCoeff() < 1e-10);
}

TEST_CASE("weights_from_hermitized trivial cases") {
  Eigen::MatrixXd one(1, 1);
  one << 4.0;
  REQUIRE(weights_from_hermitized({one, HamiltonianSource::hermitized}).weights(0, 0) ==
          Catch::Approx(1.0));

  Eigen::MatrixXd k3 = mat3({2, -1, -1, -1, 2, -1, -1, -1, 2});
  const WeightedGraph wg = weights_from_hermitized({k3, HamiltonianSource::hermitized});
  REQUIRE(wg.weights(0, 0) == Catch::Approx(0.0).margin(1e-14));
  REQUIRE(wg.weights(0, 1) == Catch::Approx(1.0));

  Eigen::MatrixXd asym = mat3({1, 2, 0, 0, 1, 0, 0, 0, 1});
  REQUIRE_THROWS_AS(weights_from_hermitized({asym, HamiltonianSource::hermitized}),
                    MathError);
}

TEST_CASE("mapping round-trip closes for arbitrary symmetric input") {
  Rng rng(13);
  for (int trial = 0; trial < 25; ++trial) {
    const int n = 2 + int(rng.bounded(6));
    Eigen::MatrixXd s(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) s(i, j) = s(j, i) = rng.uniform() * 4.0 - 2.0;
    const WeightedGraph wg = weights_from_hermitized({s, HamiltonianSource::hermitized});
    REQUIRE((complete_laplacian_direct(wg) - s).cwiseAbs().maxCoeff() < 1e-10);
  }
}

TEST_CASE("build_interdependent block structure") {
  Eigen::MatrixXd z1 = Eigen::MatrixXd::Zero(1, 1);
  Eigen::MatrixXd b(1, 1);
  b << 1;
  const Hamiltonian h = build_interdependent({z1, z1, b});
  Eigen::MatrixXd expect(2, 2);
  expect << 1, -1, -1, 1;
  REQUIRE((h.matrix - expect).cwiseAbs().maxCoeff() == 0.0);
  REQUIRE(h.source == HamiltonianSource::interdependent);

  const Eigen::MatrixXd hg = hamiltonian(fixtures::three_vertex()).matrix;
  const Hamiltonian twin =
      build_interdependent({hg, hg, Eigen::MatrixXd::Identity(3, 3)});
  REQUIRE(twin.matrix.rows() == 6);
  REQUIRE((twin.matrix.topLeftCorner(3, 3) - hg -
           Eigen::MatrixXd::Identity(3, 3)).cwiseAbs().maxCoeff() == 0.0);
  REQUIRE((twin.matrix.topRightCorner(3, 3) +
           Eigen::MatrixXd::Identity(3, 3)).cwiseAbs().maxCoeff() == 0.0);

  // 4-vertex against 3-vertex with complete interconnection
  Eigen::MatrixXd h4 = Eigen::MatrixXd::Zero(4, 4);
  const Hamiltonian mixed =
      build_interdependent({h4, hg, Eigen::MatrixXd::Ones(4, 3)});
  REQUIRE(mixed.matrix.rows() == 7);
  REQUIRE(mixed.matrix(0, 0) == 3.0);   // row sum of B0
  REQUIRE(mixed.matrix(4, 4) == hg(0, 0) + 4.0);  // column sum of B0

  // zero interconnection keeps the blocks untouched
  const Hamiltonian zero =
      build_interdependent({hg, hg, Eigen::MatrixXd::Zero(3, 3)});
  REQUIRE((zero.matrix.topLeftCorner(3, 3) - hg).cwiseAbs().maxCoeff() == 0.0);
  REQUIRE(zero.matrix.topRightCorner(3, 3).cwiseAbs().maxCoeff() == 0.0);

  REQUIRE_THROWS_AS(build_interdependent({hg, hg, Eigen::MatrixXd::Ones(2, 3)}),
                    UsageError);
}
