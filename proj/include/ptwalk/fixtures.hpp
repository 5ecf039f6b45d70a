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

#ifndef PTWALK_FIXTURES_HPP_
#define PTWALK_FIXTURES_HPP_

#include "ptwalk/graph.hpp"

namespace ptwalk {
namespace fixtures {

// Three vertices: 1 and 2 exchange edges, 3 feeds both. Pseudo-Hermitian
// with spectrum {0, 2, 2}.
inline DirectedGraph three_vertex() {
  return from_edge_list(3, {{1, 2}, {2, 1}, {3, 1}, {3, 2}});
}

// Four-vertex ring-like graph with out-degrees (1,2,1,2), in-degrees
// (2,1,2,1); pseudo-Hermitian with spectrum {0, 1, 2, 3}.
inline DirectedGraph four_vertex() {
  return from_edge_list(4, {{1, 2}, {2, 1}, {2, 3}, {3, 4}, {4, 1}, {4, 3}});
}

// The other degree-isomorphic candidate with the same spectrum and the same
// centrality profile as four_vertex.
inline DirectedGraph four_vertex_alt() {
  return from_edge_list(4, {{1, 4}, {2, 1}, {2, 3}, {3, 2}, {4, 1}, {4, 3}});
}

// Directed 3-cycle: the canonical broken case, complex spectrum.
inline DirectedGraph three_cycle() {
  return from_edge_list(3, {{1, 2}, {2, 3}, {3, 1}});
}

// Undirected path on n vertices (each edge in both directions): Hermitian.
inline DirectedGraph path_undirected(int n = 3) {
  std::vector<std::pair<int, int>> edges;
  for (int v = 1; v < n; ++v) {
    edges.emplace_back(v, v + 1);
    edges.emplace_back(v + 1, v);
  }
  return from_edge_list(n, edges);
}

}  // namespace fixtures
}  // namespace ptwalk

#endif  // PTWALK_FIXTURES_HPP_
