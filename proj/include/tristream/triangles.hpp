// Copyright 2026 The tristream Authors.
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

#include <array>
#include <cstdint>
#include <vector>

#include "tristream/edge.hpp"
#include "tristream/graph.hpp"

namespace tristream {

/// Exact triangle count using degree-ordered forward adjacency, O(m^{3/2}).
std::uint64_t count_triangles_exact(const AdjacencyGraph& g);

/// Number of wedge steps the exact counter performs; used to budget oracle runs.
std::uint64_t exact_count_work(const AdjacencyGraph& g);

/// Every triangle as sorted vertex ids, in lexicographic order.
std::vector<std::array<VertexId, 3>> list_triangles(const AdjacencyGraph& g);

struct EdgeTriangleCount {
  Edge edge;
  std::uint64_t triangles;
};

struct TriangleStats {
  std::uint64_t t = 0;
  /// One entry per graph edge, sorted by edge.
  std::vector<EdgeTriangleCount> per_edge;
  /// Max triangles on a single edge.
  std::uint64_t J = 0;
  /// Max triangles on a single vertex.
  std::uint64_t K = 0;

  /// Triangles containing `e`; 0 if `e` is not an edge of the graph.
  std::uint64_t on_edge(const Edge& e) const;
};

TriangleStats triangle_stats(const AdjacencyGraph& g);

/// Heavy/light split at threshold 3*sqrt(t/epsilon). An edge is heavy iff it
/// lies in strictly more than `threshold` triangles.
struct EdgePartition {
  std::vector<Edge> heavy;
  std::vector<Edge> light;
  double threshold = 0.0;
  /// Triangles with at least two light edges.
  std::uint64_t triangles_with_two_light = 0;
};

/// Requires t(g) > 0 and 0 < epsilon < 1/2; throws std::invalid_argument otherwise.
EdgePartition classify_edges(const AdjacencyGraph& g, double epsilon);

/// Common neighbors of e's endpoints in `sampled`: the triangles e would close
/// with two edges of `sampled`. `e` itself need not be absent from `sampled`.
std::uint64_t count_new_triangles(const AdjacencyGraph& sampled, const Edge& e);

}  // namespace tristream
