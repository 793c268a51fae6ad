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

#include <cstddef>
#include <cstdint>
#include <unordered_map>
#include <vector>

#include "tristream/edge.hpp"
#include "tristream/graph.hpp"
#include "tristream/random.hpp"
#include "tristream/stream.hpp"

namespace tristream {

/// The subgraph G' an estimator keeps in memory.
///
/// Two layouts answer the same queries. Dense is a bit matrix indexed by
/// vertex id, picked when ids are small and the matrix is not much larger than
/// the expected sample; common-neighbor counts are then word-wise popcounts.
/// Sparse keeps sorted neighbor vectors in a hash map. A dense graph that
/// receives an id beyond its bound converts itself to sparse.
class SampledGraph {
 public:
  enum class Layout { Dense, Sparse };

  SampledGraph(double p, VertexId vertex_bound, std::size_t expected_edges);

  static Layout choose_layout(VertexId vertex_bound, std::size_t expected_edges);

  /// Returns false if the edge was already present.
  bool insert(const Edge& e);
  bool contains(const Edge& e) const;

  /// Same value as count_new_triangles(to_graph(), e).
  std::uint64_t common_neighbors(const Edge& e) const;

  std::size_t sampled_count() const noexcept { return count_; }
  double p() const noexcept { return p_; }
  Layout layout() const noexcept { return layout_; }

  AdjacencyGraph to_graph() const;

 private:
  void convert_to_sparse();
  std::uint64_t* row(VertexId v) { return bits_.data() + v * words_; }
  const std::uint64_t* row(VertexId v) const { return bits_.data() + v * words_; }

  double p_;
  Layout layout_;
  std::size_t count_ = 0;

  VertexId bound_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;

  std::unordered_map<VertexId, std::vector<VertexId>> adjacency_;
};

/// First-pass sampling: keeps every stream edge independently with
/// probability p (0 < p <= 1). Throws std::invalid_argument otherwise.
SampledGraph sample_pass(const EdgeStream& stream, double p, Engine& rng, SpaceMeter& meter);

}  // namespace tristream
