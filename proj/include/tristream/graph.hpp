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
#include <optional>
#include <span>
#include <vector>

#include "tristream/edge.hpp"

namespace tristream {

/// Immutable simple undirected graph in compressed sparse row form.
///
/// Vertices are kept sorted by id and addressed internally by their position
/// (the "index"). Because indices follow id order, every neighbor list is
/// sorted both by index and by id. Ids need not be contiguous.
class AdjacencyGraph {
 public:
  using Index = std::uint32_t;

  AdjacencyGraph() = default;

  /// Builds from distinct edges. Throws DuplicateEdgeError if an edge repeats.
  /// `extra_vertices` adds (possibly isolated) vertices.
  static AdjacencyGraph from_edges(std::span<const Edge> edges,
                                   std::span<const VertexId> extra_vertices = {});

  std::size_t vertex_count() const noexcept { return ids_.size(); }
  std::size_t edge_count() const noexcept { return adjacency_.size() / 2; }

  std::span<const VertexId> vertices() const noexcept { return ids_; }
  std::optional<Index> index_of(VertexId v) const;
  VertexId id_of(Index i) const { return ids_[i]; }

  std::span<const Index> neighbor_indices(Index i) const {
    return {adjacency_.data() + offsets_[i], adjacency_.data() + offsets_[i + 1]};
  }
  std::size_t degree_of_index(Index i) const { return offsets_[i + 1] - offsets_[i]; }

  std::vector<VertexId> neighbors(VertexId v) const;
  std::size_t degree(VertexId v) const;
  bool has_vertex(VertexId v) const { return index_of(v).has_value(); }
  bool has_edge(const Edge& e) const;

  /// Canonical edges in lexicographic order.
  std::vector<Edge> edges() const;

  /// One past the largest vertex id (0 for an empty graph).
  VertexId vertex_bound() const noexcept { return ids_.empty() ? 0 : ids_.back() + 1; }

 private:
  std::vector<VertexId> ids_;
  std::vector<std::size_t> offsets_{0};
  std::vector<Index> adjacency_;
};

/// Incremental construction; build() rejects duplicate edges.
class GraphBuilder {
 public:
  GraphBuilder& add_vertex(VertexId v);
  GraphBuilder& add_edge(const Edge& e);
  GraphBuilder& add_edge(VertexId a, VertexId b) { return add_edge(Edge(a, b)); }
  AdjacencyGraph build() const;

 private:
  std::vector<Edge> edges_;
  std::vector<VertexId> vertices_;
};

}  // namespace tristream
