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

#include "tristream/graph.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "tristream/edge_list_io.hpp"

namespace tristream {

AdjacencyGraph AdjacencyGraph::from_edges(std::span<const Edge> edges,
                                          std::span<const VertexId> extra_vertices) {
  std::vector<Edge> sorted(edges.begin(), edges.end());
  std::sort(sorted.begin(), sorted.end());
  if (auto dup = std::adjacent_find(sorted.begin(), sorted.end()); dup != sorted.end()) {
    throw DuplicateEdgeError(*dup);
  }

  AdjacencyGraph g;
  g.ids_.reserve(2 * sorted.size() + extra_vertices.size());
  for (const Edge& e : sorted) {
    g.ids_.push_back(e.u());
    g.ids_.push_back(e.v());
  }
  g.ids_.insert(g.ids_.end(), extra_vertices.begin(), extra_vertices.end());
  std::sort(g.ids_.begin(), g.ids_.end());
  g.ids_.erase(std::unique(g.ids_.begin(), g.ids_.end()), g.ids_.end());
  if (g.ids_.size() > std::numeric_limits<Index>::max()) {
    throw std::length_error("graph has too many vertices");
  }

  const std::size_t n = g.ids_.size();
  std::vector<Index> eu(sorted.size());
  std::vector<Index> ev(sorted.size());
  std::vector<std::size_t> degree(n, 0);
  for (std::size_t k = 0; k < sorted.size(); ++k) {
    eu[k] = *g.index_of(sorted[k].u());
    ev[k] = *g.index_of(sorted[k].v());
    ++degree[eu[k]];
    ++degree[ev[k]];
  }
  g.offsets_.assign(n + 1, 0);
  for (std::size_t i = 0; i < n; ++i) g.offsets_[i + 1] = g.offsets_[i] + degree[i];
  g.adjacency_.resize(g.offsets_[n]);
  std::vector<std::size_t> fill(g.offsets_.begin(), g.offsets_.end() - 1);
  for (std::size_t k = 0; k < sorted.size(); ++k) {
    g.adjacency_[fill[eu[k]]++] = ev[k];
    g.adjacency_[fill[ev[k]]++] = eu[k];
  }
  for (std::size_t i = 0; i < n; ++i) {
    std::sort(g.adjacency_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[i]),
              g.adjacency_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[i + 1]));
  }
  return g;
}

std::optional<AdjacencyGraph::Index> AdjacencyGraph::index_of(VertexId v) const {
  auto it = std::lower_bound(ids_.begin(), ids_.end(), v);
  if (it == ids_.end() || *it != v) return std::nullopt;
  return static_cast<Index>(it - ids_.begin());
}

std::vector<VertexId> AdjacencyGraph::neighbors(VertexId v) const {
  std::vector<VertexId> out;
  if (auto i = index_of(v)) {
    for (Index j : neighbor_indices(*i)) out.push_back(ids_[j]);
  }
  return out;
}

std::size_t AdjacencyGraph::degree(VertexId v) const {
  auto i = index_of(v);
  return i ? degree_of_index(*i) : 0;
}

bool AdjacencyGraph::has_edge(const Edge& e) const {
  auto a = index_of(e.u());
  auto b = index_of(e.v());
  if (!a || !b) return false;
  auto nbrs = degree_of_index(*a) <= degree_of_index(*b) ? neighbor_indices(*a) : neighbor_indices(*b);
  const Index target = degree_of_index(*a) <= degree_of_index(*b) ? *b : *a;
  return std::binary_search(nbrs.begin(), nbrs.end(), target);
}

std::vector<Edge> AdjacencyGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count());
  for (Index i = 0; i < ids_.size(); ++i) {
    for (Index j : neighbor_indices(i)) {
      if (i < j) out.emplace_back(ids_[i], ids_[j]);
    }
  }
  return out;
}

GraphBuilder& GraphBuilder::add_vertex(VertexId v) {
  vertices_.push_back(v);
  return *this;
}

GraphBuilder& GraphBuilder::add_edge(const Edge& e) {
  edges_.push_back(e);
  return *this;
}

AdjacencyGraph GraphBuilder::build() const { return AdjacencyGraph::from_edges(edges_, vertices_); }

}  // namespace tristream
