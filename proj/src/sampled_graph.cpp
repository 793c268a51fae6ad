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

#include "tristream/sampled_graph.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace tristream {

namespace {

constexpr VertexId kMaxDenseBound = 8192;
constexpr std::size_t kDenseFloorBytes = std::size_t{1} << 20;

std::size_t words_for(VertexId bound) { return static_cast<std::size_t>((bound + 63) / 64); }

std::uint64_t merge_count(const std::vector<VertexId>& a, const std::vector<VertexId>& b) {
  std::uint64_t common = 0;
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      ++common;
      ++i;
      ++j;
    }
  }
  return common;
}

bool sorted_insert(std::vector<VertexId>& list, VertexId x) {
  auto it = std::lower_bound(list.begin(), list.end(), x);
  if (it != list.end() && *it == x) return false;
  list.insert(it, x);
  return true;
}

}  // namespace

SampledGraph::Layout SampledGraph::choose_layout(VertexId vertex_bound, std::size_t expected_edges) {
  if (vertex_bound == 0 || vertex_bound > kMaxDenseBound) return Layout::Sparse;
  const std::size_t matrix_bytes = static_cast<std::size_t>(vertex_bound) * words_for(vertex_bound) * 8;
  const std::size_t budget = std::max(kDenseFloorBytes, 64 * expected_edges);
  return matrix_bytes <= budget ? Layout::Dense : Layout::Sparse;
}

SampledGraph::SampledGraph(double p, VertexId vertex_bound, std::size_t expected_edges)
    : p_(p), layout_(choose_layout(vertex_bound, expected_edges)) {
  if (layout_ == Layout::Dense) {
    bound_ = vertex_bound;
    words_ = words_for(vertex_bound);
    bits_.assign(static_cast<std::size_t>(bound_) * words_, 0);
  }
}

void SampledGraph::convert_to_sparse() {
  for (VertexId a = 0; a < bound_; ++a) {
    const std::uint64_t* r = row(a);
    for (std::size_t w = 0; w < words_; ++w) {
      for (std::uint64_t bits = r[w]; bits != 0; bits &= bits - 1) {
        adjacency_[a].push_back(w * 64 + static_cast<VertexId>(std::countr_zero(bits)));
      }
    }
  }
  bits_.clear();
  bits_.shrink_to_fit();
  bound_ = 0;
  words_ = 0;
  layout_ = Layout::Sparse;
}

bool SampledGraph::insert(const Edge& e) {
  if (layout_ == Layout::Dense && e.v() >= bound_) convert_to_sparse();
  if (layout_ == Layout::Dense) {
    std::uint64_t& word = row(e.u())[e.v() / 64];
    const std::uint64_t mask = std::uint64_t{1} << (e.v() % 64);
    if (word & mask) return false;
    word |= mask;
    row(e.v())[e.u() / 64] |= std::uint64_t{1} << (e.u() % 64);
  } else {
    if (!sorted_insert(adjacency_[e.u()], e.v())) return false;
    sorted_insert(adjacency_[e.v()], e.u());
  }
  ++count_;
  return true;
}

bool SampledGraph::contains(const Edge& e) const {
  if (layout_ == Layout::Dense) {
    if (e.v() >= bound_) return false;
    return (row(e.u())[e.v() / 64] >> (e.v() % 64)) & 1U;
  }
  auto it = adjacency_.find(e.u());
  return it != adjacency_.end() && std::binary_search(it->second.begin(), it->second.end(), e.v());
}

std::uint64_t SampledGraph::common_neighbors(const Edge& e) const {
  if (layout_ == Layout::Dense) {
    if (e.v() >= bound_) return 0;
    const std::uint64_t* a = row(e.u());
    const std::uint64_t* b = row(e.v());
    std::uint64_t common = 0;
    for (std::size_t w = 0; w < words_; ++w) common += static_cast<std::uint64_t>(std::popcount(a[w] & b[w]));
    return common;
  }
  auto a = adjacency_.find(e.u());
  auto b = adjacency_.find(e.v());
  if (a == adjacency_.end() || b == adjacency_.end()) return 0;
  return merge_count(a->second, b->second);
}

AdjacencyGraph SampledGraph::to_graph() const {
  std::vector<Edge> edges;
  edges.reserve(count_);
  if (layout_ == Layout::Dense) {
    for (VertexId a = 0; a < bound_; ++a) {
      const std::uint64_t* r = row(a);
      for (std::size_t w = 0; w < words_; ++w) {
        for (std::uint64_t bits = r[w]; bits != 0; bits &= bits - 1) {
          const VertexId b = w * 64 + static_cast<VertexId>(std::countr_zero(bits));
          if (a < b) edges.emplace_back(a, b);
        }
      }
    }
  } else {
    for (const auto& [a, nbrs] : adjacency_) {
      for (VertexId b : nbrs) {
        if (a < b) edges.emplace_back(a, b);
      }
    }
  }
  return AdjacencyGraph::from_edges(edges);
}

SampledGraph sample_pass(const EdgeStream& stream, double p, Engine& rng, SpaceMeter& meter) {
  if (!(p > 0.0 && p <= 1.0)) throw std::invalid_argument("sample_pass: p must lie in (0, 1]");
  const Bernoulli coin(p);
  SampledGraph sample(p, stream.vertex_bound(),
                      static_cast<std::size_t>(p * static_cast<double>(stream.size())));
  stream.for_each([&](const Edge& e) {
    if (coin(rng) && sample.insert(e)) meter.store();
  });
  return sample;
}

}  // namespace tristream
