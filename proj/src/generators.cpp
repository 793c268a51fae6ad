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

#include "tristream/generators.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_set>

#include "tristream/random.hpp"
#include "tristream/triangles.hpp"

namespace tristream {

AdjacencyGraph gen_planted(std::uint64_t m, std::uint64_t t_target, std::uint64_t seed) {
  if (t_target > m / 3) {
    throw std::invalid_argument("gen_planted: need 3*t_target <= m");
  }
  std::vector<Edge> edges;
  edges.reserve(m);
  for (std::uint64_t i = 0; i < t_target; ++i) {
    const VertexId a = 3 * i;
    edges.emplace_back(a, a + 1);
    edges.emplace_back(a + 1, a + 2);
    edges.emplace_back(a, a + 2);
  }

  // Filler: f distinct pairs from a k x k bipartite block with k^2 >= 2f, so
  // rejection sampling accepts at least half the draws.
  const std::uint64_t filler = m - 3 * t_target;
  if (filler > 0) {
    const auto k = static_cast<std::uint64_t>(std::ceil(std::sqrt(2.0 * static_cast<double>(filler)))) + 1;
    const VertexId left = 3 * t_target;
    const VertexId right = left + k;
    Engine rng = make_engine(seed);
    std::uniform_int_distribution<std::uint64_t> side(0, k - 1);
    std::unordered_set<std::uint64_t> used;
    used.reserve(filler * 2);
    while (used.size() < filler) {
      const std::uint64_t i = side(rng);
      const std::uint64_t j = side(rng);
      if (used.insert(i * k + j).second) edges.emplace_back(left + i, right + j);
    }
  }

  AdjacencyGraph g = AdjacencyGraph::from_edges(edges);
  if (count_triangles_exact(g) != t_target) {
    throw std::logic_error("gen_planted: triangle count check failed");
  }
  return g;
}

AdjacencyGraph gen_complete(std::uint64_t n) {
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(n * (n > 0 ? n - 1 : 0) / 2));
  for (VertexId a = 0; a < n; ++a) {
    for (VertexId b = a + 1; b < n; ++b) edges.emplace_back(a, b);
  }
  std::vector<VertexId> all(n);
  std::iota(all.begin(), all.end(), VertexId{0});
  return AdjacencyGraph::from_edges(edges, all);
}

AdjacencyGraph gen_tripartite(std::uint64_t a, std::uint64_t b, std::uint64_t c) {
  const std::uint64_t part[3] = {a, b, c};
  const VertexId start[3] = {0, a, a + b};
  std::vector<Edge> edges;
  for (int x = 0; x < 3; ++x) {
    for (int y = x + 1; y < 3; ++y) {
      for (std::uint64_t i = 0; i < part[x]; ++i) {
        for (std::uint64_t j = 0; j < part[y]; ++j) edges.emplace_back(start[x] + i, start[y] + j);
      }
    }
  }
  std::vector<VertexId> all(a + b + c);
  std::iota(all.begin(), all.end(), VertexId{0});
  return AdjacencyGraph::from_edges(edges, all);
}

namespace {

class BlowUpCursor final : public EdgeCursor {
 public:
  BlowUpCursor(std::unique_ptr<EdgeCursor> base, std::uint64_t factor)
      : base_(std::move(base)), factor_(factor) {}

  std::optional<Edge> next() override {
    if (!current_ || ++j_ == factor_) {
      if (current_) ++i_;
      j_ = 0;
      if (!current_ || i_ == factor_) {
        current_ = base_->next();
        if (!current_) return std::nullopt;
        i_ = 0;
      }
    }
    return Edge(current_->u() * factor_ + i_, current_->v() * factor_ + j_);
  }

 private:
  std::unique_ptr<EdgeCursor> base_;
  std::uint64_t factor_;
  std::optional<Edge> current_;
  std::uint64_t i_ = 0;
  std::uint64_t j_ = 0;
};

class BlowUpSource final : public EdgeSource {
 public:
  BlowUpSource(std::shared_ptr<const EdgeSource> base, std::uint64_t factor)
      : base_(std::move(base)), factor_(factor) {
    if (factor_ < 1) throw std::invalid_argument("blow_up: T must be at least 1");
    const VertexId bound = base_->vertex_bound();
    if (bound > 0 && bound > std::numeric_limits<VertexId>::max() / factor_) {
      throw std::overflow_error("blow_up: vertex ids overflow");
    }
  }
  std::unique_ptr<EdgeCursor> open() const override {
    return std::make_unique<BlowUpCursor>(base_->open(), factor_);
  }
  std::size_t size() const override { return base_->size() * factor_ * factor_; }
  VertexId vertex_bound() const override { return base_->vertex_bound() * factor_; }

 private:
  std::shared_ptr<const EdgeSource> base_;
  std::uint64_t factor_;
};

// Adapts a stream (with its ordering) back into a source.
class StreamSource final : public EdgeSource {
 public:
  explicit StreamSource(EdgeStream stream) : stream_(std::move(stream)) {}
  std::unique_ptr<EdgeCursor> open() const override { return stream_.open_pass(); }
  std::size_t size() const override { return stream_.size(); }
  VertexId vertex_bound() const override { return stream_.vertex_bound(); }

 private:
  EdgeStream stream_;
};

void check_bits(const BitVector& x, const BitVector& y) {
  if (x.size() != y.size()) throw std::invalid_argument("gen_disjointness: x and y differ in length");
}

}  // namespace

std::shared_ptr<const EdgeSource> blow_up(std::shared_ptr<const EdgeSource> base, std::uint64_t T) {
  return std::make_shared<BlowUpSource>(std::move(base), T);
}

EdgeStream blow_up(const EdgeStream& base, std::uint64_t T) {
  return EdgeStream(blow_up(std::make_shared<StreamSource>(base), T));
}

EdgeStream blow_up(const AdjacencyGraph& base, std::uint64_t T) {
  return EdgeStream(blow_up(memory_source(base.edges()), T));
}

std::optional<std::uint64_t> exact_sqrt(std::uint64_t T) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(T)));
  while (r * r > T) --r;
  while ((r + 1) * (r + 1) <= T) ++r;
  if (r * r != T) return std::nullopt;
  return r;
}

AdjacencyGraph gen_disjointness(const BitVector& x, const BitVector& y, std::uint64_t T) {
  check_bits(x, y);
  const auto block = exact_sqrt(T);
  if (!block || *block == 0) throw std::invalid_argument("gen_disjointness: T must be a positive perfect square");
  const DisjointnessLayout at{x.size(), *block};

  std::vector<Edge> edges;
  for (std::uint64_t i = 0; i < at.n; ++i) {
    if (y[i]) {
      for (std::uint64_t k = 0; k < at.block; ++k) edges.emplace_back(at.a(i), at.b(k));
    }
  }
  for (std::uint64_t j = 0; j < at.block; ++j) {
    for (std::uint64_t k = 0; k < at.block; ++k) edges.emplace_back(at.c(j), at.b(k));
  }
  for (std::uint64_t i = 0; i < at.n; ++i) {
    if (x[i]) {
      for (std::uint64_t j = 0; j < at.block; ++j) edges.emplace_back(at.c(j), at.a(i));
    }
  }
  std::vector<VertexId> all(at.n + 2 * at.block);
  std::iota(all.begin(), all.end(), VertexId{0});
  return AdjacencyGraph::from_edges(edges, all);
}

DisjointnessInstance gen_disjointness_random(std::uint64_t n_len, std::uint64_t T, bool intersecting,
                                             std::uint64_t seed) {
  if (n_len < 2 || n_len % 2 != 0) {
    throw std::invalid_argument("gen_disjointness_random: n_len must be even and at least 2");
  }
  if (!exact_sqrt(T) || T == 0) throw std::invalid_argument("gen_disjointness_random: T must be a perfect square");
  Engine rng = make_engine(seed);
  std::vector<std::uint64_t> order(n_len);
  std::iota(order.begin(), order.end(), std::uint64_t{0});
  std::shuffle(order.begin(), order.end(), rng);

  // order[0, h) is the support of x, order[h, n) its complement.
  const std::uint64_t h = n_len / 2;
  DisjointnessInstance inst{BitVector(n_len, false), BitVector(n_len, false), {}};
  for (std::uint64_t i = 0; i < h; ++i) inst.x[order[i]] = true;
  if (intersecting) {
    // one shared position plus h-1 positions from the complement
    inst.y[order[0]] = true;
    for (std::uint64_t i = h; i < n_len - 1; ++i) inst.y[order[i]] = true;
  } else {
    for (std::uint64_t i = h; i < n_len; ++i) inst.y[order[i]] = true;
  }
  inst.graph = gen_disjointness(inst.x, inst.y, T);
  return inst;
}

std::vector<Edge> shuffled_edges(const AdjacencyGraph& g, std::uint64_t seed) {
  std::vector<Edge> edges = g.edges();
  Engine rng = make_engine(seed);
  std::shuffle(edges.begin(), edges.end(), rng);
  return edges;
}

}  // namespace tristream
