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

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "tristream/graph.hpp"
#include "tristream/stream.hpp"

namespace tristream {

using BitVector = std::vector<bool>;

/// `t_target` vertex-disjoint triangles plus m - 3*t_target random edges of a
/// bipartite filler on separate vertices, so t(G) == t_target exactly. The
/// oracle count is checked before returning. Throws std::invalid_argument if
/// 3*t_target > m.
AdjacencyGraph gen_planted(std::uint64_t m, std::uint64_t t_target, std::uint64_t seed);

/// K_n on vertices 0..n-1.
AdjacencyGraph gen_complete(std::uint64_t n);

/// Complete tripartite K_{a,b,c}; a*b*c triangles.
AdjacencyGraph gen_tripartite(std::uint64_t a, std::uint64_t b, std::uint64_t c);

/// Streaming blow-up: every vertex v becomes v*T + k for k in [0, T) and every
/// edge becomes a T x T biclique, emitted on the fly while reading `base`.
/// m' = m*T^2 and t' = T^3 * t.
std::shared_ptr<const EdgeSource> blow_up(std::shared_ptr<const EdgeSource> base, std::uint64_t T);
EdgeStream blow_up(const EdgeStream& base, std::uint64_t T);
EdgeStream blow_up(const AdjacencyGraph& base, std::uint64_t T);

/// Vertex ids of the disjointness gadget with n positions and block size s.
struct DisjointnessLayout {
  std::uint64_t n;
  std::uint64_t block;
  VertexId a(std::uint64_t i) const { return i; }
  VertexId b(std::uint64_t k) const { return n + k; }
  VertexId c(std::uint64_t j) const { return n + block + j; }
};

/// Tripartite gadget over A (|x| vertices), B and C (sqrt(T) each): a_i joins
/// all of B iff y[i], all of C x B is present, and a_i joins all of C iff x[i].
/// sqrt(T) triangles per vertex of C for each common position of x and y.
/// Throws std::invalid_argument if the lengths differ or T is not a perfect square.
AdjacencyGraph gen_disjointness(const BitVector& x, const BitVector& y, std::uint64_t T);

struct DisjointnessInstance {
  BitVector x;
  BitVector y;
  AdjacencyGraph graph;
};

/// Random weight-n/2 vectors meeting in exactly one position (intersecting) or
/// none. Requires even n_len >= 2 and perfect-square T.
DisjointnessInstance gen_disjointness_random(std::uint64_t n_len, std::uint64_t T, bool intersecting,
                                             std::uint64_t seed);

/// Integer square root if `T` is a perfect square.
std::optional<std::uint64_t> exact_sqrt(std::uint64_t T);

/// Edges of `g` in a seeded random order.
std::vector<Edge> shuffled_edges(const AdjacencyGraph& g, std::uint64_t seed);

}  // namespace tristream
