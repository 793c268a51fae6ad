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

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <utility>

namespace tristream {

using VertexId = std::uint64_t;

/// Undirected simple edge, stored with the smaller endpoint first.
class Edge {
 public:
  /// Throws std::invalid_argument on a self-loop.
  constexpr Edge(VertexId a, VertexId b) : u_(a < b ? a : b), v_(a < b ? b : a) {
    if (a == b) throw std::invalid_argument("self-loop edges are not allowed");
  }

  constexpr VertexId u() const noexcept { return u_; }
  constexpr VertexId v() const noexcept { return v_; }

  constexpr bool has_endpoint(VertexId x) const noexcept { return x == u_ || x == v_; }

  friend constexpr auto operator<=>(const Edge&, const Edge&) = default;

 private:
  VertexId u_;
  VertexId v_;
};

struct EdgeHash {
  std::size_t operator()(const Edge& e) const noexcept {
    // boost::hash_combine style mixing of both endpoints
    std::size_t h = std::hash<VertexId>{}(e.u());
    h ^= std::hash<VertexId>{}(e.v()) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }
};

}  // namespace tristream
