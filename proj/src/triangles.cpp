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

#include "tristream/triangles.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace tristream {

namespace {

using Index = AdjacencyGraph::Index;

// Orientation from lower to higher (degree, index) rank. Each undirected edge
// appears exactly once as a "slot" in the forward lists.
struct ForwardAdjacency {
  std::vector<std::size_t> offsets;
  std::vector<Index> targets;

  std::size_t begin(Index u) const { return offsets[u]; }
  std::size_t end(Index u) const { return offsets[u + 1]; }
};

ForwardAdjacency orient(const AdjacencyGraph& g) {
  const auto n = static_cast<Index>(g.vertex_count());
  auto before = [&g](Index a, Index b) {
    const auto da = g.degree_of_index(a);
    const auto db = g.degree_of_index(b);
    return da != db ? da < db : a < b;
  };
  ForwardAdjacency fwd;
  fwd.offsets.assign(static_cast<std::size_t>(n) + 1, 0);
  fwd.targets.reserve(g.edge_count());
  for (Index u = 0; u < n; ++u) {
    for (Index w : g.neighbor_indices(u)) {
      if (before(u, w)) fwd.targets.push_back(w);
    }
    fwd.offsets[u + 1] = fwd.targets.size();
  }
  return fwd;
}

// Calls fn(a, b, c, slot_ab, slot_ac, slot_bc) once per triangle, where
// a -> b -> c in the orientation and slots index ForwardAdjacency::targets.
template <class Fn>
void enumerate(const AdjacencyGraph& g, const ForwardAdjacency& fwd, Fn&& fn) {
  const auto n = static_cast<Index>(g.vertex_count());
  constexpr std::size_t kUnmarked = static_cast<std::size_t>(-1);
  std::vector<std::size_t> mark(n, kUnmarked);
  for (Index a = 0; a < n; ++a) {
    for (std::size_t s = fwd.begin(a); s < fwd.end(a); ++s) mark[fwd.targets[s]] = s;
    for (std::size_t sab = fwd.begin(a); sab < fwd.end(a); ++sab) {
      const Index b = fwd.targets[sab];
      for (std::size_t sbc = fwd.begin(b); sbc < fwd.end(b); ++sbc) {
        const Index c = fwd.targets[sbc];
        if (mark[c] != kUnmarked) fn(a, b, c, sab, mark[c], sbc);
      }
    }
    for (std::size_t s = fwd.begin(a); s < fwd.end(a); ++s) mark[fwd.targets[s]] = kUnmarked;
  }
}

std::vector<Edge> slot_edges(const AdjacencyGraph& g, const ForwardAdjacency& fwd) {
  std::vector<Edge> out;
  out.reserve(fwd.targets.size());
  for (Index u = 0; u + 1 < fwd.offsets.size(); ++u) {
    for (std::size_t s = fwd.begin(u); s < fwd.end(u); ++s) {
      out.emplace_back(g.id_of(u), g.id_of(fwd.targets[s]));
    }
  }
  return out;
}

}  // namespace

std::uint64_t count_triangles_exact(const AdjacencyGraph& g) {
  const ForwardAdjacency fwd = orient(g);
  std::uint64_t t = 0;
  enumerate(g, fwd, [&t](Index, Index, Index, std::size_t, std::size_t, std::size_t) { ++t; });
  return t;
}

std::uint64_t exact_count_work(const AdjacencyGraph& g) {
  const ForwardAdjacency fwd = orient(g);
  std::uint64_t work = g.vertex_count() + g.edge_count();
  for (Index b : fwd.targets) work += fwd.end(b) - fwd.begin(b);
  return work;
}

std::vector<std::array<VertexId, 3>> list_triangles(const AdjacencyGraph& g) {
  const ForwardAdjacency fwd = orient(g);
  std::vector<std::array<VertexId, 3>> out;
  enumerate(g, fwd, [&](Index a, Index b, Index c, std::size_t, std::size_t, std::size_t) {
    std::array<VertexId, 3> tri{g.id_of(a), g.id_of(b), g.id_of(c)};
    std::sort(tri.begin(), tri.end());
    out.push_back(tri);
  });
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t TriangleStats::on_edge(const Edge& e) const {
  auto it = std::lower_bound(per_edge.begin(), per_edge.end(), e,
                             [](const EdgeTriangleCount& c, const Edge& x) { return c.edge < x; });
  return it != per_edge.end() && it->edge == e ? it->triangles : 0;
}

TriangleStats triangle_stats(const AdjacencyGraph& g) {
  const ForwardAdjacency fwd = orient(g);
  std::vector<std::uint64_t> slot_count(fwd.targets.size(), 0);
  std::vector<std::uint64_t> vertex_count(g.vertex_count(), 0);
  TriangleStats stats;
  enumerate(g, fwd, [&](Index a, Index b, Index c, std::size_t ab, std::size_t ac, std::size_t bc) {
    ++stats.t;
    ++slot_count[ab];
    ++slot_count[ac];
    ++slot_count[bc];
    ++vertex_count[a];
    ++vertex_count[b];
    ++vertex_count[c];
  });

  const std::vector<Edge> edges = slot_edges(g, fwd);
  stats.per_edge.reserve(edges.size());
  for (std::size_t s = 0; s < edges.size(); ++s) {
    stats.per_edge.push_back({edges[s], slot_count[s]});
    stats.J = std::max(stats.J, slot_count[s]);
  }
  std::sort(stats.per_edge.begin(), stats.per_edge.end(),
            [](const EdgeTriangleCount& x, const EdgeTriangleCount& y) { return x.edge < y.edge; });
  for (std::uint64_t k : vertex_count) stats.K = std::max(stats.K, k);
  return stats;
}

EdgePartition classify_edges(const AdjacencyGraph& g, double epsilon) {
  if (!(epsilon > 0.0 && epsilon < 0.5)) {
    throw std::invalid_argument("classify_edges: epsilon must lie in (0, 1/2)");
  }
  const ForwardAdjacency fwd = orient(g);
  std::vector<std::uint64_t> slot_count(fwd.targets.size(), 0);
  std::uint64_t t = 0;
  enumerate(g, fwd, [&](Index, Index, Index, std::size_t ab, std::size_t ac, std::size_t bc) {
    ++t;
    ++slot_count[ab];
    ++slot_count[ac];
    ++slot_count[bc];
  });
  if (t == 0) throw std::invalid_argument("classify_edges: graph has no triangles");

  EdgePartition part;
  part.threshold = 3.0 * std::sqrt(static_cast<double>(t) / epsilon);
  std::vector<bool> light(slot_count.size());
  const std::vector<Edge> edges = slot_edges(g, fwd);
  for (std::size_t s = 0; s < edges.size(); ++s) {
    light[s] = static_cast<double>(slot_count[s]) <= part.threshold;
    (light[s] ? part.light : part.heavy).push_back(edges[s]);
  }
  std::sort(part.light.begin(), part.light.end());
  std::sort(part.heavy.begin(), part.heavy.end());

  enumerate(g, fwd, [&](Index, Index, Index, std::size_t ab, std::size_t ac, std::size_t bc) {
    if (int(light[ab]) + int(light[ac]) + int(light[bc]) >= 2) ++part.triangles_with_two_light;
  });
  return part;
}

std::uint64_t count_new_triangles(const AdjacencyGraph& sampled, const Edge& e) {
  const auto a = sampled.index_of(e.u());
  const auto b = sampled.index_of(e.v());
  if (!a || !b) return 0;
  const auto na = sampled.neighbor_indices(*a);
  const auto nb = sampled.neighbor_indices(*b);
  std::uint64_t common = 0;
  auto i = na.begin();
  auto j = nb.begin();
  while (i != na.end() && j != nb.end()) {
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

}  // namespace tristream
