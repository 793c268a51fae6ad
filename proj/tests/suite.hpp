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

// Named fixture graphs shared by the unit and acceptance suites.

#include <string>
#include <vector>

#include "tristream/edge.hpp"
#include "tristream/generators.hpp"

namespace suite {

using tristream::Edge;

struct Named {
  std::string name;
  std::vector<Edge> edges;
};

inline std::vector<Edge> complete(std::uint64_t n) { return tristream::gen_complete(n).edges(); }

inline std::vector<Edge> path(std::uint64_t len) {
  std::vector<Edge> e;
  for (std::uint64_t i = 0; i < len; ++i) e.emplace_back(i, i + 1);
  return e;
}

inline std::vector<Edge> cycle(std::uint64_t n) {
  auto e = path(n - 1);
  e.emplace_back(n - 1, 0);
  return e;
}

/// Graphs with at most 6 edges.
inline std::vector<Named> tiny() {
  return {
      {"K3", complete(3)},
      {"path3", path(3)},
      {"triangle+pendant", {{0, 1}, {1, 2}, {0, 2}, {2, 3}}},
      {"diamond", {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}}},
      {"K4", complete(4)},
      {"two-triangles", {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}}},
      {"bowtie", {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {2, 4}}},
  };
}

/// Graphs with at most 12 edges.
inline std::vector<Named> small() {
  auto out = tiny();
  out.push_back({"path6", path(6)});
  out.push_back({"C5", cycle(5)});
  out.push_back({"wheel5", {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {5, 0}, {5, 1}, {5, 2}, {5, 3}, {5, 4}}});
  out.push_back({"K4+tail", {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {3, 4}, {4, 5}, {5, 6}}});
  out.push_back({"planted(12,2)", tristream::gen_planted(12, 2, 1).edges()});
  out.push_back({"planted(12,4)", tristream::gen_planted(12, 4, 2).edges()});
  out.push_back({"planted(11,3)", tristream::gen_planted(11, 3, 3).edges()});
  out.push_back({"K_{1,2,3}", tristream::gen_tripartite(1, 2, 3).edges()});
  return out;
}

}  // namespace suite
