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

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "suite.hpp"
#include "tristream/edge_list_io.hpp"
#include "tristream/random.hpp"
#include "tristream/sampled_graph.hpp"
#include "tristream/stream.hpp"
#include "tristream/triangles.hpp"

using namespace tristream;

namespace {

std::filesystem::path write_temp(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / ("tristream_stream_" + name);
  std::ofstream(path) << text;
  return path;
}

}  // namespace

TEST_CASE("passes replay the same sequence") {
  const auto path = write_temp("three.el", "# three edges\n0 1\n1 2\n0 2\n");
  SUBCASE("as given") {
    const auto s = open_stream(path, StreamOrder::AsGiven, 0);
    CHECK(s.size() == 3);
    const auto first = s.collect();
    CHECK(first == std::vector<Edge>{{0, 1}, {1, 2}, {0, 2}});
    CHECK(s.collect() == first);
    CHECK(s.passes_started() == 2);
  }
  SUBCASE("random permutation is fixed per instance") {
    const auto s = open_stream(path, StreamOrder::RandomPermutation, 7);
    const auto first = s.collect();
    CHECK(s.collect() == first);
    CHECK(std::is_permutation(first.begin(), first.end(), suite::complete(3).begin()));
    const auto again = open_stream(path, StreamOrder::RandomPermutation, 7);
    CHECK(again.collect() == first);
  }
  SUBCASE("tiny read buffer") {
    StreamOptions opts;
    opts.buffer_bytes = 4;
    CHECK(open_stream(path, StreamOrder::AsGiven, 0, opts).collect().size() == 3);
  }
  SUBCASE("concurrent cursors are independent") {
    const auto s = open_stream(path, StreamOrder::AsGiven, 0);
    auto a = s.open_pass();
    auto b = s.open_pass();
    CHECK(a->next() == Edge(0, 1));
    CHECK(b->next() == Edge(0, 1));
    CHECK(a->next() == Edge(1, 2));
  }
}

TEST_CASE("random order covers every permutation uniformly") {
  const auto src = memory_source(suite::complete(3));
  std::map<std::vector<Edge>, int> seen;
  constexpr int kDraws = 6000;
  for (std::uint64_t seed = 0; seed < kDraws; ++seed) {
    ++seen[EdgeStream(src, StreamOrder::RandomPermutation, seed).collect()];
  }
  REQUIRE(seen.size() == 6);
  double chi2 = 0.0;
  for (const auto& [order, count] : seen) chi2 += std::pow(count - kDraws / 6.0, 2) / (kDraws / 6.0);
  // 5 degrees of freedom, 0.1% critical value
  CHECK(chi2 < 20.52);
}

TEST_CASE("opening a malformed or duplicated file fails") {
  CHECK_THROWS_AS(open_stream(write_temp("bad.el", "0 1\n1 x\n"), StreamOrder::AsGiven, 0), ParseError);
  CHECK_THROWS_AS(open_stream(write_temp("dup.el", "0 1\n2 3\n1 0\n"), StreamOrder::AsGiven, 0),
                  DuplicateEdgeError);
  CHECK_THROWS_AS(EdgeStream::from_edges({{0, 1}, {1, 0}}), DuplicateEdgeError);
  CHECK_THROWS(open_stream("/nonexistent/tristream.el", StreamOrder::AsGiven, 0));
  StreamOptions lax;
  lax.validate_distinct = false;
  CHECK(open_stream(write_temp("dup2.el", "0 1\n1 0\n"), StreamOrder::AsGiven, 0, lax).size() == 2);
}

TEST_CASE("file streams must be re-readable") {
  CHECK_THROWS(open_stream(std::filesystem::temp_directory_path(), StreamOrder::AsGiven, 0));
  const auto path = write_temp("shrinks.el", "0 1\n1 2\n0 2\n");
  const auto stream = open_stream(path, StreamOrder::AsGiven, 0);
  CHECK(stream.collect().size() == 3);
  std::ofstream(path) << "0 1\n";
  CHECK_THROWS(stream.collect());
}

TEST_CASE("seed derivation") {
  std::set<std::uint64_t> seeds;
  for (std::uint64_t master = 0; master < 20; ++master)
    for (std::uint64_t i = 0; i < 50; ++i) seeds.insert(derive_seed(master, i));
  CHECK(seeds.size() == 1000);
  CHECK(derive_seed(3, 4) == derive_seed(3, 4));
  CHECK_THROWS_AS(Bernoulli(1.5), std::invalid_argument);
}

TEST_CASE("sample_pass") {
  std::vector<Edge> edges;
  for (VertexId i = 0; i < 1000; ++i) edges.emplace_back(2 * i, 2 * i + 1);
  const auto stream = EdgeStream::from_edges(edges);

  SUBCASE("p = 1 keeps everything") {
    Engine rng = make_engine(1);
    SpaceMeter meter;
    const auto g = sample_pass(stream, 1.0, rng, meter);
    CHECK(g.sampled_count() == 1000);
    CHECK(meter.max_stored_edges() == 1000);
  }
  SUBCASE("p outside (0, 1] is rejected") {
    Engine rng = make_engine(1);
    SpaceMeter meter;
    CHECK_THROWS_AS(sample_pass(stream, 0.0, rng, meter), std::invalid_argument);
    CHECK_THROWS_AS(sample_pass(stream, 1.0001, rng, meter), std::invalid_argument);
  }
  SUBCASE("binomial mean, meter and pairwise independence") {
    constexpr int kTrials = 10000;
    Engine rng = make_engine(99);
    double total = 0.0;
    int both = 0;
    for (int trial = 0; trial < kTrials; ++trial) {
      SpaceMeter meter;
      const auto g = sample_pass(stream, 0.5, rng, meter);
      REQUIRE(meter.max_stored_edges() == g.sampled_count());
      total += static_cast<double>(g.sampled_count());
      both += g.contains(edges[10]) && g.contains(edges[500]) ? 1 : 0;
    }
    CHECK(std::abs(total / kTrials - 500.0) <= 4 * std::sqrt(250.0));
    // joint frequency p^2 = 0.25, binomial sd sqrt(n * 0.25 * 0.75)
    CHECK(std::abs(both - 0.25 * kTrials) <= 4 * std::sqrt(kTrials * 0.25 * 0.75));
  }
}

TEST_CASE("sampled graph layouts agree with the adjacency oracle") {
  for (std::uint32_t seed = 0; seed < 40; ++seed) {
    const auto edges = oracle::random_graph(30, 0.3, seed);
    SampledGraph dense(0.5, 30, edges.size());
    SampledGraph sparse(0.5, 1u << 20, edges.size());
    REQUIRE(dense.layout() == SampledGraph::Layout::Dense);
    REQUIRE(sparse.layout() == SampledGraph::Layout::Sparse);
    for (const Edge& e : edges) {
      CHECK(dense.insert(e));
      CHECK(sparse.insert(e));
    }
    CHECK_FALSE(dense.insert(edges.front()));
    const auto g = AdjacencyGraph::from_edges(edges);
    CHECK(dense.to_graph().edges() == g.edges());
    CHECK(sparse.to_graph().edges() == g.edges());
    for (VertexId a = 0; a < 30; ++a) {
      for (VertexId b = a + 1; b < 30; ++b) {
        const Edge e(a, b);
        CHECK(dense.common_neighbors(e) == count_new_triangles(g, e));
        CHECK(sparse.common_neighbors(e) == count_new_triangles(g, e));
        CHECK(dense.contains(e) == g.has_edge(e));
        CHECK(sparse.contains(e) == g.has_edge(e));
      }
    }
  }
}

TEST_CASE("dense sample converts when an id exceeds its bound") {
  SampledGraph g(0.5, 8, 4);
  REQUIRE(g.layout() == SampledGraph::Layout::Dense);
  g.insert(Edge(1, 2));
  g.insert(Edge(2, 3));
  g.insert(Edge(1, 5000));
  CHECK(g.layout() == SampledGraph::Layout::Sparse);
  CHECK(g.sampled_count() == 3);
  CHECK(g.common_neighbors(Edge(1, 3)) == 1);
  CHECK(g.contains(Edge(2, 1)));
}

TEST_CASE("space meter") {
  SpaceMeter m;
  m.store(5);
  m.release(3);
  m.store(2);
  CHECK(m.current() == 4);
  CHECK(m.max_stored_edges() == 5);
  m.release(100);
  CHECK(m.current() == 0);
  CHECK(m.max_stored_edges() == 5);
}
