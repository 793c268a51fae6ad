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

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "tristream/bench.hpp"
#include "tristream/cli.hpp"
#include "tristream/edge_list_io.hpp"

using tristream::cli::run_cli;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("tristream_cli_" + name)).string();
}

std::string write_file(const std::string& name, const std::string& text) {
  const auto path = temp(name);
  std::ofstream(path) << text;
  return path;
}

std::size_t edge_lines(const std::string& text) {
  std::istringstream in(text);
  return tristream::read_edge_list(in).size();
}

}  // namespace

TEST_CASE("gen") {
  SUBCASE("complete to stdout, summary to stderr") {
    const auto r = run({"gen", "complete", "--n", "4"});
    REQUIRE(r.code == 0);
    CHECK(edge_lines(r.out) == 6);
    CHECK(nlohmann::json::parse(r.err)["t"] == 4);
  }
  SUBCASE("file output prints the summary on stdout") {
    const auto path = temp("k4.el");
    const auto r = run({"gen", "complete", "--n", "4", "--out", path});
    REQUIRE(r.code == 0);
    CHECK(nlohmann::json::parse(r.out)["m"] == 6);
    CHECK(tristream::read_edge_list_file(path).size() == 6);
  }
  SUBCASE("disjointness gadget") {
    const auto r = run({"gen", "disj", "--n", "8", "--T", "4", "--intersecting", "--seed", "3"});
    REQUIRE(r.code == 0);
    CHECK(nlohmann::json::parse(r.err)["t"] == 4);
    const auto explicit_bits = run({"gen", "disj", "--x", "1100", "--y", "0011", "--T", "4"});
    CHECK(nlohmann::json::parse(explicit_bits.err)["t"] == 0);
  }
  SUBCASE("blowup streams the transformed input") {
    const auto k3 = write_file("k3.el", "0 1\n1 2\n0 2\n");
    const auto r = run({"gen", "blowup", "--input", k3, "--T", "2"});
    REQUIRE(r.code == 0);
    CHECK(edge_lines(r.out) == 12);
    const auto s = nlohmann::json::parse(r.err);
    CHECK(s["m"] == 12);
    CHECK(s["t"] == 8);
    const auto shuffled = run({"gen", "blowup", "--input", k3, "--T", "2", "--shuffle", "5"});
    CHECK(edge_lines(shuffled.out) == 12);
    CHECK(nlohmann::json::parse(shuffled.err)["t"] == 8);
  }
  SUBCASE("planted and tripartite") {
    const auto r = run({"gen", "planted", "--m", "2000", "--t", "200", "--seed", "1"});
    REQUIRE(r.code == 0);
    CHECK(nlohmann::json::parse(r.err)["t"] == 200);
    const auto tri = run({"gen", "tripartite", "--sizes", "2,3,4"});
    CHECK(nlohmann::json::parse(tri.err)["t"] == 24);
  }
  SUBCASE("shuffle permutes deterministically") {
    const auto a = run({"gen", "complete", "--n", "7", "--shuffle", "9"});
    const auto b = run({"gen", "complete", "--n", "7", "--shuffle", "9"});
    CHECK(a.out == b.out);
    CHECK(a.out != run({"gen", "complete", "--n", "7"}).out);
  }
  SUBCASE("invalid parameters") {
    CHECK(run({"gen", "planted", "--m", "5", "--t", "2"}).code == 2);
    CHECK(run({"gen", "disj", "--n", "8", "--T", "5"}).code == 2);
    CHECK(run({"gen", "wheel"}).code == 2);
    CHECK(run({"gen", "blowup", "--input", "/nonexistent/x.el", "--T", "2"}).code == 1);
  }
}

TEST_CASE("exact") {
  const auto k4 = write_file("exact_k4.el", "0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n");
  const auto r = run({"exact", "--input", k4, "--epsilon", "0.25"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["t"] == 4);
  CHECK(j["J"] == 2);
  CHECK(j["K"] == 3);
  CHECK(j["light"] == 6);
  CHECK(j["threshold"].get<double>() == doctest::Approx(12.0));
}

TEST_CASE("estimate") {
  const auto k4 = write_file("est_k4.el", "0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n");
  const auto path = write_file("est_path.el", "0 1\n1 2\n2 3\n3 4\n");

  const auto exact = run({"estimate", "alg2", "--input", k4, "--p", "1", "--l", "1", "--T", "1"});
  REQUIRE(exact.code == 0);
  const auto j = nlohmann::json::parse(exact.out);
  CHECK(j["estimate"] == 4.0);
  CHECK(j["passes"] == 2);
  CHECK(j["degenerate"] == true);

  const auto zero = run({"estimate", "alg1", "--input", path, "--p", "0.5", "--seed", "7", "--T", "1"});
  REQUIRE(zero.code == 0);
  CHECK(nlohmann::json::parse(zero.out)["estimate"] == 0.0);

  CHECK(run({"estimate", "alg1-rand", "--input", k4, "--order", "given", "--p", "0.5", "--T", "1"}).code == 2);
  CHECK(run({"estimate", "alg2-rand", "--input", k4, "--order", "given", "--T", "1"}).code == 2);
  CHECK(run({"estimate", "alg1", "--input", k4, "--p", "1", "--T", "1"}).code == 2);
  CHECK(run({"estimate", "alg1", "--input", k4}).code == 2);  // --T is required
  CHECK(run({"estimate", "alg1", "--input", "/nonexistent/k4.el", "--T", "1"}).code == 1);
  CHECK(run({"estimate", "alg1", "--input", write_file("bad.el", "0 1\nfoo\n"), "--T", "1"}).code == 1);
  CHECK(run({"estimate", "alg1", "--input", write_file("dup.el", "0 1\n1 0\n"), "--T", "1"}).code == 1);

  SUBCASE("defaults from the promise") {
    const auto r = run({"estimate", "alg2", "--input", k4, "--T", "4", "--epsilon", "0.5"});
    REQUIRE(r.code == 0);
    const auto rep = nlohmann::json::parse(r.out);
    CHECK(rep["p"] == 1.0);
    CHECK(rep["l"] == 32);
    CHECK(rep["estimate"] == 4.0);
    CHECK(r.err.find("warning") != std::string::npos);

    const auto rand = run({"estimate", "alg1-rand", "--input", k4, "--T", "100000", "--seed", "2"});
    REQUIRE(rand.code == 0);
    CHECK(nlohmann::json::parse(rand.out)["passes"] == 1);
  }
  SUBCASE("repeated invocations are byte-identical") {
    const std::vector<std::string> args{"estimate", "alg2-rand", "--input", k4, "--p", "0.6", "--l", "5",
                                        "--T", "2", "--seed", "11"};
    CHECK(run(args).out == run(args).out);
  }
}

TEST_CASE("bench") {
  const std::vector<std::string> args{"bench", "--gen", "planted:m=2000,t=200,seed=1", "--algorithm", "alg1",
                                      "--sweep", "p=0.1,0.2,0.3,0.4,0.5", "--trials", "100", "--seed", "3"};
  const auto r = run(args);
  REQUIRE(r.code == 0);
  std::istringstream in(r.out);
  const auto rows = tristream::read_bench_csv(in);
  REQUIRE(rows.size() == 500);

  std::vector<double> mean_error(5, 0.0);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& row = rows[i];
    mean_error[i / 100] += row.relative_error / 100.0;
    CHECK(row.t_true == 200);
    CHECK(row.m == 2000);
    CHECK(row.max_stored_edges <= row.m * row.l);
    const double pm = row.p * static_cast<double>(row.m);
    CHECK(std::abs(static_cast<double>(row.max_stored_edges) - pm) <= 4 * std::sqrt(pm));
    CHECK(row.relative_error == doctest::Approx(std::abs(row.estimate - 200.0) / 200.0));
  }
  for (std::size_t k = 1; k < mean_error.size(); ++k) CHECK(mean_error[k] < mean_error[k - 1]);

  SUBCASE("csv round-trips and runs are reproducible") {
    std::ostringstream again;
    tristream::write_bench_csv(again, rows);
    CHECK(again.str() == r.out);
    CHECK(run(args).out == r.out);
    auto threaded = args;
    threaded.insert(threaded.end(), {"--threads", "3"});
    CHECK(run(threaded).out == r.out);
  }
  SUBCASE("epsilon sweep with formula p") {
    const auto e = run({"bench", "--gen", "complete:n=30", "--algorithm", "alg2", "--sweep", "epsilon=0.3,0.5",
                        "--trials", "2", "--T", "4060"});
    REQUIRE(e.code == 0);
    std::istringstream ein(e.out);
    const auto erows = tristream::read_bench_csv(ein);
    REQUIRE(erows.size() == 4);
    CHECK(erows[0].l == 54);
    CHECK(erows[2].l == 32);
    CHECK(erows[0].p == 1.0);
  }
  SUBCASE("file output and refusals") {
    const auto out = temp("bench.csv");
    CHECK(run({"bench", "--gen", "complete:n=10", "--p", "0.5", "--trials", "3", "--out", out}).code == 0);
    std::ifstream f(out);
    CHECK(tristream::read_bench_csv(f).size() == 3);
    CHECK(run({"bench", "--gen", "complete:n=50", "--p", "0.5", "--oracle-budget-ms", "0"}).code == 2);
    CHECK(run({"bench", "--gen", "complete:n=10", "--sweep", "q=1"}).code == 2);
    CHECK(run({"bench", "--p", "0.5"}).code == 2);
    CHECK(run({"bench", "--gen", "complete:n=10", "--algorithm", "alg1-rand", "--p", "0.5", "--trials", "2"}).code ==
          0);
  }
}

TEST_CASE("gen specs") {
  const auto req = tristream::cli::parse_gen_spec("disj:n=8,T=9,intersecting=1,seed=4");
  CHECK(req.kind == "disj");
  CHECK(req.n == 8);
  CHECK(req.T == 9);
  CHECK(req.intersecting);
  CHECK_THROWS_AS(tristream::cli::parse_gen_spec("planted:m"), std::invalid_argument);
  CHECK_THROWS_AS(tristream::cli::parse_gen_spec("planted:z=1"), std::invalid_argument);
  CHECK_THROWS_AS(tristream::cli::parse_gen_spec("planted:m=-3"), std::invalid_argument);
}

TEST_CASE("bench csv keeps an undefined relative error") {
  tristream::BenchRow row{};
  row.algorithm = "alg1";
  row.relative_error = std::nan("");
  std::ostringstream out;
  tristream::write_bench_csv(out, std::vector<tristream::BenchRow>{row});
  std::istringstream in(out.str());
  const auto back = tristream::read_bench_csv(in);
  REQUIRE(back.size() == 1);
  CHECK(std::isnan(back[0].relative_error));
}
