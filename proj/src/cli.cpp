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

#include "tristream/cli.hpp"

#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "json.hpp"
#include "tristream/bench.hpp"
#include "tristream/edge_list_io.hpp"
#include "tristream/estimators.hpp"
#include "tristream/generators.hpp"
#include "tristream/random.hpp"
#include "tristream/report_json.hpp"
#include "tristream/stream.hpp"
#include "tristream/triangles.hpp"

namespace tristream::cli {

namespace {

// Summaries include the exact count only below this predicted cost.
constexpr double kSummaryOracleMs = 10000.0;

BitVector parse_bits(const std::string& s, const char* name) {
  BitVector bits;
  for (char c : s) {
    if (c != '0' && c != '1') throw std::invalid_argument(std::string(name) + " must be a string of 0/1");
    bits.push_back(c == '1');
  }
  return bits;
}

std::uint64_t parse_u64(const std::string& key, const std::string& value) {
  std::size_t used = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(value, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != value.size() || value.empty() || value.front() == '-') {
    throw std::invalid_argument("bad integer for " + key + ": '" + value + "'");
  }
  return v;
}

std::vector<double> parse_reals(const std::string& list) {
  std::vector<double> out;
  std::stringstream ss(list);
  for (std::string item; std::getline(ss, item, ',');) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size()) throw std::invalid_argument("bad number in list: '" + item + "'");
    out.push_back(v);
  }
  if (out.empty()) throw std::invalid_argument("empty list");
  return out;
}

class Output {
 public:
  Output(const std::string& path, std::ostream& fallback) {
    if (path.empty()) {
      stream_ = &fallback;
    } else {
      file_.open(path);
      if (!file_) throw std::runtime_error("cannot open " + path + " for writing");
      stream_ = &file_;
    }
  }
  std::ostream& get() { return *stream_; }
  void finish() {
    stream_->flush();
    if (!*stream_) throw std::runtime_error("write failed");
  }

 private:
  std::ofstream file_;
  std::ostream* stream_;
};

nlohmann::ordered_json summary(const std::string& kind, const AdjacencyGraph& g) {
  nlohmann::ordered_json j = {{"kind", kind}, {"n", g.vertex_count()}, {"m", g.edge_count()}};
  if (predicted_oracle_ms(g) <= kSummaryOracleMs) {
    j["t"] = count_triangles_exact(g);
  } else {
    j["t"] = nullptr;
  }
  return j;
}

AdjacencyGraph load_graph(const std::string& path) {
  const auto edges = read_edge_list_file(path);
  return AdjacencyGraph::from_edges(edges);
}

// ---- gen ----

struct GenArgs {
  GenRequest request;
  std::optional<std::uint64_t> shuffle;
  std::string out;
};

int cmd_gen(const GenArgs& args, std::ostream& out, std::ostream& err) {
  const GenRequest& req = args.request;
  Output sink(args.out, out);
  std::ostream& report = args.out.empty() ? err : out;

  if (req.kind == "blowup" && !args.shuffle) {
    // O(1) streaming transformation of the input file
    if (req.input.empty()) throw std::invalid_argument("gen blowup needs --input");
    const AdjacencyGraph base = load_graph(req.input);
    const EdgeStream blown = blow_up(open_stream(req.input, StreamOrder::AsGiven, 0), req.T);
    blown.for_each([&](const Edge& e) { sink.get() << e.u() << ' ' << e.v() << '\n'; });
    sink.finish();
    nlohmann::ordered_json j = {{"kind", req.kind}, {"n", base.vertex_count() * req.T}, {"m", blown.size()}};
    if (predicted_oracle_ms(base) <= kSummaryOracleMs) {
      j["t"] = count_triangles_exact(base) * req.T * req.T * req.T;
    } else {
      j["t"] = nullptr;
    }
    report << j.dump() << '\n';
    return kExitOk;
  }

  const AdjacencyGraph g = generate(req);
  const std::vector<Edge> edges = args.shuffle ? shuffled_edges(g, *args.shuffle) : g.edges();
  write_edge_list(sink.get(), edges);
  sink.finish();
  report << summary(req.kind, g).dump() << '\n';
  return kExitOk;
}

// ---- exact ----

struct ExactArgs {
  std::string input;
  std::optional<double> epsilon;
};

int cmd_exact(const ExactArgs& args, std::ostream& out) {
  const AdjacencyGraph g = load_graph(args.input);
  const TriangleStats stats = triangle_stats(g);
  nlohmann::ordered_json j = {{"n", g.vertex_count()}, {"m", g.edge_count()}, {"t", stats.t},
                              {"J", stats.J},          {"K", stats.K}};
  if (args.epsilon) {
    const EdgePartition part = classify_edges(g, *args.epsilon);
    j["epsilon"] = *args.epsilon;
    j["threshold"] = part.threshold;
    j["heavy"] = part.heavy.size();
    j["light"] = part.light.size();
    j["triangles_with_two_light"] = part.triangles_with_two_light;
  }
  out << j.dump() << '\n';
  return kExitOk;
}

// ---- estimate ----

struct EstimateArgs {
  std::string algorithm;
  std::string input;
  std::string order;
  std::optional<double> p;
  double epsilon = 0.5;
  std::uint64_t T = 0;
  std::optional<std::uint64_t> l;
  std::uint64_t seed = 0;
  double c1 = 1.0;
  unsigned threads = 1;
  std::size_t buffer = 0;
};

int cmd_estimate(const EstimateArgs& args, std::ostream& out, std::ostream& err) {
  const auto algorithm = parse_algorithm(args.algorithm);
  if (!algorithm) throw std::invalid_argument("unknown algorithm '" + args.algorithm + "'");
  std::string order_name = args.order;
  if (order_name.empty()) order_name = requires_random_order(*algorithm) ? "random" : "given";
  const StreamOrder order = order_name == "random" ? StreamOrder::RandomPermutation : StreamOrder::AsGiven;
  if (requires_random_order(*algorithm) && order != StreamOrder::RandomPermutation) {
    throw std::invalid_argument(args.algorithm + " requires --order random");
  }

  StreamOptions options;
  if (args.buffer > 0) options.buffer_bytes = args.buffer;
  const EdgeStream stream = open_stream(args.input, order, derive_seed(args.seed, 1), options);

  EstimatorParams params;
  params.epsilon = args.epsilon;
  params.T = args.T;
  params.master_seed = args.seed;
  if (args.p) {
    params.p = *args.p;
  } else if (is_min_of_trials(*algorithm)) {
    params.p = choose_p_alg2(args.T, args.epsilon);
    if (params.p >= 1.0) err << "warning: p clamped to 1; the estimator degenerates to exact counting\n";
  } else {
    const double n = std::max<double>(static_cast<double>(stream.vertex_bound()), 3.0);
    params.p = choose_p_alg1(n, args.T, args.epsilon, args.c1);
    if (params.p >= kAlg1MaxP) err << "warning: p capped at " << kAlg1MaxP << '\n';
  }
  params.l = is_min_of_trials(*algorithm) ? args.l.value_or(choose_repetitions(args.epsilon)) : 1;

  const EstimateReport report = run_estimator(*algorithm, stream, params, RunOptions{args.threads});
  out << report_to_string(report) << '\n';
  return kExitOk;
}

// ---- bench ----

struct BenchArgs {
  std::string input;
  std::string gen;
  std::string algorithm = "alg1";
  std::string sweep;
  std::uint64_t trials = 10;
  std::uint64_t seed = 0;
  std::optional<std::uint64_t> T;
  double epsilon = 0.5;
  std::optional<double> p;
  std::optional<std::uint64_t> l;
  double c1 = 1.0;
  unsigned threads = 1;
  bool timing = false;
  double oracle_budget_ms = 60000.0;
  std::string out;
};

int cmd_bench(const BenchArgs& args, std::ostream& out) {
  if (args.input.empty() == args.gen.empty()) throw std::invalid_argument("bench needs exactly one of --input, --gen");
  const auto algorithm = parse_algorithm(args.algorithm);
  if (!algorithm) throw std::invalid_argument("unknown algorithm '" + args.algorithm + "'");

  BenchConfig cfg;
  cfg.algorithm = *algorithm;
  cfg.trials = args.trials;
  cfg.master_seed = args.seed;
  cfg.T = args.T;
  cfg.epsilon = args.epsilon;
  cfg.p = args.p;
  cfg.l = args.l;
  cfg.c1 = args.c1;
  cfg.threads = args.threads;
  cfg.timing = args.timing;
  cfg.oracle_budget_ms = args.oracle_budget_ms;
  if (!args.sweep.empty()) {
    const auto eq = args.sweep.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("--sweep expects p=... or epsilon=...");
    const std::string name = args.sweep.substr(0, eq);
    if (name == "p") {
      cfg.sweep = SweepParam::P;
    } else if (name == "epsilon") {
      cfg.sweep = SweepParam::Epsilon;
    } else {
      throw std::invalid_argument("cannot sweep '" + name + "'");
    }
    cfg.values = parse_reals(args.sweep.substr(eq + 1));
  }

  const AdjacencyGraph g = args.input.empty() ? generate(parse_gen_spec(args.gen)) : load_graph(args.input);
  // validate the output location before spending time on the sweep
  Output sink(args.out, out);
  const auto rows = run_bench(g, cfg);
  write_bench_csv(sink.get(), rows);
  sink.finish();
  return kExitOk;
}

void require_perfect_square(std::uint64_t T) {
  if (!exact_sqrt(T)) throw std::invalid_argument("T must be a perfect square");
}

}  // namespace

GenRequest parse_gen_spec(const std::string& spec) {
  GenRequest req;
  const auto colon = spec.find(':');
  req.kind = spec.substr(0, colon);
  if (colon == std::string::npos) return req;
  std::stringstream ss(spec.substr(colon + 1));
  for (std::string item; std::getline(ss, item, ',');) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("generator option '" + item + "' lacks '='");
    const std::string key = item.substr(0, eq);
    const std::string value = item.substr(eq + 1);
    if (key == "m") {
      req.m = parse_u64(key, value);
    } else if (key == "t") {
      req.t = parse_u64(key, value);
    } else if (key == "n") {
      req.n = parse_u64(key, value);
    } else if (key == "T") {
      req.T = parse_u64(key, value);
    } else if (key == "seed") {
      req.seed = parse_u64(key, value);
    } else if (key == "a" || key == "b" || key == "c") {
      req.sizes.resize(3, 0);
      req.sizes[static_cast<std::size_t>(key[0] - 'a')] = parse_u64(key, value);
    } else if (key == "input") {
      req.input = value;
    } else if (key == "x") {
      req.x = value;
    } else if (key == "y") {
      req.y = value;
    } else if (key == "intersecting") {
      req.intersecting = parse_u64(key, value) != 0;
    } else {
      throw std::invalid_argument("unknown generator option '" + key + "'");
    }
  }
  return req;
}

AdjacencyGraph generate(const GenRequest& req) {
  if (req.kind == "planted") return gen_planted(req.m, req.t, req.seed);
  if (req.kind == "complete") {
    if (req.n < 1) throw std::invalid_argument("complete needs n >= 1");
    return gen_complete(req.n);
  }
  if (req.kind == "tripartite") {
    if (req.sizes.size() != 3) throw std::invalid_argument("tripartite needs three part sizes");
    return gen_tripartite(req.sizes[0], req.sizes[1], req.sizes[2]);
  }
  if (req.kind == "blowup") {
    if (req.input.empty()) throw std::invalid_argument("blowup needs an input edge list");
    return AdjacencyGraph::from_edges(blow_up(load_graph(req.input), req.T).collect());
  }
  if (req.kind == "disj") {
    require_perfect_square(req.T);
    if (!req.x.empty() || !req.y.empty()) {
      return gen_disjointness(parse_bits(req.x, "x"), parse_bits(req.y, "y"), req.T);
    }
    return gen_disjointness_random(req.n, req.T, req.intersecting, req.seed).graph;
  }
  throw std::invalid_argument("unknown generator kind '" + req.kind + "'");
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Streaming triangle counting: generators, exact oracle, estimators, benchmarks", "tristream"};
  app.require_subcommand(1);

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Write a generated graph as an edge list");
  gen_cmd->add_option("kind", gen.request.kind, "planted | complete | tripartite | blowup | disj")
      ->required()
      ->check(CLI::IsMember({"planted", "complete", "tripartite", "blowup", "disj"}));
  gen_cmd->add_option("--m", gen.request.m, "Edge count (planted)");
  gen_cmd->add_option("--t", gen.request.t, "Planted triangle count");
  gen_cmd->add_option("--n", gen.request.n, "Vertex count (complete) or vector length (disj)");
  gen_cmd->add_option("--sizes", gen.request.sizes, "Part sizes a,b,c (tripartite)")->delimiter(',')->expected(3);
  gen_cmd->add_option("--input", gen.request.input, "Input edge list (blowup)");
  gen_cmd->add_option("--T", gen.request.T, "Blow-up factor, or perfect-square triangle target (disj)");
  gen_cmd->add_option("--x", gen.request.x, "Bit string x (disj)");
  gen_cmd->add_option("--y", gen.request.y, "Bit string y (disj)");
  gen_cmd->add_flag("--intersecting", gen.request.intersecting, "Random x, y meeting in one position (disj)");
  gen_cmd->add_option("--seed", gen.request.seed, "Generator seed");
  gen_cmd->add_option("--shuffle", gen.shuffle, "Permute emitted edges with this seed");
  gen_cmd->add_option("--out", gen.out, "Output path (default: standard output)");

  ExactArgs exact;
  auto* exact_cmd = app.add_subcommand("exact", "Exact triangle statistics");
  exact_cmd->add_option("--input", exact.input, "Edge list")->required();
  exact_cmd->add_option("--epsilon", exact.epsilon, "Also report the heavy/light split");

  EstimateArgs est;
  auto* est_cmd = app.add_subcommand("estimate", "Run one estimator and print a JSON report");
  est_cmd->add_option("algorithm", est.algorithm, "alg1 | alg1-rand | alg2 | alg2-rand")
      ->required()
      ->check(CLI::IsMember({"alg1", "alg1-rand", "alg2", "alg2-rand"}));
  est_cmd->add_option("--input", est.input, "Edge list")->required();
  est_cmd->add_option("--order", est.order, "Stream order")->check(CLI::IsMember({"given", "random"}));
  est_cmd->add_option("--p", est.p, "Sampling probability (default from epsilon, T)");
  est_cmd->add_option("--epsilon", est.epsilon, "Relative error target")->capture_default_str();
  est_cmd->add_option("--T", est.T, "Promised lower bound on the triangle count")->required();
  est_cmd->add_option("--l", est.l, "Trials for alg2 variants (default ceil(16/epsilon))");
  est_cmd->add_option("--seed", est.seed, "Master seed")->capture_default_str();
  est_cmd->add_option("--c1", est.c1, "Constant in the alg1 p formula")->capture_default_str();
  est_cmd->add_option("--threads", est.threads, "Worker threads for trials")->capture_default_str();
  est_cmd->add_option("--buffer", est.buffer, "File read buffer in bytes");

  BenchArgs bench;
  auto* bench_cmd = app.add_subcommand("bench", "Sweep an estimator and write CSV rows");
  bench_cmd->add_option("--input", bench.input, "Edge list");
  bench_cmd->add_option("--gen", bench.gen, "Generator spec, e.g. planted:m=2000,t=200,seed=1");
  bench_cmd->add_option("--algorithm", bench.algorithm, "Estimator")
      ->check(CLI::IsMember({"alg1", "alg1-rand", "alg2", "alg2-rand"}))
      ->capture_default_str();
  bench_cmd->add_option("--sweep", bench.sweep, "p=v1,v2,... or epsilon=v1,v2,...");
  bench_cmd->add_option("--trials", bench.trials, "Trials per sweep point")->capture_default_str();
  bench_cmd->add_option("--seed", bench.seed, "Master seed")->capture_default_str();
  bench_cmd->add_option("--T", bench.T, "Promise (default: exact count)");
  bench_cmd->add_option("--epsilon", bench.epsilon, "Epsilon for p sweeps")->capture_default_str();
  bench_cmd->add_option("--p", bench.p, "Fixed p for epsilon sweeps or single runs");
  bench_cmd->add_option("--l", bench.l, "Trials per estimate for alg2 variants");
  bench_cmd->add_option("--c1", bench.c1, "Constant in the alg1 p formula")->capture_default_str();
  bench_cmd->add_option("--threads", bench.threads, "Worker threads")->capture_default_str();
  bench_cmd->add_flag("--timing", bench.timing, "Fill wall_time_ms (output no longer reproducible)");
  bench_cmd->add_option("--oracle-budget-ms", bench.oracle_budget_ms, "Refuse slower exact counts")
      ->capture_default_str();
  bench_cmd->add_option("--out", bench.out, "CSV path (default: standard output)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e, out, err);
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  }

  try {
    if (*gen_cmd) return cmd_gen(gen, out, err);
    if (*exact_cmd) return cmd_exact(exact, out);
    if (*est_cmd) return cmd_estimate(est, out, err);
    if (*bench_cmd) return cmd_bench(bench, out);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const OracleBudgetExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitIo;
  }
  return kExitInvalid;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("tristream");
  for (const auto& a : args) argv.push_back(a.c_str());
  return run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace tristream::cli
