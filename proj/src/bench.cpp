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

#include "tristream/bench.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <cmath>
#include <exception>
#include <istream>
#include <limits>
#include <mutex>
#include <ostream>
#include <thread>

#include "tristream/random.hpp"
#include "tristream/stream.hpp"
#include "tristream/triangles.hpp"

namespace tristream {

namespace {

// Conservative throughput of the exact counter, in wedge steps per millisecond.
constexpr double kOracleWorkPerMs = 2.0e5;

struct Point {
  double p;
  double epsilon;
  std::uint64_t l;
};

std::string format_real(double x) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
  if (ec != std::errc()) throw std::runtime_error("cannot format number");
  return std::string(buf, ptr);
}

template <class T>
T parse_field(std::string_view field, std::size_t line) {
  T value{};
  auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc() || ptr != field.data() + field.size()) {
    throw std::runtime_error("bench csv line " + std::to_string(line) + ": bad field '" + std::string(field) + "'");
  }
  return value;
}

Point resolve_point(const AdjacencyGraph& g, const BenchConfig& cfg, std::uint64_t T, double value) {
  Point pt{cfg.p.value_or(0.0), cfg.epsilon, 1};
  if (cfg.sweep == SweepParam::P) {
    pt.p = value;
  } else {
    pt.epsilon = value;
  }
  if (cfg.sweep == SweepParam::Epsilon && !cfg.p) {
    const double n = std::max<double>(static_cast<double>(g.vertex_count()), 3.0);
    pt.p = is_min_of_trials(cfg.algorithm) ? choose_p_alg2(T, pt.epsilon)
                                           : choose_p_alg1(n, T, pt.epsilon, cfg.c1);
  }
  if (is_min_of_trials(cfg.algorithm)) pt.l = cfg.l.value_or(choose_repetitions(pt.epsilon));
  return pt;
}

}  // namespace

double predicted_oracle_ms(const AdjacencyGraph& g) {
  return static_cast<double>(exact_count_work(g)) / kOracleWorkPerMs;
}

std::vector<BenchRow> run_bench(const AdjacencyGraph& g, const BenchConfig& cfg) {
  if (cfg.trials < 1) throw std::invalid_argument("bench: trials must be positive");
  const double predicted = predicted_oracle_ms(g);
  if (predicted > cfg.oracle_budget_ms) {
    throw OracleBudgetExceeded("bench: exact count predicted to take " + format_real(predicted) +
                               " ms, over the budget of " + format_real(cfg.oracle_budget_ms) + " ms");
  }
  const std::uint64_t t_true = count_triangles_exact(g);
  const std::uint64_t T = cfg.T.value_or(std::max<std::uint64_t>(t_true, 1));

  std::vector<double> values = cfg.values;
  if (values.empty()) {
    if (cfg.sweep == SweepParam::P && !cfg.p) throw std::invalid_argument("bench: no p given");
    values.push_back(cfg.sweep == SweepParam::P ? *cfg.p : cfg.epsilon);
  }
  std::vector<Point> points;
  for (double v : values) points.push_back(resolve_point(g, cfg, T, v));

  const auto edges = memory_source(g.edges());
  const EdgeStream given(edges);
  const std::size_t total = points.size() * cfg.trials;
  std::vector<BenchRow> rows(total);

  auto run_row = [&](std::size_t index) {
    const std::size_t pi = index / cfg.trials;
    const std::uint64_t trial = index % cfg.trials;
    const Point& pt = points[pi];
    const std::uint64_t seed = derive_seed(derive_seed(cfg.master_seed, pi), trial);
    EstimatorParams params{pt.p, pt.epsilon, T, pt.l, seed};

    const auto start = std::chrono::steady_clock::now();
    EstimateReport report;
    if (requires_random_order(cfg.algorithm)) {
      const EdgeStream shuffled(edges, StreamOrder::RandomPermutation, derive_seed(seed, 1));
      report = run_estimator(cfg.algorithm, shuffled, params);
    } else {
      report = run_estimator(cfg.algorithm, given, params);
    }
    const auto stop = std::chrono::steady_clock::now();

    BenchRow& row = rows[index];
    row.algorithm = std::string(algorithm_name(cfg.algorithm));
    row.m = g.edge_count();
    row.n = g.vertex_count();
    row.t_true = t_true;
    row.T = T;
    row.epsilon = pt.epsilon;
    row.p = pt.p;
    row.l = report.params.l;
    row.seed = seed;
    row.estimate = report.estimate;
    row.relative_error = t_true > 0 ? std::abs(report.estimate - static_cast<double>(t_true)) / static_cast<double>(t_true)
                                    : std::numeric_limits<double>::quiet_NaN();
    row.max_stored_edges = report.max_stored_edges;
    row.wall_time_ms = cfg.timing ? std::chrono::duration<double, std::milli>(stop - start).count() : 0.0;
  };

  const std::size_t workers = std::clamp<std::size_t>(cfg.threads, 1, total);
  if (workers == 1) {
    for (std::size_t i = 0; i < total; ++i) run_row(i);
    return rows;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        try {
          for (std::size_t i = next++; i < total; i = next++) run_row(i);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      });
    }
  }
  if (failure) std::rethrow_exception(failure);
  return rows;
}

void write_bench_csv(std::ostream& out, std::span<const BenchRow> rows) {
  out << kBenchCsvHeader << '\n';
  for (const BenchRow& r : rows) {
    out << r.algorithm << ',' << r.m << ',' << r.n << ',' << r.t_true << ',' << r.T << ','
        << format_real(r.epsilon) << ',' << format_real(r.p) << ',' << r.l << ',' << r.seed << ','
        << format_real(r.estimate) << ',' << format_real(r.relative_error) << ',' << r.max_stored_edges << ','
        << format_real(r.wall_time_ms) << '\n';
  }
}

std::vector<BenchRow> read_bench_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != kBenchCsvHeader) {
    throw std::runtime_error("bench csv: missing or unexpected header");
  }
  std::vector<BenchRow> rows;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::vector<std::string_view> f;
    std::string_view rest = line;
    for (std::size_t comma; (comma = rest.find(',')) != std::string_view::npos; rest.remove_prefix(comma + 1)) {
      f.push_back(rest.substr(0, comma));
    }
    f.push_back(rest);
    if (f.size() != 13) throw std::runtime_error("bench csv line " + std::to_string(line_no) + ": expected 13 fields");
    BenchRow r;
    r.algorithm = std::string(f[0]);
    r.m = parse_field<std::uint64_t>(f[1], line_no);
    r.n = parse_field<std::uint64_t>(f[2], line_no);
    r.t_true = parse_field<std::uint64_t>(f[3], line_no);
    r.T = parse_field<std::uint64_t>(f[4], line_no);
    r.epsilon = parse_field<double>(f[5], line_no);
    r.p = parse_field<double>(f[6], line_no);
    r.l = parse_field<std::uint64_t>(f[7], line_no);
    r.seed = parse_field<std::uint64_t>(f[8], line_no);
    r.estimate = parse_field<double>(f[9], line_no);
    r.relative_error = parse_field<double>(f[10], line_no);
    r.max_stored_edges = parse_field<std::uint64_t>(f[11], line_no);
    r.wall_time_ms = parse_field<double>(f[12], line_no);
    rows.push_back(std::move(r));
  }
  return rows;
}

}  // namespace tristream
