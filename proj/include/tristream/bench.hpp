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
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "tristream/estimators.hpp"
#include "tristream/graph.hpp"

namespace tristream {

struct BenchRow {
  std::string algorithm;
  std::uint64_t m = 0;
  std::uint64_t n = 0;
  std::uint64_t t_true = 0;
  std::uint64_t T = 0;
  double epsilon = 0.0;
  double p = 0.0;
  std::uint64_t l = 0;
  std::uint64_t seed = 0;
  double estimate = 0.0;
  /// |estimate - t_true| / t_true; NaN when t_true == 0.
  double relative_error = 0.0;
  std::uint64_t max_stored_edges = 0;
  double wall_time_ms = 0.0;

  friend bool operator==(const BenchRow&, const BenchRow&) = default;
};

enum class SweepParam { P, Epsilon };

struct BenchConfig {
  Algorithm algorithm = Algorithm::Alg1TwoPass;
  SweepParam sweep = SweepParam::P;
  /// Sweep points. Empty means a single point taken from `p` / `epsilon`.
  std::vector<double> values;
  std::uint64_t trials = 10;
  std::uint64_t master_seed = 0;
  /// Promise; defaults to the exact count.
  std::optional<std::uint64_t> T;
  double epsilon = 0.5;
  /// Fixed p for epsilon sweeps; defaults to the choose_p_* formula.
  std::optional<double> p;
  /// Repetitions; defaults to choose_repetitions(epsilon) for min-of-trials estimators, else 1.
  std::optional<std::uint64_t> l;
  double c1 = 1.0;
  unsigned threads = 1;
  /// Record wall_time_ms. Off by default so output is reproducible byte for byte.
  bool timing = false;
  /// Refuse graphs whose exact count is predicted to take longer than this.
  double oracle_budget_ms = 60000.0;
};

class OracleBudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Predicted exact-count time, from exact_count_work().
double predicted_oracle_ms(const AdjacencyGraph& g);

/// One row per (sweep point, trial), ordered by point then trial index.
/// Trial seeds are derive_seed(derive_seed(master, point), trial).
std::vector<BenchRow> run_bench(const AdjacencyGraph& g, const BenchConfig& config);

inline constexpr std::string_view kBenchCsvHeader =
    "algorithm,m,n,t_true,T,epsilon,p,l,seed,estimate,relative_error,max_stored_edges,wall_time_ms";

/// Header line plus one line per row; reals in shortest round-trip form.
void write_bench_csv(std::ostream& out, std::span<const BenchRow> rows);
std::vector<BenchRow> read_bench_csv(std::istream& in);

}  // namespace tristream
