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
#include <optional>
#include <string_view>
#include <vector>

#include "tristream/stream.hpp"

namespace tristream {

enum class Algorithm { Alg1TwoPass, Alg1OnePassRandom, Alg2TwoPass, Alg2OnePassRandom };

/// "alg1", "alg1-rand", "alg2", "alg2-rand".
std::string_view algorithm_name(Algorithm a);
std::optional<Algorithm> parse_algorithm(std::string_view name);
bool requires_random_order(Algorithm a);
bool is_min_of_trials(Algorithm a);

struct EstimatorParams {
  /// Per-edge sampling probability.
  double p = 0.5;
  /// Target relative error; recorded in reports, not used by the estimators.
  double epsilon = 0.5;
  /// Promised lower bound on the triangle count.
  std::uint64_t T = 1;
  /// Independent trials (min-of-trials estimators only).
  std::uint64_t l = 1;
  std::uint64_t master_seed = 0;
};

struct RunOptions {
  /// Worker threads for independent trials. Results do not depend on it.
  unsigned threads = 1;
};

struct EstimateReport {
  double estimate = 0.0;
  Algorithm algorithm = Algorithm::Alg1TwoPass;
  EstimatorParams params;
  std::uint64_t max_stored_edges = 0;
  int passes_used = 0;
  /// Per-trial outputs of the min-of-trials estimators; empty otherwise.
  std::vector<double> per_trial_estimates;
  /// Set when p == 1 turns a min-of-trials estimator into exact counting.
  bool degenerate = false;
};

// Parameter selection. Each throws std::invalid_argument on out-of-range input;
// epsilon is accepted in (0, 1/2].

/// min(0.99, c1 * epsilon^{-4/3} * sqrt(ln n) / T^{1/3}); needs n > 1, T >= 1, c1 > 0.
double choose_p_alg1(double n, std::uint64_t T, double epsilon, double c1 = 1.0);
inline constexpr double kAlg1MaxP = 0.99;

/// min(1, 320 / (epsilon^{3.5} * sqrt(T))).
double choose_p_alg2(std::uint64_t T, double epsilon);

/// ceil(16 / epsilon).
std::uint64_t choose_repetitions(double epsilon);

// Scale factors: the probability that a fixed triangle is counted.
double alg1_two_pass_detection(double p);
double alg1_one_pass_detection(double p);
double alg2_two_pass_detection(double p);
double alg2_one_pass_detection(double p);

/// Unbiased two-pass estimator; requires 0 < p < 1.
EstimateReport alg1_two_pass(const EdgeStream& stream, double p, std::uint64_t seed);
EstimateReport alg1_two_pass(const EdgeStream& stream, const EstimatorParams& params);

/// Single pass over a random-order stream; requires 0 < p < 1.
EstimateReport alg1_one_pass_random(const EdgeStream& stream, double p, std::uint64_t seed);
EstimateReport alg1_one_pass_random(const EdgeStream& stream, const EstimatorParams& params);

/// One trial of the min-of-trials estimator; requires 0 < p <= 1.
double alg2_single_trial(const EdgeStream& stream, double p, std::uint64_t seed);

/// Minimum over l trials; trial i uses seed derive_seed(master_seed, i).
EstimateReport alg2_two_pass(const EdgeStream& stream, double p, std::uint64_t l,
                             std::uint64_t master_seed, const RunOptions& options = {});
EstimateReport alg2_two_pass(const EdgeStream& stream, const EstimatorParams& params,
                             const RunOptions& options = {});

EstimateReport alg2_one_pass_random(const EdgeStream& stream, double p, std::uint64_t l,
                                    std::uint64_t master_seed, const RunOptions& options = {});
EstimateReport alg2_one_pass_random(const EdgeStream& stream, const EstimatorParams& params,
                                    const RunOptions& options = {});

EstimateReport run_estimator(Algorithm algorithm, const EdgeStream& stream, const EstimatorParams& params,
                             const RunOptions& options = {});

}  // namespace tristream
