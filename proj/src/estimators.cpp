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

#include "tristream/estimators.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "tristream/detail/trials.hpp"
#include "tristream/random.hpp"

namespace tristream {

namespace {

using detail::CoinSampler;
using detail::OnePassRule;
using detail::OnePassTrial;
using detail::TwoPassTrial;

void check_epsilon(double epsilon, const char* who) {
  if (!(epsilon > 0.0 && epsilon <= 0.5)) {
    throw std::invalid_argument(std::string(who) + ": epsilon must lie in (0, 1/2]");
  }
}

void check_open_p(double p, const char* who) {
  if (!(p > 0.0 && p < 1.0)) throw std::invalid_argument(std::string(who) + ": p must lie in (0, 1)");
}

void check_half_open_p(double p, const char* who) {
  if (!(p > 0.0 && p <= 1.0)) throw std::invalid_argument(std::string(who) + ": p must lie in (0, 1]");
}

void check_common(const EstimatorParams& params, const char* who) {
  check_epsilon(params.epsilon, who);
  if (params.T < 1) throw std::invalid_argument(std::string(who) + ": T must be positive");
  if (params.l < 1) throw std::invalid_argument(std::string(who) + ": l must be positive");
}

void check_random_order(const EdgeStream& stream, const char* who) {
  if (stream.order() != StreamOrder::RandomPermutation) {
    throw std::invalid_argument(std::string(who) + ": requires a random-order stream");
  }
}

CoinSampler coin(double p, std::uint64_t seed) { return {Bernoulli(p), make_engine(seed)}; }

EstimatorParams simple_params(double p, std::uint64_t l, std::uint64_t seed) {
  EstimatorParams params;
  params.p = p;
  params.l = l;
  params.master_seed = seed;
  return params;
}

template <class Trial>
std::uint64_t stored_edges(const std::vector<Trial>& trials) {
  std::uint64_t total = 0;
  for (const Trial& t : trials) total += t.meter().max_stored_edges();
  return total;
}

EstimateReport min_of_trials(Algorithm algorithm, const EstimatorParams& params, std::vector<double> estimates,
                             std::uint64_t stored, int passes) {
  EstimateReport report;
  report.algorithm = algorithm;
  report.params = params;
  report.estimate = *std::min_element(estimates.begin(), estimates.end());
  report.per_trial_estimates = std::move(estimates);
  report.max_stored_edges = stored;
  report.passes_used = passes;
  report.degenerate = params.p >= 1.0;
  return report;
}

}  // namespace

std::string_view algorithm_name(Algorithm a) {
  switch (a) {
    case Algorithm::Alg1TwoPass: return "alg1";
    case Algorithm::Alg1OnePassRandom: return "alg1-rand";
    case Algorithm::Alg2TwoPass: return "alg2";
    case Algorithm::Alg2OnePassRandom: return "alg2-rand";
  }
  return "unknown";
}

std::optional<Algorithm> parse_algorithm(std::string_view name) {
  for (Algorithm a : {Algorithm::Alg1TwoPass, Algorithm::Alg1OnePassRandom, Algorithm::Alg2TwoPass,
                      Algorithm::Alg2OnePassRandom}) {
    if (algorithm_name(a) == name) return a;
  }
  return std::nullopt;
}

bool requires_random_order(Algorithm a) {
  return a == Algorithm::Alg1OnePassRandom || a == Algorithm::Alg2OnePassRandom;
}

bool is_min_of_trials(Algorithm a) { return a == Algorithm::Alg2TwoPass || a == Algorithm::Alg2OnePassRandom; }

double choose_p_alg1(double n, std::uint64_t T, double epsilon, double c1) {
  if (!(n > 1.0)) throw std::invalid_argument("choose_p_alg1: n must exceed 1");
  if (T < 1) throw std::invalid_argument("choose_p_alg1: T must be positive");
  if (!(c1 > 0.0)) throw std::invalid_argument("choose_p_alg1: c1 must be positive");
  check_epsilon(epsilon, "choose_p_alg1");
  const double p = c1 * std::pow(epsilon, -4.0 / 3.0) * std::sqrt(std::log(n)) / std::cbrt(static_cast<double>(T));
  return std::min(kAlg1MaxP, p);
}

double choose_p_alg2(std::uint64_t T, double epsilon) {
  if (T < 1) throw std::invalid_argument("choose_p_alg2: T must be positive");
  check_epsilon(epsilon, "choose_p_alg2");
  return std::min(1.0, 320.0 / (std::pow(epsilon, 3.5) * std::sqrt(static_cast<double>(T))));
}

std::uint64_t choose_repetitions(double epsilon) {
  check_epsilon(epsilon, "choose_repetitions");
  // 16/0.1 lands a hair above 160 in binary; absorb that rounding
  return static_cast<std::uint64_t>(std::ceil(16.0 / epsilon - 1e-9));
}

double alg1_two_pass_detection(double p) { return 3.0 * p * p * (1.0 - p); }
double alg1_one_pass_detection(double p) { return p * p * (1.0 - p); }
double alg2_two_pass_detection(double p) { return 3.0 * p * p * (1.0 - p) + p * p * p; }
double alg2_one_pass_detection(double p) { return p * p; }

EstimateReport alg1_two_pass(const EdgeStream& stream, double p, std::uint64_t seed) {
  return alg1_two_pass(stream, simple_params(p, 1, seed));
}

EstimateReport alg1_two_pass(const EdgeStream& stream, const EstimatorParams& params) {
  check_open_p(params.p, "alg1_two_pass");
  check_common(params, "alg1_two_pass");
  std::vector<TwoPassTrial<CoinSampler>> trial;
  trial.emplace_back(params.p, stream.vertex_bound(), stream.size(), coin(params.p, params.master_seed), false);
  detail::run_trials(stream, std::span(trial), 1);

  EstimateReport report;
  report.algorithm = Algorithm::Alg1TwoPass;
  report.params = params;
  report.params.l = 1;
  report.estimate =
      static_cast<double>(trial[0].counts().closed_by_unsampled) / alg1_two_pass_detection(params.p);
  report.max_stored_edges = trial[0].meter().max_stored_edges();
  report.passes_used = 2;
  return report;
}

EstimateReport alg1_one_pass_random(const EdgeStream& stream, double p, std::uint64_t seed) {
  return alg1_one_pass_random(stream, simple_params(p, 1, seed));
}

EstimateReport alg1_one_pass_random(const EdgeStream& stream, const EstimatorParams& params) {
  check_open_p(params.p, "alg1_one_pass_random");
  check_common(params, "alg1_one_pass_random");
  check_random_order(stream, "alg1_one_pass_random");
  std::vector<OnePassTrial<CoinSampler>> trial;
  trial.emplace_back(params.p, stream.vertex_bound(), stream.size(), coin(params.p, params.master_seed),
                     OnePassRule::UnsampledCloses);
  detail::run_trials(stream, std::span(trial), 1);

  EstimateReport report;
  report.algorithm = Algorithm::Alg1OnePassRandom;
  report.params = params;
  report.params.l = 1;
  report.estimate = static_cast<double>(trial[0].detected()) / alg1_one_pass_detection(params.p);
  report.max_stored_edges = trial[0].meter().max_stored_edges();
  report.passes_used = 1;
  return report;
}

double alg2_single_trial(const EdgeStream& stream, double p, std::uint64_t seed) {
  check_half_open_p(p, "alg2_single_trial");
  std::vector<TwoPassTrial<CoinSampler>> trial;
  trial.emplace_back(p, stream.vertex_bound(), stream.size(), coin(p, seed), true);
  detail::run_trials(stream, std::span(trial), 1);
  const auto c = trial[0].counts();
  return static_cast<double>(c.closed_by_unsampled + c.fully_sampled) / alg2_two_pass_detection(p);
}

EstimateReport alg2_two_pass(const EdgeStream& stream, double p, std::uint64_t l, std::uint64_t master_seed,
                             const RunOptions& options) {
  return alg2_two_pass(stream, simple_params(p, l, master_seed), options);
}

EstimateReport alg2_two_pass(const EdgeStream& stream, const EstimatorParams& params, const RunOptions& options) {
  check_half_open_p(params.p, "alg2_two_pass");
  check_common(params, "alg2_two_pass");
  std::vector<TwoPassTrial<CoinSampler>> trials;
  trials.reserve(params.l);
  for (std::uint64_t i = 0; i < params.l; ++i) {
    trials.emplace_back(params.p, stream.vertex_bound(), stream.size(),
                        coin(params.p, derive_seed(params.master_seed, i)), true);
  }
  detail::run_trials(stream, std::span(trials), options.threads);

  const double scale = alg2_two_pass_detection(params.p);
  std::vector<double> estimates;
  estimates.reserve(trials.size());
  for (const auto& t : trials) {
    const auto c = t.counts();
    estimates.push_back(static_cast<double>(c.closed_by_unsampled + c.fully_sampled) / scale);
  }
  return min_of_trials(Algorithm::Alg2TwoPass, params, std::move(estimates), stored_edges(trials), 2);
}

EstimateReport alg2_one_pass_random(const EdgeStream& stream, double p, std::uint64_t l, std::uint64_t master_seed,
                                    const RunOptions& options) {
  return alg2_one_pass_random(stream, simple_params(p, l, master_seed), options);
}

EstimateReport alg2_one_pass_random(const EdgeStream& stream, const EstimatorParams& params,
                                    const RunOptions& options) {
  check_half_open_p(params.p, "alg2_one_pass_random");
  check_common(params, "alg2_one_pass_random");
  check_random_order(stream, "alg2_one_pass_random");
  std::vector<OnePassTrial<CoinSampler>> trials;
  trials.reserve(params.l);
  for (std::uint64_t i = 0; i < params.l; ++i) {
    trials.emplace_back(params.p, stream.vertex_bound(), stream.size(),
                        coin(params.p, derive_seed(params.master_seed, i)), OnePassRule::AnyCloses);
  }
  detail::run_trials(stream, std::span(trials), options.threads);

  const double scale = alg2_one_pass_detection(params.p);
  std::vector<double> estimates;
  estimates.reserve(trials.size());
  for (const auto& t : trials) estimates.push_back(static_cast<double>(t.detected()) / scale);
  return min_of_trials(Algorithm::Alg2OnePassRandom, params, std::move(estimates), stored_edges(trials), 1);
}

EstimateReport run_estimator(Algorithm algorithm, const EdgeStream& stream, const EstimatorParams& params,
                             const RunOptions& options) {
  switch (algorithm) {
    case Algorithm::Alg1TwoPass: return alg1_two_pass(stream, params);
    case Algorithm::Alg1OnePassRandom: return alg1_one_pass_random(stream, params);
    case Algorithm::Alg2TwoPass: return alg2_two_pass(stream, params, options);
    case Algorithm::Alg2OnePassRandom: return alg2_one_pass_random(stream, params, options);
  }
  throw std::invalid_argument("run_estimator: unknown algorithm");
}

}  // namespace tristream
