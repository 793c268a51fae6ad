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

#include "tristream/report_json.hpp"

#include <stdexcept>

namespace tristream {

nlohmann::ordered_json to_json(const EstimateReport& report) {
  return {
      {"algorithm", std::string(algorithm_name(report.algorithm))},
      {"estimate", report.estimate},
      {"p", report.params.p},
      {"epsilon", report.params.epsilon},
      {"T", report.params.T},
      {"l", report.params.l},
      {"seed", report.params.master_seed},
      {"max_stored_edges", report.max_stored_edges},
      {"passes", report.passes_used},
      {"per_trial_estimates", report.per_trial_estimates},
      {"degenerate", report.degenerate},
  };
}

EstimateReport report_from_json(const nlohmann::json& j) {
  const auto algorithm = parse_algorithm(j.at("algorithm").get<std::string>());
  if (!algorithm) throw std::invalid_argument("unknown algorithm in report");
  EstimateReport report;
  report.algorithm = *algorithm;
  report.estimate = j.at("estimate").get<double>();
  report.params.p = j.at("p").get<double>();
  report.params.epsilon = j.at("epsilon").get<double>();
  report.params.T = j.at("T").get<std::uint64_t>();
  report.params.l = j.at("l").get<std::uint64_t>();
  report.params.master_seed = j.at("seed").get<std::uint64_t>();
  report.max_stored_edges = j.at("max_stored_edges").get<std::uint64_t>();
  report.passes_used = j.at("passes").get<int>();
  report.per_trial_estimates = j.at("per_trial_estimates").get<std::vector<double>>();
  report.degenerate = j.value("degenerate", false);
  return report;
}

std::string report_to_string(const EstimateReport& report) { return to_json(report).dump(); }

}  // namespace tristream
