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

#include <string>

#include "json.hpp"
#include "tristream/estimators.hpp"

namespace tristream {

/// Fields: algorithm, estimate, p, epsilon, T, l, seed, max_stored_edges,
/// passes, per_trial_estimates, degenerate.
nlohmann::ordered_json to_json(const EstimateReport& report);
EstimateReport report_from_json(const nlohmann::json& j);

/// Compact single-line JSON.
std::string report_to_string(const EstimateReport& report);

}  // namespace tristream
