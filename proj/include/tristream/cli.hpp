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
#include <string>
#include <vector>

#include "tristream/graph.hpp"

namespace tristream::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitIo = 1;
inline constexpr int kExitInvalid = 2;

/// Graph generator request shared by `gen` and `bench --gen`.
struct GenRequest {
  std::string kind;  // planted | complete | tripartite | blowup | disj
  std::uint64_t m = 0;
  std::uint64_t t = 0;
  std::uint64_t n = 0;
  std::vector<std::uint64_t> sizes;
  std::string input;
  std::uint64_t T = 1;
  std::string x;
  std::string y;
  bool intersecting = false;
  std::uint64_t seed = 0;
};

/// Parses "kind:key=value,key=value". Throws std::invalid_argument.
GenRequest parse_gen_spec(const std::string& spec);

/// Materialized generator output.
AdjacencyGraph generate(const GenRequest& request);

/// Entry point behind the `tristream` binary. Returns the process exit code:
/// 0 success, 1 I/O or parse failure, 2 invalid parameters.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tristream::cli
