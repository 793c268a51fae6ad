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
#include <random>

namespace tristream {

/// Engine used for every random decision in the library.
using Engine = std::mt19937_64;

/// SplitMix64 finalizer.
std::uint64_t splitmix64(std::uint64_t x) noexcept;

/// Independent substream seed for (master, index). Used per trial so results
/// do not depend on the order in which trials are scheduled.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) noexcept;

/// Engine seeded through splitmix64 so nearby seeds give unrelated streams.
Engine make_engine(std::uint64_t seed);

/// Coin with success probability p, compared on 53 random bits so the result
/// sequence is the same across standard library implementations.
class Bernoulli {
 public:
  explicit Bernoulli(double p);
  bool operator()(Engine& rng) const noexcept {
    return p_ >= 1.0 || static_cast<double>(rng() >> 11) * 0x1.0p-53 < p_;
  }
  double p() const noexcept { return p_; }

 private:
  double p_;
};

}  // namespace tristream
