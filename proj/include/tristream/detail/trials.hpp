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

// Per-trial state machines behind the estimators. The sampling decision is a
// template parameter so tests can drive a trial with a fixed sampling outcome
// and enumerate all of them.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <mutex>
#include <span>
#include <thread>
#include <utility>
#include <vector>

#include "tristream/edge.hpp"
#include "tristream/random.hpp"
#include "tristream/sampled_graph.hpp"
#include "tristream/stream.hpp"

namespace tristream::detail {

/// Sampler backed by a seeded engine; ignores the edge.
struct CoinSampler {
  Bernoulli coin;
  Engine rng;
  bool operator()(const Edge&) { return coin(rng); }
};

struct TwoPassCounts {
  std::uint64_t sampled_edges = 0;
  /// Triangles with exactly two edges in G', found via their unsampled edge.
  std::uint64_t closed_by_unsampled = 0;
  /// Triangles with all three edges in G'.
  std::uint64_t fully_sampled = 0;
};

template <class Sampler>
class TwoPassTrial {
 public:
  TwoPassTrial(double p, VertexId vertex_bound, std::size_t stream_size, Sampler sampler,
               bool count_fully_sampled)
      : sampler_(std::move(sampler)),
        sample_(p, vertex_bound, static_cast<std::size_t>(p * static_cast<double>(stream_size))),
        count_fully_sampled_(count_fully_sampled) {}

  void observe(int pass, const Edge& e) {
    if (pass == 0) {
      if (sampler_(e) && sample_.insert(e)) meter_.store();
      return;
    }
    if (!sample_.contains(e)) {
      closed_ += sample_.common_neighbors(e);
    } else if (count_fully_sampled_) {
      // each fully sampled triangle is seen from all three of its edges
      fully_times_three_ += sample_.common_neighbors(e);
    }
  }

  static constexpr int passes() { return 2; }

  TwoPassCounts counts() const {
    return {sample_.sampled_count(), closed_, fully_times_three_ / 3};
  }
  const SpaceMeter& meter() const noexcept { return meter_; }
  const SampledGraph& sample() const noexcept { return sample_; }

 private:
  Sampler sampler_;
  SampledGraph sample_;
  SpaceMeter meter_;
  bool count_fully_sampled_;
  std::uint64_t closed_ = 0;
  std::uint64_t fully_times_three_ = 0;
};

enum class OnePassRule {
  /// Alg I variant: an arriving edge that is not kept adds the wedges it closes.
  UnsampledCloses,
  /// Alg II variant: every arriving edge adds the wedges it closes.
  AnyCloses,
};

template <class Sampler>
class OnePassTrial {
 public:
  OnePassTrial(double p, VertexId vertex_bound, std::size_t stream_size, Sampler sampler, OnePassRule rule)
      : sampler_(std::move(sampler)),
        sample_(p, vertex_bound, static_cast<std::size_t>(p * static_cast<double>(stream_size))),
        rule_(rule) {}

  void observe(int, const Edge& e) {
    const bool keep = sampler_(e);
    if (rule_ == OnePassRule::AnyCloses || !keep) detected_ += sample_.common_neighbors(e);
    if (keep && sample_.insert(e)) meter_.store();
  }

  static constexpr int passes() { return 1; }

  std::uint64_t detected() const noexcept { return detected_; }
  const SpaceMeter& meter() const noexcept { return meter_; }

 private:
  Sampler sampler_;
  SampledGraph sample_;
  OnePassRule rule_;
  SpaceMeter meter_;
  std::uint64_t detected_ = 0;
};

inline constexpr std::size_t kBlockEdges = 4096;

/// Feeds every pass of `stream` to every trial. Trials are split into
/// contiguous ranges, one per worker; each worker replays the stream with its
/// own cursors. A trial's result depends only on its own sampler, never on
/// the worker count.
template <class Trial>
void run_trials(const EdgeStream& stream, std::span<Trial> trials, unsigned threads) {
  const std::size_t workers = std::clamp<std::size_t>(threads, 1, std::max<std::size_t>(trials.size(), 1));

  auto work = [&stream](std::span<Trial> mine) {
    std::vector<Edge> block;
    block.reserve(kBlockEdges);
    for (int pass = 0; pass < Trial::passes(); ++pass) {
      auto cursor = stream.open_pass();
      while (cursor->next_block(block, kBlockEdges) > 0) {
        for (Trial& trial : mine) {
          for (const Edge& e : block) trial.observe(pass, e);
        }
      }
    }
  };

  if (workers == 1) {
    work(trials);
    return;
  }

  std::exception_ptr failure;
  std::mutex failure_mutex;
  {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
      const std::size_t lo = trials.size() * w / workers;
      const std::size_t hi = trials.size() * (w + 1) / workers;
      pool.emplace_back([&, lo, hi] {
        try {
          work(trials.subspan(lo, hi - lo));
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      });
    }
  }
  if (failure) std::rethrow_exception(failure);
}

}  // namespace tristream::detail
