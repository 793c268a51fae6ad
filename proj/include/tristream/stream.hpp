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

#include <atomic>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <memory>
#include <optional>
#include <vector>

#include "tristream/edge.hpp"
#include "tristream/graph.hpp"

namespace tristream {

enum class StreamOrder { AsGiven, RandomPermutation };

/// One traversal of a stream.
class EdgeCursor {
 public:
  virtual ~EdgeCursor() = default;
  virtual std::optional<Edge> next() = 0;

  /// Replaces `out` with up to `max` following edges; returns how many.
  std::size_t next_block(std::vector<Edge>& out, std::size_t max);
};

/// Replayable origin of edges. Every open() yields the same sequence.
class EdgeSource {
 public:
  virtual ~EdgeSource() = default;
  virtual std::unique_ptr<EdgeCursor> open() const = 0;
  virtual std::size_t size() const = 0;
  /// Strict upper bound on vertex ids.
  virtual VertexId vertex_bound() const = 0;
};

struct StreamOptions {
  /// Read buffer for file-backed streams. Defaults to $TRISTREAM_BUFFER_BYTES or 64 KiB.
  std::size_t buffer_bytes = default_buffer_bytes();
  /// Reject duplicate edges when opening a file. Needs a transient hash set of all edges.
  bool validate_distinct = true;

  static std::size_t default_buffer_bytes();
};

/// In-memory source. Throws DuplicateEdgeError on a repeated edge.
std::shared_ptr<const EdgeSource> memory_source(std::vector<Edge> edges);

/// Edge-list file read lazily on every pass. The constructor scans the file
/// once to count edges and check the format (ParseError, DuplicateEdgeError).
std::shared_ptr<const EdgeSource> file_source(const std::filesystem::path& path,
                                              const StreamOptions& options = {});

/// A finite, replayable edge stream.
///
/// For RandomPermutation the order is drawn once from the seed at construction
/// and reused by every pass. Passes may run concurrently; each has its own cursor.
class EdgeStream {
 public:
  explicit EdgeStream(std::shared_ptr<const EdgeSource> source,
                      StreamOrder order = StreamOrder::AsGiven, std::uint64_t seed = 0);

  static EdgeStream from_edges(std::vector<Edge> edges, StreamOrder order = StreamOrder::AsGiven,
                               std::uint64_t seed = 0);
  static EdgeStream from_graph(const AdjacencyGraph& g, StreamOrder order = StreamOrder::AsGiven,
                               std::uint64_t seed = 0);

  /// Starts a pass. Counted by passes_started().
  std::unique_ptr<EdgeCursor> open_pass() const;

  template <class Fn>
  void for_each(Fn&& fn) const {
    auto cursor = open_pass();
    while (auto e = cursor->next()) fn(*e);
  }

  /// One pass collected into memory.
  std::vector<Edge> collect() const;

  std::size_t size() const noexcept { return source_->size(); }
  VertexId vertex_bound() const noexcept { return source_->vertex_bound(); }
  StreamOrder order() const noexcept { return order_; }
  std::uint64_t seed() const noexcept { return seed_; }
  const std::shared_ptr<const EdgeSource>& source() const noexcept { return source_; }

  std::size_t passes_started() const noexcept { return passes_->load(); }

 private:
  std::shared_ptr<const EdgeSource> source_;
  StreamOrder order_;
  std::uint64_t seed_;
  std::shared_ptr<const std::vector<Edge>> permuted_;
  std::shared_ptr<std::atomic<std::size_t>> passes_;
};

/// Opens an edge-list file as a stream.
EdgeStream open_stream(const std::filesystem::path& path, StreamOrder order, std::uint64_t seed,
                       const StreamOptions& options = {});

/// Peak and current number of stored edges (words). Only grows or shrinks by
/// explicit calls.
class SpaceMeter {
 public:
  void store(std::size_t edges = 1) noexcept {
    current_ += edges;
    if (current_ > max_) max_ = current_;
  }
  void release(std::size_t edges = 1) noexcept { current_ -= edges < current_ ? edges : current_; }

  std::size_t current() const noexcept { return current_; }
  std::size_t max_stored_edges() const noexcept { return max_; }

 private:
  std::size_t current_ = 0;
  std::size_t max_ = 0;
};

}  // namespace tristream
