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

#include "tristream/stream.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_set>

#include "tristream/edge_list_io.hpp"
#include "tristream/random.hpp"

namespace tristream {

std::size_t EdgeCursor::next_block(std::vector<Edge>& out, std::size_t max) {
  out.clear();
  while (out.size() < max) {
    auto e = next();
    if (!e) break;
    out.push_back(*e);
  }
  return out.size();
}

std::size_t StreamOptions::default_buffer_bytes() {
  if (const char* env = std::getenv("TRISTREAM_BUFFER_BYTES")) {
    try {
      const auto v = std::stoull(env);
      if (v > 0) return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
      // fall through to default
    }
  }
  return std::size_t{1} << 16;
}

namespace {

class VectorCursor final : public EdgeCursor {
 public:
  explicit VectorCursor(std::shared_ptr<const std::vector<Edge>> edges) : edges_(std::move(edges)) {}
  std::optional<Edge> next() override {
    if (pos_ >= edges_->size()) return std::nullopt;
    return (*edges_)[pos_++];
  }

 private:
  std::shared_ptr<const std::vector<Edge>> edges_;
  std::size_t pos_ = 0;
};

VertexId bound_of(const std::vector<Edge>& edges) {
  VertexId bound = 0;
  for (const Edge& e : edges) bound = std::max(bound, e.v() + 1);
  return bound;
}

class MemorySource final : public EdgeSource {
 public:
  explicit MemorySource(std::vector<Edge> edges)
      : edges_(std::make_shared<const std::vector<Edge>>(std::move(edges))), bound_(bound_of(*edges_)) {
    std::unordered_set<Edge, EdgeHash> seen;
    seen.reserve(edges_->size());
    for (const Edge& e : *edges_) {
      if (!seen.insert(e).second) throw DuplicateEdgeError(e);
    }
  }
  std::unique_ptr<EdgeCursor> open() const override { return std::make_unique<VectorCursor>(edges_); }
  std::size_t size() const override { return edges_->size(); }
  VertexId vertex_bound() const override { return bound_; }

 private:
  std::shared_ptr<const std::vector<Edge>> edges_;
  VertexId bound_;
};

class FileCursor final : public EdgeCursor {
 public:
  FileCursor(const std::filesystem::path& path, std::size_t buffer_bytes,
             std::optional<std::size_t> expected = std::nullopt)
      : path_(path), expected_(expected), buffer_(buffer_bytes), reader_(in_) {
    in_.rdbuf()->pubsetbuf(buffer_.data(), static_cast<std::streamsize>(buffer_.size()));
    in_.open(path);
    if (!in_) throw std::runtime_error("cannot open " + path.string());
  }
  std::optional<Edge> next() override {
    auto e = reader_.next();
    if (e) {
      ++read_;
    } else if (expected_ && read_ != *expected_) {
      throw std::runtime_error(path_.string() + " changed between passes");
    }
    return e;
  }

 private:
  std::filesystem::path path_;
  std::optional<std::size_t> expected_;
  std::size_t read_ = 0;
  std::vector<char> buffer_;
  std::ifstream in_;
  EdgeListReader reader_;
};

class FileSource final : public EdgeSource {
 public:
  FileSource(std::filesystem::path path, const StreamOptions& options)
      : path_(std::move(path)), buffer_bytes_(options.buffer_bytes) {
    // Every pass reopens the file, so pipes and other one-shot inputs are refused.
    std::error_code ec;
    if (std::filesystem::exists(path_, ec) && !std::filesystem::is_regular_file(path_, ec))
      throw std::runtime_error(path_.string() + " is not a regular file");
    FileCursor cursor(path_, buffer_bytes_);
    std::unordered_set<Edge, EdgeHash> seen;
    while (auto e = cursor.next()) {
      ++size_;
      bound_ = std::max(bound_, e->v() + 1);
      if (options.validate_distinct && !seen.insert(*e).second) throw DuplicateEdgeError(*e);
    }
  }
  std::unique_ptr<EdgeCursor> open() const override {
    return std::make_unique<FileCursor>(path_, buffer_bytes_, size_);
  }
  std::size_t size() const override { return size_; }
  VertexId vertex_bound() const override { return bound_; }

 private:
  std::filesystem::path path_;
  std::size_t buffer_bytes_;
  std::size_t size_ = 0;
  VertexId bound_ = 0;
};

}  // namespace

std::shared_ptr<const EdgeSource> memory_source(std::vector<Edge> edges) {
  return std::make_shared<MemorySource>(std::move(edges));
}

std::shared_ptr<const EdgeSource> file_source(const std::filesystem::path& path,
                                              const StreamOptions& options) {
  return std::make_shared<FileSource>(path, options);
}

EdgeStream::EdgeStream(std::shared_ptr<const EdgeSource> source, StreamOrder order, std::uint64_t seed)
    : source_(std::move(source)),
      order_(order),
      seed_(seed),
      passes_(std::make_shared<std::atomic<std::size_t>>(0)) {
  if (!source_) throw std::invalid_argument("EdgeStream: null source");
  if (order_ == StreamOrder::RandomPermutation) {
    std::vector<Edge> edges;
    edges.reserve(source_->size());
    auto cursor = source_->open();
    while (auto e = cursor->next()) edges.push_back(*e);
    Engine rng = make_engine(seed_);
    std::shuffle(edges.begin(), edges.end(), rng);
    permuted_ = std::make_shared<const std::vector<Edge>>(std::move(edges));
  }
}

EdgeStream EdgeStream::from_edges(std::vector<Edge> edges, StreamOrder order, std::uint64_t seed) {
  return EdgeStream(memory_source(std::move(edges)), order, seed);
}

EdgeStream EdgeStream::from_graph(const AdjacencyGraph& g, StreamOrder order, std::uint64_t seed) {
  return from_edges(g.edges(), order, seed);
}

std::unique_ptr<EdgeCursor> EdgeStream::open_pass() const {
  passes_->fetch_add(1);
  if (permuted_) return std::make_unique<VectorCursor>(permuted_);
  return source_->open();
}

std::vector<Edge> EdgeStream::collect() const {
  std::vector<Edge> out;
  out.reserve(size());
  for_each([&out](const Edge& e) { out.push_back(e); });
  return out;
}

EdgeStream open_stream(const std::filesystem::path& path, StreamOrder order, std::uint64_t seed,
                       const StreamOptions& options) {
  return EdgeStream(file_source(path, options), order, seed);
}

}  // namespace tristream
