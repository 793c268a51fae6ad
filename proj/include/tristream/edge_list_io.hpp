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

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "tristream/edge.hpp"

namespace tristream {

/// Malformed edge-list input. Carries the 1-based line number.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what);
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// The same undirected edge appeared twice in the input.
class DuplicateEdgeError : public std::runtime_error {
 public:
  explicit DuplicateEdgeError(const Edge& e);
  const Edge& edge() const noexcept { return edge_; }

 private:
  Edge edge_;
};

/// Parses one line of the edge-list format: two whitespace-separated decimal
/// ids. Comment lines ('#') and blank lines yield std::nullopt.
std::optional<Edge> parse_edge_line(std::string_view line, std::size_t line_no);

/// Pull-style reader over an edge-list text stream. Holds only the current line.
class EdgeListReader {
 public:
  explicit EdgeListReader(std::istream& in) : in_(&in) {}
  std::optional<Edge> next();
  std::size_t line() const noexcept { return line_; }

 private:
  std::istream* in_;
  std::string buffer_;
  std::size_t line_ = 0;
};

/// Reads all edges. Does not check distinctness; AdjacencyGraph and EdgeStream do.
std::vector<Edge> read_edge_list(std::istream& in);
std::vector<Edge> read_edge_list_file(const std::filesystem::path& path);

void write_edge_list(std::ostream& out, std::span<const Edge> edges);

}  // namespace tristream
