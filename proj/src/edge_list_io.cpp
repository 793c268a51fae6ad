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

#include "tristream/edge_list_io.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>

namespace tristream {

namespace {

std::string describe(const Edge& e) {
  return "(" + std::to_string(e.u()) + ", " + std::to_string(e.v()) + ")";
}

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

std::string_view skip_space(std::string_view s) {
  std::size_t i = 0;
  while (i < s.size() && is_space(s[i])) ++i;
  return s.substr(i);
}

VertexId parse_id(std::string_view& rest, std::size_t line_no) {
  rest = skip_space(rest);
  VertexId value = 0;
  const char* first = rest.data();
  const char* last = rest.data() + rest.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec == std::errc::result_out_of_range) throw ParseError(line_no, "vertex id out of range");
  if (ec != std::errc() || ptr == first) throw ParseError(line_no, "expected a decimal vertex id");
  if (ptr != last && !is_space(*ptr)) throw ParseError(line_no, "unexpected character after vertex id");
  rest.remove_prefix(static_cast<std::size_t>(ptr - first));
  return value;
}

}  // namespace

ParseError::ParseError(std::size_t line, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

DuplicateEdgeError::DuplicateEdgeError(const Edge& e)
    : std::runtime_error("duplicate edge " + describe(e)), edge_(e) {}

std::optional<Edge> parse_edge_line(std::string_view line, std::size_t line_no) {
  std::string_view rest = skip_space(line);
  if (rest.empty() || rest.front() == '#') return std::nullopt;
  const VertexId a = parse_id(rest, line_no);
  const VertexId b = parse_id(rest, line_no);
  if (!skip_space(rest).empty()) throw ParseError(line_no, "expected exactly two vertex ids");
  if (a == b) throw ParseError(line_no, "self-loop on vertex " + std::to_string(a));
  return Edge(a, b);
}

std::optional<Edge> EdgeListReader::next() {
  while (std::getline(*in_, buffer_)) {
    ++line_;
    if (auto e = parse_edge_line(buffer_, line_)) return e;
  }
  if (in_->bad()) throw std::runtime_error("read error after line " + std::to_string(line_));
  return std::nullopt;
}

std::vector<Edge> read_edge_list(std::istream& in) {
  std::vector<Edge> edges;
  EdgeListReader reader(in);
  while (auto e = reader.next()) edges.push_back(*e);
  return edges;
}

std::vector<Edge> read_edge_list_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  return read_edge_list(in);
}

void write_edge_list(std::ostream& out, std::span<const Edge> edges) {
  for (const Edge& e : edges) out << e.u() << ' ' << e.v() << '\n';
}

}  // namespace tristream
