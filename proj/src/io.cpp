// Copyright 2026 The unravel Authors
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

#include "unravel/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string_view>

#include "unravel/error.hpp"

namespace unravel {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

bool parse_uint(std::string_view token, std::uint64_t& value) {
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  return ec == std::errc() && ptr == token.data() + token.size();
}

[[noreturn]] void parse_error(std::size_t line, const std::string& msg) {
  throw Error(ErrorCode::parse, "line " + std::to_string(line) + ": " + msg);
}

}  // namespace

Graph read_edge_list(std::istream& in) {
  std::vector<Edge> edges;
  std::uint64_t declared = 0;
  bool has_declared = false;
  std::uint64_t max_id = 0;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = trim(raw);
    if (line.empty()) continue;
    if (line.front() == '#') {
      auto body = trim(line.substr(1));
      constexpr std::string_view kKey = "vertices:";
      if (body.starts_with(kKey)) {
        if (!parse_uint(trim(body.substr(kKey.size())), declared))
          parse_error(line_no, "malformed vertex count");
        has_declared = true;
      }
      continue;
    }
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = trim(line.substr(0, hash));
    std::istringstream fields{std::string(line)};
    std::string a, b, extra;
    std::uint64_t u = 0, v = 0;
    if (!(fields >> a >> b) || (fields >> extra) || !parse_uint(a, u) || !parse_uint(b, v))
      parse_error(line_no, "expected \"u v\", got \"" + std::string(line) + "\"");
    if (u > std::numeric_limits<Vertex>::max() - 1 || v > std::numeric_limits<Vertex>::max() - 1)
      parse_error(line_no, "vertex id too large");
    max_id = std::max({max_id, u, v});
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  std::uint64_t n = edges.empty() ? 0 : max_id + 1;
  if (has_declared) {
    if (declared < n)
      throw Error(ErrorCode::parse, "declared vertex count " + std::to_string(declared) +
                                        " is smaller than the ids used");
    n = declared;
  }
  try {
    return Graph::from_edges(n, edges);
  } catch (const Error& e) {
    throw Error(ErrorCode::parse, e.what());
  }
}

void write_edge_list(std::ostream& out, const Graph& g) {
  const auto edges = g.edges();
  Vertex top = 0;
  for (auto [u, v] : edges) top = std::max(top, v);
  // only needed when trailing vertices are isolated
  if (edges.empty() ? g.vertex_count() > 0 : top + 1u != g.vertex_count())
    out << "# vertices: " << g.vertex_count() << '\n';
  for (auto [u, v] : edges) out << u << ' ' << v << '\n';
}

Graph graph_from_json(const nlohmann::json& j) {
  try {
    const auto n = j.at("vertex_count").get<std::size_t>();
    const auto& adjacency = j.at("adjacency");
    if (!adjacency.is_array() || adjacency.size() != n)
      throw Error(ErrorCode::parse, "adjacency must list exactly vertex_count rows");
    std::vector<Edge> edges;
    for (std::size_t u = 0; u < n; ++u)
      for (const auto& item : adjacency[u]) {
        const auto v = item.get<std::size_t>();
        if (v >= n) throw Error(ErrorCode::parse, "neighbor id out of range");
        if (u < v) edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
      }
    Graph g = Graph::from_edges(n, edges);
    for (std::size_t u = 0; u < n; ++u)
      if (adjacency[u].size() != g.degree(static_cast<Vertex>(u)))
        throw Error(ErrorCode::parse, "adjacency is not symmetric at vertex " + std::to_string(u));
    if (j.contains("edge_count") && j["edge_count"].get<std::size_t>() != g.edge_count())
      throw Error(ErrorCode::parse, "edge_count does not match adjacency");
    return g;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::parse, e.what());
  } catch (const Error& e) {
    if (e.code() == ErrorCode::parse) throw;
    throw Error(ErrorCode::parse, e.what());
  }
}

nlohmann::json graph_to_json(const Graph& g) {
  nlohmann::json adjacency = nlohmann::json::array();
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    auto nb = g.neighbors(v);
    adjacency.push_back(std::vector<Vertex>(nb.begin(), nb.end()));
  }
  return {{"vertex_count", g.vertex_count()},
          {"edge_count", g.edge_count()},
          {"adjacency", std::move(adjacency)}};
}

Graph load_graph(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::io, "cannot open " + path.string());
  try {
    if (path.extension() == ".json") {
      nlohmann::json j;
      try {
        in >> j;
      } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::parse, e.what());
      }
      return graph_from_json(j);
    }
    return read_edge_list(in);
  } catch (const Error& e) {
    throw Error(e.code(), path.string() + ": " + e.what());
  }
}

void save_graph(const std::filesystem::path& path, const Graph& g) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::io, "cannot write " + path.string());
  if (path.extension() == ".json")
    out << graph_to_json(g).dump() << '\n';
  else
    write_edge_list(out, g);
  if (!out) throw Error(ErrorCode::io, "write failed for " + path.string());
}

}  // namespace unravel
