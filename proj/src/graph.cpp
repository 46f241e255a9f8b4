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

#include "unravel/graph.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "unravel/error.hpp"

namespace unravel {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::invalid_argument: return "invalid argument";
    case ErrorCode::io: return "i/o error";
    case ErrorCode::parse: return "parse error";
    case ErrorCode::precondition: return "precondition violated";
    case ErrorCode::cap_exceeded: return "node cap exceeded";
    case ErrorCode::not_converged: return "not converged";
    case ErrorCode::retry_limit: return "retry limit exceeded";
    case ErrorCode::internal: return "internal error";
  }
  return "unknown error";
}

Graph Graph::from_edges(std::size_t vertex_count, std::span<const Edge> edges) {
  if (vertex_count > std::numeric_limits<Vertex>::max())
    throw Error(ErrorCode::invalid_argument, "too many vertices");
  std::vector<std::size_t> degree(vertex_count, 0);
  for (auto [u, v] : edges) {
    if (u >= vertex_count || v >= vertex_count)
      throw Error(ErrorCode::invalid_argument,
                  "edge (" + std::to_string(u) + ", " + std::to_string(v) +
                      ") references a vertex outside [0, " +
                      std::to_string(vertex_count) + ")");
    if (u == v)
      throw Error(ErrorCode::invalid_argument,
                  "self-loop at vertex " + std::to_string(u));
    ++degree[u];
    ++degree[v];
  }
  Graph g;
  g.offsets_.assign(vertex_count + 1, 0);
  for (std::size_t v = 0; v < vertex_count; ++v)
    g.offsets_[v + 1] = g.offsets_[v] + degree[v];
  g.targets_.resize(g.offsets_.back());
  std::vector<std::size_t> fill(g.offsets_.begin(), g.offsets_.end() - 1);
  for (auto [u, v] : edges) {
    g.targets_[fill[u]++] = v;
    g.targets_[fill[v]++] = u;
  }
  for (std::size_t v = 0; v < vertex_count; ++v) {
    auto first = g.targets_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v]);
    auto last = g.targets_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v + 1]);
    std::sort(first, last);
    if (auto dup = std::adjacent_find(first, last); dup != last)
      throw Error(ErrorCode::invalid_argument,
                  "duplicate edge (" + std::to_string(v) + ", " +
                      std::to_string(*dup) + ")");
  }
  return g;
}

std::size_t Graph::max_degree() const {
  std::size_t best = 0;
  for (std::size_t v = 0; v < vertex_count(); ++v)
    best = std::max(best, degree(static_cast<Vertex>(v)));
  return best;
}

std::size_t Graph::min_degree() const {
  if (empty()) return 0;
  std::size_t best = std::numeric_limits<std::size_t>::max();
  for (std::size_t v = 0; v < vertex_count(); ++v)
    best = std::min(best, degree(static_cast<Vertex>(v)));
  return best;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (!valid_vertex(u) || !valid_vertex(v)) return false;
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::int64_t Graph::arc_index(Vertex u, Vertex v) const {
  if (!valid_vertex(u)) return -1;
  auto nb = neighbors(u);
  auto it = std::lower_bound(nb.begin(), nb.end(), v);
  if (it == nb.end() || *it != v) return -1;
  return static_cast<std::int64_t>(offsets_[u] + static_cast<std::size_t>(it - nb.begin()));
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count());
  for (Vertex u = 0; u < vertex_count(); ++u)
    for (Vertex v : neighbors(u))
      if (u < v) out.emplace_back(u, v);
  return out;
}

VertexSet::VertexSet(std::vector<Vertex> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool VertexSet::contains(Vertex v) const {
  return std::binary_search(members_.begin(), members_.end(), v);
}

void check_vertex(const Graph& g, Vertex v) {
  if (!g.valid_vertex(v))
    throw Error(ErrorCode::invalid_argument,
                "vertex " + std::to_string(v) + " out of range for graph with " +
                    std::to_string(g.vertex_count()) + " vertices");
}

std::vector<std::size_t> bfs_distances(const Graph& g, Vertex source,
                                       std::size_t max_distance) {
  check_vertex(g, source);
  std::vector<std::size_t> dist(g.vertex_count(), kUnreachable);
  std::vector<Vertex> frontier{source};
  dist[source] = 0;
  for (std::size_t head = 0; head < frontier.size(); ++head) {
    Vertex u = frontier[head];
    if (dist[u] == max_distance) continue;
    for (Vertex w : g.neighbors(u)) {
      if (dist[w] != kUnreachable) continue;
      dist[w] = dist[u] + 1;
      frontier.push_back(w);
    }
  }
  return dist;
}

VertexSet ball(const Graph& g, Vertex v, std::size_t radius) {
  auto dist = bfs_distances(g, v, radius);
  std::vector<Vertex> members;
  for (Vertex u = 0; u < g.vertex_count(); ++u)
    if (dist[u] != kUnreachable) members.push_back(u);
  return VertexSet(std::move(members));
}

Subgraph induced_subgraph(const Graph& g, const VertexSet& s) {
  constexpr Vertex kAbsent = std::numeric_limits<Vertex>::max();
  std::vector<Vertex> local(g.vertex_count(), kAbsent);
  Subgraph out;
  out.original.reserve(s.size());
  for (Vertex v : s) {
    check_vertex(g, v);
    local[v] = static_cast<Vertex>(out.original.size());
    out.original.push_back(v);
  }
  std::vector<Edge> edges;
  for (Vertex v : s)
    for (Vertex w : g.neighbors(v))
      if (v < w && local[w] != kAbsent) edges.emplace_back(local[v], local[w]);
  out.graph = Graph::from_edges(out.original.size(), edges);
  return out;
}

Subgraph ball_subgraph(const Graph& g, Vertex v, std::size_t radius) {
  return induced_subgraph(g, ball(g, v, radius));
}

Subgraph delete_ball(const Graph& g, Vertex v, std::size_t radius) {
  auto dist = bfs_distances(g, v, radius);
  std::vector<Vertex> keep;
  for (Vertex u = 0; u < g.vertex_count(); ++u)
    if (dist[u] == kUnreachable) keep.push_back(u);
  return induced_subgraph(g, VertexSet(std::move(keep)));
}

Rational average_degree(const Graph& g) {
  if (g.empty()) return Rational(0);
  return Rational(static_cast<std::int64_t>(2 * g.edge_count()),
                  static_cast<std::int64_t>(g.vertex_count()));
}

DegreeStats degree_stats(const Graph& g) {
  DegreeStats stats;
  stats.min_degree = g.min_degree();
  stats.max_degree = g.max_degree();
  stats.average_degree = average_degree(g);
  for (Vertex v = 0; v < g.vertex_count(); ++v) ++stats.histogram[g.degree(v)];
  return stats;
}

RobustDegree robust_average_degree(const Graph& g, std::size_t radius) {
  RobustDegree out;
  if (g.empty()) {
    out.empties_graph = true;
    return out;
  }
  const auto n = static_cast<std::int64_t>(g.vertex_count());
  const auto m = static_cast<std::int64_t>(g.edge_count());
  bool first = true;
  std::vector<char> inside(g.vertex_count(), 0);
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    auto members = ball(g, v, radius);
    for (Vertex u : members) inside[u] = 1;
    // Edges touching the ball: internal ones are seen twice.
    std::int64_t internal2 = 0, boundary = 0;
    for (Vertex u : members)
      for (Vertex w : g.neighbors(u)) (inside[w] ? internal2 : boundary) += 1;
    for (Vertex u : members) inside[u] = 0;
    const std::int64_t kept_vertices = n - static_cast<std::int64_t>(members.size());
    const std::int64_t kept_edges = m - internal2 / 2 - boundary;
    Rational avg(0);
    if (kept_vertices == 0)
      out.empties_graph = true;
    else
      avg = Rational(2 * kept_edges, kept_vertices);
    if (first || avg < out.value) {
      out.value = avg;
      out.witness = v;
      first = false;
    }
  }
  return out;
}

Subgraph strip_leaves(const Graph& g) {
  std::vector<std::size_t> degree(g.vertex_count());
  std::vector<char> removed(g.vertex_count(), 0);
  std::deque<Vertex> queue;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    degree[v] = g.degree(v);
    if (degree[v] <= 1) {
      removed[v] = 1;
      queue.push_back(v);
    }
  }
  while (!queue.empty()) {
    Vertex v = queue.front();
    queue.pop_front();
    for (Vertex w : g.neighbors(v)) {
      if (removed[w]) continue;
      if (--degree[w] <= 1) {
        removed[w] = 1;
        queue.push_back(w);
      }
    }
  }
  std::vector<Vertex> keep;
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (!removed[v]) keep.push_back(v);
  return induced_subgraph(g, VertexSet(std::move(keep)));
}

std::vector<VertexSet> connected_components(const Graph& g) {
  std::vector<VertexSet> out;
  std::vector<char> seen(g.vertex_count(), 0);
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < g.vertex_count(); ++s) {
    if (seen[s]) continue;
    std::vector<Vertex> members;
    seen[s] = 1;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex u = stack.back();
      stack.pop_back();
      members.push_back(u);
      for (Vertex w : g.neighbors(u))
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
    }
    out.emplace_back(std::move(members));
  }
  return out;
}

bool is_forest(const Graph& g) {
  return g.edge_count() + connected_components(g).size() == g.vertex_count();
}

std::size_t distance(const Graph& g, Vertex u, Vertex v) {
  check_vertex(g, v);
  return bfs_distances(g, u)[v];
}

std::size_t eccentricity(const Graph& g, Vertex v) {
  std::size_t best = 0;
  for (auto d : bfs_distances(g, v))
    if (d != kUnreachable) best = std::max(best, d);
  return best;
}

std::size_t diameter(const Graph& g) {
  std::size_t best = 0;
  for (Vertex v = 0; v < g.vertex_count(); ++v) best = std::max(best, eccentricity(g, v));
  return best;
}

EdgeDistance max_edge_distance(const Graph& g) {
  EdgeDistance best;
  bool found = false;
  const auto edges = g.edges();
  std::vector<std::size_t> dist(g.vertex_count());
  std::vector<Vertex> frontier;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    std::fill(dist.begin(), dist.end(), kUnreachable);
    frontier.clear();
    for (Vertex s : {edges[i].first, edges[i].second}) {
      dist[s] = 0;
      frontier.push_back(s);
    }
    for (std::size_t head = 0; head < frontier.size(); ++head) {
      Vertex u = frontier[head];
      for (Vertex w : g.neighbors(u))
        if (dist[w] == kUnreachable) {
          dist[w] = dist[u] + 1;
          frontier.push_back(w);
        }
    }
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      const std::size_t d = std::min(dist[edges[j].first], dist[edges[j].second]);
      if (!found || d > best.distance) {
        best = {d, edges[i], edges[j]};
        found = true;
        if (d == kUnreachable) return best;
      }
    }
  }
  return best;
}

bool is_regular(const Graph& g) { return g.empty() || g.min_degree() == g.max_degree(); }

bool is_bipartite(const Graph& g) {
  std::vector<int> side(g.vertex_count(), -1);
  std::vector<Vertex> frontier;
  for (Vertex s = 0; s < g.vertex_count(); ++s) {
    if (side[s] != -1) continue;
    side[s] = 0;
    frontier.assign(1, s);
    for (std::size_t head = 0; head < frontier.size(); ++head) {
      Vertex u = frontier[head];
      for (Vertex w : g.neighbors(u)) {
        if (side[w] == -1) {
          side[w] = 1 - side[u];
          frontier.push_back(w);
        } else if (side[w] == side[u]) {
          return false;
        }
      }
    }
  }
  return true;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  auto edges = a.edges();
  const auto shift = static_cast<Vertex>(a.vertex_count());
  for (auto [u, v] : b.edges()) edges.emplace_back(u + shift, v + shift);
  return Graph::from_edges(a.vertex_count() + b.vertex_count(), edges);
}

}  // namespace unravel
