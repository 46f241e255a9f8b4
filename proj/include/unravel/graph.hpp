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

#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include <boost/rational.hpp>

namespace unravel {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;
using Rational = boost::rational<std::int64_t>;

inline constexpr std::size_t kUnreachable = std::numeric_limits<std::size_t>::max();

/// Undirected simple graph in compressed adjacency form. Neighbor lists are
/// sorted, so iteration order (and every "pick a vertex" tie-break built on
/// it) is deterministic. Immutable after construction.
class Graph {
 public:
  Graph() : offsets_(1, 0) {}

  /// Builds a graph on `vertex_count` vertices. Throws on self-loops,
  /// duplicate edges (in either orientation) and out-of-range ids.
  static Graph from_edges(std::size_t vertex_count, std::span<const Edge> edges);

  std::size_t vertex_count() const { return offsets_.size() - 1; }
  std::size_t edge_count() const { return targets_.size() / 2; }
  bool empty() const { return vertex_count() == 0; }

  std::size_t degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }
  std::size_t max_degree() const;
  std::size_t min_degree() const;

  std::span<const Vertex> neighbors(Vertex v) const {
    return {targets_.data() + offsets_[v], degree(v)};
  }

  bool has_edge(Vertex u, Vertex v) const;

  /// Index of the directed edge (u -> v) in [0, 2|E|); ordered
  /// lexicographically by (u, v). Returns -1 when u and v are not adjacent.
  std::int64_t arc_index(Vertex u, Vertex v) const;
  std::size_t arc_count() const { return targets_.size(); }
  Vertex arc_head(std::size_t arc) const { return targets_[arc]; }
  std::size_t arc_begin(Vertex v) const { return offsets_[v]; }

  /// All edges as (u, v) with u < v, sorted.
  std::vector<Edge> edges() const;

  bool valid_vertex(Vertex v) const { return v < vertex_count(); }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::size_t> offsets_;
  std::vector<Vertex> targets_;
};

/// Sorted, duplicate-free set of vertex ids.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::vector<Vertex> members);

  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  bool contains(Vertex v) const;
  const std::vector<Vertex>& members() const { return members_; }
  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  std::vector<Vertex> members_;
};

/// A derived graph together with the original id of each of its vertices.
struct Subgraph {
  Graph graph;
  std::vector<Vertex> original;  // local id -> id in the parent graph
};

struct DegreeStats {
  std::size_t min_degree = 0;
  std::size_t max_degree = 0;
  Rational average_degree{0};  // 2|E| / |V|, 0 for the empty graph
  std::map<std::size_t, std::size_t> histogram;
};

struct RobustDegree {
  Rational value{0};          // min over v of the post-deletion average degree
  Vertex witness = 0;         // smallest v attaining the minimum
  bool empties_graph = false; // some deletion left no vertices
};

struct EdgeDistance {
  std::size_t distance = 0;  // kUnreachable when the edges lie in different components
  Edge first{0, 0};
  Edge second{0, 0};
};

void check_vertex(const Graph& g, Vertex v);

/// BFS distances from `source`, truncated at `max_distance` (farther
/// vertices are reported as kUnreachable).
std::vector<std::size_t> bfs_distances(const Graph& g, Vertex source,
                                       std::size_t max_distance = kUnreachable);

VertexSet ball(const Graph& g, Vertex v, std::size_t radius);
Subgraph induced_subgraph(const Graph& g, const VertexSet& s);
Subgraph ball_subgraph(const Graph& g, Vertex v, std::size_t radius);
Subgraph delete_ball(const Graph& g, Vertex v, std::size_t radius);

Rational average_degree(const Graph& g);
DegreeStats degree_stats(const Graph& g);
RobustDegree robust_average_degree(const Graph& g, std::size_t radius);

/// Repeatedly removes vertices of degree <= 1.
Subgraph strip_leaves(const Graph& g);

/// Components in order of their smallest vertex.
std::vector<VertexSet> connected_components(const Graph& g);
bool is_forest(const Graph& g);

std::size_t distance(const Graph& g, Vertex u, Vertex v);
std::size_t eccentricity(const Graph& g, Vertex v);  // within v's component
std::size_t diameter(const Graph& g);                // max finite distance

/// Pair of edges maximizing the distance between them, where the distance
/// of two edges is the least distance between their endpoints.
EdgeDistance max_edge_distance(const Graph& g);

bool is_regular(const Graph& g);
bool is_bipartite(const Graph& g);

Graph disjoint_union(const Graph& a, const Graph& b);

}  // namespace unravel
