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
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "unravel/graph.hpp"
#include "unravel/spectral.hpp"

namespace unravel {

using BigRational = boost::multiprecision::cpp_rational;

inline constexpr std::uint64_t kDefaultBallCap = 1'000'000;
inline constexpr std::uint64_t kDefaultForestCap = 10'000'000;

struct DirectedEdge {
  Vertex tail = 0;
  Vertex head = 0;
  friend auto operator<=>(const DirectedEdge&, const DirectedEdge&) = default;
};

/// Walk (v0, ..., vi); non-backtracking when v_j != v_{j+2} for all j.
struct NbWalk {
  std::vector<Vertex> vertices;
  std::size_t length() const { return vertices.empty() ? 0 : vertices.size() - 1; }
};

bool is_non_backtracking_walk(const Graph& g, std::span<const Vertex> walk);

/// Tree of non-backtracking walks sharing a first vertex. Node 0 is the
/// trivial walk; every other node extends its parent by one step. Nodes are
/// in DFS preorder, so parents precede children.
struct WalkTree {
  std::vector<std::int64_t> parent;
  std::vector<Vertex> label;  // terminal vertex of the walk
  std::vector<std::uint32_t> depth;

  std::size_t size() const { return parent.size(); }
  NbWalk walk(std::size_t node) const;
  Graph as_graph() const;
};

/// Number of non-backtracking walks from v of length <= max_length
/// (saturating at 2^64 - 1).
std::uint64_t count_nb_walks(const Graph& g, Vertex v, std::size_t max_length);

/// All non-backtracking walks from v of length <= max_length. Throws
/// CapExceeded (carrying the full count) when there are more than `cap`.
WalkTree enumerate_nb_walks(const Graph& g, Vertex v, std::size_t max_length,
                            std::uint64_t cap = kDefaultBallCap);

/// Ball of radius r about v in the universal cover.
struct UnraveledBall {
  Vertex center = 0;
  std::size_t radius = 0;
  WalkTree tree;

  std::size_t node_count() const { return tree.size(); }
};

UnraveledBall unraveled_ball(const Graph& g, Vertex v, std::size_t radius,
                             std::uint64_t cap = kDefaultBallCap);

/// Writes the tree as an edge list plus a "node,vertex" label sidecar.
void export_unraveled_ball(const UnraveledBall& ball, std::ostream& edges, std::ostream& labels);

/// Isomorphism classes of the rooted subtrees of the universal cover.
///
/// The subtree hanging below a directed edge (p -> u) with h more levels is
/// determined by the classes of (u -> w), w != p, at height h - 1, so
/// classes are interned bottom-up (AHU style) and every unraveled ball and
/// every walk-forest component is a class id. Spectral radii are computed
/// once per class on the compressed DAG with the same inertia bisection as
/// tree_spectral_radius().
class CoverShapes {
 public:
  using ShapeId = std::uint32_t;

  CoverShapes(const Graph& g, std::size_t max_height);

  std::size_t max_height() const { return arc_shapes_.size() - 1; }
  ShapeId arc_shape(std::size_t arc, std::size_t height) const { return arc_shapes_[height][arc]; }
  /// Class of the unraveled ball of the given radius (<= max_height + 1).
  ShapeId ball_shape(Vertex v, std::size_t radius);

  std::uint64_t node_count(ShapeId s) const { return counts_[s]; }
  double spectral_radius(ShapeId s);
  std::size_t shape_count() const { return children_.size(); }

 private:
  ShapeId intern(std::vector<ShapeId> children);

  Graph graph_;
  std::vector<std::vector<ShapeId>> arc_shapes_;  // [height][arc]
  std::vector<std::vector<ShapeId>> children_;
  std::vector<std::uint64_t> counts_;
  std::map<std::vector<ShapeId>, ShapeId> index_;
  std::vector<double> radius_;
};

struct MaxUnraveled {
  Vertex witness = 0;
  double value = 0.0;
  bool found = false;             // false when every vertex hit the cap
  std::vector<double> per_vertex; // NaN where the ball exceeded the cap
  std::size_t capped = 0;
};

/// argmax over v of lambda_1 of the radius-r unraveled ball, smallest id on
/// ties. Vertices whose ball has more than `cap` nodes are skipped.
MaxUnraveled find_max_unraveled_vertex(const Graph& g, std::size_t radius,
                                       std::uint64_t cap = kDefaultBallCap);

enum class ProbabilityPath { rational, log_space };

/// One explicit component T_e of the walk forest.
struct ForestComponent {
  DirectedEdge root;
  std::vector<std::int64_t> parent;
  std::vector<Vertex> previous;  // second-to-last vertex of the walk
  std::vector<Vertex> terminal;
  std::vector<std::uint32_t> level;  // walk length, 1..r+1
  /// P(Y_i = w) = 1 / denominator on the rational path; zero otherwise.
  std::vector<unsigned __int128> denominator;
  std::vector<double> log_probability;
  std::vector<double> f;

  std::size_t size() const { return parent.size(); }
  NbWalk walk(std::size_t node) const;
};

struct TestVectorTerms {
  long double self = 0;   // <f, f>
  long double cross = 0;  // <f, A f>
  std::vector<long double> level_mass;  // sum of P(Y_i = w) per level i = 1..r+1
  double quotient() const { return static_cast<double>(cross / self); }
};

struct ForestMarginals {
  std::vector<BigRational> level_mass;                       // [i - 1]
  std::vector<std::map<DirectedEdge, BigRational>> by_arc;   // last directed edge
  std::vector<std::map<Vertex, BigRational>> by_terminal;    // terminal vertex
};

/// Forest on all non-backtracking walks of length 1..r+1, where a walk is
/// joined to its one-step extensions. Components are rooted at directed
/// edges and regenerated by DFS on demand instead of being stored.
///
/// The walk probabilities are those of the non-backtracking chain started
/// from a uniform directed edge: extending a walk ending at u (and not
/// turning back) has probability 1 / (d(u) - 1). The test vector is
/// f(w) = x_i sqrt(P(Y_i = w)) with x the top eigenvector of the path on
/// r + 1 vertices.
class WalkForest {
 public:
  /// Requires minimum degree >= 2 and at most `cap` nodes. The rational
  /// path is chosen when every denominator fits in 126 bits; `path`
  /// overrides the choice (forcing rational on a graph that does not fit
  /// throws).
  static WalkForest build(const Graph& g, std::size_t radius, std::uint64_t cap = kDefaultForestCap,
                          std::optional<ProbabilityPath> path = std::nullopt);

  const Graph& graph() const { return graph_; }
  std::size_t radius() const { return radius_; }
  std::size_t root_count() const { return graph_.arc_count(); }
  std::uint64_t node_count() const { return node_count_; }
  ProbabilityPath probability_path() const { return path_; }
  const std::vector<double>& path_vector() const { return x_; }
  double path_lambda() const;

  std::vector<DirectedEdge> roots() const;
  ForestComponent component(std::size_t arc) const;

  TestVectorTerms test_vector_terms() const;
  /// Exact probability sums; rational path only.
  ForestMarginals exact_marginals() const;

 private:
  WalkForest() = default;

  Graph graph_;
  std::size_t radius_ = 0;
  std::uint64_t node_count_ = 0;
  ProbabilityPath path_ = ProbabilityPath::rational;
  std::vector<double> x_;
};

/// <f, A f> / <f, f> over the forest.
double test_vector_rayleigh(const WalkForest& forest);

struct ForestRadius {
  double value = 0.0;
  DirectedEdge witness;
};

/// max over components of lambda_1(T_e); smallest directed edge on ties.
ForestRadius forest_spectral_radius(const WalkForest& forest);

/// Maps node (v0, v1, ..., vi) of `component` to node (v1, ..., vi) of
/// `target`, which must be an unraveled ball about v1 of radius >= r.
std::vector<std::size_t> embed_in_unraveled_ball(const ForestComponent& component,
                                                 const UnraveledBall& target);

struct InjectionCheck {
  bool holds = true;
  std::vector<BigInt> ball_counts;   // closed walks at v in G(v, r)
  std::vector<BigInt> cover_counts;  // closed walks at the root of the unraveled ball
};

/// Compares closed-walk counts at v in the ball G(v, r) and at the root of
/// the unraveled ball, for every length k <= max_length.
InjectionCheck closed_walk_injection_check(const Graph& g, Vertex v, std::size_t radius,
                                           std::size_t max_length, std::uint64_t cap = 5000);

}  // namespace unravel
