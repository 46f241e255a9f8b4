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

#include "unravel/cover.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <ostream>
#include <string>

#include "unravel/error.hpp"

namespace unravel {
namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) { return a > kSaturated - b ? kSaturated : a + b; }

std::vector<Vertex> arc_tails(const Graph& g) {
  std::vector<Vertex> tails(g.arc_count());
  for (Vertex u = 0; u < g.vertex_count(); ++u)
    for (std::size_t a = g.arc_begin(u); a < g.arc_begin(u) + g.degree(u); ++a) tails[a] = u;
  return tails;
}

// counts[h][a]: non-backtracking walks that start with arc a and take at
// most h further steps.
std::vector<std::vector<std::uint64_t>> arc_walk_counts(const Graph& g, std::size_t max_height) {
  const auto tails = arc_tails(g);
  std::vector<std::vector<std::uint64_t>> counts(max_height + 1,
                                                 std::vector<std::uint64_t>(g.arc_count(), 1));
  for (std::size_t h = 1; h <= max_height; ++h)
    for (std::size_t a = 0; a < g.arc_count(); ++a) {
      const Vertex u = g.arc_head(a);
      std::uint64_t total = 1;
      for (std::size_t b = g.arc_begin(u); b < g.arc_begin(u) + g.degree(u); ++b)
        if (g.arc_head(b) != tails[a]) total = sat_add(total, counts[h - 1][b]);
      counts[h][a] = total;
    }
  return counts;
}

NbWalk walk_from_parents(std::span<const std::int64_t> parent, std::span<const Vertex> label,
                         std::size_t node, std::vector<Vertex> prefix = {}) {
  std::vector<Vertex> rev;
  for (auto i = static_cast<std::int64_t>(node); i >= 0; i = parent[static_cast<std::size_t>(i)])
    rev.push_back(label[static_cast<std::size_t>(i)]);
  NbWalk w{std::move(prefix)};
  w.vertices.insert(w.vertices.end(), rev.rbegin(), rev.rend());
  return w;
}

struct ForestFrame {
  Vertex previous;
  Vertex current;
  std::uint32_t level;
  unsigned __int128 denominator;
  long double log_probability;
  long double parent_f;
  std::int64_t parent;
};

struct ForestNode {
  const ForestFrame& frame;
  long double f;
};

// DFS over the component rooted at `arc`; `visit(node)` returns the index
// to record as the parent of the node's children.
template <class Visit>
void walk_component(const Graph& g, std::size_t arc, Vertex tail, std::size_t radius,
                    ProbabilityPath path, std::span<const double> x, Visit&& visit) {
  const auto arcs = static_cast<unsigned __int128>(g.arc_count());
  std::vector<ForestFrame> stack;
  stack.push_back({tail, g.arc_head(arc), 1, arcs, -std::log(static_cast<long double>(g.arc_count())),
                   0.0L, -1});
  while (!stack.empty()) {
    const ForestFrame frame = stack.back();
    stack.pop_back();
    const long double xi = x[frame.level - 1];
    const long double f = path == ProbabilityPath::rational
                              ? xi / std::sqrt(static_cast<long double>(frame.denominator))
                              : xi * std::exp(0.5L * frame.log_probability);
    const std::int64_t index = visit(ForestNode{frame, f});
    if (frame.level == radius + 1) continue;
    const Vertex u = frame.current;
    const auto branching = static_cast<std::uint64_t>(g.degree(u) - 1);
    unsigned __int128 denominator = 0;
    if (path == ProbabilityPath::rational) {
      if (frame.denominator > std::numeric_limits<unsigned __int128>::max() / branching)
        throw Error(ErrorCode::internal, "walk probability denominator overflow");
      denominator = frame.denominator * branching;
    }
    const long double log_p = frame.log_probability - std::log(static_cast<long double>(branching));
    auto nb = g.neighbors(u);
    for (auto it = nb.rbegin(); it != nb.rend(); ++it)
      if (*it != frame.previous)
        stack.push_back({u, *it, frame.level + 1, denominator, log_p, f, index});
  }
}

// Bisection on lambda for a rooted tree presented as a DAG of shared
// subtrees: `order` lists the distinct subtrees children-first and
// children[k] holds positions (with multiplicity) into `order`.
double dag_spectral_radius(const std::vector<std::vector<std::uint32_t>>& children) {
  const std::size_t n = children.size();
  if (n == 1) return 0.0;
  std::size_t max_children = 0, max_degree = 0;
  for (std::size_t k = 0; k < n; ++k) {
    max_children = std::max(max_children, children[k].size());
    max_degree = std::max(max_degree, children[k].size() + (k + 1 == n ? 0 : 1));
  }
  std::vector<double> pivot(n);
  auto positive_definite = [&](double lambda) {
    for (std::size_t k = 0; k < n; ++k) {
      double g = lambda;
      for (auto c : children[k]) {
        if (!(pivot[c] > 0.0)) return false;
        g -= 1.0 / pivot[c];
      }
      pivot[k] = g;
    }
    return pivot[n - 1] > 0.0;
  };
  double lo = std::sqrt(static_cast<double>(max_children));
  double hi = static_cast<double>(max_degree) + 1.0;
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    (positive_definite(mid) ? hi : lo) = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

bool is_non_backtracking_walk(const Graph& g, std::span<const Vertex> walk) {
  for (Vertex v : walk)
    if (!g.valid_vertex(v)) return false;
  for (std::size_t j = 0; j + 1 < walk.size(); ++j)
    if (!g.has_edge(walk[j], walk[j + 1])) return false;
  for (std::size_t j = 0; j + 2 < walk.size(); ++j)
    if (walk[j] == walk[j + 2]) return false;
  return true;
}

NbWalk WalkTree::walk(std::size_t node) const { return walk_from_parents(parent, label, node); }

Graph WalkTree::as_graph() const {
  std::vector<Edge> edges;
  edges.reserve(size());
  for (std::size_t i = 1; i < size(); ++i)
    edges.emplace_back(static_cast<Vertex>(parent[i]), static_cast<Vertex>(i));
  return Graph::from_edges(size(), edges);
}

std::uint64_t count_nb_walks(const Graph& g, Vertex v, std::size_t max_length) {
  check_vertex(g, v);
  if (max_length == 0) return 1;
  const auto counts = arc_walk_counts(g, max_length - 1);
  std::uint64_t total = 1;
  for (std::size_t a = g.arc_begin(v); a < g.arc_begin(v) + g.degree(v); ++a)
    total = sat_add(total, counts[max_length - 1][a]);
  return total;
}

WalkTree enumerate_nb_walks(const Graph& g, Vertex v, std::size_t max_length, std::uint64_t cap) {
  if (cap == 0) throw Error(ErrorCode::invalid_argument, "enumerate_nb_walks: cap must be positive");
  const std::uint64_t total = count_nb_walks(g, v, max_length);
  if (total > cap)
    throw CapExceeded("non-backtracking walks from " + std::to_string(v) + " up to length " +
                          std::to_string(max_length) + ": " + std::to_string(total) +
                          " nodes exceed cap " + std::to_string(cap),
                      total);
  WalkTree tree;
  tree.parent.reserve(total);
  tree.label.reserve(total);
  tree.depth.reserve(total);
  struct Frame {
    std::int64_t parent;
    Vertex label;
    std::uint32_t depth;
  };
  constexpr Vertex kNone = std::numeric_limits<Vertex>::max();
  std::vector<Frame> stack{{-1, v, 0}};
  while (!stack.empty()) {
    const Frame frame = stack.back();
    stack.pop_back();
    const auto index = static_cast<std::int64_t>(tree.size());
    tree.parent.push_back(frame.parent);
    tree.label.push_back(frame.label);
    tree.depth.push_back(frame.depth);
    if (frame.depth == max_length) continue;
    const Vertex previous = frame.parent < 0 ? kNone : tree.label[static_cast<std::size_t>(frame.parent)];
    auto nb = g.neighbors(frame.label);
    for (auto it = nb.rbegin(); it != nb.rend(); ++it)
      if (*it != previous) stack.push_back({index, *it, frame.depth + 1});
  }
  return tree;
}

UnraveledBall unraveled_ball(const Graph& g, Vertex v, std::size_t radius, std::uint64_t cap) {
  return {v, radius, enumerate_nb_walks(g, v, radius, cap)};
}

void export_unraveled_ball(const UnraveledBall& ball, std::ostream& edges, std::ostream& labels) {
  edges << "# unraveled ball center=" << ball.center << " radius=" << ball.radius << '\n';
  edges << "# vertices: " << ball.node_count() << '\n';
  for (std::size_t i = 1; i < ball.node_count(); ++i) edges << ball.tree.parent[i] << ' ' << i << '\n';
  labels << "node,vertex\n";
  for (std::size_t i = 0; i < ball.node_count(); ++i) labels << i << ',' << ball.tree.label[i] << '\n';
}

CoverShapes::CoverShapes(const Graph& g, std::size_t max_height) : graph_(g) {
  const ShapeId leaf = intern({});
  arc_shapes_.assign(max_height + 1, std::vector<ShapeId>(g.arc_count(), leaf));
  const auto tails = arc_tails(g);
  std::vector<ShapeId> kids;
  for (std::size_t h = 1; h <= max_height; ++h)
    for (std::size_t a = 0; a < g.arc_count(); ++a) {
      const Vertex u = g.arc_head(a);
      kids.clear();
      for (std::size_t b = g.arc_begin(u); b < g.arc_begin(u) + g.degree(u); ++b)
        if (g.arc_head(b) != tails[a]) kids.push_back(arc_shapes_[h - 1][b]);
      arc_shapes_[h][a] = intern(kids);
    }
}

CoverShapes::ShapeId CoverShapes::intern(std::vector<ShapeId> children) {
  std::sort(children.begin(), children.end());
  if (auto it = index_.find(children); it != index_.end()) return it->second;
  const auto id = static_cast<ShapeId>(children_.size());
  std::uint64_t count = 1;
  for (ShapeId c : children) count = sat_add(count, counts_[c]);
  counts_.push_back(count);
  radius_.push_back(std::numeric_limits<double>::quiet_NaN());
  index_.emplace(children, id);
  children_.push_back(std::move(children));
  return id;
}

CoverShapes::ShapeId CoverShapes::ball_shape(Vertex v, std::size_t radius) {
  check_vertex(graph_, v);
  if (radius == 0) return intern({});
  if (radius - 1 > max_height())
    throw Error(ErrorCode::invalid_argument, "ball_shape: radius exceeds precomputed height");
  std::vector<ShapeId> kids;
  for (std::size_t a = graph_.arc_begin(v); a < graph_.arc_begin(v) + graph_.degree(v); ++a)
    kids.push_back(arc_shapes_[radius - 1][a]);
  return intern(std::move(kids));
}

double CoverShapes::spectral_radius(ShapeId s) {
  if (!std::isnan(radius_[s])) return radius_[s];
  // Distinct subtrees reachable from s; ids increase from children to parents.
  std::vector<ShapeId> reachable{s};
  std::vector<char> seen(children_.size(), 0);
  seen[s] = 1;
  for (std::size_t head = 0; head < reachable.size(); ++head)
    for (ShapeId c : children_[reachable[head]])
      if (!seen[c]) {
        seen[c] = 1;
        reachable.push_back(c);
      }
  std::sort(reachable.begin(), reachable.end());
  std::vector<std::uint32_t> position(children_.size(), 0);
  for (std::size_t k = 0; k < reachable.size(); ++k) position[reachable[k]] = static_cast<std::uint32_t>(k);
  std::vector<std::vector<std::uint32_t>> local(reachable.size());
  for (std::size_t k = 0; k < reachable.size(); ++k)
    for (ShapeId c : children_[reachable[k]]) local[k].push_back(position[c]);
  radius_[s] = dag_spectral_radius(local);
  return radius_[s];
}

MaxUnraveled find_max_unraveled_vertex(const Graph& g, std::size_t radius, std::uint64_t cap) {
  MaxUnraveled out;
  out.per_vertex.assign(g.vertex_count(), std::numeric_limits<double>::quiet_NaN());
  if (g.empty()) return out;
  CoverShapes shapes(g, radius == 0 ? 0 : radius - 1);
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    const auto s = shapes.ball_shape(v, radius);
    if (shapes.node_count(s) > cap) {
      ++out.capped;
      continue;
    }
    const double value = shapes.spectral_radius(s);
    out.per_vertex[v] = value;
    if (!out.found || value > out.value) {
      out.value = value;
      out.witness = v;
      out.found = true;
    }
  }
  return out;
}

NbWalk ForestComponent::walk(std::size_t node) const {
  return walk_from_parents(parent, terminal, node, {root.tail});
}

WalkForest WalkForest::build(const Graph& g, std::size_t radius, std::uint64_t cap,
                             std::optional<ProbabilityPath> path) {
  if (g.empty() || g.min_degree() < 2)
    throw Error(ErrorCode::precondition, "walk forest requires minimum degree >= 2");
  const auto counts = arc_walk_counts(g, radius);
  std::uint64_t total = 0;
  for (auto c : counts[radius]) total = sat_add(total, c);
  if (total > cap)
    throw CapExceeded("walk forest of radius " + std::to_string(radius) + ": " + std::to_string(total) +
                          " nodes exceed cap " + std::to_string(cap),
                      total);
  WalkForest forest;
  forest.graph_ = g;
  forest.radius_ = radius;
  forest.node_count_ = total;
  forest.x_ = path_eigenvector(radius + 1);
  const double bits = std::log2(static_cast<double>(g.arc_count())) +
                      static_cast<double>(radius) * std::log2(static_cast<double>(g.max_degree() - 1));
  forest.path_ = bits < 126.0 ? ProbabilityPath::rational : ProbabilityPath::log_space;
  if (path) {
    if (*path == ProbabilityPath::rational && forest.path_ != ProbabilityPath::rational)
      throw Error(ErrorCode::precondition, "walk probabilities do not fit 128-bit denominators");
    forest.path_ = *path;
  }
  return forest;
}

double WalkForest::path_lambda() const { return path_spectral_radius(radius_ + 1); }

std::vector<DirectedEdge> WalkForest::roots() const {
  std::vector<DirectedEdge> out;
  out.reserve(root_count());
  const auto tails = arc_tails(graph_);
  for (std::size_t a = 0; a < graph_.arc_count(); ++a) out.push_back({tails[a], graph_.arc_head(a)});
  return out;
}

ForestComponent WalkForest::component(std::size_t arc) const {
  if (arc >= root_count()) throw Error(ErrorCode::invalid_argument, "component: arc out of range");
  const Vertex tail = arc_tails(graph_)[arc];
  ForestComponent c;
  c.root = {tail, graph_.arc_head(arc)};
  walk_component(graph_, arc, tail, radius_, path_, x_, [&](const ForestNode& node) {
    const auto index = static_cast<std::int64_t>(c.parent.size());
    c.parent.push_back(node.frame.parent);
    c.previous.push_back(node.frame.previous);
    c.terminal.push_back(node.frame.current);
    c.level.push_back(node.frame.level);
    c.denominator.push_back(node.frame.denominator);
    c.log_probability.push_back(static_cast<double>(node.frame.log_probability));
    c.f.push_back(static_cast<double>(node.f));
    return index;
  });
  return c;
}

namespace {

// Neumaier summation.
struct Accumulator {
  long double sum = 0, compensation = 0;
  void add(long double v) {
    const long double t = sum + v;
    if (std::fabs(sum) >= std::fabs(v))
      compensation += (sum - t) + v;
    else
      compensation += (v - t) + sum;
    sum = t;
  }
  long double value() const { return sum + compensation; }
};

}  // namespace

TestVectorTerms WalkForest::test_vector_terms() const {
  Accumulator self, cross;
  std::vector<Accumulator> mass(radius_ + 1);
  const auto tails = arc_tails(graph_);
  for (std::size_t a = 0; a < root_count(); ++a)
    walk_component(graph_, a, tails[a], radius_, path_, x_, [&](const ForestNode& node) {
      self.add(node.f * node.f);
      if (node.frame.parent >= 0) cross.add(2.0L * node.frame.parent_f * node.f);
      const long double p = path_ == ProbabilityPath::rational
                                ? 1.0L / static_cast<long double>(node.frame.denominator)
                                : std::exp(node.frame.log_probability);
      mass[node.frame.level - 1].add(p);
      return std::int64_t{0};
    });
  TestVectorTerms terms;
  terms.self = self.value();
  terms.cross = cross.value();
  for (const auto& m : mass) terms.level_mass.push_back(m.value());
  return terms;
}

ForestMarginals WalkForest::exact_marginals() const {
  if (path_ != ProbabilityPath::rational)
    throw Error(ErrorCode::precondition, "exact marginals need the rational probability path");
  ForestMarginals out;
  out.level_mass.assign(radius_ + 1, BigRational(0));
  out.by_arc.resize(radius_ + 1);
  out.by_terminal.resize(radius_ + 1);
  const auto tails = arc_tails(graph_);
  for (std::size_t a = 0; a < root_count(); ++a)
    walk_component(graph_, a, tails[a], radius_, path_, x_, [&](const ForestNode& node) {
      const BigRational p(BigInt(1), BigInt(node.frame.denominator));
      const std::size_t i = node.frame.level - 1;
      out.level_mass[i] += p;
      out.by_arc[i][DirectedEdge{node.frame.previous, node.frame.current}] += p;
      out.by_terminal[i][node.frame.current] += p;
      return std::int64_t{0};
    });
  return out;
}

double test_vector_rayleigh(const WalkForest& forest) { return forest.test_vector_terms().quotient(); }

ForestRadius forest_spectral_radius(const WalkForest& forest) {
  const Graph& g = forest.graph();
  CoverShapes shapes(g, forest.radius());
  const auto roots = forest.roots();
  ForestRadius best;
  bool first = true;
  for (std::size_t a = 0; a < roots.size(); ++a) {
    const double value = shapes.spectral_radius(shapes.arc_shape(a, forest.radius()));
    if (first || value > best.value) {
      best = {value, roots[a]};
      first = false;
    }
  }
  return best;
}

std::vector<std::size_t> embed_in_unraveled_ball(const ForestComponent& component,
                                                 const UnraveledBall& target) {
  if (target.center != component.root.head)
    throw Error(ErrorCode::invalid_argument, "embedding target must be centered at the root's head");
  std::vector<std::vector<std::size_t>> kids(target.node_count());
  for (std::size_t i = 1; i < target.node_count(); ++i)
    kids[static_cast<std::size_t>(target.tree.parent[i])].push_back(i);
  std::vector<std::size_t> image(component.size());
  image[0] = 0;
  for (std::size_t i = 1; i < component.size(); ++i) {
    const auto from = image[static_cast<std::size_t>(component.parent[i])];
    const auto& options = kids[from];
    auto it = std::find_if(options.begin(), options.end(),
                           [&](std::size_t k) { return target.tree.label[k] == component.terminal[i]; });
    if (it == options.end())
      throw Error(ErrorCode::invalid_argument, "embedding target radius too small");
    image[i] = *it;
  }
  return image;
}

InjectionCheck closed_walk_injection_check(const Graph& g, Vertex v, std::size_t radius,
                                           std::size_t max_length, std::uint64_t cap) {
  const auto ball = ball_subgraph(g, v, radius);
  const auto local = static_cast<Vertex>(
      std::lower_bound(ball.original.begin(), ball.original.end(), v) - ball.original.begin());
  const auto cover = unraveled_ball(g, v, radius, cap);
  InjectionCheck out;
  out.ball_counts = closed_walk_counts(ball.graph, local, max_length).counts;
  out.cover_counts = closed_walk_counts(cover.tree.as_graph(), 0, max_length).counts;
  for (std::size_t k = 0; k <= max_length; ++k)
    if (out.ball_counts[k] < out.cover_counts[k]) out.holds = false;
  return out;
}

}  // namespace unravel
