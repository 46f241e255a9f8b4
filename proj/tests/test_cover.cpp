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

#include <cmath>
#include <limits>
#include <numbers>
#include <set>
#include <sstream>

#include "doctest.h"
#include "oracles.hpp"
#include "unravel/cover.hpp"
#include "unravel/error.hpp"
#include "unravel/generators.hpp"
#include "unravel/graph.hpp"
#include "unravel/io.hpp"
#include "unravel/spectral.hpp"

using namespace unravel;
using doctest::Approx;

namespace {

Graph regular(std::int64_t n, std::int64_t d, std::uint64_t seed) {
  GenSpec s;
  s.family = Family::random_regular;
  s.n = n;
  s.d = d;
  s.seed = seed;
  return generate(s);
}

Graph min_degree_two(std::int64_t n, double p, std::uint64_t seed) {
  GenSpec s;
  s.family = Family::erdos_renyi;
  s.n = n;
  s.p = p;
  s.seed = seed;
  s.strip_leaves = true;
  return generate(s);
}

Graph lollipop() {
  // K5 on 0..4, bridge 4-5, cycle on 5..12
  std::vector<Edge> e;
  for (Vertex i = 0; i < 5; ++i)
    for (Vertex j = i + 1; j < 5; ++j) e.emplace_back(i, j);
  e.emplace_back(4, 5);
  for (Vertex i = 5; i < 13; ++i) e.emplace_back(i, i == 12 ? 5 : i + 1);
  return Graph::from_edges(13, e);
}

// (k)-ary tree of the given depth as a parent array
std::vector<std::int64_t> full_tree(std::size_t k, std::size_t depth) {
  std::vector<std::int64_t> parent{-1};
  std::vector<std::int64_t> level{0};
  for (std::size_t h = 0; h < depth; ++h) {
    std::vector<std::int64_t> next;
    for (auto p : level)
      for (std::size_t c = 0; c < k; ++c) {
        next.push_back(static_cast<std::int64_t>(parent.size()));
        parent.push_back(p);
      }
    level = std::move(next);
  }
  return parent;
}

double cover_radius(const Graph& g, Vertex v, std::size_t r) {
  return oracle::tree_radius(unraveled_ball(g, v, r).tree.parent);
}

double rhs_oracle(const Graph& g, std::size_t r) {
  return oracle::lb2_50(g) * std::cos(std::numbers::pi / static_cast<double>(r + 2));
}

}  // namespace

TEST_CASE("non-backtracking walk predicate") {
  const auto c = oracle::cycle(5);
  CHECK(is_non_backtracking_walk(c, std::vector<Vertex>{0, 1, 2, 3, 4, 0, 1}));
  CHECK(!is_non_backtracking_walk(c, std::vector<Vertex>{0, 1, 0}));
  CHECK(!is_non_backtracking_walk(c, std::vector<Vertex>{0, 2}));
  CHECK(is_non_backtracking_walk(c, std::vector<Vertex>{3}));
}

TEST_CASE("walk enumeration examples") {
  for (std::size_t n : {7, 10, 15})
    for (std::size_t r = 0; 2 * r < n; ++r) {
      const auto t = enumerate_nb_walks(oracle::cycle(n), 2, r);
      CHECK(t.size() == 2 * r + 1);
      CHECK(oracle::spectrum(t.as_graph()).back() == Approx(path_spectral_radius(2 * r + 1)).scale(1));
    }
  CHECK(enumerate_nb_walks(oracle::complete(4), 0, 2).size() == 10);
  const auto isolated = enumerate_nb_walks(Graph::from_edges(3, std::vector<Edge>{{0, 1}}), 2, 4);
  CHECK(isolated.size() == 1);
  const auto edge = unraveled_ball(Graph::from_edges(3, std::vector<Edge>{{0, 1}}), 0, 5);
  CHECK(edge.node_count() == 2);
}

TEST_CASE("walk enumeration matches brute force") {
  for (std::uint64_t seed = 0; seed < 4; ++seed) {
    GenSpec s;
    s.family = Family::erdos_renyi;
    s.n = 9;
    s.p = 0.35;
    s.seed = seed;
    const auto g = generate(s);
    for (Vertex v = 0; v < 9; v += 2)
      for (std::size_t r = 0; r <= 4; ++r) {
        const auto brute = oracle::nb_walks(g, v, r);
        const auto t = enumerate_nb_walks(g, v, r);
        CHECK(t.size() == brute.size());
        CHECK(count_nb_walks(g, v, r) == brute.size());
        std::set<std::vector<Vertex>> expected(brute.begin(), brute.end()), got;
        for (std::size_t i = 0; i < t.size(); ++i) {
          const auto w = t.walk(i).vertices;
          CHECK(is_non_backtracking_walk(g, w));
          CHECK(w.size() == t.depth[i] + 1u);
          CHECK(w.back() == t.label[i]);
          if (i) CHECK(t.parent[i] < static_cast<std::int64_t>(i));
          got.insert(w);
        }
        CHECK(got == expected);
        const auto tg = t.as_graph();
        CHECK(is_forest(tg));
        CHECK(connected_components(tg).size() == 1);
      }
  }
}

TEST_CASE("cap exceeded reports the count") {
  try {
    enumerate_nb_walks(oracle::complete(5), 0, 4, 50);
    FAIL("no exception");
  } catch (const CapExceeded& e) {
    CHECK(e.code() == ErrorCode::cap_exceeded);
    CHECK(e.count() > 50);
  }
  CHECK(count_nb_walks(oracle::complete(5), 0, 4) == 1 + 4 + 12 + 36 + 108);
  CHECK_THROWS_AS(unraveled_ball(oracle::petersen(), 0, 30), CapExceeded);
}

TEST_CASE("unraveled balls of regular graphs are regular trees") {
  for (std::int64_t d = 3; d <= 5; ++d)
    for (std::size_t r = 1; r <= 4; ++r) {
      const auto g = regular(40, d, static_cast<std::uint64_t>(d));
      const auto b = unraveled_ball(g, 3, r);
      const std::size_t dd = static_cast<std::size_t>(d);
      std::size_t power = 1;
      for (std::size_t i = 0; i < r; ++i) power *= dd - 1;
      CHECK(b.node_count() == 1 + dd * (power - 1) / (dd - 2));
      if (b.node_count() <= 200) {
        GenSpec t;
        t.family = Family::d_regular_tree;
        t.d = d;
        t.depth = static_cast<std::int64_t>(r);
        const double expected = oracle::spectrum(generate(t)).back();
        CoverShapes shapes(g, r);
        CHECK(shapes.spectral_radius(shapes.ball_shape(3, r)) == Approx(expected).epsilon(1e-9));
      }
    }
}

TEST_CASE("unraveled ball of a short cycle") {
  const auto b = unraveled_ball(oracle::cycle(5), 0, 2);
  CHECK(b.node_count() == 5);
  CoverShapes shapes(oracle::cycle(5), 2);
  CHECK(shapes.spectral_radius(shapes.ball_shape(0, 2)) == Approx(std::sqrt(3.0)).epsilon(1e-12));
  // the cover keeps unrolling past the girth
  CoverShapes deep(oracle::cycle(5), 6);
  CHECK(deep.spectral_radius(deep.ball_shape(1, 6)) == Approx(path_spectral_radius(13)).epsilon(1e-12));
}

TEST_CASE("trees are their own cover") {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    GenSpec s;
    s.family = Family::random_tree;
    s.n = 30;
    s.seed = seed;
    const auto g = generate(s);
    for (Vertex v = 0; v < 30; v += 7)
      for (std::size_t r = 1; r <= 4; ++r) {
        const auto b = unraveled_ball(g, v, r);
        const auto sub = ball_subgraph(g, v, r);
        CHECK(b.node_count() == sub.graph.vertex_count());
        std::set<Vertex> labels(b.tree.label.begin(), b.tree.label.end());
        CHECK(labels.size() == b.node_count());
        CHECK(oracle::tree_radius(b.tree.parent) == Approx(oracle::spectrum(sub.graph).back()).epsilon(1e-9));
      }
  }
}

TEST_CASE("cover shapes agree with the dense oracle") {
  for (std::uint64_t seed = 0; seed < 4; ++seed) {
    const auto g = min_degree_two(14, 0.25, seed);
    if (g.empty()) continue;
    CoverShapes shapes(g, 3);
    for (Vertex v = 0; v < g.vertex_count(); ++v)
      for (std::size_t r = 0; r <= 4; ++r) {
        const auto b = unraveled_ball(g, v, r);
        if (b.node_count() > 400) continue;
        const auto id = shapes.ball_shape(v, r);
        CHECK(shapes.node_count(id) == b.node_count());
        CHECK(shapes.spectral_radius(id) == Approx(oracle::tree_radius(b.tree.parent)).epsilon(1e-9));
      }
  }
}

TEST_CASE("cover radius is monotone in r and dominated by the ball") {
  for (std::uint64_t seed = 0; seed < 4; ++seed) {
    const auto g = min_degree_two(40, 0.09, seed);
    if (g.empty()) continue;
    CoverShapes shapes(g, 5);
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      double previous = 0;
      for (std::size_t r = 0; r <= 6; ++r) {
        const double x = shapes.spectral_radius(shapes.ball_shape(v, r));
        CHECK(x >= previous - 1e-9);
        previous = x;
        CHECK(spectral_radius(ball_subgraph(g, v, r).graph).value >= x - 1e-9);
      }
    }
  }
}

TEST_CASE("maximum over vertices") {
  for (const auto& g : {oracle::cycle(9), oracle::complete(5), oracle::petersen()}) {
    const auto m = find_max_unraveled_vertex(g, 2);
    CHECK(m.found);
    CHECK(m.witness == 0);
    for (double x : m.per_vertex) CHECK(x == Approx(m.value).epsilon(1e-12));
  }
  const auto g = lollipop();
  const auto m = find_max_unraveled_vertex(g, 3);
  CHECK(m.witness < 5);
  double best = 0;
  Vertex arg = 0;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    const double x = cover_radius(g, v, 3);
    CHECK(m.per_vertex[v] == Approx(x).epsilon(1e-9));
    if (x > best + 1e-12) best = x, arg = v;
  }
  CHECK(m.witness == arg);
  CHECK(m.value == Approx(best).epsilon(1e-9));
  const auto capped = find_max_unraveled_vertex(g, 3, 40);
  CHECK(capped.capped > 0);
  CHECK(std::isnan(capped.per_vertex[0]));
  CHECK(capped.witness >= 5);
}

TEST_CASE("walk forest examples") {
  for (std::size_t n : {3, 6, 11}) {
    const auto f = WalkForest::build(oracle::cycle(n), 1);
    CHECK(f.root_count() == 2 * n);
    CHECK(f.node_count() == 4 * n);
    CHECK(f.probability_path() == ProbabilityPath::rational);
    for (std::size_t a = 0; a < f.root_count(); ++a) {
      const auto c = f.component(a);
      REQUIRE(c.size() == 2);
      CHECK(c.denominator[0] == 2 * n);
      CHECK(c.denominator[1] == 2 * n);
      CHECK(c.level == std::vector<std::uint32_t>{1, 2});
    }
  }
  const auto k3 = WalkForest::build(oracle::complete(3), 1);
  CHECK(k3.root_count() == 6);
  for (std::size_t a = 0; a < 6; ++a) CHECK(k3.component(a).size() == 2);
  CHECK_THROWS_AS(WalkForest::build(oracle::path(4), 1), Error);
  CHECK_THROWS_AS(WalkForest::build(oracle::petersen(), 12, 1000), CapExceeded);
}

TEST_CASE("walk forest components are simple-extension trees") {
  const auto g = min_degree_two(12, 0.35, 2);
  REQUIRE(!g.empty());
  const auto f = WalkForest::build(g, 3);
  std::uint64_t total = 0;
  for (std::size_t a = 0; a < f.root_count(); ++a) {
    const auto c = f.component(a);
    total += c.size();
    CHECK(c.root == f.roots()[a]);
    for (std::size_t i = 0; i < c.size(); ++i) {
      const auto w = c.walk(i).vertices;
      CHECK(w.size() == c.level[i] + 1u);
      CHECK(is_non_backtracking_walk(g, w));
      CHECK(w.back() == c.terminal[i]);
      CHECK(w[w.size() - 2] == c.previous[i]);
      if (i) {
        auto up = w;
        up.pop_back();
        CHECK(c.walk(static_cast<std::size_t>(c.parent[i])).vertices == up);
      }
      const double x = f.path_vector()[c.level[i] - 1];
      CHECK(c.f[i] == Approx(x / std::sqrt(static_cast<double>(c.denominator[i]))).epsilon(1e-14));
    }
  }
  CHECK(total == f.node_count());
  std::uint64_t brute = 0;
  for (Vertex v = 0; v < g.vertex_count(); ++v) brute += oracle::nb_walks(g, v, 4).size() - 1;
  CHECK(total == brute);
}

TEST_CASE("forest probabilities are normalized and stationary") {
  for (std::uint64_t seed = 0; seed < 4; ++seed) {
    const auto g = min_degree_two(12, 0.3, seed);
    if (g.empty()) continue;
    const std::size_t r = 3;
    const auto f = WalkForest::build(g, r);
    const auto m = f.exact_marginals();
    const BigRational w1(static_cast<long long>(g.arc_count()));
    REQUIRE(m.level_mass.size() == r + 1);
    for (std::size_t i = 0; i <= r; ++i) {
      CHECK(m.level_mass[i] == 1);
      CHECK(m.by_arc[i].size() == g.arc_count());
      for (const auto& [arc, p] : m.by_arc[i]) CHECK(p == 1 / w1);
      for (const auto& [u, p] : m.by_terminal[i]) CHECK(p == BigRational(static_cast<long long>(g.degree(u))) / w1);
    }
    const auto terms = f.test_vector_terms();
    for (auto mass : terms.level_mass) CHECK(static_cast<double>(mass) == Approx(1.0).epsilon(1e-13));
  }
}

TEST_CASE("rayleigh identity") {
  for (std::size_t n : {5, 8})
    for (std::size_t r = 1; r <= 5; ++r)
      CHECK(test_vector_rayleigh(WalkForest::build(oracle::cycle(n), r)) ==
            Approx(2 * std::cos(std::numbers::pi / static_cast<double>(r + 2))).epsilon(1e-12));
  for (std::int64_t d = 3; d <= 5; ++d)
    for (std::size_t r = 1; r <= 3; ++r)
      CHECK(test_vector_rayleigh(WalkForest::build(regular(20, d, 1), r)) ==
            Approx(2 * std::sqrt(d - 1.0) * std::cos(std::numbers::pi / static_cast<double>(r + 2))).epsilon(1e-12));
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    const auto g = min_degree_two(30, 0.12, seed);
    if (g.empty()) continue;
    for (std::size_t r = 1; r <= 3; ++r) {
      const auto f = WalkForest::build(g, r);
      const double rhs = rhs_oracle(g, r);
      CHECK(std::abs(test_vector_rayleigh(f) - rhs) <= 1e-12 * rhs);
      const auto logs = WalkForest::build(g, r, kDefaultForestCap, ProbabilityPath::log_space);
      CHECK(logs.probability_path() == ProbabilityPath::log_space);
      CHECK(std::abs(test_vector_rayleigh(logs) - rhs) <= 1e-9 * rhs);
      CHECK_THROWS_AS(logs.exact_marginals(), Error);
    }
  }
}

TEST_CASE("deep forests fall back to log space") {
  const auto big = WalkForest::build(oracle::complete(4), 124, std::numeric_limits<std::uint64_t>::max());
  CHECK(big.probability_path() == ProbabilityPath::log_space);
  CHECK_THROWS_AS(WalkForest::build(oracle::complete(4), 124, std::numeric_limits<std::uint64_t>::max(),
                                    ProbabilityPath::rational),
                  Error);
  CHECK(WalkForest::build(oracle::complete(4), 100, std::numeric_limits<std::uint64_t>::max())
            .probability_path() == ProbabilityPath::rational);
}

TEST_CASE("forest spectral radius") {
  for (std::size_t r = 1; r <= 5; ++r) {
    const auto f = WalkForest::build(oracle::cycle(7), r);
    const auto top = forest_spectral_radius(f);
    CHECK(top.value == Approx(path_spectral_radius(r + 1)).epsilon(1e-12));
    CHECK(top.witness == DirectedEdge{0, 1});
  }
  for (std::size_t d = 3; d <= 4; ++d)
    for (std::size_t r = 1; r <= 3; ++r) {
      const auto f = WalkForest::build(regular(16, static_cast<std::int64_t>(d), 3), r);
      const double expected = oracle::tree_radius(full_tree(d - 1, r));
      CHECK(forest_spectral_radius(f).value == Approx(expected).epsilon(1e-9));
      for (std::size_t a = 0; a < f.root_count(); a += 5)
        CHECK(oracle::tree_radius(f.component(a).parent) == Approx(expected).epsilon(1e-9));
    }
}

TEST_CASE("forest components embed into unraveled balls") {
  for (std::uint64_t seed = 0; seed < 4; ++seed) {
    const auto g = min_degree_two(14, 0.3, seed);
    if (g.empty()) continue;
    const std::size_t r = 3;
    const auto f = WalkForest::build(g, r);
    const auto top = forest_spectral_radius(f);
    const auto best = find_max_unraveled_vertex(g, r);
    CHECK(best.value >= top.value - 1e-9);
    CHECK(best.value >= rhs_oracle(g, r) - 1e-9);
    for (std::size_t a = 0; a < f.root_count(); ++a) {
      const auto c = f.component(a);
      const auto target = unraveled_ball(g, c.root.head, r);
      const auto image = embed_in_unraveled_ball(c, target);
      CHECK(std::set<std::size_t>(image.begin(), image.end()).size() == c.size());
      for (std::size_t i = 1; i < c.size(); ++i) {
        CHECK(target.tree.parent[image[i]] == static_cast<std::int64_t>(image[static_cast<std::size_t>(c.parent[i])]));
        CHECK(target.tree.label[image[i]] == c.terminal[i]);
      }
      CHECK(best.per_vertex[c.root.head] >= oracle::tree_radius(c.parent) - 1e-9);
    }
    CHECK_THROWS_AS(embed_in_unraveled_ball(f.component(0), unraveled_ball(g, f.roots()[0].head, 1)), Error);
  }
}

TEST_CASE("closed walk injection") {
  GenSpec s;
  s.family = Family::random_tree;
  s.n = 20;
  s.seed = 1;
  const auto tree = generate(s);
  for (Vertex v = 0; v < 20; v += 4) {
    const auto c = closed_walk_injection_check(tree, v, 3, 12);
    CHECK(c.holds);
    CHECK(c.ball_counts == c.cover_counts);
  }
  const auto c5 = closed_walk_injection_check(oracle::cycle(5), 0, 2, 4);
  CHECK(c5.holds);
  CHECK(c5.ball_counts[4] == 6);
  CHECK(c5.cover_counts[4] == 6);
  const auto c5_long = closed_walk_injection_check(oracle::cycle(5), 0, 2, 12);
  CHECK(c5_long.holds);
  CHECK(c5_long.cover_counts == oracle::closed_walks(oracle::path(5), 2, 12));
  const auto k4 = closed_walk_injection_check(oracle::complete(4), 0, 2, 8);
  CHECK(k4.holds);
  CHECK(k4.ball_counts == oracle::closed_walks(oracle::complete(4), 0, 8));
  CHECK(k4.ball_counts[3] > k4.cover_counts[3]);
  CHECK_THROWS_AS(closed_walk_injection_check(oracle::complete(6), 0, 6, 8, 100), CapExceeded);
}

TEST_CASE("ball export") {
  const auto b = unraveled_ball(oracle::complete(4), 2, 2);
  std::ostringstream edges, labels;
  export_unraveled_ball(b, edges, labels);
  const auto text = edges.str();
  CHECK(text.find("# vertices: 10") != std::string::npos);
  std::istringstream in(text);
  const auto back = read_edge_list(in);
  CHECK(back == b.tree.as_graph());
  const auto csv = labels.str();
  CHECK(csv.starts_with("node,vertex\n0,2\n"));
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 11);
}
