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

#include <map>
#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "unravel/error.hpp"
#include "unravel/generators.hpp"
#include "unravel/graph.hpp"

using namespace unravel;

namespace {

GenSpec spec(Family f, std::int64_t n = 0, std::uint64_t seed = 0) {
  GenSpec s;
  s.family = f;
  s.n = n;
  s.seed = seed;
  return s;
}

GenSpec regular(std::int64_t n, std::int64_t d, std::uint64_t seed) {
  auto s = spec(Family::random_regular, n, seed);
  s.d = d;
  return s;
}

GenSpec tree(std::int64_t d, std::int64_t depth) {
  auto s = spec(Family::d_regular_tree);
  s.d = d;
  s.depth = depth;
  return s;
}

}  // namespace

TEST_CASE("deterministic families") {
  const auto c = generate(spec(Family::cycle, 5));
  CHECK(c.vertex_count() == 5);
  CHECK(c.edge_count() == 5);
  CHECK(is_regular(c));
  CHECK(c.min_degree() == 2);
  CHECK(c == oracle::cycle(5));
  CHECK(generate(spec(Family::path, 7)) == oracle::path(7));
  CHECK(generate(spec(Family::complete, 6)) == oracle::complete(6));
  CHECK(generate(spec(Family::petersen)) == oracle::petersen());

  auto kb = spec(Family::complete_bipartite, 3);
  kb.m = 4;
  const auto k34 = generate(kb);
  CHECK(k34.edge_count() == 12);
  CHECK(is_bipartite(k34));

  const auto star = generate(spec(Family::star, 6));
  CHECK(star.vertex_count() == 7);
  CHECK(star.max_degree() == 6);
  CHECK(generate(spec(Family::path, 1)).edge_count() == 0);
}

TEST_CASE("regular tree counts") {
  CHECK(generate(tree(3, 2)).vertex_count() == 10);
  for (std::int64_t d = 2; d <= 5; ++d)
    for (std::int64_t depth = 1; depth <= 4; ++depth) {
      const auto g = generate(tree(d, depth));
      CHECK(is_forest(g));
      CHECK(connected_components(g).size() == 1);
      CHECK(g.degree(0) == static_cast<std::size_t>(d));
      std::size_t leaves = 0;
      for (Vertex v = 0; v < g.vertex_count(); ++v) {
        if (g.degree(v) == 1) ++leaves;
        else CHECK(g.degree(v) == static_cast<std::size_t>(d));
      }
      std::size_t expected = static_cast<std::size_t>(d);
      for (std::int64_t k = 1; k < depth; ++k) expected *= static_cast<std::size_t>(d - 1);
      CHECK(leaves == expected);
      CHECK(eccentricity(g, 0) == static_cast<std::size_t>(depth));
    }
  CHECK(generate(tree(3, 0)).vertex_count() == 1);
}

TEST_CASE("random regular graphs are simple and regular") {
  const auto g = generate(regular(100, 3, 7));
  CHECK(g.vertex_count() == 100);
  for (Vertex v = 0; v < 100; ++v) CHECK(g.degree(v) == 3);
  CHECK(g.edge_count() == 150);
  for (std::int64_t d : {2, 4, 5, 7})
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      const auto h = generate(regular(60, d, seed));
      CHECK(is_regular(h));
      CHECK(h.max_degree() == static_cast<std::size_t>(d));
    }
  CHECK(generate(regular(8, 0, 1)).edge_count() == 0);
}

TEST_CASE("same spec and seed gives the same graph") {
  for (std::uint64_t seed : {0ULL, 1ULL, 99ULL, 0xffffffffffffULL}) {
    CHECK(generate(regular(200, 4, seed)) == generate(regular(200, 4, seed)));
    CHECK(generate(spec(Family::random_tree, 80, seed)) == generate(spec(Family::random_tree, 80, seed)));
    auto er = spec(Family::erdos_renyi, 70, seed);
    er.p = 0.1;
    CHECK(generate(er) == generate(er));
  }
  CHECK(generate(regular(200, 4, 1)) != generate(regular(200, 4, 2)));
}

TEST_CASE("random trees") {
  for (std::int64_t n = 1; n <= 40; n += 3)
    for (std::uint64_t seed = 0; seed < 4; ++seed) {
      const auto g = generate(spec(Family::random_tree, n, seed));
      CHECK(g.vertex_count() == static_cast<std::size_t>(n));
      CHECK(g.edge_count() == static_cast<std::size_t>(n - 1));
      CHECK(connected_components(g).size() == 1);
    }
}

TEST_CASE("random trees on four vertices are uniform over the 16 labelled trees") {
  std::map<std::vector<Edge>, int> seen;
  const int draws = 3200;
  for (int seed = 0; seed < draws; ++seed)
    ++seen[generate(spec(Family::random_tree, 4, static_cast<std::uint64_t>(seed))).edges()];
  CHECK(seen.size() == 16);
  double chi2 = 0;
  for (const auto& [edges, count] : seen) chi2 += (count - 200.0) * (count - 200.0) / 200.0;
  // 15 degrees of freedom; 99.9th percentile is about 37.7
  CHECK(chi2 < 37.7);
}

TEST_CASE("erdos renyi edge count is plausible") {
  auto s = spec(Family::erdos_renyi, 200, 3);
  s.p = 0.1;
  const double mean = 0.1 * 200 * 199 / 2, sd = std::sqrt(mean * 0.9);
  const auto g = generate(s);
  CHECK(std::abs(static_cast<double>(g.edge_count()) - mean) < 5 * sd);
  s.p = 0.0;
  CHECK(generate(s).edge_count() == 0);
  s.p = 1.0;
  CHECK(generate(s) == oracle::complete(200));
}

TEST_CASE("strip leaves option") {
  auto s = spec(Family::erdos_renyi, 120, 5);
  s.p = 0.04;
  s.strip_leaves = true;
  const auto g = generate(s);
  if (!g.empty()) CHECK(g.min_degree() >= 2);
  CHECK(spec_name(s).ends_with("-stripped"));
}

TEST_CASE("spec json round trip and names") {
  std::vector<GenSpec> specs{spec(Family::cycle, 9, 2), regular(50, 3, 4), tree(4, 3),
                             spec(Family::petersen), spec(Family::star, 5)};
  auto er = spec(Family::erdos_renyi, 30, 1);
  er.p = 0.25;
  specs.push_back(er);
  auto kb = spec(Family::complete_bipartite, 2, 0);
  kb.m = 5;
  specs.push_back(kb);
  std::set<std::string> names;
  for (const auto& s : specs) {
    CHECK(gen_spec_from_json(to_json(s)) == s);
    names.insert(spec_name(s));
  }
  CHECK(names.size() == specs.size());
  CHECK(spec_name(regular(50, 3, 4)) == "random-regular-n50-d3-s4");
  CHECK(spec_name(er) == "erdos-renyi-n30-p0.25-s1");
  CHECK(parse_family("random-regular") == Family::random_regular);
  CHECK(parse_family("random_regular") == Family::random_regular);
  CHECK(!parse_family("hypercube"));
}

TEST_CASE("invalid specs are rejected") {
  auto code = [](const GenSpec& s) {
    try {
      generate(s);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::internal;
  };
  CHECK(code(regular(9, 3, 0)) == ErrorCode::invalid_argument);
  CHECK(code(regular(4, 4, 0)) == ErrorCode::invalid_argument);
  CHECK(code(spec(Family::cycle, 2)) == ErrorCode::invalid_argument);
  auto er = spec(Family::erdos_renyi, 10);
  er.p = 1.5;
  CHECK(code(er) == ErrorCode::invalid_argument);
  CHECK(code(tree(0, 2)) == ErrorCode::invalid_argument);
  CHECK_THROWS_AS(gen_spec_from_json(nlohmann::json{{"family", "moebius"}}), Error);
  CHECK_THROWS_AS(gen_spec_from_json(nlohmann::json{{"family", "cycle"}, {"n", "ten"}}), Error);
}
