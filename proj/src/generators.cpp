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

#include "unravel/generators.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <queue>
#include <set>

#include "unravel/error.hpp"
#include "unravel/rng.hpp"

namespace unravel {
namespace {

constexpr std::array<std::pair<Family, std::string_view>, 10> kFamilyNames{{
    {Family::path, "path"},
    {Family::cycle, "cycle"},
    {Family::complete, "complete"},
    {Family::complete_bipartite, "complete_bipartite"},
    {Family::star, "star"},
    {Family::d_regular_tree, "d_regular_tree"},
    {Family::random_regular, "random_regular"},
    {Family::erdos_renyi, "erdos_renyi"},
    {Family::random_tree, "random_tree"},
    {Family::petersen, "petersen"},
}};

[[noreturn]] void bad(const GenSpec& spec, const std::string& why) {
  throw Error(ErrorCode::invalid_argument,
              std::string(to_string(spec.family)) + ": " + why);
}

Graph make_path(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t i = 1; i < n; ++i)
    edges.emplace_back(static_cast<Vertex>(i - 1), static_cast<Vertex>(i));
  return Graph::from_edges(n, edges);
}

Graph make_cycle(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i)
    edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>((i + 1) % n));
  return Graph::from_edges(n, edges);
}

Graph make_complete(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return Graph::from_edges(n, edges);
}

Graph make_complete_bipartite(std::size_t a, std::size_t b) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < a; ++u)
    for (std::size_t v = 0; v < b; ++v) edges.emplace_back(u, static_cast<Vertex>(a + v));
  return Graph::from_edges(a + b, edges);
}

Graph make_regular_tree(std::size_t d, std::size_t depth) {
  std::vector<Edge> edges;
  std::vector<Vertex> level{0};
  Vertex next = 1;
  for (std::size_t k = 0; k < depth; ++k) {
    std::vector<Vertex> below;
    for (Vertex parent : level) {
      const std::size_t children = (k == 0) ? d : d - 1;
      for (std::size_t c = 0; c < children; ++c) {
        edges.emplace_back(parent, next);
        below.push_back(next++);
      }
    }
    level = std::move(below);
  }
  return Graph::from_edges(next, edges);
}

Graph make_petersen() {
  std::vector<Edge> edges;
  for (Vertex i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);
    edges.emplace_back(i, i + 5);
    edges.emplace_back(5 + i, 5 + (i + 2) % 5);
  }
  return Graph::from_edges(10, edges);
}

// Pairing model where a pair that would create a loop or a multi-edge is
// rejected and redrawn; an attempt restarts once no valid pair remains.
Graph make_random_regular(std::size_t n, std::size_t d, std::uint64_t seed) {
  CounterRng base(seed, 0x7265677572);
  for (int attempt = 0; attempt < kPairingAttempts; ++attempt) {
    CounterRng rng = base.split(static_cast<std::uint64_t>(attempt));
    std::vector<Vertex> points;
    points.reserve(n * d);
    for (Vertex v = 0; v < n; ++v)
      for (std::size_t k = 0; k < d; ++k) points.push_back(v);
    std::vector<std::set<Vertex>> adj(n);
    std::vector<Edge> edges;
    bool stuck = false;
    while (!points.empty() && !stuck) {
      std::size_t i = 0, j = 0;
      bool found = false;
      for (int tries = 0; tries < 64 && !found; ++tries) {
        i = rng.below(points.size());
        j = rng.below(points.size() - 1);
        if (j >= i) ++j;
        found = points[i] != points[j] && !adj[points[i]].contains(points[j]);
      }
      if (!found) {
        std::vector<std::pair<std::size_t, std::size_t>> valid;
        for (std::size_t a = 0; a < points.size(); ++a)
          for (std::size_t b = a + 1; b < points.size(); ++b)
            if (points[a] != points[b] && !adj[points[a]].contains(points[b]))
              valid.emplace_back(a, b);
        if (valid.empty()) {
          stuck = true;
          break;
        }
        std::tie(i, j) = valid[rng.below(valid.size())];
      }
      Vertex a = points[i], b = points[j];
      adj[a].insert(b);
      adj[b].insert(a);
      edges.emplace_back(a, b);
      if (i < j) std::swap(i, j);
      points[i] = points.back();
      points.pop_back();
      points[j] = points.back();
      points.pop_back();
    }
    if (!stuck) return Graph::from_edges(n, edges);
  }
  throw Error(ErrorCode::retry_limit, "random_regular: pairing model failed after " +
                                          std::to_string(kPairingAttempts) + " attempts");
}

Graph make_erdos_renyi(std::size_t n, double p, std::uint64_t seed) {
  CounterRng rng(seed, 0x6572);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (rng.unit() < p) edges.emplace_back(u, v);
  return Graph::from_edges(n, edges);
}

// Uniform labelled tree via a random Pruefer sequence.
Graph make_random_tree(std::size_t n, std::uint64_t seed) {
  if (n <= 2) return make_path(n);
  CounterRng rng(seed, 0x74726565);
  std::vector<Vertex> code(n - 2);
  for (auto& c : code) c = static_cast<Vertex>(rng.below(n));
  std::vector<std::size_t> degree(n, 1);
  for (Vertex c : code) ++degree[c];
  std::priority_queue<Vertex, std::vector<Vertex>, std::greater<>> leaves;
  for (Vertex v = 0; v < n; ++v)
    if (degree[v] == 1) leaves.push(v);
  std::vector<Edge> edges;
  for (Vertex c : code) {
    Vertex leaf = leaves.top();
    leaves.pop();
    edges.emplace_back(leaf, c);
    if (--degree[c] == 1) leaves.push(c);
  }
  Vertex a = leaves.top();
  leaves.pop();
  edges.emplace_back(a, leaves.top());
  return Graph::from_edges(n, edges);
}

}  // namespace

std::string_view to_string(Family family) {
  for (auto [f, name] : kFamilyNames)
    if (f == family) return name;
  return "unknown";
}

std::optional<Family> parse_family(std::string_view name) {
  std::string normalized(name);
  std::replace(normalized.begin(), normalized.end(), '-', '_');
  for (auto [f, known] : kFamilyNames)
    if (known == normalized) return f;
  return std::nullopt;
}

void validate(const GenSpec& spec) {
  auto need = [&](bool ok, const char* why) {
    if (!ok) bad(spec, why);
  };
  switch (spec.family) {
    case Family::path:
    case Family::complete:
      need(spec.n >= 1, "requires n >= 1");
      break;
    case Family::cycle:
      need(spec.n >= 3, "requires n >= 3");
      break;
    case Family::random_tree:
      need(spec.n >= 1, "requires n >= 1");
      break;
    case Family::complete_bipartite:
      need(spec.n >= 1 && spec.m >= 1, "requires part sizes n, m >= 1");
      break;
    case Family::star:
      need(spec.n >= 0, "requires n >= 0 leaves");
      break;
    case Family::d_regular_tree:
      need(spec.d >= 1 && spec.depth >= 0, "requires d >= 1 and depth >= 0");
      break;
    case Family::random_regular:
      need(spec.n >= 1 && spec.d >= 0, "requires n >= 1 and d >= 0");
      need(spec.d < spec.n, "requires d < n");
      need((spec.n * spec.d) % 2 == 0, "requires n*d even");
      break;
    case Family::erdos_renyi:
      need(spec.n >= 1, "requires n >= 1");
      need(spec.p >= 0.0 && spec.p <= 1.0, "requires 0 <= p <= 1");
      break;
    case Family::petersen:
      break;
  }
}

Graph generate(const GenSpec& spec) {
  validate(spec);
  const auto n = static_cast<std::size_t>(spec.n);
  Graph g;
  switch (spec.family) {
    case Family::path: g = make_path(n); break;
    case Family::cycle: g = make_cycle(n); break;
    case Family::complete: g = make_complete(n); break;
    case Family::complete_bipartite:
      g = make_complete_bipartite(n, static_cast<std::size_t>(spec.m));
      break;
    case Family::star: g = make_complete_bipartite(1, n); break;
    case Family::d_regular_tree:
      g = make_regular_tree(static_cast<std::size_t>(spec.d), static_cast<std::size_t>(spec.depth));
      break;
    case Family::random_regular:
      g = make_random_regular(n, static_cast<std::size_t>(spec.d), spec.seed);
      break;
    case Family::erdos_renyi: g = make_erdos_renyi(n, spec.p, spec.seed); break;
    case Family::random_tree: g = make_random_tree(n, spec.seed); break;
    case Family::petersen: g = make_petersen(); break;
  }
  if (spec.strip_leaves) g = unravel::strip_leaves(g).graph;
  return g;
}

std::string spec_name(const GenSpec& spec) {
  std::string name(to_string(spec.family));
  std::replace(name.begin(), name.end(), '_', '-');
  auto add = [&](const char* key, std::int64_t value) {
    name += '-';
    name += key;
    name += std::to_string(value);
  };
  switch (spec.family) {
    case Family::path:
    case Family::cycle:
    case Family::complete:
    case Family::star:
    case Family::random_tree:
      add("n", spec.n);
      break;
    case Family::complete_bipartite:
      add("n", spec.n);
      add("m", spec.m);
      break;
    case Family::d_regular_tree:
      add("d", spec.d);
      add("depth", spec.depth);
      break;
    case Family::random_regular:
      add("n", spec.n);
      add("d", spec.d);
      break;
    case Family::erdos_renyi: {
      add("n", spec.n);
      char buf[32];
      std::snprintf(buf, sizeof buf, "-p%g", spec.p);
      name += buf;
      break;
    }
    case Family::petersen:
      break;
  }
  add("s", static_cast<std::int64_t>(spec.seed));
  if (spec.strip_leaves) name += "-stripped";
  return name;
}

nlohmann::json to_json(const GenSpec& spec) {
  nlohmann::json j{{"family", to_string(spec.family)}, {"seed", spec.seed}};
  switch (spec.family) {
    case Family::path:
    case Family::cycle:
    case Family::complete:
    case Family::star:
    case Family::random_tree:
      j["n"] = spec.n;
      break;
    case Family::complete_bipartite:
      j["n"] = spec.n;
      j["m"] = spec.m;
      break;
    case Family::d_regular_tree:
      j["d"] = spec.d;
      j["depth"] = spec.depth;
      break;
    case Family::random_regular:
      j["n"] = spec.n;
      j["d"] = spec.d;
      break;
    case Family::erdos_renyi:
      j["n"] = spec.n;
      j["p"] = spec.p;
      break;
    case Family::petersen:
      break;
  }
  if (spec.strip_leaves) j["strip_leaves"] = true;
  return j;
}

GenSpec gen_spec_from_json(const nlohmann::json& j) {
  try {
    GenSpec spec;
    const auto name = j.at("family").get<std::string>();
    auto family = parse_family(name);
    if (!family) throw Error(ErrorCode::invalid_argument, "unknown family \"" + name + "\"");
    spec.family = *family;
    spec.n = j.value("n", std::int64_t{0});
    spec.m = j.value("m", std::int64_t{0});
    spec.d = j.value("d", std::int64_t{0});
    spec.depth = j.value("depth", std::int64_t{0});
    spec.p = j.value("p", 0.0);
    spec.seed = j.value("seed", std::uint64_t{0});
    spec.strip_leaves = j.value("strip_leaves", false);
    validate(spec);
    return spec;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::parse, std::string("GenSpec: ") + e.what());
  }
}

}  // namespace unravel
