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

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "json.hpp"
#include "unravel/graph.hpp"

namespace unravel {

enum class Family {
  path,
  cycle,
  complete,
  complete_bipartite,
  star,
  d_regular_tree,
  random_regular,
  erdos_renyi,
  random_tree,
  petersen,
};

std::string_view to_string(Family family);
/// Accepts snake_case or kebab-case names.
std::optional<Family> parse_family(std::string_view name);

/// Parameters used per family:
///   path, cycle, complete, random_tree: n
///   complete_bipartite: n, m (part sizes)
///   star: n leaves
///   d_regular_tree: d, depth
///   random_regular: n, d
///   erdos_renyi: n, p
///   petersen: none
/// `strip_leaves` post-processes the result with strip_leaves().
struct GenSpec {
  Family family = Family::path;
  std::int64_t n = 0;
  std::int64_t m = 0;
  std::int64_t d = 0;
  std::int64_t depth = 0;
  double p = 0.0;
  std::uint64_t seed = 0;
  bool strip_leaves = false;

  friend bool operator==(const GenSpec&, const GenSpec&) = default;
};

void validate(const GenSpec& spec);
Graph generate(const GenSpec& spec);

/// Stable identifier, e.g. "random-regular-n100-d3-s7"; used as graph id and
/// file stem.
std::string spec_name(const GenSpec& spec);

nlohmann::json to_json(const GenSpec& spec);
GenSpec gen_spec_from_json(const nlohmann::json& j);

inline constexpr int kPairingAttempts = 1000;

}  // namespace unravel
