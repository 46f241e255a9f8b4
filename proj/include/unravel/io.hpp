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

#include <filesystem>
#include <iosfwd>
#include <string>

#include "json.hpp"

#include "unravel/graph.hpp"

namespace unravel {

// Edge-list text format: one "u v" pair per line with 0-based ids; '#'
// starts a comment. A comment of the form "# vertices: N" fixes the vertex
// count (otherwise it is one more than the largest id), which is how
// isolated vertices survive a round trip.
Graph read_edge_list(std::istream& in);
void write_edge_list(std::ostream& out, const Graph& g);

// JSON format mirroring Graph: {"vertex_count", "edge_count", "adjacency"}.
Graph graph_from_json(const nlohmann::json& j);
nlohmann::json graph_to_json(const Graph& g);

/// Dispatches on extension: ".json" is the JSON format, anything else is an
/// edge list.
Graph load_graph(const std::filesystem::path& path);
void save_graph(const std::filesystem::path& path, const Graph& g);

}  // namespace unravel
