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
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "unravel/bounds.hpp"
#include "unravel/generators.hpp"
#include "unravel/graph.hpp"

namespace unravel {

inline constexpr int kSchemaVersion = 1;

/// A graph to verify: either generated from `spec` or loaded from `path`.
/// `radii` overrides the run-wide radius list when nonempty.
struct CorpusEntry {
  std::string id;
  std::optional<GenSpec> spec;
  std::filesystem::path path;
  std::vector<std::size_t> radii;
};

CorpusEntry corpus_entry(const GenSpec& spec, std::vector<std::size_t> radii = {});
CorpusEntry corpus_entry(const std::filesystem::path& path, std::vector<std::size_t> radii = {});

/// About 30 small graphs, r in {1, 2, 3}.
std::vector<CorpusEntry> smoke_corpus(std::uint64_t seed = 1);
/// The full sweep: over 200 graphs with per-family radius lists.
std::vector<CorpusEntry> standard_corpus(std::uint64_t seed = 1);
/// Random regular graphs for the second-eigenvalue sweep, r in {1, 2, 3}.
std::vector<CorpusEntry> theorem8_corpus(std::uint64_t seed = 1);
/// Resolves "smoke", "standard" and "theorem8"; std::nullopt otherwise.
std::optional<std::vector<CorpusEntry>> builtin_corpus(const std::string& name, std::uint64_t seed);
/// Every *.edges and *.json file (except *.meta.json) directly inside `dir`,
/// sorted by file name.
std::vector<CorpusEntry> corpus_from_directory(const std::filesystem::path& dir);

struct RunConfig {
  std::vector<CorpusEntry> corpus;
  std::vector<std::size_t> radii{1, 2, 3};
  double eig_tol = 1e-10;
  double slack_tol = kDefaultSlackTol;
  std::uint64_t ball_cap = kDefaultBallCap;
  std::uint64_t forest_cap = kDefaultForestCap;
  std::size_t threads = 0;  // 0: UNRAVEL_THREADS, else hardware concurrency
  std::filesystem::path out_dir;
  std::uint64_t seed = 1;
  bool lemma_checks = true;
  bool timing = false;
};

void validate(const RunConfig& config);
nlohmann::json to_json(const RunConfig& config);
/// {"corpus": [name | path | GenSpec object, ...], "r": [...], "eig_tol",
///  "slack_tol", "cap_nodes", "forest_cap", "threads", "out", "seed",
///  "lemma_checks", "timing"}; every field optional.
RunConfig run_config_from_json(const nlohmann::json& j);

std::size_t resolve_threads(std::size_t requested);

struct BoundTotals {
  std::size_t pass = 0;
  std::size_t fail = 0;
  std::size_t skip = 0;  // hypothesis not satisfied
  std::size_t errors = 0;
  double min_slack = 0.0;
  bool has_min = false;
  std::string min_slack_graph;
  std::size_t min_slack_r = 0;
};

struct LoadError {
  std::string graph_id;
  std::string message;
};

/// Hoory's bound with c = 1 next to max(lambda_2, |lambda_min|); context only.
struct HooryRow {
  std::string graph_id;
  std::size_t r = 0;
  Rational robust_degree{0};
  double lhs = 0.0;
  double rhs = 0.0;
};

struct RunSummary {
  std::map<std::string, BoundTotals> per_bound;
  std::size_t graphs = 0;
  std::size_t reports = 0;
  std::vector<LoadError> load_errors;
  std::vector<HooryRow> hoory;
  bool violation = false;
  double wall_ms = 0.0;
};

RunSummary summarize(const std::vector<BoundReport>& reports);
nlohmann::ordered_json to_json(const RunSummary& summary);

struct RunResult {
  std::vector<BoundReport> reports;  // canonical order
  RunSummary summary;
};

/// Evaluates every bound and lemma check for every (graph, r). Writes the
/// outputs when config.out_dir is set.
RunResult run_verify(const RunConfig& config);

std::string reports_json(const std::vector<BoundReport>& reports);
std::string reports_csv(const std::vector<BoundReport>& reports);
std::string summary_csv(const RunSummary& summary);
void write_outputs(const std::filesystem::path& dir, const RunResult& result);
std::vector<BoundReport> load_reports(const std::filesystem::path& file);

struct ConvergeRow {
  std::size_t k = 0;
  BigInt walks;           // s_{2k}(v)
  double estimate = 0.0;  // s_{2k}(v)^(1/2k)
  double gap = 0.0;       // lambda_1 - estimate
};

struct ConvergeTable {
  Vertex vertex = 0;
  std::size_t max_length = 0;
  double lambda1 = 0.0;  // of the component of v
  std::vector<ConvergeRow> rows;
  bool monotone = true;
};

/// Closed-walk growth estimates at v for even lengths up to max_length.
ConvergeTable converge(const Graph& g, Vertex v, std::size_t max_length);
nlohmann::ordered_json to_json(const ConvergeTable& table);
std::string format_text(const ConvergeTable& table);
std::string format_csv(const ConvergeTable& table);

struct CoverRow {
  std::size_t r = 0;
  Vertex witness = 0;
  double cover = 0.0;          // max_v lambda_1 of the unraveled ball
  double ball = 0.0;           // lambda_1(G(witness, r))
  double theorem1 = 0.0;       // NaN when the minimum degree is < 2
  std::size_t capped = 0;
};

struct CoverTable {
  std::vector<CoverRow> rows;
  double corollary = 0.0;  // NaN when the minimum degree is < 2
  bool monotone = true;
  bool above_theorem1 = true;
  bool truncated = false;
  std::string note;
};

CoverTable cover(const Graph& g, std::size_t r_max, std::uint64_t cap = kDefaultBallCap,
                 const SpectralOptions& opts = {});
nlohmann::ordered_json to_json(const CoverTable& table);
std::string format_text(const CoverTable& table);
std::string format_csv(const CoverTable& table);

}  // namespace unravel
