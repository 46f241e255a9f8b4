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
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "unravel/cover.hpp"
#include "unravel/graph.hpp"
#include "unravel/spectral.hpp"

namespace unravel {

inline constexpr double kDefaultSlackTol = 1e-9;
inline constexpr double kRationalIdentityTol = 1e-12;  // relative
inline constexpr double kLogSpaceIdentityTol = 1e-9;   // relative

/// (1/|E|) sum_u d(u) sqrt(d(u) - 1) cos(pi / (r + 2)).
double theorem1_rhs(const Graph& g, std::size_t r);
/// (1/|E|) sum_u d(u) sqrt(d(u) - 1).
double corollary_lb2_rhs(const Graph& g);
/// 2 prod_u sqrt(d(u) - 1)^(d(u) / sum_v d(v)), evaluated in log space.
double amgm_rhs(const Graph& g);
/// 2 sqrt(d - 1) cos(pi / (r + 2)), d >= 1.
double lemma_lb3_rhs(const Rational& d, std::size_t r);
/// 2 cos(pi / (r + 2)): the path bound for trees whose balls are proper.
double lemma_lb3_tree_rhs(std::size_t r);
/// 2 sqrt(d - 1) cos(pi / (r + 1)), d >= 1, r >= 1.
double theorem8_rhs(const Rational& d, std::size_t r);
/// 2 (1 - 1/r) sqrt(d - 1) + 1/r, d >= 2, r >= 1.
double alon_boppana_classic_rhs(std::size_t d, std::size_t r);
/// 2 (1 - c log(r) / r) sqrt(d - 1). The constant c is not known; only
/// used for illustration.
double hoory_rhs(const Rational& d, std::size_t r, double c = 1.0);

double to_double(const Rational& q);

enum class BoundKind {
  // one report per (graph, r) from evaluate_all()
  theorem1,
  corollary_lb2,
  amgm_hoory_form,
  lemma_lb3,
  theorem8,
  alon_boppana_classic,
  // lemma-level checks
  lemma_lb3_tree,
  two_ball_deflation,
  ball_vs_cover,
  closed_walk_injection,
  rayleigh_identity,
  forest_rayleigh,
  forest_embedding,
};

std::string_view to_string(BoundKind kind);
std::optional<BoundKind> parse_bound_kind(std::string_view name);
const std::vector<BoundKind>& all_bound_kinds();

/// slack is lhs - rhs for the plain bounds; checks with more than one
/// inequality store the smallest margin. pass == hypothesis_ok && slack >= -tol.
struct BoundReport {
  std::string graph_id;
  BoundKind bound = BoundKind::theorem1;
  std::size_t r = 0;
  double lhs = 0.0;
  double rhs = 0.0;
  double slack = 0.0;
  std::vector<std::int64_t> witness;
  bool hypothesis_ok = false;
  bool pass = false;
  double tol = kDefaultSlackTol;
  double runtime_ms = 0.0;
  std::string note;
  bool error = false;  // evaluation threw; hypothesis_ok is false
};

void finalize(BoundReport& report);
bool canonical_less(const BoundReport& a, const BoundReport& b);
/// A pass=false report whose hypothesis held.
inline bool is_violation(const BoundReport& r) { return r.hypothesis_ok && !r.pass; }

nlohmann::ordered_json to_json(const BoundReport& report);
BoundReport report_from_json(const nlohmann::json& j);
std::vector<std::string> report_csv_header();
std::vector<std::string> report_csv_row(const BoundReport& report);

/// Hypothesis inputs, always recomputed from the graph.
struct HypothesisCheck {
  std::size_t min_degree = 0;
  std::size_t max_degree = 0;
  Rational average_degree{0};
  bool regular = false;
  bool forest = false;
  bool connected = false;
  std::size_t diameter = 0;
  std::size_t edge_count = 0;
};

struct AnalysisOptions {
  SpectralOptions spectral;
  double slack_tol = kDefaultSlackTol;
  std::uint64_t ball_cap = kDefaultBallCap;
  std::uint64_t forest_cap = kDefaultForestCap;
  std::size_t injection_max_vertices = 12;
  std::size_t injection_max_length = 12;
  std::uint64_t injection_cap = 5000;
  std::size_t cover_sweep_max_radius = 4;
  bool timing = false;
};

/// Memoized per-graph quantities shared by the bounds. Not thread safe;
/// one instance per task.
class GraphAnalysis {
 public:
  GraphAnalysis(std::string id, Graph g, AnalysisOptions opts = {});

  const std::string& id() const { return id_; }
  const Graph& graph() const { return graph_; }
  const AnalysisOptions& options() const { return opts_; }

  const HypothesisCheck& hypotheses();
  double lambda1();
  double lambda2();
  double lambda_min();
  /// lambda_1(G(v, r)) for every v.
  const std::vector<double>& ball_radii(std::size_t r);
  const MaxUnraveled& unraveled(std::size_t r);
  const RobustDegree& robust(std::size_t r);
  const EdgeDistance& edge_distance();

  struct ForestSummary {
    bool built = false;
    std::string note;  // why the forest was not built
    ProbabilityPath path = ProbabilityPath::rational;
    std::uint64_t node_count = 0;
    double rayleigh = 0.0;
    ForestRadius radius;
  };
  const ForestSummary& forest(std::size_t r);

 private:
  std::string id_;
  Graph graph_;
  AnalysisOptions opts_;
  std::optional<HypothesisCheck> hyp_;
  std::optional<double> lambda1_;
  std::optional<SpectrumSummary> summary_;
  std::map<std::size_t, std::vector<double>> ball_radii_;
  std::map<std::size_t, std::vector<std::size_t>> ball_sizes_;
  std::map<std::size_t, MaxUnraveled> unraveled_;
  std::map<std::size_t, RobustDegree> robust_;
  std::optional<EdgeDistance> edge_distance_;
  std::map<std::size_t, ForestSummary> forest_;
};

BoundReport evaluate_bound(GraphAnalysis& a, BoundKind kind, std::size_t r);

/// The six main bounds, in BoundKind order. Inapplicable bounds come back
/// with hypothesis_ok = false.
std::vector<BoundReport> evaluate_all(GraphAnalysis& a, std::size_t r);
std::vector<BoundReport> evaluate_all(const Graph& g, std::size_t r, const AnalysisOptions& opts = {},
                                      const std::string& id = "graph");

/// Lemma-level checks for one radius.
std::vector<BoundReport> lemma_checks(GraphAnalysis& a, std::size_t r);

/// Rebuilds the two disjoint balls of the second-eigenvalue argument and
/// checks lambda_2 >= min(lambda_1(G_1), lambda_1(G_2)) >= the target.
BoundReport two_ball_deflation_check(GraphAnalysis& a, std::size_t r);
BoundReport two_ball_deflation_check(const Graph& g, std::size_t r, const AnalysisOptions& opts = {});

}  // namespace unravel
