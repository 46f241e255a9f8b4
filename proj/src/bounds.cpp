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

#include "unravel/bounds.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <tuple>

#include "unravel/error.hpp"

namespace unravel {
namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

double cosine(std::size_t denominator) {
  return std::cos(std::numbers::pi / static_cast<double>(denominator));
}

std::string rational_string(const Rational& q) {
  std::ostringstream out;
  out << q.numerator();
  if (q.denominator() != 1) out << '/' << q.denominator();
  return out.str();
}

std::string format_double(double x) {
  if (std::isnan(x)) return "";
  std::ostringstream out;
  out.precision(17);
  out << x;
  return out.str();
}

// argmax with smallest index on ties; NaN entries are skipped.
std::optional<std::size_t> argmax(const std::vector<double>& values) {
  std::optional<std::size_t> best;
  for (std::size_t i = 0; i < values.size(); ++i)
    if (!std::isnan(values[i]) && (!best || values[i] > values[*best])) best = i;
  return best;
}

void require_edges(const Graph& g, const char* what) {
  if (g.edge_count() == 0) throw Error(ErrorCode::invalid_argument, std::string(what) + ": graph has no edges");
}

const std::vector<std::pair<BoundKind, std::string_view>>& kind_names() {
  static const std::vector<std::pair<BoundKind, std::string_view>> names = {
      {BoundKind::theorem1, "theorem1"},
      {BoundKind::corollary_lb2, "corollary_lb2"},
      {BoundKind::amgm_hoory_form, "amgm_hoory_form"},
      {BoundKind::lemma_lb3, "lemma_lb3"},
      {BoundKind::theorem8, "theorem8"},
      {BoundKind::alon_boppana_classic, "alon_boppana_classic"},
      {BoundKind::lemma_lb3_tree, "lemma_lb3_tree"},
      {BoundKind::two_ball_deflation, "two_ball_deflation"},
      {BoundKind::ball_vs_cover, "ball_vs_cover"},
      {BoundKind::closed_walk_injection, "closed_walk_injection"},
      {BoundKind::rayleigh_identity, "rayleigh_identity"},
      {BoundKind::forest_rayleigh, "forest_rayleigh"},
      {BoundKind::forest_embedding, "forest_embedding"},
  };
  return names;
}

}  // namespace

double to_double(const Rational& q) {
  return static_cast<double>(q.numerator()) / static_cast<double>(q.denominator());
}

double corollary_lb2_rhs(const Graph& g) {
  require_edges(g, "corollary_lb2_rhs");
  double sum = 0.0;
  for (const auto& [k, count] : degree_stats(g).histogram)
    if (k > 0) sum += static_cast<double>(count) * static_cast<double>(k) * std::sqrt(static_cast<double>(k - 1));
  return sum / static_cast<double>(g.edge_count());
}

double theorem1_rhs(const Graph& g, std::size_t r) { return corollary_lb2_rhs(g) * cosine(r + 2); }

double amgm_rhs(const Graph& g) {
  require_edges(g, "amgm_rhs");
  if (g.min_degree() < 1) throw Error(ErrorCode::invalid_argument, "amgm_rhs: isolated vertex");
  double log_sum = 0.0, weight = 0.0;
  for (const auto& [k, count] : degree_stats(g).histogram) {
    const double dk = static_cast<double>(k) * static_cast<double>(count);
    weight += dk;
    if (k == 1) return 0.0;
    log_sum += dk * 0.5 * std::log(static_cast<double>(k - 1));
  }
  return 2.0 * std::exp(log_sum / weight);
}

double lemma_lb3_rhs(const Rational& d, std::size_t r) {
  if (d < 1) throw Error(ErrorCode::invalid_argument, "lemma_lb3_rhs: d must be >= 1");
  return 2.0 * std::sqrt(to_double(d - 1)) * cosine(r + 2);
}

double lemma_lb3_tree_rhs(std::size_t r) { return path_spectral_radius(r + 1); }

double theorem8_rhs(const Rational& d, std::size_t r) {
  if (d < 1) throw Error(ErrorCode::invalid_argument, "theorem8_rhs: d must be >= 1");
  if (r < 1) throw Error(ErrorCode::invalid_argument, "theorem8_rhs: r must be >= 1");
  return 2.0 * std::sqrt(to_double(d - 1)) * cosine(r + 1);
}

double alon_boppana_classic_rhs(std::size_t d, std::size_t r) {
  if (d < 2) throw Error(ErrorCode::invalid_argument, "alon_boppana_classic_rhs: d must be >= 2");
  if (r < 1) throw Error(ErrorCode::invalid_argument, "alon_boppana_classic_rhs: r must be >= 1");
  const double rr = static_cast<double>(r);
  return 2.0 * (1.0 - 1.0 / rr) * std::sqrt(static_cast<double>(d - 1)) + 1.0 / rr;
}

double hoory_rhs(const Rational& d, std::size_t r, double c) {
  if (d < 1) throw Error(ErrorCode::invalid_argument, "hoory_rhs: d must be >= 1");
  if (r < 1) throw Error(ErrorCode::invalid_argument, "hoory_rhs: r must be >= 1");
  const double rr = static_cast<double>(r);
  return 2.0 * (1.0 - c * std::log(rr) / rr) * std::sqrt(to_double(d - 1));
}

std::string_view to_string(BoundKind kind) {
  for (const auto& [k, name] : kind_names())
    if (k == kind) return name;
  return "unknown";
}

std::optional<BoundKind> parse_bound_kind(std::string_view name) {
  for (const auto& [k, n] : kind_names())
    if (n == name) return k;
  return std::nullopt;
}

const std::vector<BoundKind>& all_bound_kinds() {
  static const std::vector<BoundKind> kinds = [] {
    std::vector<BoundKind> out;
    for (const auto& entry : kind_names()) out.push_back(entry.first);
    return out;
  }();
  return kinds;
}

void finalize(BoundReport& report) {
  if (std::isnan(report.slack)) report.slack = report.lhs - report.rhs;
  report.pass = report.hypothesis_ok && report.slack >= -report.tol;
}

bool canonical_less(const BoundReport& a, const BoundReport& b) {
  return std::tie(a.graph_id, a.r, a.bound) < std::tie(b.graph_id, b.r, b.bound);
}

nlohmann::ordered_json to_json(const BoundReport& report) {
  auto number = [](double x) -> nlohmann::ordered_json {
    if (std::isfinite(x)) return x;
    return nullptr;
  };
  nlohmann::ordered_json j;
  j["graph_id"] = report.graph_id;
  j["bound"] = std::string(to_string(report.bound));
  j["r"] = report.r;
  j["lhs"] = number(report.lhs);
  j["rhs"] = number(report.rhs);
  j["slack"] = number(report.slack);
  if (report.witness.empty())
    j["witness"] = nullptr;
  else if (report.witness.size() == 1)
    j["witness"] = report.witness.front();
  else
    j["witness"] = report.witness;
  j["hypothesis_ok"] = report.hypothesis_ok;
  j["pass"] = report.pass;
  j["tol"] = report.tol;
  j["runtime_ms"] = report.runtime_ms;
  j["note"] = report.note;
  j["error"] = report.error;
  return j;
}

BoundReport report_from_json(const nlohmann::json& j) {
  auto number = [&](const char* key) {
    const auto& v = j.at(key);
    return v.is_null() ? kNaN : v.get<double>();
  };
  BoundReport r;
  r.graph_id = j.at("graph_id").get<std::string>();
  const auto name = j.at("bound").get<std::string>();
  const auto kind = parse_bound_kind(name);
  if (!kind) throw Error(ErrorCode::parse, "unknown bound '" + name + "'");
  r.bound = *kind;
  r.r = j.at("r").get<std::size_t>();
  r.lhs = number("lhs");
  r.rhs = number("rhs");
  r.slack = number("slack");
  const auto& w = j.at("witness");
  if (w.is_number_integer())
    r.witness = {w.get<std::int64_t>()};
  else if (w.is_array())
    r.witness = w.get<std::vector<std::int64_t>>();
  r.hypothesis_ok = j.at("hypothesis_ok").get<bool>();
  r.pass = j.at("pass").get<bool>();
  r.tol = j.at("tol").get<double>();
  r.runtime_ms = j.value("runtime_ms", 0.0);
  r.note = j.value("note", std::string());
  r.error = j.value("error", false);
  return r;
}

std::vector<std::string> report_csv_header() {
  return {"graph_id", "bound", "r",  "lhs",        "rhs",  "slack", "witness",
          "hypothesis_ok", "pass", "tol", "runtime_ms", "note", "error"};
}

std::vector<std::string> report_csv_row(const BoundReport& report) {
  std::string witness;
  for (std::size_t i = 0; i < report.witness.size(); ++i) {
    if (i) witness += ';';
    witness += std::to_string(report.witness[i]);
  }
  return {report.graph_id,
          std::string(to_string(report.bound)),
          std::to_string(report.r),
          format_double(report.lhs),
          format_double(report.rhs),
          format_double(report.slack),
          witness,
          report.hypothesis_ok ? "true" : "false",
          report.pass ? "true" : "false",
          format_double(report.tol),
          format_double(report.runtime_ms),
          report.note,
          report.error ? "true" : "false"};
}

GraphAnalysis::GraphAnalysis(std::string id, Graph g, AnalysisOptions opts)
    : id_(std::move(id)), graph_(std::move(g)), opts_(opts) {}

const HypothesisCheck& GraphAnalysis::hypotheses() {
  if (!hyp_) {
    HypothesisCheck h;
    const auto stats = degree_stats(graph_);
    h.min_degree = stats.min_degree;
    h.max_degree = stats.max_degree;
    h.average_degree = stats.average_degree;
    h.regular = is_regular(graph_);
    h.forest = is_forest(graph_);
    h.connected = connected_components(graph_).size() == 1;
    h.diameter = diameter(graph_);
    h.edge_count = graph_.edge_count();
    hyp_ = h;
  }
  return *hyp_;
}

double GraphAnalysis::lambda1() {
  if (!lambda1_) lambda1_ = graph_.empty() ? 0.0 : spectral_radius(graph_, opts_.spectral).value;
  return *lambda1_;
}

double GraphAnalysis::lambda2() {
  if (!summary_) summary_ = spectrum_summary(graph_, opts_.spectral);
  return summary_->lambda2;
}

double GraphAnalysis::lambda_min() {
  if (!summary_) summary_ = spectrum_summary(graph_, opts_.spectral);
  return summary_->lambda_min;
}

const std::vector<double>& GraphAnalysis::ball_radii(std::size_t r) {
  if (auto it = ball_radii_.find(r); it != ball_radii_.end()) return it->second;
  const std::size_t n = graph_.vertex_count();
  std::vector<double> radii(n, 0.0);
  std::vector<std::size_t> sizes(n, 1);
  const auto below = r > 0 ? ball_sizes_.find(r - 1) : ball_sizes_.end();
  for (Vertex v = 0; v < n; ++v) {
    const auto sub = ball_subgraph(graph_, v, r);
    sizes[v] = sub.graph.vertex_count();
    if (sub.graph.edge_count() == 0)
      radii[v] = 0.0;
    else if (sizes[v] == n)
      radii[v] = lambda1();
    else if (below != ball_sizes_.end() && below->second[v] == sizes[v])
      radii[v] = ball_radii_.at(r - 1)[v];
    else
      radii[v] = spectral_radius(sub.graph, opts_.spectral).value;
  }
  ball_sizes_[r] = std::move(sizes);
  return ball_radii_[r] = std::move(radii);
}

const MaxUnraveled& GraphAnalysis::unraveled(std::size_t r) {
  if (auto it = unraveled_.find(r); it != unraveled_.end()) return it->second;
  return unraveled_[r] = find_max_unraveled_vertex(graph_, r, opts_.ball_cap);
}

const RobustDegree& GraphAnalysis::robust(std::size_t r) {
  if (auto it = robust_.find(r); it != robust_.end()) return it->second;
  return robust_[r] = robust_average_degree(graph_, r);
}

const EdgeDistance& GraphAnalysis::edge_distance() {
  if (!edge_distance_) edge_distance_ = max_edge_distance(graph_);
  return *edge_distance_;
}

const GraphAnalysis::ForestSummary& GraphAnalysis::forest(std::size_t r) {
  if (auto it = forest_.find(r); it != forest_.end()) return it->second;
  ForestSummary s;
  try {
    const auto f = WalkForest::build(graph_, r, opts_.forest_cap);
    s.built = true;
    s.path = f.probability_path();
    s.node_count = f.node_count();
    s.rayleigh = test_vector_rayleigh(f);
    s.radius = forest_spectral_radius(f);
  } catch (const CapExceeded& e) {
    s.note = "forest cap exceeded: " + std::to_string(e.count()) + " nodes";
  } catch (const Error& e) {
    if (e.code() != ErrorCode::precondition) throw;
    s.note = e.what();
  }
  return forest_[r] = std::move(s);
}

namespace {

BoundReport base_report(GraphAnalysis& a, BoundKind kind, std::size_t r) {
  BoundReport rep;
  rep.graph_id = a.id();
  rep.bound = kind;
  rep.r = r;
  rep.lhs = rep.rhs = rep.slack = kNaN;
  rep.tol = a.options().slack_tol;
  return rep;
}

void theorem1(GraphAnalysis& a, BoundReport& rep) {
  const auto& h = a.hypotheses();
  if (h.edge_count == 0 || h.min_degree < 2) {
    rep.note = "minimum degree < 2";
    return;
  }
  rep.rhs = theorem1_rhs(a.graph(), rep.r);
  const auto& mu = a.unraveled(rep.r);
  if (mu.found) {
    rep.lhs = mu.value;
    rep.witness = {mu.witness};
  }
  rep.hypothesis_ok = true;
  if (mu.capped > 0) {
    rep.note = std::to_string(mu.capped) + " vertices over the ball cap";
    if (!mu.found || mu.value < rep.rhs - rep.tol) {
      rep.hypothesis_ok = false;
      rep.note += "; skipped by cap";
    }
  }
}

void corollary(GraphAnalysis& a, BoundReport& rep) {
  const auto& h = a.hypotheses();
  if (h.edge_count == 0 || h.min_degree < 2) {
    rep.note = "minimum degree < 2";
    return;
  }
  rep.rhs = corollary_lb2_rhs(a.graph());
  rep.lhs = a.lambda1();
  rep.hypothesis_ok = true;
  rep.note = "lhs is lambda_1(G), an upper bound for the cover";
}

void amgm(GraphAnalysis& a, BoundReport& rep) {
  const auto& h = a.hypotheses();
  if (h.edge_count == 0 || h.min_degree < 1) {
    rep.note = "isolated vertex";
    return;
  }
  rep.lhs = corollary_lb2_rhs(a.graph());
  rep.rhs = amgm_rhs(a.graph());
  rep.tol = kRationalIdentityTol;
  rep.hypothesis_ok = true;
  if (h.regular) rep.note = "regular";
}

void lemma_lb3(GraphAnalysis& a, BoundReport& rep) {
  const auto& h = a.hypotheses();
  if (h.average_degree < 1) {
    rep.note = "average degree " + rational_string(h.average_degree) + " < 1";
    return;
  }
  rep.rhs = lemma_lb3_rhs(h.average_degree, rep.r);
  const auto& radii = a.ball_radii(rep.r);
  const auto v = *argmax(radii);
  rep.lhs = radii[v];
  rep.witness = {static_cast<std::int64_t>(v)};
  rep.hypothesis_ok = true;
  rep.note = "d=" + rational_string(h.average_degree);
}

void lemma_lb3_tree(GraphAnalysis& a, BoundReport& rep) {
  const auto& h = a.hypotheses();
  if (!h.forest || !h.connected || h.edge_count == 0) {
    rep.note = "not a tree with an edge";
    return;
  }
  const auto& radii = a.ball_radii(rep.r);
  const std::size_t n = a.graph().vertex_count();
  // Every ball that misses part of the tree contains a path on r + 1 vertices.
  std::optional<Vertex> worst;
  for (Vertex v = 0; v < n; ++v)
    if (ball(a.graph(), v, rep.r).size() < n && (!worst || radii[v] < radii[*worst])) worst = v;
  rep.hypothesis_ok = true;
  if (worst) {
    rep.lhs = radii[*worst];
    rep.rhs = lemma_lb3_tree_rhs(rep.r);
    rep.witness = {*worst};
    rep.note = "min over proper balls";
  } else {
    rep.lhs = a.lambda1();
    rep.rhs = 2.0 * std::sqrt(to_double(h.average_degree - 1));
    rep.note = "every ball is the whole tree";
  }
}

void theorem8(GraphAnalysis& a, BoundReport& rep) {
  if (rep.r < 1) {
    rep.note = "r < 1";
    return;
  }
  const auto& rb = a.robust(rep.r);
  rep.note = "d'=" + rational_string(rb.value);
  if (rb.empties_graph) rep.note += "; ball deletion empties the graph";
  if (rb.value < 1) {
    rep.witness = {rb.witness};
    return;
  }
  rep.rhs = theorem8_rhs(rb.value, rep.r);
  rep.lhs = a.lambda2();
  rep.witness = {rb.witness};
  rep.hypothesis_ok = true;
}

void alon_boppana(GraphAnalysis& a, BoundReport& rep) {
  const auto& h = a.hypotheses();
  if (!h.regular || h.min_degree < 2 || rep.r < 1) {
    rep.note = "needs a d-regular graph with d >= 2";
    return;
  }
  const auto& ed = a.edge_distance();
  rep.witness = {ed.first.first, ed.first.second, ed.second.first, ed.second.second};
  if (ed.distance != kUnreachable && ed.distance < 2 * rep.r) {
    rep.note = "max edge distance " + std::to_string(ed.distance) + " < 2r";
    return;
  }
  rep.note = ed.distance == kUnreachable ? "edges in different components"
                                         : "edge distance " + std::to_string(ed.distance);
  rep.rhs = alon_boppana_classic_rhs(h.min_degree, rep.r);
  rep.lhs = a.lambda2();
  rep.hypothesis_ok = true;
}

void ball_vs_cover(GraphAnalysis& a, BoundReport& rep) {
  if (rep.r > a.options().cover_sweep_max_radius) {
    rep.note = "radius above sweep limit " + std::to_string(a.options().cover_sweep_max_radius);
    return;
  }
  const auto& radii = a.ball_radii(rep.r);
  const auto& mu = a.unraveled(rep.r);
  std::optional<Vertex> worst;
  for (Vertex v = 0; v < radii.size(); ++v) {
    if (std::isnan(mu.per_vertex[v])) continue;
    if (!worst || radii[v] - mu.per_vertex[v] < radii[*worst] - mu.per_vertex[*worst]) worst = v;
  }
  if (mu.capped) rep.note = std::to_string(mu.capped) + " vertices over the ball cap";
  if (!worst) return;
  rep.lhs = radii[*worst];
  rep.rhs = mu.per_vertex[*worst];
  rep.witness = {*worst};
  rep.hypothesis_ok = true;
}

void injection(GraphAnalysis& a, BoundReport& rep) {
  const auto& opts = a.options();
  const Graph& g = a.graph();
  if (g.vertex_count() > opts.injection_max_vertices) {
    rep.note = "more than " + std::to_string(opts.injection_max_vertices) + " vertices";
    return;
  }
  std::optional<BigInt> least;
  std::int64_t worst_v = -1, worst_k = -1;
  std::size_t capped = 0;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    InjectionCheck check;
    try {
      check = closed_walk_injection_check(g, v, rep.r, opts.injection_max_length, opts.injection_cap);
    } catch (const CapExceeded&) {
      ++capped;
      continue;
    }
    for (std::size_t k = 0; k < check.ball_counts.size(); ++k) {
      BigInt diff = check.ball_counts[k] - check.cover_counts[k];
      if (!least || diff < *least) {
        least = diff;
        worst_v = v;
        worst_k = static_cast<std::int64_t>(k);
      }
    }
  }
  if (capped) rep.note = std::to_string(capped) + " vertices over the cap; ";
  if (!least) return;
  // lhs - rhs is the smallest count difference over all (v, k).
  rep.lhs = to_double(*least);
  rep.rhs = 0.0;
  rep.tol = 0.0;
  rep.witness = {worst_v, worst_k};
  rep.hypothesis_ok = true;
  rep.note += "K=" + std::to_string(opts.injection_max_length);
}

void rayleigh_identity(GraphAnalysis& a, BoundReport& rep) {
  const auto& f = a.forest(rep.r);
  if (!f.built) {
    rep.note = f.note;
    return;
  }
  rep.lhs = f.rayleigh;
  rep.rhs = theorem1_rhs(a.graph(), rep.r);
  rep.slack = -std::fabs(rep.lhs - rep.rhs);
  const bool exact = f.path == ProbabilityPath::rational;
  rep.tol = (exact ? kRationalIdentityTol : kLogSpaceIdentityTol) * std::fabs(rep.rhs);
  rep.hypothesis_ok = true;
  rep.note = std::string(exact ? "rational" : "log_space") + " path; " + std::to_string(f.node_count) + " nodes";
}

void forest_rayleigh(GraphAnalysis& a, BoundReport& rep) {
  const auto& f = a.forest(rep.r);
  if (!f.built) {
    rep.note = f.note;
    return;
  }
  rep.lhs = f.radius.value;
  rep.rhs = f.rayleigh;
  rep.witness = {f.radius.witness.tail, f.radius.witness.head};
  rep.hypothesis_ok = true;
}

void forest_embedding(GraphAnalysis& a, BoundReport& rep) {
  const auto& f = a.forest(rep.r);
  if (!f.built) {
    rep.note = f.note;
    return;
  }
  const Vertex head = f.radius.witness.head;
  const auto& mu = a.unraveled(rep.r);
  rep.witness = {f.radius.witness.tail, head};
  if (std::isnan(mu.per_vertex[head])) {
    rep.note = "cover ball over the cap";
    return;
  }
  rep.lhs = mu.per_vertex[head];
  rep.rhs = f.radius.value;
  rep.hypothesis_ok = true;
}

std::vector<double> subgraph_ball_radii(const Graph& g, std::size_t r, const SpectralOptions& opts) {
  std::vector<double> radii(g.vertex_count(), 0.0);
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    const auto sub = ball_subgraph(g, v, r);
    if (sub.graph.edge_count() > 0) radii[v] = spectral_radius(sub.graph, opts).value;
  }
  return radii;
}

void two_ball(GraphAnalysis& a, BoundReport& rep) {
  const std::size_t r = rep.r;
  if (r < 1) {
    rep.note = "r < 1";
    return;
  }
  const auto& rb = a.robust(r);
  if (rb.value < 1) {
    rep.note = "d'=" + rational_string(rb.value) + " < 1";
    return;
  }
  const Graph& g = a.graph();
  const auto& radii1 = a.ball_radii(r - 1);
  const auto v1 = static_cast<Vertex>(*argmax(radii1));
  const auto rest = delete_ball(g, v1, r);
  const auto radii2 = subgraph_ball_radii(rest.graph, r - 1, a.options().spectral);
  const auto local2 = static_cast<Vertex>(*argmax(radii2));
  const Vertex v2 = rest.original[local2];

  const auto b1 = ball(g, v1, r - 1);
  const auto b2_local = ball(rest.graph, local2, r - 1);
  bool separated = true;
  for (Vertex u : b2_local) {
    const Vertex w = rest.original[u];
    if (b1.contains(w)) separated = false;
    for (Vertex x : g.neighbors(w))
      if (b1.contains(x)) separated = false;
  }
  const double lambda_star = theorem8_rhs(rb.value, r);
  const double m = std::min(radii1[v1], radii2[local2]);
  rep.lhs = a.lambda2();
  rep.rhs = m;
  rep.slack = separated ? std::min(rep.lhs - m, m - lambda_star) : -1.0;
  rep.witness = {v1, v2};
  rep.hypothesis_ok = true;
  std::ostringstream note;
  note.precision(17);
  note << "lambda1(G1)=" << radii1[v1] << "; lambda1(G2)=" << radii2[local2] << "; target=" << lambda_star;
  if (!separated) note << "; balls touch";
  rep.note = note.str();
}

}  // namespace

BoundReport evaluate_bound(GraphAnalysis& a, BoundKind kind, std::size_t r) {
  BoundReport rep = base_report(a, kind, r);
  const auto start = std::chrono::steady_clock::now();
  try {
    switch (kind) {
      case BoundKind::theorem1: theorem1(a, rep); break;
      case BoundKind::corollary_lb2: corollary(a, rep); break;
      case BoundKind::amgm_hoory_form: amgm(a, rep); break;
      case BoundKind::lemma_lb3: lemma_lb3(a, rep); break;
      case BoundKind::theorem8: theorem8(a, rep); break;
      case BoundKind::alon_boppana_classic: alon_boppana(a, rep); break;
      case BoundKind::lemma_lb3_tree: lemma_lb3_tree(a, rep); break;
      case BoundKind::two_ball_deflation: two_ball(a, rep); break;
      case BoundKind::ball_vs_cover: ball_vs_cover(a, rep); break;
      case BoundKind::closed_walk_injection: injection(a, rep); break;
      case BoundKind::rayleigh_identity: rayleigh_identity(a, rep); break;
      case BoundKind::forest_rayleigh: forest_rayleigh(a, rep); break;
      case BoundKind::forest_embedding: forest_embedding(a, rep); break;
    }
  } catch (const std::exception& e) {
    rep.hypothesis_ok = false;
    rep.error = true;
    rep.note = std::string("error: ") + e.what();
  }
  finalize(rep);
  if (a.options().timing)
    rep.runtime_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

std::vector<BoundReport> evaluate_all(GraphAnalysis& a, std::size_t r) {
  std::vector<BoundReport> out;
  for (auto kind : {BoundKind::theorem1, BoundKind::corollary_lb2, BoundKind::amgm_hoory_form,
                    BoundKind::lemma_lb3, BoundKind::theorem8, BoundKind::alon_boppana_classic})
    out.push_back(evaluate_bound(a, kind, r));
  return out;
}

std::vector<BoundReport> evaluate_all(const Graph& g, std::size_t r, const AnalysisOptions& opts,
                                      const std::string& id) {
  GraphAnalysis a(id, g, opts);
  return evaluate_all(a, r);
}

std::vector<BoundReport> lemma_checks(GraphAnalysis& a, std::size_t r) {
  std::vector<BoundReport> out;
  for (auto kind : {BoundKind::lemma_lb3_tree, BoundKind::two_ball_deflation, BoundKind::ball_vs_cover,
                    BoundKind::closed_walk_injection, BoundKind::rayleigh_identity,
                    BoundKind::forest_rayleigh, BoundKind::forest_embedding})
    out.push_back(evaluate_bound(a, kind, r));
  return out;
}

BoundReport two_ball_deflation_check(GraphAnalysis& a, std::size_t r) {
  return evaluate_bound(a, BoundKind::two_ball_deflation, r);
}

BoundReport two_ball_deflation_check(const Graph& g, std::size_t r, const AnalysisOptions& opts) {
  GraphAnalysis a("graph", g, opts);
  return two_ball_deflation_check(a, r);
}

}  // namespace unravel
