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

#include "unravel/unravel.h"

#include <cstdlib>
#include <cstring>
#include <fstream>
#include <memory>
#include <string>

#include "unravel/bounds.hpp"
#include "unravel/cover.hpp"
#include "unravel/error.hpp"
#include "unravel/generators.hpp"
#include "unravel/harness.hpp"
#include "unravel/io.hpp"
#include "unravel/spectral.hpp"

struct unr_graph {
  unravel::Graph graph;
};

namespace {

thread_local std::string last_error;

unr_status fail(unr_status status, const std::string& message) {
  last_error = message;
  return status;
}

template <class F>
unr_status guarded(F&& body) {
  try {
    last_error.clear();
    body();
    return UNR_OK;
  } catch (const unravel::Error& e) {
    return fail(static_cast<unr_status>(e.code()), e.what());
  } catch (const nlohmann::json::exception& e) {
    return fail(UNR_E_PARSE, e.what());
  } catch (const std::bad_alloc&) {
    return fail(UNR_E_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(UNR_E_INTERNAL, e.what());
  }
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void need(const void* p, const char* what) {
  if (!p) throw unravel::Error(unravel::ErrorCode::invalid_argument, std::string(what) + " is null");
}

unravel::SpectralOptions spectral_options(double tol) {
  unravel::SpectralOptions o;
  if (tol > 0) o.tol = tol;
  return o;
}

std::string format_or_throw(const char* format) {
  const std::string f = format ? format : "json";
  if (f != "json" && f != "csv" && f != "text")
    throw unravel::Error(unravel::ErrorCode::invalid_argument, "unknown format '" + f + "'");
  return f;
}

}  // namespace

extern "C" {

const char* unr_version(void) { return "0.1.0"; }

const char* unr_status_string(unr_status status) {
  if (status == UNR_OK) return "ok";
  return unravel::to_string(static_cast<unravel::ErrorCode>(status));
}

const char* unr_last_error(void) { return last_error.c_str(); }

void unr_string_free(char* s) { std::free(s); }

unr_status unr_graph_load(const char* path, unr_graph** out) {
  return guarded([&] {
    need(path, "path");
    need(out, "out");
    *out = new unr_graph{unravel::load_graph(path)};
  });
}

unr_status unr_graph_save(const unr_graph* g, const char* path) {
  return guarded([&] {
    need(g, "graph");
    need(path, "path");
    unravel::save_graph(path, g->graph);
  });
}

unr_status unr_graph_from_edges(size_t vertex_count, const uint32_t* edges, size_t edge_count, unr_graph** out) {
  return guarded([&] {
    need(out, "out");
    if (edge_count) need(edges, "edges");
    std::vector<unravel::Edge> list(edge_count);
    for (size_t i = 0; i < edge_count; ++i) list[i] = {edges[2 * i], edges[2 * i + 1]};
    *out = new unr_graph{unravel::Graph::from_edges(vertex_count, list)};
  });
}

unr_status unr_graph_generate(const char* spec_json, unr_graph** out, char** name_out, char** meta_out) {
  return guarded([&] {
    need(spec_json, "spec_json");
    need(out, "out");
    const auto spec = unravel::gen_spec_from_json(nlohmann::json::parse(spec_json));
    auto g = std::make_unique<unr_graph>(unr_graph{unravel::generate(spec)});
    std::string name = unravel::spec_name(spec), meta;
    if (meta_out) {
      const auto stats = unravel::degree_stats(g->graph);
      nlohmann::ordered_json j;
      j["schema_version"] = unravel::kSchemaVersion;
      j["name"] = name;
      j["spec"] = unravel::to_json(spec);
      j["vertex_count"] = g->graph.vertex_count();
      j["edge_count"] = g->graph.edge_count();
      j["min_degree"] = stats.min_degree;
      j["max_degree"] = stats.max_degree;
      j["average_degree"] = unravel::to_double(stats.average_degree);
      j["components"] = unravel::connected_components(g->graph).size();
      meta = j.dump(2) + '\n';
    }
    char* n = name_out ? dup(name) : nullptr;
    char* m = nullptr;
    try {
      m = meta_out ? dup(meta) : nullptr;
    } catch (...) {
      std::free(n);
      throw;
    }
    if (name_out) *name_out = n;
    if (meta_out) *meta_out = m;
    *out = g.release();
  });
}

void unr_graph_free(unr_graph* g) { delete g; }

size_t unr_graph_vertex_count(const unr_graph* g) { return g ? g->graph.vertex_count() : 0; }

size_t unr_graph_edge_count(const unr_graph* g) { return g ? g->graph.edge_count() : 0; }

unr_status unr_graph_to_json(const unr_graph* g, char** out) {
  return guarded([&] {
    need(g, "graph");
    need(out, "out");
    *out = dup(unravel::graph_to_json(g->graph).dump());
  });
}

unr_status unr_spectral_radius(const unr_graph* g, double tol, double* value, double* residual) {
  return guarded([&] {
    need(g, "graph");
    need(value, "value");
    const auto e = unravel::spectral_radius(g->graph, spectral_options(tol));
    *value = e.value;
    if (residual) *residual = e.residual;
    if (!e.converged) throw unravel::Error(unravel::ErrorCode::not_converged, "power iteration did not converge");
  });
}

unr_status unr_second_eigenvalue(const unr_graph* g, double tol, double* value) {
  return guarded([&] {
    need(g, "graph");
    need(value, "value");
    const auto e = unravel::second_largest_eigenvalue(g->graph, spectral_options(tol));
    *value = e.value;
    if (!e.converged) throw unravel::Error(unravel::ErrorCode::not_converged, "deflated iteration did not converge");
  });
}

unr_status unr_smallest_eigenvalue(const unr_graph* g, double tol, double* value) {
  return guarded([&] {
    need(g, "graph");
    need(value, "value");
    const auto e = unravel::smallest_eigenvalue(g->graph, spectral_options(tol));
    *value = e.value;
    if (!e.converged) throw unravel::Error(unravel::ErrorCode::not_converged, "shifted iteration did not converge");
  });
}

unr_status unr_unraveled_ball_radius(const unr_graph* g, uint32_t v, size_t r, uint64_t cap, double* value,
                                     uint64_t* node_count) {
  return guarded([&] {
    need(g, "graph");
    need(value, "value");
    unravel::check_vertex(g->graph, v);
    const std::uint64_t limit = cap ? cap : unravel::kDefaultBallCap;
    unravel::CoverShapes shapes(g->graph, r == 0 ? 0 : r - 1);
    const auto s = shapes.ball_shape(v, r);
    if (node_count) *node_count = shapes.node_count(s);
    if (shapes.node_count(s) > limit)
      throw unravel::CapExceeded("unraveled ball has " + std::to_string(shapes.node_count(s)) +
                                     " nodes, cap " + std::to_string(limit),
                                 shapes.node_count(s));
    *value = shapes.spectral_radius(s);
  });
}

unr_status unr_unraveled_ball_export(const unr_graph* g, uint32_t v, size_t r, uint64_t cap, const char* edges_path,
                                     const char* labels_path) {
  return guarded([&] {
    need(g, "graph");
    need(edges_path, "edges_path");
    need(labels_path, "labels_path");
    const auto ball = unravel::unraveled_ball(g->graph, v, r, cap ? cap : unravel::kDefaultBallCap);
    std::ofstream edges(edges_path), labels(labels_path);
    if (!edges) throw unravel::Error(unravel::ErrorCode::io, std::string(edges_path) + ": cannot open");
    if (!labels) throw unravel::Error(unravel::ErrorCode::io, std::string(labels_path) + ": cannot open");
    unravel::export_unraveled_ball(ball, edges, labels);
    if (!edges || !labels) throw unravel::Error(unravel::ErrorCode::io, "export write failed");
  });
}

unr_status unr_evaluate_bounds(const unr_graph* g, size_t r, double slack_tol, char** out) {
  return guarded([&] {
    need(g, "graph");
    need(out, "out");
    unravel::AnalysisOptions opts;
    if (slack_tol >= 0) opts.slack_tol = slack_tol;
    nlohmann::ordered_json list = nlohmann::ordered_json::array();
    for (const auto& rep : unravel::evaluate_all(g->graph, r, opts)) list.push_back(unravel::to_json(rep));
    *out = dup(list.dump(2));
  });
}

unr_status unr_verify(const char* config_json, char** summary_out, int* violation) {
  return guarded([&] {
    need(config_json, "config_json");
    const auto config = unravel::run_config_from_json(nlohmann::json::parse(config_json));
    const auto result = unravel::run_verify(config);
    if (violation) *violation = result.summary.violation ? 1 : 0;
    if (summary_out) *summary_out = dup(unravel::to_json(result.summary).dump(2));
  });
}

unr_status unr_converge(const unr_graph* g, uint32_t v, size_t max_length, const char* format, char** out, int* ok) {
  return guarded([&] {
    need(g, "graph");
    need(out, "out");
    const auto f = format_or_throw(format);
    const auto t = unravel::converge(g->graph, v, max_length);
    *out = dup(f == "json" ? unravel::to_json(t).dump(2) : f == "csv" ? unravel::format_csv(t) : unravel::format_text(t));
    if (ok) *ok = t.monotone ? 1 : 0;
  });
}

unr_status unr_cover(const unr_graph* g, size_t r_max, uint64_t cap, const char* format, char** out, int* ok) {
  return guarded([&] {
    need(g, "graph");
    need(out, "out");
    const auto f = format_or_throw(format);
    const auto t = unravel::cover(g->graph, r_max, cap ? cap : unravel::kDefaultBallCap);
    *out = dup(f == "json" ? unravel::to_json(t).dump(2) : f == "csv" ? unravel::format_csv(t) : unravel::format_text(t));
    if (ok) *ok = t.monotone && t.above_theorem1 ? 1 : 0;
  });
}

unr_status unr_report(const char* reports_path, const char* format, char** out, int* violation) {
  return guarded([&] {
    need(reports_path, "reports_path");
    need(out, "out");
    const auto f = format_or_throw(format);
    const auto summary = unravel::summarize(unravel::load_reports(reports_path));
    *out = dup(f == "csv" || f == "text" ? unravel::summary_csv(summary) : unravel::to_json(summary).dump(2));
    if (violation) *violation = summary.violation ? 1 : 0;
  });
}

}  // extern "C"
