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

#include "unravel/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>
#include <thread>

#include "unravel/error.hpp"
#include "unravel/io.hpp"

namespace unravel {
namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

GenSpec make(Family family, std::int64_t n = 0, std::int64_t d = 0, std::uint64_t seed = 0) {
  GenSpec s;
  s.family = family;
  s.n = n;
  s.d = d;
  s.seed = seed;
  return s;
}

GenSpec er(std::int64_t n, double average, std::uint64_t seed) {
  GenSpec s = make(Family::erdos_renyi, n, 0, seed);
  s.p = average / static_cast<double>(n - 1);
  s.strip_leaves = true;
  return s;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

std::string csv_line(const std::vector<std::string>& fields) {
  std::string line;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) line += ',';
    line += csv_field(fields[i]);
  }
  return line + '\n';
}

std::string fmt(double x) {
  if (std::isnan(x)) return "";
  std::ostringstream out;
  out.precision(17);
  out << x;
  return out.str();
}

nlohmann::ordered_json number(double x) {
  if (std::isfinite(x)) return x;
  return nullptr;
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::io, path.string() + ": cannot open for writing");
  out << text;
  if (!out) throw Error(ErrorCode::io, path.string() + ": write failed");
}

struct TaskResult {
  std::vector<BoundReport> reports;
  std::vector<HooryRow> hoory;
  std::optional<LoadError> load_error;
};

TaskResult run_entry(const CorpusEntry& entry, const RunConfig& config) {
  TaskResult out;
  Graph g;
  try {
    g = entry.spec ? generate(*entry.spec) : load_graph(entry.path);
  } catch (const std::exception& e) {
    out.load_error = LoadError{entry.id, e.what()};
    return out;
  }
  AnalysisOptions opts;
  opts.spectral.tol = config.eig_tol;
  opts.slack_tol = config.slack_tol;
  opts.ball_cap = config.ball_cap;
  opts.forest_cap = config.forest_cap;
  opts.timing = config.timing;
  GraphAnalysis analysis(entry.id, std::move(g), opts);
  auto radii = entry.radii.empty() ? config.radii : entry.radii;
  std::sort(radii.begin(), radii.end());
  for (std::size_t r : radii) {
    for (auto& rep : evaluate_all(analysis, r)) out.reports.push_back(std::move(rep));
    if (config.lemma_checks)
      for (auto& rep : lemma_checks(analysis, r)) out.reports.push_back(std::move(rep));
    if (r >= 2 && analysis.graph().vertex_count() >= 2) {
      try {
        const auto& rb = analysis.robust(r);
        if (rb.value >= 2) {
          HooryRow row{entry.id, r, rb.value, 0.0, hoory_rhs(rb.value, r)};
          row.lhs = std::max(analysis.lambda2(), std::fabs(analysis.lambda_min()));
          out.hoory.push_back(row);
        }
      } catch (const std::exception&) {
      }
    }
  }
  return out;
}

}  // namespace

CorpusEntry corpus_entry(const GenSpec& spec, std::vector<std::size_t> radii) {
  validate(spec);
  return {spec_name(spec), spec, {}, std::move(radii)};
}

CorpusEntry corpus_entry(const std::filesystem::path& path, std::vector<std::size_t> radii) {
  return {path.stem().string(), std::nullopt, path, std::move(radii)};
}

std::vector<CorpusEntry> smoke_corpus(std::uint64_t seed) {
  std::vector<CorpusEntry> c;
  for (std::int64_t n : {5, 8, 12}) c.push_back(corpus_entry(make(Family::cycle, n)));
  for (std::int64_t n : {4, 5}) c.push_back(corpus_entry(make(Family::complete, n)));
  GenSpec kb = make(Family::complete_bipartite, 3);
  kb.m = 3;
  c.push_back(corpus_entry(kb));
  c.push_back(corpus_entry(make(Family::petersen)));
  c.push_back(corpus_entry(make(Family::path, 6)));
  c.push_back(corpus_entry(make(Family::star, 5)));
  GenSpec tree = make(Family::d_regular_tree, 0, 3);
  tree.depth = 3;
  c.push_back(corpus_entry(tree));
  for (std::int64_t n : {20, 50})
    for (std::int64_t d : {3, 4})
      for (std::uint64_t s = 0; s < 2; ++s) c.push_back(corpus_entry(make(Family::random_regular, n, d, seed + s)));
  for (std::int64_t n : {30, 50})
    for (std::uint64_t s = 0; s < 2; ++s) c.push_back(corpus_entry(er(n, 4.0, seed + s)));
  for (std::int64_t n : {20, 40})
    for (std::uint64_t s = 0; s < 2; ++s) c.push_back(corpus_entry(make(Family::random_tree, n, 0, seed + s)));
  for (std::int64_t n : {10, 12}) c.push_back(corpus_entry(make(Family::random_regular, n, 3, seed)));
  c.push_back(corpus_entry(make(Family::random_regular, 200, 3, seed)));
  return c;
}

std::vector<CorpusEntry> theorem8_corpus(std::uint64_t seed) {
  std::vector<CorpusEntry> c;
  for (std::int64_t d : {3, 4, 5})
    for (std::int64_t n : {200, 500, 1000})
      c.push_back(corpus_entry(make(Family::random_regular, n, d, seed), {1, 2, 3}));
  return c;
}

std::vector<CorpusEntry> standard_corpus(std::uint64_t seed) {
  const std::vector<std::size_t> full{1, 2, 3, 4, 5, 6};
  const std::vector<std::size_t> small{1, 2, 3, 4};
  std::vector<CorpusEntry> c;
  for (std::int64_t d : {3, 4, 5})
    for (std::int64_t n : {20, 50, 100, 200, 300})
      for (std::uint64_t s = 0; s < 4; ++s)
        c.push_back(corpus_entry(make(Family::random_regular, n, d, seed + s), full));
  for (std::int64_t n : {30, 60, 100, 150, 200})
    for (double average : {3.0, 4.0, 5.0, 6.0})
      for (std::uint64_t s = 0; s < 3; ++s) c.push_back(corpus_entry(er(n, average, seed + s), full));
  for (std::int64_t n = 3; n < 33; ++n) c.push_back(corpus_entry(make(Family::cycle, n), full));
  c.push_back(corpus_entry(make(Family::petersen), full));
  for (std::int64_t n : {10, 20, 30, 40, 50, 60})
    for (std::uint64_t s = 0; s < 5; ++s) c.push_back(corpus_entry(make(Family::random_tree, n, 0, seed + s), full));
  for (std::int64_t n : {3, 4, 5, 6}) c.push_back(corpus_entry(make(Family::complete, n), small));
  for (auto [a, b] : {std::pair{2, 3}, {3, 3}, {3, 4}}) {
    GenSpec kb = make(Family::complete_bipartite, a);
    kb.m = b;
    c.push_back(corpus_entry(kb, small));
  }
  for (std::int64_t n : {8, 10, 12})
    for (std::int64_t d : {3, 4})
      for (std::uint64_t s = 0; s < 2; ++s) c.push_back(corpus_entry(make(Family::random_regular, n, d, seed + s), small));
  for (std::uint64_t s = 0; s < 3; ++s) {
    GenSpec g = make(Family::erdos_renyi, 12, 0, seed + s);
    g.p = 0.4;
    c.push_back(corpus_entry(g, small));
  }
  for (std::int64_t n : {2, 3, 4, 5, 6}) c.push_back(corpus_entry(make(Family::path, n), small));
  for (std::int64_t n : {3, 4, 5}) c.push_back(corpus_entry(make(Family::star, n), small));
  std::set<std::string> ids;
  for (const auto& e : c) ids.insert(e.id);
  for (auto& e : theorem8_corpus(seed))
    if (!ids.contains(e.id)) c.push_back(std::move(e));
  return c;
}

std::optional<std::vector<CorpusEntry>> builtin_corpus(const std::string& name, std::uint64_t seed) {
  if (name == "smoke") return smoke_corpus(seed);
  if (name == "standard") return standard_corpus(seed);
  if (name == "theorem8") return theorem8_corpus(seed);
  return std::nullopt;
}

std::vector<CorpusEntry> corpus_from_directory(const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::directory_iterator it(dir, ec);
  if (ec) throw Error(ErrorCode::io, dir.string() + ": " + ec.message());
  std::vector<std::filesystem::path> files;
  for (const auto& e : it) {
    if (!e.is_regular_file()) continue;
    const auto name = e.path().filename().string();
    const auto ext = e.path().extension().string();
    if (name.ends_with(".meta.json")) continue;
    if (ext == ".edges" || ext == ".json") files.push_back(e.path());
  }
  std::sort(files.begin(), files.end());
  std::vector<CorpusEntry> out;
  for (const auto& f : files) out.push_back(corpus_entry(f));
  return out;
}

void validate(const RunConfig& config) {
  if (config.radii.empty()) throw Error(ErrorCode::invalid_argument, "RunConfig: empty radius list");
  auto check_radii = [](const std::vector<std::size_t>& radii) {
    for (auto r : radii)
      if (r < 1) throw Error(ErrorCode::invalid_argument, "RunConfig: radii must be >= 1");
  };
  check_radii(config.radii);
  for (const auto& e : config.corpus) check_radii(e.radii);
  if (config.ball_cap == 0 || config.forest_cap == 0)
    throw Error(ErrorCode::invalid_argument, "RunConfig: caps must be positive");
  if (!(config.eig_tol > 0) || !(config.slack_tol >= 0))
    throw Error(ErrorCode::invalid_argument, "RunConfig: bad tolerance");
}

nlohmann::json to_json(const RunConfig& config) {
  nlohmann::json corpus = nlohmann::json::array();
  for (const auto& e : config.corpus) {
    nlohmann::json j = e.spec ? to_json(*e.spec) : nlohmann::json{{"path", e.path.string()}};
    if (!e.radii.empty()) j["r"] = e.radii;
    corpus.push_back(j);
  }
  return {{"corpus", corpus},
          {"r", config.radii},
          {"eig_tol", config.eig_tol},
          {"slack_tol", config.slack_tol},
          {"cap_nodes", config.ball_cap},
          {"forest_cap", config.forest_cap},
          {"threads", config.threads},
          {"out", config.out_dir.string()},
          {"seed", config.seed},
          {"lemma_checks", config.lemma_checks},
          {"timing", config.timing}};
}

RunConfig run_config_from_json(const nlohmann::json& j) {
  try {
    RunConfig c;
    c.radii = j.value("r", c.radii);
    c.eig_tol = j.value("eig_tol", c.eig_tol);
    c.slack_tol = j.value("slack_tol", c.slack_tol);
    c.ball_cap = j.value("cap_nodes", c.ball_cap);
    c.forest_cap = j.value("forest_cap", c.forest_cap);
    c.threads = j.value("threads", c.threads);
    c.out_dir = j.value("out", std::string());
    c.seed = j.value("seed", c.seed);
    c.lemma_checks = j.value("lemma_checks", c.lemma_checks);
    c.timing = j.value("timing", c.timing);
    for (const auto& item : j.value("corpus", nlohmann::json::array())) {
      if (item.is_string()) {
        const auto name = item.get<std::string>();
        if (auto builtin = builtin_corpus(name, c.seed)) {
          for (auto& e : *builtin) c.corpus.push_back(std::move(e));
        } else if (std::filesystem::is_directory(name)) {
          for (auto& e : corpus_from_directory(name)) c.corpus.push_back(std::move(e));
        } else {
          c.corpus.push_back(corpus_entry(std::filesystem::path(name)));
        }
      } else if (item.contains("path")) {
        c.corpus.push_back(corpus_entry(std::filesystem::path(item.at("path").get<std::string>()),
                                        item.value("r", std::vector<std::size_t>{})));
      } else {
        c.corpus.push_back(corpus_entry(gen_spec_from_json(item), item.value("r", std::vector<std::size_t>{})));
      }
    }
    validate(c);
    return c;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::parse, std::string("RunConfig: ") + e.what());
  }
}

std::size_t resolve_threads(std::size_t requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("UNRAVEL_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

RunSummary summarize(const std::vector<BoundReport>& reports) {
  RunSummary s;
  std::vector<std::string> graphs;
  for (const auto& rep : reports) {
    auto& t = s.per_bound[std::string(to_string(rep.bound))];
    graphs.push_back(rep.graph_id);
    if (rep.error)
      ++t.errors;
    else if (!rep.hypothesis_ok)
      ++t.skip;
    else if (rep.pass)
      ++t.pass;
    else
      ++t.fail;
    if (is_violation(rep)) s.violation = true;
    if (rep.hypothesis_ok && !std::isnan(rep.slack) && (!t.has_min || rep.slack < t.min_slack)) {
      t.has_min = true;
      t.min_slack = rep.slack;
      t.min_slack_graph = rep.graph_id;
      t.min_slack_r = rep.r;
    }
  }
  std::sort(graphs.begin(), graphs.end());
  s.graphs = static_cast<std::size_t>(std::unique(graphs.begin(), graphs.end()) - graphs.begin());
  s.reports = reports.size();
  return s;
}

nlohmann::ordered_json to_json(const RunSummary& s) {
  nlohmann::ordered_json j;
  j["schema_version"] = kSchemaVersion;
  j["graphs"] = s.graphs;
  j["reports"] = s.reports;
  j["violation"] = s.violation;
  j["wall_ms"] = s.wall_ms;
  nlohmann::ordered_json bounds = nlohmann::ordered_json::object();
  for (const auto& [name, t] : s.per_bound) {
    nlohmann::ordered_json b;
    b["pass"] = t.pass;
    b["fail"] = t.fail;
    b["hypothesis_skip"] = t.skip;
    b["errors"] = t.errors;
    if (t.has_min) {
      b["min_slack"] = number(t.min_slack);
      b["min_slack_graph"] = t.min_slack_graph;
      b["min_slack_r"] = t.min_slack_r;
    } else {
      b["min_slack"] = nullptr;
      b["min_slack_graph"] = nullptr;
      b["min_slack_r"] = nullptr;
    }
    bounds[name] = b;
  }
  j["bounds"] = bounds;
  nlohmann::ordered_json errors = nlohmann::ordered_json::array();
  for (const auto& e : s.load_errors) errors.push_back({{"graph_id", e.graph_id}, {"message", e.message}});
  j["load_errors"] = errors;
  nlohmann::ordered_json hoory = nlohmann::ordered_json::array();
  for (const auto& h : s.hoory) {
    nlohmann::ordered_json row;
    row["graph_id"] = h.graph_id;
    row["r"] = h.r;
    row["robust_degree"] = to_double(h.robust_degree);
    row["lhs"] = number(h.lhs);
    row["rhs"] = number(h.rhs);
    row["c"] = 1.0;
    row["label"] = "illustrative, constant unspecified in source";
    hoory.push_back(row);
  }
  j["hoory_illustrative"] = hoory;
  return j;
}

RunResult run_verify(const RunConfig& config) {
  validate(config);
  const auto start = std::chrono::steady_clock::now();
  const std::size_t tasks = config.corpus.size();
  std::vector<TaskResult> results(tasks);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks; i = next++) results[i] = run_entry(config.corpus[i], config);
  };
  const std::size_t threads = std::min(resolve_threads(config.threads), std::max<std::size_t>(tasks, 1));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
  }

  RunResult out;
  std::vector<HooryRow> hoory;
  std::vector<LoadError> load_errors;
  for (auto& r : results) {
    for (auto& rep : r.reports) out.reports.push_back(std::move(rep));
    for (auto& h : r.hoory) hoory.push_back(std::move(h));
    if (r.load_error) load_errors.push_back(*r.load_error);
  }
  std::stable_sort(out.reports.begin(), out.reports.end(), canonical_less);
  std::stable_sort(hoory.begin(), hoory.end(), [](const HooryRow& a, const HooryRow& b) {
    return std::tie(a.graph_id, a.r) < std::tie(b.graph_id, b.r);
  });
  std::stable_sort(load_errors.begin(), load_errors.end(),
                   [](const LoadError& a, const LoadError& b) { return a.graph_id < b.graph_id; });
  out.summary = summarize(out.reports);
  out.summary.hoory = std::move(hoory);
  out.summary.load_errors = std::move(load_errors);
  if (config.timing)
    out.summary.wall_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  if (!config.out_dir.empty()) write_outputs(config.out_dir, out);
  return out;
}

std::string reports_json(const std::vector<BoundReport>& reports) {
  nlohmann::ordered_json list = nlohmann::ordered_json::array();
  for (const auto& r : reports) list.push_back(to_json(r));
  nlohmann::ordered_json j;
  j["schema_version"] = kSchemaVersion;
  j["reports"] = list;
  return j.dump(2) + '\n';
}

std::string reports_csv(const std::vector<BoundReport>& reports) {
  std::string out = csv_line(report_csv_header());
  for (const auto& r : reports) out += csv_line(report_csv_row(r));
  return out;
}

std::string summary_csv(const RunSummary& s) {
  std::string out = csv_line({"bound", "pass", "fail", "hypothesis_skip", "errors", "min_slack",
                              "min_slack_graph", "min_slack_r"});
  for (const auto& [name, t] : s.per_bound)
    out += csv_line({name, std::to_string(t.pass), std::to_string(t.fail), std::to_string(t.skip),
                     std::to_string(t.errors), t.has_min ? fmt(t.min_slack) : "",
                     t.has_min ? t.min_slack_graph : "", t.has_min ? std::to_string(t.min_slack_r) : ""});
  return out;
}

void write_outputs(const std::filesystem::path& dir, const RunResult& result) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw Error(ErrorCode::io, dir.string() + ": " + ec.message());
  write_file(dir / "reports.json", reports_json(result.reports));
  write_file(dir / "reports.csv", reports_csv(result.reports));
  write_file(dir / "summary.json", to_json(result.summary).dump(2) + '\n');
  write_file(dir / "summary.csv", summary_csv(result.summary));
}

std::vector<BoundReport> load_reports(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw Error(ErrorCode::io, file.string() + ": cannot open");
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::parse, file.string() + ": " + e.what());
  }
  const auto& list = j.is_array() ? j : j.at("reports");
  std::vector<BoundReport> out;
  for (const auto& item : list) out.push_back(report_from_json(item));
  return out;
}

ConvergeTable converge(const Graph& g, Vertex v, std::size_t max_length) {
  check_vertex(g, v);
  if (max_length < 2) throw Error(ErrorCode::invalid_argument, "converge: K must be >= 2");
  if (max_length > 4096) throw Error(ErrorCode::cap_exceeded, "converge: K above 4096");
  ConvergeTable t;
  t.vertex = v;
  t.max_length = max_length;
  const auto comp = induced_subgraph(g, VertexSet(ball(g, v, kUnreachable)));
  t.lambda1 = comp.graph.edge_count() ? spectral_radius(comp.graph).value : 0.0;
  const auto counts = closed_walk_counts(g, v, max_length);
  const auto estimates = walk_growth_estimate(counts);
  for (std::size_t k = 1; k <= estimates.size(); ++k)
    t.rows.push_back({k, counts.counts[2 * k], estimates[k - 1], t.lambda1 - estimates[k - 1]});
  t.monotone = growth_is_monotone(counts);
  return t;
}

nlohmann::ordered_json to_json(const ConvergeTable& t) {
  nlohmann::ordered_json j;
  j["schema_version"] = kSchemaVersion;
  j["vertex"] = t.vertex;
  j["max_length"] = t.max_length;
  j["lambda1"] = t.lambda1;
  j["monotone"] = t.monotone;
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& r : t.rows) {
    nlohmann::ordered_json row;
    row["k"] = r.k;
    row["s_2k"] = r.walks.str();
    row["estimate"] = number(r.estimate);
    row["gap"] = number(r.gap);
    rows.push_back(row);
  }
  j["rows"] = rows;
  return j;
}

std::string format_text(const ConvergeTable& t) {
  std::ostringstream out;
  out << "# vertex " << t.vertex << ", lambda1 " << fmt(t.lambda1) << ", monotone "
      << (t.monotone ? "yes" : "NO") << '\n';
  out << "k\ts_2k\testimate\tgap\n";
  for (const auto& r : t.rows) out << r.k << '\t' << r.walks.str() << '\t' << fmt(r.estimate) << '\t' << fmt(r.gap) << '\n';
  return out.str();
}

std::string format_csv(const ConvergeTable& t) {
  std::string out = csv_line({"k", "s_2k", "estimate", "gap"});
  for (const auto& r : t.rows) out += csv_line({std::to_string(r.k), r.walks.str(), fmt(r.estimate), fmt(r.gap)});
  return out;
}

CoverTable cover(const Graph& g, std::size_t r_max, std::uint64_t cap, const SpectralOptions& opts) {
  if (g.edge_count() == 0) throw Error(ErrorCode::invalid_argument, "cover: graph has no edges");
  CoverTable t;
  const bool min2 = g.min_degree() >= 2;
  t.corollary = min2 ? corollary_lb2_rhs(g) : kNaN;
  for (std::size_t r = 1; r <= r_max; ++r) {
    const auto mu = find_max_unraveled_vertex(g, r, cap);
    if (!mu.found) {
      t.truncated = true;
      t.note = "every unraveled ball at r=" + std::to_string(r) + " exceeds the cap";
      break;
    }
    CoverRow row;
    row.r = r;
    row.witness = mu.witness;
    row.cover = mu.value;
    row.capped = mu.capped;
    const auto sub = ball_subgraph(g, mu.witness, r);
    row.ball = spectral_radius(sub.graph, opts).value;
    row.theorem1 = min2 ? theorem1_rhs(g, r) : kNaN;
    if (!t.rows.empty() && row.cover < t.rows.back().cover - kDefaultSlackTol) t.monotone = false;
    if (min2 && row.cover < row.theorem1 - kDefaultSlackTol) t.above_theorem1 = false;
    t.rows.push_back(row);
  }
  return t;
}

nlohmann::ordered_json to_json(const CoverTable& t) {
  nlohmann::ordered_json j;
  j["schema_version"] = kSchemaVersion;
  j["corollary_lb2_rhs"] = number(t.corollary);
  j["monotone"] = t.monotone;
  j["above_theorem1"] = t.above_theorem1;
  j["truncated"] = t.truncated;
  j["note"] = t.note;
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& r : t.rows) {
    nlohmann::ordered_json row;
    row["r"] = r.r;
    row["witness"] = r.witness;
    row["cover_lambda1"] = number(r.cover);
    row["ball_lambda1"] = number(r.ball);
    row["theorem1_rhs"] = number(r.theorem1);
    row["capped"] = r.capped;
    rows.push_back(row);
  }
  j["rows"] = rows;
  return j;
}

std::string format_text(const CoverTable& t) {
  std::ostringstream out;
  out << "# corollary_lb2_rhs " << (std::isnan(t.corollary) ? "n/a" : fmt(t.corollary)) << ", monotone "
      << (t.monotone ? "yes" : "NO") << ", above theorem1 " << (t.above_theorem1 ? "yes" : "NO") << '\n';
  out << "r\twitness\tcover_lambda1\tball_lambda1\ttheorem1_rhs\tcapped\n";
  for (const auto& r : t.rows)
    out << r.r << '\t' << r.witness << '\t' << fmt(r.cover) << '\t' << fmt(r.ball) << '\t'
        << (std::isnan(r.theorem1) ? "n/a" : fmt(r.theorem1)) << '\t' << r.capped << '\n';
  if (t.truncated) out << "# truncated: " << t.note << '\n';
  return out.str();
}

std::string format_csv(const CoverTable& t) {
  std::string out = csv_line({"r", "witness", "cover_lambda1", "ball_lambda1", "theorem1_rhs", "capped"});
  for (const auto& r : t.rows)
    out += csv_line({std::to_string(r.r), std::to_string(r.witness), fmt(r.cover), fmt(r.ball), fmt(r.theorem1),
                     std::to_string(r.capped)});
  return out;
}

}  // namespace unravel
