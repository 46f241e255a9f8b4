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

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "unravel/unravel.h"

namespace {

constexpr int kExitViolation = 1;
constexpr int kExitError = 2;

struct Owned {
  char* s = nullptr;
  ~Owned() { unr_string_free(s); }
  std::string str() const { return s ? s : ""; }
};

struct GraphHandle {
  unr_graph* g = nullptr;
  ~GraphHandle() { unr_graph_free(g); }
};

int report_error(unr_status status) {
  std::cerr << "unravel: " << unr_status_string(status) << ": " << unr_last_error() << '\n';
  return kExitError;
}

bool write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
  return static_cast<bool>(out);
}

struct GenOptions {
  long long n = 0, m = 0, d = 0, depth = 0;
  double p = 0.0;
  unsigned long long seed = 0;
  bool strip = false;
  std::string out = ".";
  std::string format = "edges";
};

int run_gen(const std::string& family, const GenOptions& o) {
  nlohmann::json spec{{"family", family}, {"seed", o.seed}};
  if (o.n) spec["n"] = o.n;
  if (o.m) spec["m"] = o.m;
  if (o.d) spec["d"] = o.d;
  if (o.depth) spec["depth"] = o.depth;
  if (o.p > 0) spec["p"] = o.p;
  if (o.strip) spec["strip_leaves"] = true;
  GraphHandle g;
  Owned name, meta;
  if (auto st = unr_graph_generate(spec.dump().c_str(), &g.g, &name.s, &meta.s)) return report_error(st);
  std::error_code ec;
  std::filesystem::create_directories(o.out, ec);
  const std::filesystem::path dir(o.out);
  const auto graph_path = dir / (name.str() + (o.format == "json" ? ".json" : ".edges"));
  if (auto st = unr_graph_save(g.g, graph_path.string().c_str())) return report_error(st);
  const auto meta_path = dir / (name.str() + ".meta.json");
  if (!write_text(meta_path, meta.str())) {
    std::cerr << "unravel: cannot write " << meta_path << '\n';
    return kExitError;
  }
  std::cout << graph_path.string() << '\n';
  return 0;
}

void print_summary(const std::string& summary_json) {
  const auto j = nlohmann::json::parse(summary_json);
  std::printf("%-24s %6s %6s %6s %6s  %s\n", "bound", "pass", "fail", "skip", "error", "min slack");
  for (const auto& [name, b] : j.at("bounds").items()) {
    std::string slack = b.at("min_slack").is_null() ? "-" : std::to_string(b.at("min_slack").get<double>()) +
                                                                 " (" + b.at("min_slack_graph").get<std::string>() +
                                                                 ", r=" + std::to_string(b.at("min_slack_r").get<int>()) + ")";
    std::printf("%-24s %6d %6d %6d %6d  %s\n", name.c_str(), b.at("pass").get<int>(), b.at("fail").get<int>(),
                b.at("hypothesis_skip").get<int>(), b.at("errors").get<int>(), slack.c_str());
  }
  for (const auto& e : j.at("load_errors"))
    std::printf("load error: %s: %s\n", e.at("graph_id").get<std::string>().c_str(),
                e.at("message").get<std::string>().c_str());
  std::printf("%d graphs, %d reports, violation: %s\n", j.at("graphs").get<int>(), j.at("reports").get<int>(),
              j.at("violation").get<bool>() ? "yes" : "no");
}

int load_graph(const std::string& path, GraphHandle& g) {
  if (auto st = unr_graph_load(path.c_str(), &g.g)) return report_error(st);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Unraveled balls, walk forests and spectral bound verification"};
  app.require_subcommand(1);
  app.set_version_flag("--version", unr_version());

  // gen
  auto* gen = app.add_subcommand("gen", "Generate a graph file and its metadata");
  gen->require_subcommand(1);
  GenOptions gen_opts;
  std::string gen_family;
  const std::vector<std::pair<std::string, std::vector<std::string>>> families = {
      {"path", {"n"}},
      {"cycle", {"n"}},
      {"complete", {"n"}},
      {"complete-bipartite", {"n", "m"}},
      {"star", {"n"}},
      {"d-regular-tree", {"d", "depth"}},
      {"random-regular", {"n", "d"}},
      {"erdos-renyi", {"n", "p"}},
      {"random-tree", {"n"}},
      {"petersen", {}},
  };
  for (const auto& [family, params] : families) {
    auto* sub = gen->add_subcommand(family, "Generate a " + family + " graph");
    for (const auto& p : params) {
      if (p == "n") sub->add_option("--n", gen_opts.n, "Vertex count (leaves for star, first part for bipartite)")->required();
      if (p == "m") sub->add_option("--m", gen_opts.m, "Second part size")->required();
      if (p == "d") sub->add_option("--d", gen_opts.d, "Degree")->required();
      if (p == "depth") sub->add_option("--depth", gen_opts.depth, "Tree depth")->required();
      if (p == "p") sub->add_option("--p", gen_opts.p, "Edge probability")->required();
    }
    sub->add_option("--seed", gen_opts.seed, "Random seed");
    sub->add_flag("--strip-leaves", gen_opts.strip, "Repeatedly remove vertices of degree <= 1");
    sub->add_option("--out", gen_opts.out, "Output directory");
    sub->add_option("--format", gen_opts.format, "edges or json")->check(CLI::IsMember({"edges", "json"}));
    sub->callback([&gen_family, family = family] { gen_family = family; });
  }

  // verify
  auto* verify = app.add_subcommand("verify", "Evaluate every bound over a corpus");
  std::vector<std::string> corpus;
  std::string config_file, out_dir = "unravel-out";
  std::vector<std::size_t> radii;
  std::optional<double> eig_tol, slack_tol;
  std::optional<unsigned long long> seed, cap_nodes, forest_cap;
  std::optional<std::size_t> threads;
  bool timing = false, no_lemmas = false;
  verify->add_option("--corpus", corpus, "Directories, graph files, or smoke | standard | theorem8");
  verify->add_option("--config", config_file, "RunConfig JSON file; flags override it");
  verify->add_option("--r", radii, "Radii")->delimiter(',');
  verify->add_option("--eig-tol", eig_tol, "Eigenvalue tolerance (default 1e-10)");
  verify->add_option("--slack-tol", slack_tol, "Bound slack tolerance (default 1e-9)");
  verify->add_option("--seed", seed, "Seed for the built-in corpora");
  verify->add_option("--cap-nodes", cap_nodes, "Node cap per unraveled ball");
  verify->add_option("--forest-cap", forest_cap, "Node cap per walk forest");
  verify->add_option("--threads", threads, "Worker threads (default: UNRAVEL_THREADS or all cores)");
  verify->add_option("--out", out_dir, "Output directory");
  verify->add_flag("--timing", timing, "Record runtime_ms and wall time");
  verify->add_flag("--no-lemma-checks", no_lemmas, "Only the six main bounds");

  // converge
  auto* conv = app.add_subcommand("converge", "Closed-walk growth estimates of lambda_1");
  std::string conv_graph, conv_format = "text";
  std::uint32_t conv_v = 0;
  std::size_t conv_k = 40;
  conv->add_option("graph", conv_graph, "Graph file")->required();
  conv->add_option("--v", conv_v, "Start vertex");
  conv->add_option("--K", conv_k, "Largest walk length");
  conv->add_option("--format", conv_format)->check(CLI::IsMember({"text", "csv", "json"}));

  // cover
  auto* cov = app.add_subcommand("cover", "Spectral radii of unraveled balls for r = 1..r_max");
  std::string cov_graph, cov_format = "text", cov_export;
  std::size_t cov_rmax = 6;
  unsigned long long cov_cap = 0;
  cov->add_option("graph", cov_graph, "Graph file")->required();
  cov->add_option("--r-max", cov_rmax, "Largest radius");
  cov->add_option("--cap-nodes", cov_cap, "Node cap per unraveled ball");
  cov->add_option("--format", cov_format)->check(CLI::IsMember({"text", "csv", "json"}));
  cov->add_option("--export", cov_export, "Directory for the witness ball at r_max (edges + labels)");

  // report
  auto* rep = app.add_subcommand("report", "Summarize an existing reports.json");
  std::string rep_file, rep_format = "text";
  rep->add_option("reports", rep_file, "reports.json")->required();
  rep->add_option("--format", rep_format)->check(CLI::IsMember({"text", "csv", "json"}));

  CLI11_PARSE(app, argc, argv);

  if (gen->parsed()) return run_gen(gen_family, gen_opts);

  if (verify->parsed()) {
    nlohmann::json config = nlohmann::json::object();
    if (!config_file.empty()) {
      std::ifstream in(config_file);
      if (!in) {
        std::cerr << "unravel: cannot open " << config_file << '\n';
        return kExitError;
      }
      try {
        config = nlohmann::json::parse(in);
      } catch (const std::exception& e) {
        std::cerr << "unravel: " << config_file << ": " << e.what() << '\n';
        return kExitError;
      }
    }
    if (!corpus.empty()) config["corpus"] = corpus;
    if (!config.contains("corpus")) config["corpus"] = {"smoke"};
    if (!radii.empty()) config["r"] = radii;
    if (eig_tol) config["eig_tol"] = *eig_tol;
    if (slack_tol) config["slack_tol"] = *slack_tol;
    if (seed) config["seed"] = *seed;
    if (cap_nodes) config["cap_nodes"] = *cap_nodes;
    if (forest_cap) config["forest_cap"] = *forest_cap;
    if (threads) config["threads"] = *threads;
    if (verify->count("--out") || !config.contains("out")) config["out"] = out_dir;
    if (timing) config["timing"] = true;
    if (no_lemmas) config["lemma_checks"] = false;
    Owned summary;
    int violation = 0;
    if (auto st = unr_verify(config.dump().c_str(), &summary.s, &violation)) return report_error(st);
    print_summary(summary.str());
    std::printf("outputs in %s\n", config["out"].get<std::string>().c_str());
    return violation ? kExitViolation : 0;
  }

  if (conv->parsed()) {
    GraphHandle g;
    if (int rc = load_graph(conv_graph, g)) return rc;
    Owned out;
    int ok = 0;
    if (auto st = unr_converge(g.g, conv_v, conv_k, conv_format.c_str(), &out.s, &ok)) return report_error(st);
    std::cout << out.str();
    if (conv_format == "json") std::cout << '\n';
    return ok ? 0 : kExitViolation;
  }

  if (cov->parsed()) {
    GraphHandle g;
    if (int rc = load_graph(cov_graph, g)) return rc;
    Owned out;
    int ok = 0;
    if (auto st = unr_cover(g.g, cov_rmax, cov_cap, cov_format.c_str(), &out.s, &ok)) return report_error(st);
    std::cout << out.str();
    if (cov_format == "json") std::cout << '\n';
    if (!cov_export.empty()) {
      Owned js;
      if (auto st = unr_cover(g.g, cov_rmax, cov_cap, "json", &js.s, nullptr)) return report_error(st);
      const auto rows = nlohmann::json::parse(js.str()).at("rows");
      if (!rows.empty()) {
        const auto& last = rows.back();
        const auto v = last.at("witness").get<std::uint32_t>();
        const auto r = last.at("r").get<std::size_t>();
        std::filesystem::create_directories(cov_export);
        const auto stem = std::filesystem::path(cov_export) / ("unraveled-v" + std::to_string(v) + "-r" + std::to_string(r));
        const auto edges = stem.string() + ".edges", labels = stem.string() + ".labels.csv";
        if (auto st = unr_unraveled_ball_export(g.g, v, r, cov_cap, edges.c_str(), labels.c_str()))
          return report_error(st);
        std::cerr << "exported " << edges << " and " << labels << '\n';
      }
    }
    return ok ? 0 : kExitViolation;
  }

  if (rep->parsed()) {
    Owned out;
    int violation = 0;
    if (rep_format == "text") {
      if (auto st = unr_report(rep_file.c_str(), "json", &out.s, &violation)) return report_error(st);
      print_summary(out.str());
    } else {
      if (auto st = unr_report(rep_file.c_str(), rep_format.c_str(), &out.s, &violation)) return report_error(st);
      std::cout << out.str();
      if (rep_format == "json") std::cout << '\n';
    }
    return violation ? kExitViolation : 0;
  }
  return 0;
}
