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

#include "unravel/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include <Eigen/Dense>

#include "unravel/error.hpp"

namespace unravel {
namespace {

std::size_t default_max_iterations(std::size_t n) {
  const double nn = static_cast<double>(std::max<std::size_t>(n, 2));
  return static_cast<std::size_t>(100.0 * nn * std::log(nn)) + 10000;
}

void multiply(const Graph& g, std::span<const double> x, std::span<double> y) {
  for (Vertex u = 0; u < g.vertex_count(); ++u) {
    double sum = 0.0;
    for (Vertex w : g.neighbors(u)) sum += x[w];
    y[u] = sum;
  }
}

double dot(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double norm(std::span<const double> a) { return std::sqrt(dot(a, a)); }

void scale(std::span<double> a, double factor) {
  for (double& v : a) v *= factor;
}

// All-ones plus a small deterministic per-index perturbation.
std::vector<double> start_vector(std::size_t n) {
  std::vector<double> x(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::uint64_t z = (i + 1) * 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    z ^= z >> 31;
    const double h = static_cast<double>(z >> 11) * 0x1.0p-53 - 0.5;
    x[i] = 1.0 + 1e-3 * h;
  }
  scale(x, 1.0 / norm(x));
  return x;
}

struct EigenPair {
  SpectralEstimate estimate;
  std::vector<double> vector;
};

// Top eigenpair of a connected graph with at least one edge.
EigenPair power_top(const Graph& g, double tol, std::size_t max_iterations) {
  const std::size_t n = g.vertex_count();
  std::vector<double> x = start_vector(n), y(n), z(n), u(n), au(n);
  EigenPair best;
  best.estimate.residual = std::numeric_limits<double>::infinity();
  best.estimate.converged = false;
  for (std::size_t it = 1; it <= max_iterations; ++it) {
    multiply(g, x, y);
    multiply(g, y, z);
    const double rho = std::sqrt(dot(x, z));
    if (rho == 0.0) break;
    for (std::size_t i = 0; i < n; ++i) {
      u[i] = x[i] + y[i] / rho;
      au[i] = y[i] + z[i] / rho;
    }
    const double unorm2 = dot(u, u);
    if (unorm2 > 1e-24) {
      const double value = dot(u, au) / unorm2;
      double r2 = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        const double d = au[i] - value * u[i];
        r2 += d * d;
      }
      const double residual = std::sqrt(r2 / unorm2);
      if (residual < best.estimate.residual) {
        best.estimate = {value, residual, it, Method::power, residual <= tol};
        best.vector = u;
        scale(best.vector, 1.0 / std::sqrt(unorm2));
      }
      if (residual <= tol) return best;
    }
    const double zn = norm(z);
    for (std::size_t i = 0; i < n; ++i) x[i] = z[i] / zn;
  }
  return best;
}

Eigen::MatrixXd adjacency_matrix(const Graph& g) {
  const auto n = static_cast<Eigen::Index>(g.vertex_count());
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  for (Vertex u = 0; u < g.vertex_count(); ++u)
    for (Vertex w : g.neighbors(u)) a(u, w) = 1.0;
  return a;
}

std::vector<Subgraph> split_components(const Graph& g) {
  std::vector<Subgraph> parts;
  auto comps = connected_components(g);
  if (comps.size() == 1) {
    Subgraph whole{g, {}};
    whole.original.resize(g.vertex_count());
    for (Vertex v = 0; v < g.vertex_count(); ++v) whole.original[v] = v;
    parts.push_back(std::move(whole));
    return parts;
  }
  for (const auto& c : comps) parts.push_back(induced_subgraph(g, c));
  return parts;
}

EigenPair component_top(const Graph& c, const SpectralOptions& opts) {
  const std::size_t n = c.vertex_count();
  if (n == 1) return {{0.0, 0.0, 0, Method::closed_form, true}, {1.0}};
  const std::size_t max_it = opts.max_iterations ? opts.max_iterations : default_max_iterations(n);
  const bool dense_ok = n <= opts.dense_threshold;
  // Small components get a bounded power budget before switching to the
  // exact dense solver.
  const std::size_t budget = dense_ok ? std::min(max_it, 20 * n + 2000) : max_it;
  EigenPair top = power_top(c, opts.tol, budget);
  if (top.estimate.converged || !dense_ok) return top;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(adjacency_matrix(c));
  const auto last = static_cast<Eigen::Index>(n) - 1;
  EigenPair dense;
  dense.estimate = {solver.eigenvalues()(last), 0.0, top.estimate.iterations, Method::dense, true};
  dense.vector.resize(n);
  const auto v = solver.eigenvectors().col(last);
  const double sign = v.sum() < 0 ? -1.0 : 1.0;
  for (std::size_t i = 0; i < n; ++i) dense.vector[i] = sign * v(static_cast<Eigen::Index>(i));
  return dense;
}

// Power iteration for the top of (shift I + sign A) restricted to the
// complement of `deflate`; returns the corresponding eigenvalue of A.
SpectralEstimate shifted_power(const Graph& c, double shift, double sign,
                               std::span<const double> deflate, double tol,
                               std::size_t max_iterations) {
  const std::size_t n = c.vertex_count();
  std::vector<double> x = start_vector(n), ax(n);
  auto project = [&](std::vector<double>& v) {
    if (deflate.empty()) return;
    const double c0 = dot(v, deflate);
    for (std::size_t i = 0; i < n; ++i) v[i] -= c0 * deflate[i];
  };
  // Perturb away from the deflated direction before projecting.
  for (std::size_t i = 0; i < n; ++i) x[i] += (i % 2 ? 0.25 : -0.25);
  project(x);
  double xn = norm(x);
  if (xn == 0.0) return {0.0, 0.0, 0, Method::power, false};
  scale(x, 1.0 / xn);
  SpectralEstimate best{0.0, std::numeric_limits<double>::infinity(), 0, Method::power, false};
  for (std::size_t it = 1; it <= max_iterations; ++it) {
    multiply(c, x, ax);
    const double value = dot(x, ax);
    double r2 = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double d = ax[i] - value * x[i];
      r2 += d * d;
    }
    const double residual = std::sqrt(r2);
    if (residual < best.residual) best = {value, residual, it, Method::power, residual <= tol};
    if (residual <= tol) return best;
    for (std::size_t i = 0; i < n; ++i) x[i] = shift * x[i] + sign * ax[i];
    project(x);
    xn = norm(x);
    if (xn == 0.0) break;
    scale(x, 1.0 / xn);
  }
  return best;
}

}  // namespace

const char* to_string(Method method) {
  switch (method) {
    case Method::power: return "power";
    case Method::dense: return "dense";
    case Method::closed_form: return "closed_form";
    case Method::tree_inertia: return "tree_inertia";
  }
  return "unknown";
}

std::vector<double> dense_spectrum(const Graph& g) {
  if (g.empty()) return {};
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(adjacency_matrix(g),
                                                        Eigen::EigenvaluesOnly);
  const auto& ev = solver.eigenvalues();
  return {ev.data(), ev.data() + ev.size()};
}

SpectralEstimate spectral_radius(const Graph& g, const SpectralOptions& opts) {
  if (g.empty()) throw Error(ErrorCode::invalid_argument, "spectral_radius: empty graph");
  if (!(opts.tol > 0)) throw Error(ErrorCode::invalid_argument, "spectral_radius: tol must be positive");
  SpectralEstimate best{0.0, 0.0, 0, Method::closed_form, true};
  bool first = true;
  std::size_t iterations = 0;
  bool converged = true;
  for (const auto& part : split_components(g)) {
    auto top = component_top(part.graph, opts).estimate;
    iterations += top.iterations;
    converged = converged && top.converged;
    if (first || top.value > best.value) best = top;
    first = false;
  }
  best.iterations = iterations;
  best.converged = converged;
  return best;
}

namespace {

struct ComponentEigen {
  double top;
  double second;  // NaN for single-vertex components
  double bottom;
  bool converged;
};

ComponentEigen component_extremes(const Graph& c, const SpectralOptions& opts, bool want_second,
                                  bool want_bottom) {
  const std::size_t n = c.vertex_count();
  if (n == 1) return {0.0, std::numeric_limits<double>::quiet_NaN(), 0.0, true};
  const std::size_t max_it = opts.max_iterations ? opts.max_iterations : default_max_iterations(n);
  EigenPair top = component_top(c, opts);
  ComponentEigen out{top.estimate.value, std::numeric_limits<double>::quiet_NaN(),
                     top.estimate.value, top.estimate.converged};
  if (want_second) {
    auto s = shifted_power(c, top.estimate.value, 1.0, top.vector, opts.tol, max_it);
    out.second = s.value;
    out.converged = out.converged && s.converged;
  }
  if (want_bottom) {
    auto b = shifted_power(c, top.estimate.value, -1.0, {}, opts.tol, max_it);
    out.bottom = b.value;
    out.converged = out.converged && b.converged;
  }
  return out;
}

}  // namespace

SpectralEstimate second_largest_eigenvalue(const Graph& g, const SpectralOptions& opts) {
  if (g.vertex_count() < 2)
    throw Error(ErrorCode::invalid_argument, "second_largest_eigenvalue: needs at least 2 vertices");
  if (g.vertex_count() <= opts.dense_threshold) {
    auto ev = dense_spectrum(g);
    return {ev[ev.size() - 2], 0.0, 0, Method::dense, true};
  }
  // Second element of the multiset union of component spectra.
  std::vector<double> candidates;
  bool converged = true;
  for (const auto& part : split_components(g)) {
    auto e = component_extremes(part.graph, opts, true, false);
    candidates.push_back(e.top);
    if (!std::isnan(e.second)) candidates.push_back(e.second);
    converged = converged && e.converged;
  }
  std::sort(candidates.begin(), candidates.end(), std::greater<>());
  return {candidates[1], opts.tol, 0, Method::power, converged};
}

SpectralEstimate smallest_eigenvalue(const Graph& g, const SpectralOptions& opts) {
  if (g.empty()) throw Error(ErrorCode::invalid_argument, "smallest_eigenvalue: empty graph");
  if (g.vertex_count() <= opts.dense_threshold) return {dense_spectrum(g).front(), 0.0, 0, Method::dense, true};
  double lowest = std::numeric_limits<double>::infinity();
  bool converged = true;
  for (const auto& part : split_components(g)) {
    auto e = component_extremes(part.graph, opts, false, true);
    lowest = std::min(lowest, e.bottom);
    converged = converged && e.converged;
  }
  return {lowest, opts.tol, 0, Method::power, converged};
}

SpectrumSummary spectrum_summary(const Graph& g, const SpectralOptions& opts) {
  SpectrumSummary s;
  s.n = g.vertex_count();
  if (s.n == 0) return s;
  if (s.n <= opts.dense_threshold) {
    auto ev = dense_spectrum(g);
    s.lambda1 = ev.back();
    s.lambda2 = s.n >= 2 ? ev[s.n - 2] : ev.back();
    s.lambda_min = ev.front();
    return s;
  }
  s.lambda1 = spectral_radius(g, opts).value;
  s.lambda2 = second_largest_eigenvalue(g, opts).value;
  s.lambda_min = smallest_eigenvalue(g, opts).value;
  return s;
}

double path_spectral_radius(std::size_t n) {
  if (n == 0) throw Error(ErrorCode::invalid_argument, "path_spectral_radius: n must be >= 1");
  return 2.0 * std::cos(std::numbers::pi / static_cast<double>(n + 1));
}

std::vector<double> path_eigenvector(std::size_t n) {
  if (n == 0) throw Error(ErrorCode::invalid_argument, "path_eigenvector: n must be >= 1");
  std::vector<double> x(n);
  for (std::size_t i = 1; i <= n; ++i)
    x[i - 1] = std::sin(static_cast<double>(i) * std::numbers::pi / static_cast<double>(n + 1));
  return x;
}

double rayleigh_quotient(const Graph& g, std::span<const double> f) {
  if (f.size() != g.vertex_count())
    throw Error(ErrorCode::invalid_argument, "rayleigh_quotient: dimension mismatch");
  const double ff = dot(f, f);
  if (ff == 0.0) throw Error(ErrorCode::invalid_argument, "rayleigh_quotient: zero vector");
  std::vector<double> af(f.size());
  multiply(g, f, af);
  return dot(f, af) / ff;
}

double tree_rayleigh_quotient(std::span<const std::int64_t> parent, std::span<const double> f) {
  if (f.size() != parent.size())
    throw Error(ErrorCode::invalid_argument, "tree_rayleigh_quotient: dimension mismatch");
  const double ff = dot(f, f);
  if (ff == 0.0) throw Error(ErrorCode::invalid_argument, "tree_rayleigh_quotient: zero vector");
  double faf = 0.0;
  for (std::size_t i = 0; i < parent.size(); ++i)
    if (parent[i] >= 0) faf += 2.0 * f[i] * f[static_cast<std::size_t>(parent[i])];
  return faf / ff;
}

SpectralEstimate tree_spectral_radius(std::span<const std::int64_t> parent) {
  const std::size_t n = parent.size();
  if (n == 0) throw Error(ErrorCode::invalid_argument, "tree_spectral_radius: empty tree");
  if (n == 1) return {0.0, 0.0, 0, Method::closed_form, true};
  std::vector<std::size_t> degree(n, 0);
  for (std::size_t i = 1; i < n; ++i) {
    if (parent[i] < 0 || static_cast<std::size_t>(parent[i]) >= i)
      throw Error(ErrorCode::invalid_argument, "tree_spectral_radius: parents must precede children");
    ++degree[i];
    ++degree[static_cast<std::size_t>(parent[i])];
  }
  const auto max_degree = static_cast<double>(*std::max_element(degree.begin(), degree.end()));
  std::vector<double> pivot(n);
  auto positive_definite = [&](double lambda) {
    std::fill(pivot.begin(), pivot.end(), lambda);
    for (std::size_t i = n - 1; i >= 1; --i) {
      if (!(pivot[i] > 0.0)) return false;
      pivot[static_cast<std::size_t>(parent[i])] -= 1.0 / pivot[i];
    }
    return pivot[0] > 0.0;
  };
  // A star on max_degree leaves is a subtree; max_degree bounds from above.
  double lo = std::sqrt(max_degree), hi = max_degree + 1.0;
  std::size_t it = 0;
  while (it < 200) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    ++it;
    (positive_definite(mid) ? hi : lo) = mid;
  }
  return {0.5 * (lo + hi), hi - lo, it, Method::tree_inertia, true};
}

ClosedWalkCounts closed_walk_counts(const Graph& g, Vertex v, std::size_t max_length) {
  check_vertex(g, v);
  ClosedWalkCounts out;
  out.origin = v;
  out.counts.reserve(max_length + 1);
  std::vector<BigInt> cur(g.vertex_count()), next(g.vertex_count());
  cur[v] = 1;
  out.counts.push_back(1);
  for (std::size_t k = 1; k <= max_length; ++k) {
    for (Vertex u = 0; u < g.vertex_count(); ++u) {
      BigInt sum = 0;
      for (Vertex w : g.neighbors(u)) sum += cur[w];
      next[u] = std::move(sum);
    }
    std::swap(cur, next);
    out.counts.push_back(cur[v]);
  }
  return out;
}

namespace {

double log_bigint(const BigInt& value) {
  if (value <= 0) return -std::numeric_limits<double>::infinity();
  const std::size_t bits = boost::multiprecision::msb(value) + 1;
  if (bits <= 1000) return std::log(value.convert_to<double>());
  const std::size_t shift = bits - 64;
  const BigInt top = value >> shift;
  return std::log(top.convert_to<double>()) + static_cast<double>(shift) * std::numbers::ln2;
}

}  // namespace

std::vector<double> walk_growth_estimate(const ClosedWalkCounts& counts) {
  std::vector<double> out;
  const std::size_t max_length = counts.counts.empty() ? 0 : counts.counts.size() - 1;
  for (std::size_t k = 1; 2 * k <= max_length; ++k)
    out.push_back(std::exp(log_bigint(counts.counts[2 * k]) / static_cast<double>(2 * k)));
  return out;
}

bool growth_is_monotone(const ClosedWalkCounts& counts) {
  const std::size_t max_length = counts.counts.empty() ? 0 : counts.counts.size() - 1;
  for (std::size_t k = 1; 2 * k + 2 <= max_length; ++k) {
    const auto kk = static_cast<unsigned>(k);
    if (boost::multiprecision::pow(counts.counts[2 * k + 2], kk) <
        boost::multiprecision::pow(counts.counts[2 * k], kk + 1))
      return false;
  }
  return true;
}

double to_double(const BigInt& value) { return value.convert_to<double>(); }

}  // namespace unravel
