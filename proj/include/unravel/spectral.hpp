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
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "unravel/graph.hpp"

namespace unravel {

using BigInt = boost::multiprecision::cpp_int;

enum class Method { power, dense, closed_form, tree_inertia };

const char* to_string(Method method);

/// An eigenvalue together with the evidence for it. `residual` is
/// ||A x - value x|| for the unit vector x the solver ended with; for the
/// tree-inertia solver it is the width of the final bisection bracket.
struct SpectralEstimate {
  double value = 0.0;
  double residual = 0.0;
  std::size_t iterations = 0;
  Method method = Method::power;
  bool converged = true;
};

struct SpectrumSummary {
  double lambda1 = 0.0;
  double lambda2 = 0.0;
  double lambda_min = 0.0;
  std::size_t n = 0;
};

struct SpectralOptions {
  double tol = 1e-10;
  std::size_t max_iterations = 0;  // 0 selects 100 n log n + 10^4
  std::size_t dense_threshold = 2048;
};

/// Largest adjacency eigenvalue. Power iteration on A^2 per connected
/// component (A^2 is PSD, so bipartite components do not oscillate); the
/// +lambda eigenvector is recovered as x + Ax / rho. Components that fail
/// to converge fall back to the dense solver when small enough.
SpectralEstimate spectral_radius(const Graph& g, const SpectralOptions& opts = {});

SpectralEstimate second_largest_eigenvalue(const Graph& g, const SpectralOptions& opts = {});
SpectralEstimate smallest_eigenvalue(const Graph& g, const SpectralOptions& opts = {});
SpectrumSummary spectrum_summary(const Graph& g, const SpectralOptions& opts = {});

/// Full adjacency spectrum in ascending order.
std::vector<double> dense_spectrum(const Graph& g);

/// lambda_1(P_n) = 2 cos(pi / (n + 1)).
double path_spectral_radius(std::size_t n);
/// x_i = sin(i pi / (n + 1)), i = 1..n (not normalized).
std::vector<double> path_eigenvector(std::size_t n);

double rayleigh_quotient(const Graph& g, std::span<const double> f);
/// Rayleigh quotient on a rooted tree given by parent links (parent[0] < 0).
double tree_rayleigh_quotient(std::span<const std::int64_t> parent, std::span<const double> f);

/// Spectral radius of a rooted tree given by parent links, where every
/// parent precedes its children. Uses Sylvester's law of inertia:
/// lambda I - A is positive definite iff all pivots of the leaves-first
/// elimination are positive, and bisects on lambda.
SpectralEstimate tree_spectral_radius(std::span<const std::int64_t> parent);

struct ClosedWalkCounts {
  Vertex origin = 0;
  std::vector<BigInt> counts;  // counts[k] = number of closed k-walks at origin
};

/// Exact s_k(v) = (A^k)_{vv} for k = 0..max_length.
ClosedWalkCounts closed_walk_counts(const Graph& g, Vertex v, std::size_t max_length);

/// a_k = s_{2k}(v)^{1/(2k)} for k = 1..floor(K/2).
std::vector<double> walk_growth_estimate(const ClosedWalkCounts& counts);

/// True iff s_{2k+2}^k >= s_{2k}^{k+1} for every k with both lengths
/// available, i.e. the growth estimate is nondecreasing, checked exactly.
bool growth_is_monotone(const ClosedWalkCounts& counts);

double to_double(const BigInt& value);

}  // namespace unravel
