//------------------------------------------------------------------------------
//
//   Copyright 2026 The petzlab Authors
//
//   Licensed under the Apache License, Version 2.0 (the "License");
//   you may not use this file except in compliance with the License.
//   You may obtain a copy of the License at
//
//       http://www.apache.org/licenses/LICENSE-2.0
//
//   Unless required by applicable law or agreed to in writing, software
//   distributed under the License is distributed on an "AS IS" BASIS,
//   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//   See the License for the specific language governing permissions and
//   limitations under the License.
//
//------------------------------------------------------------------------------
#pragma once

#include "petzlab/standard_form.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace petzlab {

/// Boundary kernels of the three-lines bound on the strip 0 < Re z < 1/2.
struct WeightDensity {
  enum class Kind { alpha, beta };

  double theta = 0.0;
  Kind kind = Kind::beta;

  WeightDensity() = default;
  WeightDensity(double th, Kind k) : theta(th), kind(k) {
    if (!(th >= 0.0 && th < 0.5)) throw std::invalid_argument("WeightDensity: theta must lie in [0, 1/2)");
    if (k == Kind::alpha && th == 0.0) throw std::invalid_argument("WeightDensity: alpha_0 is not a density");
  }

  static WeightDensity beta(double th) { return {th, Kind::beta}; }
  static WeightDensity alpha(double th) { return {th, Kind::alpha}; }

  double operator()(double t) const {
    const double x = 2.0 * kPi * std::abs(t);
    if (kind == Kind::beta && theta == 0.0) {
      // pi / (2 cosh^2(pi t)) written with e^{-x} to avoid overflow
      const double e = std::exp(-x);
      return 2.0 * kPi * e / ((1.0 + e) * (1.0 + e));
    }
    const double a = 2.0 * kPi * theta;
    const double e = std::exp(-x);
    // 1 / (cosh x +- cos a) = 2 e^{-x} / (1 + e^{-2x} +- 2 e^{-x} cos a)
    const double sgn = kind == Kind::beta ? 1.0 : -1.0;
    const double inv = 2.0 * e / (1.0 + e * e + sgn * 2.0 * e * std::cos(a));
    const double pre = kind == Kind::beta ? 2.0 * theta : 1.0 - 2.0 * theta;
    return std::sin(a) * inv / pre;
  }

  /// Distance of the nearest complex pole from the real axis.
  double pole_distance() const { return kind == Kind::beta ? 0.5 - theta : theta; }
};

struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
  double t_max = 6.0;
  int nodes_per_panel = 16;
  WeightDensity density;

  std::size_t size() const noexcept { return nodes.size(); }

  double weight_sum() const {
    double s = 0.0;
    for (double w : weights) s += w;
    return s;
  }

  template <class F>
  auto integrate(F&& f) const -> decltype(f(0.0) * 1.0) {
    using R = decltype(f(0.0) * 1.0);
    R acc = weights[0] * f(nodes[0]);
    for (std::size_t i = 1; i < nodes.size(); ++i) acc += weights[i] * f(nodes[i]);
    return acc;
  }
};

inline constexpr int kDefaultNodesPerPanel = 16;
inline constexpr double kDefaultTMax = 6.0;

/// Composite Gauss-Legendre rule for `density` on [-t_max, t_max]. Panels are
/// graded away from t = 0: the first has width min(pole distance, 1/2) and
/// widths double up to 1/2. Weights are density values times GL weights and
/// are not renormalised.
inline QuadratureRule weight_quadrature(const WeightDensity& density, int n_nodes = kDefaultNodesPerPanel,
                                        double t_max = kDefaultTMax) {
  if (n_nodes < 8) throw std::invalid_argument("weight_quadrature: n_nodes must be >= 8");
  if (!(t_max > 0.0)) throw std::invalid_argument("weight_quadrature: t_max must be positive");
  std::vector<double> gx, gw;
  detail::gauss_legendre(n_nodes, gx, gw);

  std::vector<double> edges{0.0};
  double width = std::min(density.pole_distance(), 0.5);
  while (edges.back() < t_max) {
    edges.push_back(std::min(edges.back() + width, t_max));
    width = std::min(2.0 * width, 0.5);
  }

  std::vector<double> half_nodes, half_weights;
  for (std::size_t k = 0; k + 1 < edges.size(); ++k) {
    const double a = edges[k];
    const double b = edges[k + 1];
    for (int q = 0; q < n_nodes; ++q) {
      const double t = 0.5 * (a + b) + 0.5 * (b - a) * gx[q];
      half_nodes.push_back(t);
      half_weights.push_back(0.5 * (b - a) * gw[q] * density(t));
    }
  }

  QuadratureRule rule;
  rule.t_max = t_max;
  rule.nodes_per_panel = n_nodes;
  rule.density = density;
  const std::size_t m = half_nodes.size();
  rule.nodes.resize(2 * m);
  rule.weights.resize(2 * m);
  for (std::size_t i = 0; i < m; ++i) {
    rule.nodes[m - 1 - i] = -half_nodes[i];
    rule.weights[m - 1 - i] = half_weights[i];
    rule.nodes[m + i] = half_nodes[i];
    rule.weights[m + i] = half_weights[i];
  }
  return rule;
}

/// theta = 1/2 is the point mass at t = 0 (the limit of beta_theta).
inline QuadratureRule beta_quadrature(double theta, int n_nodes = kDefaultNodesPerPanel,
                                      double t_max = kDefaultTMax) {
  if (theta == 0.5) {
    QuadratureRule rule;
    rule.nodes = {0.0};
    rule.weights = {1.0};
    rule.t_max = t_max;
    rule.nodes_per_panel = 1;
    return rule;
  }
  return weight_quadrature(WeightDensity::beta(theta), n_nodes, t_max);
}

inline QuadratureRule alpha_quadrature(double theta, int n_nodes = kDefaultNodesPerPanel,
                                       double t_max = kDefaultTMax) {
  return weight_quadrature(WeightDensity::alpha(theta), n_nodes, t_max);
}

/// Integral of f against `density`, doubling the nodes per panel from
/// `n_start` until two successive estimates differ by at most `eps` (absolute)
/// or `n_max` is reached. Suited to integrands with sharp features such as
/// log-moduli near zeros.
template <class F>
double integrate_refined(const WeightDensity& density, F&& f, int n_start = kDefaultNodesPerPanel,
                         double t_max = kDefaultTMax, double eps = 1e-11, int n_max = 256, int* n_used = nullptr) {
  int n = n_start;
  double prev = weight_quadrature(density, n, t_max).integrate(f);
  while (n < n_max) {
    n *= 2;
    const double cur = weight_quadrature(density, n, t_max).integrate(f);
    const bool done = std::abs(cur - prev) <= eps;
    prev = cur;
    if (done) break;
  }
  if (n_used) *n_used = n;
  return prev;
}

/// Fourier transform of beta_0: int beta_0(t) e^{i w t} dt = (w/2) / sinh(w/2).
inline double beta0_fourier(double w) {
  const double x = 0.5 * w;
  if (std::abs(x) < 1e-8) return 1.0 - x * x / 6.0;
  return x / std::sinh(x);
}

} // namespace petzlab
