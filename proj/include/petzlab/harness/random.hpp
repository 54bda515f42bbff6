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

#include "petzlab/channels.hpp"

#include <algorithm>
#include <random>
#include <utility>

namespace petzlab::harness {

using Rng = std::mt19937_64;

inline constexpr double kDefaultFloor = 1e-3;

inline Mat gaussian_matrix(Eigen::Index rows, Eigen::Index cols, Rng& rng) {
  std::normal_distribution<double> nd(0.0, 1.0);
  Mat g(rows, cols);
  for (Eigen::Index j = 0; j < cols; ++j)
    for (Eigen::Index i = 0; i < rows; ++i) {
      const double re = nd(rng);
      const double im = nd(rng);
      g(i, j) = cplx(re, im);
    }
  return g;
}

inline CVec gaussian_vector(Eigen::Index n, Rng& rng) { return gaussian_matrix(n, 1, rng).col(0); }

/// Wishart GG^*/Tr(GG^*), mixed as (1-floor) rho + floor id/d when faithful.
inline DensityMatrix random_density(Eigen::Index d, Rng& rng, bool faithful = true, double floor = kDefaultFloor) {
  if (d < 1) throw DimensionError("random_density: dimension must be positive");
  if (!(floor >= 0.0 && floor < 1.0)) throw std::invalid_argument("random_density: floor must lie in [0, 1)");
  const Mat g = gaussian_matrix(d, d, rng);
  Mat rho = g * g.adjoint();
  rho /= rho.trace().real();
  if (faithful) rho = (1.0 - floor) * rho + (floor / static_cast<double>(d)) * Mat::Identity(d, d);
  rho = (rho + rho.adjoint()) / 2.0;
  return DensityMatrix(Mat(rho / rho.trace().real()));
}

/// Rank-deficient state of the given rank (Wishart with a d x rank factor).
inline DensityMatrix random_low_rank_density(Eigen::Index d, Eigen::Index rank, Rng& rng) {
  const Mat g = gaussian_matrix(d, rank, rng);
  Mat rho = g * g.adjoint();
  rho = (rho + rho.adjoint()) / 2.0;
  return DensityMatrix(Mat(rho / rho.trace().real()));
}

inline HermitianMatrix random_hermitian(Eigen::Index d, Rng& rng, double scale = 1.0) {
  const Mat g = gaussian_matrix(d, d, rng);
  return HermitianMatrix(Mat((g + g.adjoint()) * (0.5 * scale / std::sqrt(static_cast<double>(d)))));
}

/// Positive definite matrix e^{h} with random Hermitian h.
inline HermitianMatrix random_positive(Eigen::Index d, Rng& rng, double scale = 1.0) {
  return expm(random_hermitian(d, rng, scale));
}

inline Mat random_unitary(Eigen::Index d, Rng& rng) {
  const Mat g = gaussian_matrix(d, d, rng);
  Eigen::HouseholderQR<Mat> qr(g);
  Mat q = qr.householderQ() * Mat::Identity(d, d);
  const Mat r = qr.matrixQR();
  for (Eigen::Index j = 0; j < d; ++j) {
    const double a = std::abs(r(j, j));
    if (a > 0.0) q.col(j) *= r(j, j) / a;
  }
  return q;
}

/// (rho, sigma) with sigma faithful and rho = sigma^{1/2} m sigma^{1/2} / Tr(sigma m),
/// the spectrum of m in [1, c/(1+1e-3)] so that c^{-1} sigma <= rho <= c sigma.
inline std::pair<DensityMatrix, DensityMatrix> majorized_pair(Eigen::Index d, Rng& rng, double c,
                                                              double floor = kDefaultFloor) {
  if (!(c > 1.0)) throw std::invalid_argument("majorized_pair: c must exceed 1");
  const DensityMatrix sigma = random_density(d, rng, true, floor);
  const Mat u = random_unitary(d, rng);
  std::uniform_real_distribution<double> ud(1.0, c / (1.0 + 1e-3));
  RVec ev(d);
  for (Eigen::Index i = 0; i < d; ++i) ev(i) = ud(rng);
  const Mat m = u * ev.cast<cplx>().asDiagonal() * u.adjoint();
  const Mat sh = psd_power(sigma.herm(), 0.5);
  Mat rho = sh * m * sh;
  rho = (rho + rho.adjoint()) / 2.0;
  return {DensityMatrix(Mat(rho / rho.trace().real())), sigma};
}

/// Probability vector from normalized exponentials, floored away from zero.
inline std::vector<double> random_probability(Eigen::Index d, Rng& rng, double floor = kDefaultFloor) {
  std::exponential_distribution<double> ed(1.0);
  std::vector<double> p(static_cast<std::size_t>(d));
  double s = 0.0;
  for (auto& x : p) s += (x = ed(rng));
  for (auto& x : p) x = (1.0 - floor) * x / s + floor / static_cast<double>(d);
  return p;
}

/// Column-stochastic d_out x d_in matrix with random columns.
inline Eigen::MatrixXd random_stochastic(Eigen::Index d_in, Eigen::Index d_out, Rng& rng) {
  Eigen::MatrixXd p(d_out, d_in);
  for (Eigen::Index j = 0; j < d_in; ++j) {
    const auto col = random_probability(d_out, rng, 0.0);
    for (Eigen::Index i = 0; i < d_out; ++i) p(i, j) = col[static_cast<std::size_t>(i)];
  }
  return p;
}

/// Surjective deterministic (0/1) column-stochastic matrix; needs d_in >= d_out.
inline Eigen::MatrixXd random_deterministic_stochastic(Eigen::Index d_in, Eigen::Index d_out, Rng& rng) {
  if (d_in < d_out) throw DimensionError("random_deterministic_stochastic: need d_in >= d_out");
  std::vector<Eigen::Index> target(static_cast<std::size_t>(d_in));
  std::uniform_int_distribution<Eigen::Index> ui(0, d_out - 1);
  for (Eigen::Index j = 0; j < d_in; ++j) target[static_cast<std::size_t>(j)] = j < d_out ? j : ui(rng);
  std::shuffle(target.begin(), target.end(), rng);
  Eigen::MatrixXd p = Eigen::MatrixXd::Zero(d_out, d_in);
  for (Eigen::Index j = 0; j < d_in; ++j) p(target[static_cast<std::size_t>(j)], j) = 1.0;
  return p;
}

inline DensityMatrix diagonal_density(const std::vector<double>& p) {
  RVec v(static_cast<Eigen::Index>(p.size()));
  for (std::size_t i = 0; i < p.size(); ++i) v(static_cast<Eigen::Index>(i)) = p[i];
  return DensityMatrix(HermitianMatrix::diagonal(v).mat());
}

/// Random channel with a seed drawn from `rng`; env_dim in [1, d_in].
inline KrausChannel random_channel(Eigen::Index d_in, Eigen::Index d_out, Rng& rng) {
  std::uniform_int_distribution<Eigen::Index> ue(1, std::max<Eigen::Index>(1, d_in));
  Eigen::Index env = ue(rng);
  while (env * d_out < d_in) ++env;
  return petzlab::random_channel(d_in, d_out, env, rng());
}

} // namespace petzlab::harness
