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

// Standard form of M_n(C): vectors are n x n matrices with the Hilbert-Schmidt
// inner product, the algebra acts by left multiplication and the commutant by
// right multiplication.

#include "petzlab/hermlin.hpp"
#include "petzlab/report.hpp"

#include <random>
#include <vector>

namespace petzlab {

struct StandardVector {
  Mat mat;

  StandardVector() = default;
  explicit StandardVector(Mat m) : mat(std::move(m)) { detail::require_square(mat, "StandardVector"); }

  Eigen::Index dim() const noexcept { return mat.rows(); }
  double norm() const { return mat.norm(); }
};

/// The state zeta zeta^* induced on the algebra (left action).
inline HermitianMatrix functional_of(const StandardVector& z) {
  return HermitianMatrix(z.mat * z.mat.adjoint());
}

/// The state zeta^* zeta induced on the commutant (right action).
inline HermitianMatrix commutant_functional_of(const StandardVector& z) {
  return HermitianMatrix(z.mat.adjoint() * z.mat);
}

/// Natural-cone representative omega^{1/2}.
inline StandardVector natural_cone_rep(const HermitianMatrix& omega) {
  const auto sd = require_psd(omega, "natural_cone_rep");
  return StandardVector(apply_spectral(
      sd, [](double lam) { return cplx(std::sqrt(lam), 0.0); }, true));
}

inline StandardVector natural_cone_rep(const DensityMatrix& omega) { return natural_cone_rep(omega.herm()); }

/// J zeta = zeta^*.
inline StandardVector modular_conjugation(const StandardVector& z) { return StandardVector(z.mat.adjoint()); }

/// Relative modular operator Delta = l(left_weight) r(right_weight^{-1}) with
/// pseudo-powers on the supports. Built once per pair of weights so repeated
/// complex powers reuse the two spectral decompositions.
class RelModularOp {
public:
  RelModularOp(const HermitianMatrix& left_weight, const HermitianMatrix& right_weight)
      : left_(require_psd(left_weight, "RelModularOp left weight")),
        right_(require_psd(right_weight, "RelModularOp right weight")) {
    detail::require_same_dim(left_weight.mat(), right_weight.mat(), "RelModularOp");
  }

  /// Delta_{eta,psi} from vector representatives: left weight eta eta^*,
  /// right weight psi^* psi (equal to psi psi^* on the natural cone).
  static RelModularOp from_vectors(const StandardVector& eta, const StandardVector& psi) {
    return RelModularOp(functional_of(eta), commutant_functional_of(psi));
  }

  static RelModularOp from_states(const DensityMatrix& eta, const DensityMatrix& psi) {
    return RelModularOp(eta.herm(), psi.herm());
  }

  /// Delta^z zeta = left^z zeta right^{-z}
  StandardVector apply(cplx z, const StandardVector& zeta) const {
    return StandardVector(psd_power(left_, z) * zeta.mat * psd_power(right_, -z));
  }

  /// Projection onto the support pi(eta) pi'(psi).
  Mat left_support() const { return support_projection(left_); }
  Mat right_support() const { return support_projection(right_); }

  const SpectralDecomposition& left_spectrum() const noexcept { return left_; }
  const SpectralDecomposition& right_spectrum() const noexcept { return right_; }

private:
  SpectralDecomposition left_;
  SpectralDecomposition right_;
};

inline StandardVector rel_modular_apply(const StandardVector& eta, const StandardVector& psi, cplx z,
                                        const StandardVector& zeta) {
  return RelModularOp::from_vectors(eta, psi).apply(z, zeta);
}

/// Majorisation constant c with c^{-1} psi <= eta <= c psi, or +inf when the
/// supports differ.
inline double majorization_constant(const DensityMatrix& eta, const DensityMatrix& psi) {
  if (!eta.faithful() || !psi.faithful()) return std::numeric_limits<double>::infinity();
  const Mat psi_m = psd_power(psi.herm(), -0.5);
  const Mat eta_m = psd_power(eta.herm(), -0.5);
  const double up = eigh(Mat(psi_m * eta.mat() * psi_m)).eigenvalues.maxCoeff();
  const double down = eigh(Mat(eta_m * psi.mat() * eta_m)).eigenvalues.maxCoeff();
  return std::max({1.0, up, down});
}

/// Connes cocycle [D eta : D psi]_t = eta^{it} psi^{-it} for complex t.
/// Non-real t is the analytic continuation and requires the pair to be
/// mutually majorised (equal supports in finite dimension).
inline Mat connes_cocycle(const DensityMatrix& eta, const DensityMatrix& psi, cplx t) {
  detail::require_same_dim(eta.mat(), psi.mat(), "connes_cocycle");
  if (t.imag() != 0.0 && !std::isfinite(majorization_constant(eta, psi)))
    throw std::domain_error("connes_cocycle: analytic continuation needs c^{-1} eta <= psi <= c eta");
  const cplx it = cplx(0.0, 1.0) * t;
  return psd_power(eta.herm(), it) * psd_power(psi.herm(), -it);
}

struct LpNormResult {
  double value = 0.0;
  double p = 2.0;
  DensityMatrix reference_state;
};

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

/// Araki-Masuda norm [Tr (zeta w^{2/p-1} zeta^*)^{p/2}]^{1/p} relative to the
/// state w; p = inf gives the operator norm of zeta w^{-1/2}.
inline double am_lp_norm_value(const Mat& zeta, const SpectralDecomposition& w_sd, double p) {
  if (!(p >= 1.0)) throw std::invalid_argument("am_lp_norm: p must be >= 1");
  if (p == 2.0) return zeta.norm();
  const bool faithful = w_sd.eigenvalues.minCoeff() > support_cutoff(w_sd.eigenvalues);
  if (p > 2.0 && !faithful)
    throw std::domain_error("am_lp_norm: reference state must be faithful for p > 2");
  if (std::isinf(p)) return operator_norm(zeta * psd_power(w_sd, -0.5));
  const Mat inner = zeta * psd_power(w_sd, 2.0 / p - 1.0) * zeta.adjoint();
  const RVec ev = eigh(inner).eigenvalues;
  double acc = 0.0;
  for (Eigen::Index i = 0; i < ev.size(); ++i) acc += std::pow(std::max(ev(i), 0.0), p / 2.0);
  return std::pow(acc, 1.0 / p);
}

inline LpNormResult am_lp_norm(const StandardVector& zeta, const DensityMatrix& psi, double p) {
  detail::require_same_dim(zeta.mat, psi.mat(), "am_lp_norm");
  return {am_lp_norm_value(zeta.mat, eigh(psi.herm()), p), p, psi};
}

/// Variational form sup_{|phi|=1} |Delta_{phi,psi}^{1/2-1/p} zeta| for p >= 2,
/// evaluated by random sampling plus local refinement over density matrices
/// phi phi^*. Returns a lower bound on the norm. Small dimensions only.
inline double am_lp_variational_oracle(const StandardVector& zeta, const DensityMatrix& psi, double p,
                                       int sample_budget, std::uint64_t seed = 7) {
  const Eigen::Index n = zeta.dim();
  if (n > 3) throw DimensionError("am_lp_variational_oracle: dimension must be <= 3");
  if (p < 2.0) throw std::invalid_argument("am_lp_variational_oracle: needs p >= 2");
  if (!psi.faithful()) throw std::domain_error("am_lp_variational_oracle: psi must be faithful");
  const double gamma = std::isinf(p) ? 0.5 : 0.5 - 1.0 / p;
  if (gamma == 0.0) return zeta.norm();

  const Mat x = zeta.mat * psd_power(psi.herm(), -gamma);
  // |w^gamma x|^2 for w = g g^* / Tr(g g^*)
  auto objective = [&](const Mat& g) {
    const Mat w = g * g.adjoint() / (g.squaredNorm());
    const Mat wg = apply_spectral(
        eigh(w), [gamma](double lam) { return cplx(std::pow(lam, gamma), 0.0); }, true);
    return (wg * x).norm();
  };

  std::mt19937_64 rng(seed);
  std::normal_distribution<double> nd(0.0, 1.0);
  auto random_g = [&]() {
    Mat g(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
      for (Eigen::Index j = 0; j < n; ++j) g(i, j) = cplx(nd(rng), nd(rng));
    return g;
  };

  Mat best = random_g();
  double best_val = objective(best);
  for (int s = 1; s < sample_budget; ++s) {
    Mat g = random_g();
    // rank-one samples probe the extreme points
    if (s % 2 == 0) {
      CVec v = g.col(0);
      g = v * v.adjoint();
    }
    const double val = objective(g);
    if (val > best_val) {
      best_val = val;
      best = g;
    }
  }

  double step = 0.5 * best.norm();
  int stalls = 0;
  while (step > 1e-13 * best.norm() && stalls < 400) {
    Mat trial = best + step * random_g() / std::sqrt(static_cast<double>(2 * n * n));
    const double val = objective(trial);
    if (val > best_val) {
      best_val = val;
      best = trial;
      step *= 1.5;
      stalls = 0;
    } else {
      step *= 0.85;
      ++stalls;
    }
  }
  return best_val;
}

/// |psi^h> = exp(log psi + h/2) for a faithful natural-cone vector psi.
inline StandardVector perturbed_vector(const StandardVector& psi, const HermitianMatrix& h) {
  detail::require_same_dim(psi.mat, h.mat(), "perturbed_vector");
  const HermitianMatrix p(psi.mat);
  const auto sd = require_psd(p, "perturbed_vector");
  if (sd.eigenvalues.minCoeff() <= support_cutoff(sd.eigenvalues))
    throw std::domain_error("perturbed_vector: psi must be faithful");
  const Mat logp = apply_spectral(sd, [](double lam) { return cplx(std::log(lam), 0.0); }, false);
  return StandardVector(expm(HermitianMatrix(Mat(logp + h.mat() / 2.0))).mat());
}

namespace detail {

/// Gauss-Legendre nodes and weights on [-1, 1] by Newton iteration on P_n.
inline void gauss_legendre(int n, std::vector<double>& x, std::vector<double>& w) {
  x.assign(n, 0.0);
  w.assign(n, 0.0);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double z = std::cos(kPi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0;
      double p1 = 0.0;
      for (int k = 1; k <= n; ++k) {
        const double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * k - 1.0) * z * p1 - (k - 1.0) * p2) / k;
      }
      dp = n * (z * p0 - p1) / (z * z - 1.0);
      const double dz = p0 / dp;
      z -= dz;
      if (std::abs(dz) < 1e-16) break;
    }
    // recompute derivative at the converged node
    {
      double p0 = 1.0;
      double p1 = 0.0;
      for (int k = 1; k <= n; ++k) {
        const double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * k - 1.0) * z * p1 - (k - 1.0) * p2) / k;
      }
      dp = n * (z * p0 - p1) / (z * z - 1.0);
    }
    x[i] = -z;
    x[n - 1 - i] = z;
    w[i] = w[n - 1 - i] = 2.0 / ((1.0 - z * z) * dp * dp);
  }
}

} // namespace detail

/// Araki's iterated-integral series for |psi^h>, truncated after `order`
/// terms. Term n is R_n(1/2) with R_0(u) = w^u and
/// R_n(u) = int_0^u R_{n-1}(s) h w^{u-s} ds (w = psi^2). Each level keeps
/// R_n on a Chebyshev grid over [0, 1/2] and integrates with 16-point
/// Gauss-Legendre on [0, u].
inline StandardVector perturbation_series_oracle(const StandardVector& psi, const HermitianMatrix& h,
                                                 int order) {
  if (order < 0 || order > 20) throw std::invalid_argument("perturbation_series_oracle: order in [0, 20]");
  detail::require_same_dim(psi.mat, h.mat(), "perturbation_series_oracle");
  const auto sd = require_psd(HermitianMatrix(psi.mat), "perturbation_series_oracle");
  if (sd.eigenvalues.minCoeff() <= support_cutoff(sd.eigenvalues))
    throw std::domain_error("perturbation_series_oracle: psi must be faithful");
  const Eigen::Index n = psi.dim();
  // work in the eigenbasis of w = psi^2, where w^s is diagonal
  const RVec logw = (2.0 * sd.eigenvalues.array().log()).matrix();
  const Mat& u_basis = sd.eigenvectors;
  const Mat ht = u_basis.adjoint() * h.mat() * u_basis;
  auto wpow = [&](double s) {
    CVec d(n);
    for (Eigen::Index i = 0; i < n; ++i) d(i) = std::exp(s * logw(i));
    return d;
  };

  constexpr int kGrid = 28;
  const double half = 0.5;
  std::vector<double> grid(kGrid);
  for (int j = 0; j < kGrid; ++j) grid[j] = 0.25 * (1.0 - std::cos(kPi * j / (kGrid - 1))); // [0, 1/2]
  // barycentric weights for Chebyshev points of the second kind
  std::vector<double> bw(kGrid);
  for (int j = 0; j < kGrid; ++j) bw[j] = ((j % 2) ? -1.0 : 1.0) * ((j == 0 || j == kGrid - 1) ? 0.5 : 1.0);

  auto interpolate = [&](const std::vector<Mat>& vals, double s) -> Mat {
    double den = 0.0;
    Mat num = Mat::Zero(n, n);
    for (int j = 0; j < kGrid; ++j) {
      const double d = s - grid[j];
      if (std::abs(d) < 1e-15) return vals[j];
      const double c = bw[j] / d;
      num += c * vals[j];
      den += c;
    }
    return num / den;
  };

  std::vector<double> gx, gw;
  detail::gauss_legendre(16, gx, gw);

  std::vector<Mat> level(kGrid);
  for (int j = 0; j < kGrid; ++j) level[j] = Mat(wpow(grid[j]).asDiagonal());
  Mat total = Mat(wpow(half).asDiagonal());

  for (int k = 1; k <= order; ++k) {
    std::vector<Mat> next(kGrid);
    for (int j = 0; j < kGrid; ++j) {
      const double u = grid[j];
      Mat acc = Mat::Zero(n, n);
      if (u > 0.0) {
        for (std::size_t q = 0; q < gx.size(); ++q) {
          const double s = 0.5 * u * (gx[q] + 1.0);
          acc += (0.5 * u * gw[q]) * (interpolate(level, s) * ht * wpow(u - s).asDiagonal());
        }
      }
      next[j] = acc;
    }
    level = std::move(next);
    total += level[kGrid - 1]; // grid[kGrid-1] == 1/2
  }
  return StandardVector(u_basis * total * u_basis.adjoint());
}

/// Continuity of the Lp norm under mixing: psi_eps = (1 - eps) psi + eps eta.
/// Reports 0 >= |norm(psi_eps) - norm(psi)| at the last eps of the sequence;
/// the check also fails if the deviations do not shrink along the sequence.
inline CheckReport lp_mixing_convergence_check(const StandardVector& zeta, const DensityMatrix& psi,
                                               const DensityMatrix& eta, double p,
                                               const std::vector<double>& eps_sequence, double tol = 1e-4) {
  if (!eta.faithful()) throw std::domain_error("lp_mixing_convergence_check: eta must be faithful");
  if (eps_sequence.empty()) throw std::invalid_argument("lp_mixing_convergence_check: empty sequence");
  detail::require_same_dim(psi.mat(), eta.mat(), "lp_mixing_convergence_check");
  const double base = am_lp_norm(zeta, psi, p).value;
  double max_dev = 0.0;
  double prev = std::numeric_limits<double>::infinity();
  bool monotone = true;
  double last = 0.0;
  for (double eps : eps_sequence) {
    if (!(eps >= 0.0 && eps < 1.0)) throw std::invalid_argument("lp_mixing_convergence_check: eps in [0, 1)");
    const Mat mix = (1.0 - eps) * psi.mat() + eps * eta.mat();
    const double dev = std::abs(am_lp_norm_value(zeta.mat, eigh(mix), p) - base);
    max_dev = std::max(max_dev, dev);
    if (dev > prev + 1e-12 * std::max(1.0, base)) monotone = false;
    prev = dev;
    last = dev;
  }
  CheckReport r = make_report("lp_mixing", 0.0, last, tol);
  r.note = "max_dev=" + std::to_string(max_dev) + (monotone ? " monotone" : " non-monotone");
  if (!monotone) {
    r.pass = false;
    r.reason = "deviations do not decrease";
  }
  return r;
}

} // namespace petzlab
