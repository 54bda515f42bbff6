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

#include "petzlab/quadrature.hpp"
#include "petzlab/standard_form.hpp"

#include <unsupported/Eigen/KroneckerProduct>

#include <cstdint>
#include <random>
#include <vector>

namespace petzlab {

class SingularReferenceError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// CPTP map rho -> sum K rho K^* from M_{d_in} to M_{d_out}.
class KrausChannel {
public:
  KrausChannel() = default;

  explicit KrausChannel(std::vector<Mat> kraus) : kraus_(std::move(kraus)) {
    if (kraus_.empty()) throw std::invalid_argument("KrausChannel: no Kraus operators");
    d_out_ = kraus_.front().rows();
    d_in_ = kraus_.front().cols();
    if (d_in_ == 0 || d_out_ == 0) throw DimensionError("KrausChannel: empty Kraus operator");
    Mat acc = Mat::Zero(d_in_, d_in_);
    for (const auto& k : kraus_) {
      if (k.rows() != d_out_ || k.cols() != d_in_)
        throw DimensionError("KrausChannel: Kraus operators have inconsistent shapes");
      if (!k.allFinite()) throw std::invalid_argument("KrausChannel: non-finite entries");
      acc += k.adjoint() * k;
    }
    const double resid = (acc - Mat::Identity(d_in_, d_in_)).cwiseAbs().maxCoeff();
    if (resid > 1e-10) {
      std::ostringstream os;
      os << "KrausChannel: not trace preserving (residual " << resid << ")";
      throw std::invalid_argument(os.str());
    }
  }

  static KrausChannel identity(Eigen::Index d) { return KrausChannel({Mat::Identity(d, d)}); }

  /// rho -> Tr(rho) id/d, Kraus operators E_ij / sqrt(d).
  static KrausChannel completely_depolarizing(Eigen::Index d) {
    std::vector<Mat> ks;
    for (Eigen::Index i = 0; i < d; ++i)
      for (Eigen::Index j = 0; j < d; ++j) ks.push_back(matrix_unit(d, i, j) / std::sqrt(static_cast<double>(d)));
    return KrausChannel(std::move(ks));
  }

  /// Classical channel for a column-stochastic matrix P (d_out x d_in):
  /// K_ij = sqrt(P_ij) |i><j|.
  static KrausChannel from_stochastic(const Eigen::MatrixXd& p) {
    std::vector<Mat> ks;
    for (Eigen::Index j = 0; j < p.cols(); ++j) {
      if (std::abs(p.col(j).sum() - 1.0) > 1e-12 || p.col(j).minCoeff() < 0.0)
        throw std::invalid_argument("KrausChannel::from_stochastic: columns must be probability vectors");
      for (Eigen::Index i = 0; i < p.rows(); ++i) {
        if (p(i, j) == 0.0) continue;
        Mat k = Mat::Zero(p.rows(), p.cols());
        k(i, j) = std::sqrt(p(i, j));
        ks.push_back(std::move(k));
      }
    }
    return KrausChannel(std::move(ks));
  }

  const std::vector<Mat>& kraus() const noexcept { return kraus_; }
  Eigen::Index d_in() const noexcept { return d_in_; }
  Eigen::Index d_out() const noexcept { return d_out_; }

  /// Schrodinger picture on arbitrary d_in x d_in matrices.
  Mat schrodinger(const Mat& rho) const {
    if (rho.rows() != d_in_ || rho.cols() != d_in_) throw DimensionError("KrausChannel: input dimension mismatch");
    Mat out = Mat::Zero(d_out_, d_out_);
    for (const auto& k : kraus_) out.noalias() += k * rho * k.adjoint();
    return out;
  }

  /// Heisenberg picture (unital dual) on d_out x d_out matrices.
  Mat heisenberg(const Mat& b) const {
    if (b.rows() != d_out_ || b.cols() != d_out_) throw DimensionError("KrausChannel: observable dimension mismatch");
    Mat out = Mat::Zero(d_in_, d_in_);
    for (const auto& k : kraus_) out.noalias() += k.adjoint() * b * k;
    return out;
  }

private:
  std::vector<Mat> kraus_;
  Eigen::Index d_in_ = 0;
  Eigen::Index d_out_ = 0;
};

inline DensityMatrix apply_schrodinger(const KrausChannel& t, const DensityMatrix& rho) {
  return DensityMatrix::normalized(t.schrodinger(rho.mat()));
}

inline Mat apply_heisenberg(const KrausChannel& t, const Mat& b) { return t.heisenberg(b); }

/// Random channel from a Stinespring isometry: QR of a seeded complex
/// Gaussian (env_dim*d_out) x d_in matrix, phases fixed so that R has a
/// positive diagonal. Kraus operator e is the e-th d_out-row block.
inline KrausChannel random_channel(Eigen::Index d_in, Eigen::Index d_out, Eigen::Index env_dim, std::uint64_t seed) {
  if (d_in < 1 || d_out < 1 || env_dim < 1) throw DimensionError("random_channel: dimensions must be positive");
  if (env_dim * d_out < d_in) throw DimensionError("random_channel: need env_dim * d_out >= d_in");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> nd(0.0, 1.0);
  const Eigen::Index rows = env_dim * d_out;
  Mat g(rows, d_in);
  for (Eigen::Index i = 0; i < rows; ++i)
    for (Eigen::Index j = 0; j < d_in; ++j) g(i, j) = cplx(nd(rng), nd(rng));
  Eigen::HouseholderQR<Mat> qr(g);
  Mat q = qr.householderQ() * Mat::Identity(rows, d_in);
  const Mat r = qr.matrixQR().topRows(d_in).triangularView<Eigen::Upper>();
  for (Eigen::Index j = 0; j < d_in; ++j) {
    const double a = std::abs(r(j, j));
    if (a > 0.0) q.col(j) *= r(j, j) / a;
  }
  std::vector<Mat> ks;
  for (Eigen::Index e = 0; e < env_dim; ++e) ks.push_back(q.middleRows(e * d_out, d_out));
  return KrausChannel(std::move(ks));
}

/// Linear map M_{d_in} -> M_{d_out} stored as a d_out^2 x d_in^2 matrix acting
/// on column-stacked vectors.
class Superoperator {
public:
  Superoperator() = default;
  Superoperator(Mat s, Eigen::Index d_in, Eigen::Index d_out) : s_(std::move(s)), d_in_(d_in), d_out_(d_out) {
    if (s_.rows() != d_out * d_out || s_.cols() != d_in * d_in) throw DimensionError("Superoperator: shape mismatch");
  }

  template <class F>
  static Superoperator from_map(F&& f, Eigen::Index d_in, Eigen::Index d_out) {
    Mat s(d_out * d_out, d_in * d_in);
    for (Eigen::Index j = 0; j < d_in; ++j)
      for (Eigen::Index i = 0; i < d_in; ++i) s.col(i + j * d_in) = vec(f(matrix_unit(d_in, i, j)));
    return Superoperator(std::move(s), d_in, d_out);
  }

  Mat apply(const Mat& x) const {
    if (x.rows() != d_in_ || x.cols() != d_in_) throw DimensionError("Superoperator: input dimension mismatch");
    return unvec(s_ * vec(x), d_out_, d_out_);
  }

  /// Dual map with Tr(S(x) a) = Tr(x S^dual(a)).
  Mat dual(const Mat& a) const {
    if (a.rows() != d_out_ || a.cols() != d_out_) throw DimensionError("Superoperator: dual dimension mismatch");
    Mat out(d_in_, d_in_);
    for (Eigen::Index j = 0; j < d_in_; ++j)
      for (Eigen::Index i = 0; i < d_in_; ++i) out(j, i) = (unvec(s_.col(i + j * d_in_), d_out_, d_out_) * a).trace();
    return out;
  }

  /// Choi matrix sum_ij E_ij (x) S(E_ij), a (d_in d_out) square matrix.
  Mat choi() const {
    Mat c = Mat::Zero(d_in_ * d_out_, d_in_ * d_out_);
    for (Eigen::Index j = 0; j < d_in_; ++j)
      for (Eigen::Index i = 0; i < d_in_; ++i)
        c.block(i * d_out_, j * d_out_, d_out_, d_out_) = unvec(s_.col(i + j * d_in_), d_out_, d_out_);
    return c;
  }

  const Mat& matrix() const noexcept { return s_; }
  Eigen::Index d_in() const noexcept { return d_in_; }
  Eigen::Index d_out() const noexcept { return d_out_; }

private:
  Mat s_;
  Eigen::Index d_in_ = 0;
  Eigen::Index d_out_ = 0;
};

/// A recovery map M_{d_B} -> M_{d_A} (the reverse direction of the channel).
using RecoveryChannel = Superoperator;

/// Reference data shared by every rotated Petz map of (T, sigma_A): spectra of
/// sigma_A and sigma_B = T(sigma_A).
class PetzContext {
public:
  PetzContext(KrausChannel channel, const DensityMatrix& sigma_a) : t_(std::move(channel)) {
    if (sigma_a.dim() != t_.d_in()) throw DimensionError("PetzContext: sigma_A dimension mismatch");
    sa_ = eigh(sigma_a.herm());
    if (sa_.eigenvalues.minCoeff() <= support_cutoff(sa_.eigenvalues))
      throw SingularReferenceError("PetzContext: sigma_A must be faithful");
    sb_ = eigh(HermitianMatrix(t_.schrodinger(sigma_a.mat())));
    if (sb_.eigenvalues.minCoeff() <= support_cutoff(sb_.eigenvalues))
      throw SingularReferenceError("PetzContext: T(sigma_A) is singular");
    // M = X' -> U_A^* T(U_B X' U_B^*) U_A in the two eigenbases
    const Eigen::Index db = t_.d_out();
    const Eigen::Index da = t_.d_in();
    m_ = Superoperator::from_map(
             [&](const Mat& x) {
               return Mat(sa_.eigenvectors.adjoint() * t_.heisenberg(sb_.eigenvectors * x * sb_.eigenvectors.adjoint()) *
                          sa_.eigenvectors);
             },
             db, da)
             .matrix();
  }

  const KrausChannel& channel() const noexcept { return t_; }
  const SpectralDecomposition& sigma_a() const noexcept { return sa_; }
  const SpectralDecomposition& sigma_b() const noexcept { return sb_; }
  Eigen::Index d_a() const noexcept { return t_.d_in(); }
  Eigen::Index d_b() const noexcept { return t_.d_out(); }

  /// sigma_A^{1/2-it} T(sigma_B^{-1/2+it} rho sigma_B^{-1/2-it}) sigma_A^{1/2+it}
  Mat rotated_apply(double t, const Mat& rho) const {
    const cplx it(0.0, t);
    const Mat inner = psd_power(sb_, -0.5 + it) * rho * psd_power(sb_, -0.5 - it);
    return psd_power(sa_, 0.5 - it) * t_.heisenberg(inner) * psd_power(sa_, 0.5 + it);
  }

  /// Superoperator of int mu(dt) alpha^t for a discrete measure, built from the
  /// eigenbasis form alpha^t = phase(t) * M.
  RecoveryChannel mixture(const std::vector<double>& nodes, const std::vector<double>& weights) const {
    return from_kernel([&](double omega) {
      cplx acc = 0.0;
      for (std::size_t k = 0; k < nodes.size(); ++k) acc += weights[k] * std::exp(cplx(0.0, nodes[k] * omega));
      return acc;
    });
  }

  /// Same as `mixture` for beta_0 with the exact Fourier transform.
  RecoveryChannel beta0_exact() const {
    return from_kernel([](double omega) { return cplx(beta0_fourier(omega), 0.0); });
  }

private:
  template <class K>
  RecoveryChannel from_kernel(K&& kernel) const {
    const Eigen::Index da = d_a();
    const Eigen::Index db = d_b();
    const RVec lmu = sa_.eigenvalues.array().log().matrix();
    const RVec llam = sb_.eigenvalues.array().log().matrix();
    Mat s(da * da, db * db);
    for (Eigen::Index d = 0; d < db; ++d)
      for (Eigen::Index c = 0; c < db; ++c)
        for (Eigen::Index b = 0; b < da; ++b)
          for (Eigen::Index a = 0; a < da; ++a) {
            const double omega = -lmu(a) + lmu(b) + llam(c) - llam(d);
            const double scale = std::exp(0.5 * (lmu(a) + lmu(b) - llam(c) - llam(d)));
            s(a + b * da, c + d * db) = scale * kernel(omega) * m_(a + b * da, c + d * db);
          }
    // back to the computational bases: out = U_A out' U_A^*, rho' = U_B^* rho U_B
    const Mat& ua = sa_.eigenvectors;
    const Mat& ub = sb_.eigenvectors;
    const Mat left = Eigen::kroneckerProduct(ua.conjugate(), ua);
    const Mat right = Eigen::kroneckerProduct(ub.transpose(), ub.adjoint());
    return RecoveryChannel(left * s * right, db, da);
  }

  KrausChannel t_;
  SpectralDecomposition sa_;
  SpectralDecomposition sb_;
  Mat m_;
};

inline RecoveryChannel rotated_petz(const PetzContext& ctx, double t) {
  return RecoveryChannel::from_map([&](const Mat& x) { return ctx.rotated_apply(t, x); }, ctx.d_b(), ctx.d_a());
}

inline RecoveryChannel rotated_petz(const KrausChannel& t, const DensityMatrix& sigma_a, double time) {
  return rotated_petz(PetzContext(t, sigma_a), time);
}

inline RecoveryChannel petz_map(const KrausChannel& t, const DensityMatrix& sigma_a) {
  return rotated_petz(t, sigma_a, 0.0);
}

/// int beta_0(t) alpha^t dt discretised by `rule`.
inline RecoveryChannel integrated_recovery(const PetzContext& ctx, const QuadratureRule& rule) {
  return ctx.mixture(rule.nodes, rule.weights);
}

inline RecoveryChannel integrated_recovery(const KrausChannel& t, const DensityMatrix& sigma_a,
                                           const QuadratureRule& rule) {
  return integrated_recovery(PetzContext(t, sigma_a), rule);
}

/// k = T(log rho_B - log sigma_B), normalised so that Tr(rho k) equals the
/// relative entropy of the images.
inline HermitianMatrix cocycle_generator(const KrausChannel& t, const DensityMatrix& rho, const DensityMatrix& sigma) {
  if (!std::isfinite(majorization_constant(rho, sigma)))
    throw std::domain_error("cocycle_generator: rho and sigma must majorise each other");
  const HermitianMatrix rb(t.schrodinger(rho.mat()));
  const HermitianMatrix sb(t.schrodinger(sigma.mat()));
  const auto rsd = eigh(rb);
  const auto ssd = eigh(sb);
  if (rsd.eigenvalues.minCoeff() <= support_cutoff(rsd.eigenvalues) ||
      ssd.eigenvalues.minCoeff() <= support_cutoff(ssd.eigenvalues))
    throw std::domain_error("cocycle_generator: images must be faithful");
  auto logm = [](const SpectralDecomposition& sd) {
    return apply_spectral(sd, [](double x) { return cplx(std::log(x), 0.0); }, false);
  };
  return HermitianMatrix(t.heisenberg(logm(rsd) - logm(ssd)));
}

/// V(b xi_B + zeta) = T(b) xi_A with xi = natural-cone vectors of rho_A and
/// rho_B = T(rho_A), and zeta annihilated by the commutant support of rho_B.
/// Returned as a d_A^2 x d_B^2 matrix.
inline Superoperator v_contraction(const KrausChannel& t, const DensityMatrix& rho_a) {
  const HermitianMatrix rb(t.schrodinger(rho_a.mat()));
  const Mat xb_pinv = psd_power(rb, -0.5);
  const Mat xa = natural_cone_rep(rho_a).mat;
  return Superoperator::from_map([&](const Mat& x) { return Mat(t.heisenberg(x * xb_pinv) * xa); }, t.d_out(), t.d_in());
}

inline double v_contraction_norm(const KrausChannel& t, const DensityMatrix& rho_a) {
  return operator_norm(v_contraction(t, rho_a).matrix());
}

/// Gamma(z) = Delta^z_{eta_A,psi_A} V Delta^{-z}_{eta_B,psi_B} xi_B for
/// 0 <= Re z <= 1/2, with psi = rho_A and eta = sigma_A.
inline StandardVector gamma_vector(const KrausChannel& t, const DensityMatrix& rho_a, const DensityMatrix& sigma_a,
                                   cplx z) {
  if (z.real() < -1e-15 || z.real() > 0.5 + 1e-15)
    throw std::domain_error("gamma_vector: z must lie in the closed strip 0 <= Re z <= 1/2");
  if (!sigma_a.faithful()) throw SingularReferenceError("gamma_vector: eta must be faithful");
  const HermitianMatrix rb(t.schrodinger(rho_a.mat()));
  const HermitianMatrix sb(t.schrodinger(sigma_a.mat()));
  const StandardVector xi_b = natural_cone_rep(rb);
  const StandardVector moved = RelModularOp(sb, rb).apply(-z, xi_b);
  const StandardVector v_out(v_contraction(t, rho_a).apply(moved.mat));
  return RelModularOp(sigma_a.herm(), rho_a.herm()).apply(z, v_out);
}

} // namespace petzlab
