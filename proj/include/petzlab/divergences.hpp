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

#include "petzlab/report.hpp"
#include "petzlab/standard_form.hpp"

#include <optional>
#include <random>
#include <vector>

namespace petzlab {

struct DivergenceValue {
  enum class Kind { relative, renyi, measured, fidelity_neg_log };

  double value = 0.0;
  Kind kind = Kind::relative;
  double order = 1.0;         ///< s for Renyi divergences
  std::string reason;         ///< set when value is +inf
  std::optional<Mat> certificate; ///< optimal h for the measured entropy
  bool converged = true;
  int iterations = 0;

  bool infinite() const { return std::isinf(value); }
};

struct MeasOptConfig {
  int max_iters = 400;
  double grad_tol = 1e-9;
  double stall_grad_tol = 1e-6; ///< accepted as converged when no ascent step is found
  double armijo = 1e-4;       ///< sufficient-increase constant
  double backtrack = 0.5;     ///< step shrink factor
  int max_backtracks = 60;
  int restarts = 3;           ///< random starts in addition to the informed start
  std::uint64_t seed = 12345;
};

namespace detail {

inline double log_on_support_trace(const SpectralDecomposition& sd, const Mat& weight) {
  // Tr(weight log P) over the support of P
  return (weight * apply_spectral(sd, [](double x) { return cplx(std::log(x), 0.0); }, true)).trace().real();
}

/// Weight of rho outside the support of sigma.
inline double leakage(const Mat& rho, const SpectralDecomposition& sigma_sd) {
  const Mat p = support_projection(sigma_sd);
  return (rho - p * rho * p).trace().real();
}

inline constexpr double kLeakTol = 1e-12;

} // namespace detail

/// Tr rho (log rho - log sigma), +inf unless supp rho is inside supp sigma.
inline DivergenceValue relative_entropy(const DensityMatrix& rho, const DensityMatrix& sigma) {
  detail::require_same_dim(rho.mat(), sigma.mat(), "relative_entropy");
  DivergenceValue out;
  const auto ssd = eigh(sigma.herm());
  if (detail::leakage(rho.mat(), ssd) > detail::kLeakTol) {
    out.value = std::numeric_limits<double>::infinity();
    out.reason = "support";
    return out;
  }
  const auto rsd = eigh(rho.herm());
  double neg_ent = 0.0;
  const double cut = support_cutoff(rsd.eigenvalues);
  for (Eigen::Index i = 0; i < rsd.dim(); ++i) {
    const double l = rsd.eigenvalues(i);
    if (l > cut) neg_ent += l * std::log(l);
  }
  out.value = std::max(0.0, neg_ent - detail::log_on_support_trace(ssd, rho.mat()));
  return out;
}

/// (1 - Tr sigma^a rho^{1-a}) / a evaluated through Delta_{sigma,rho}^a acting
/// on rho^{1/2}, then polynomially extrapolated to a = 0 (Neville).
inline double relative_entropy_limit_oracle(const DensityMatrix& rho, const DensityMatrix& sigma,
                                            std::vector<double> alphas = {}) {
  if (rho.dim() > 8) throw DimensionError("relative_entropy_limit_oracle: dimension must be <= 8");
  detail::require_same_dim(rho.mat(), sigma.mat(), "relative_entropy_limit_oracle");
  if (detail::leakage(rho.mat(), eigh(sigma.herm())) > detail::kLeakTol)
    throw std::domain_error("relative_entropy_limit_oracle: supp rho must lie in supp sigma");
  if (alphas.empty())
    for (int k = 0; k < 6; ++k) alphas.push_back(0.08 / std::pow(2.0, k));
  const StandardVector xi = natural_cone_rep(rho);
  const RelModularOp delta(sigma.herm(), rho.herm());
  std::vector<double> q;
  for (double a : alphas) {
    if (!(a > 0.0 && a < 1.0)) throw std::invalid_argument("relative_entropy_limit_oracle: alpha in (0, 1)");
    const cplx e = hs_inner(xi.mat, delta.apply(a, xi).mat);
    q.push_back((1.0 - e.real()) / a);
  }
  // Neville tableau at x = 0
  std::vector<double> p = q;
  const std::size_t n = p.size();
  for (std::size_t m = 1; m < n; ++m)
    for (std::size_t i = 0; i + m < n; ++i)
      p[i] = (alphas[i + m] * p[i] - alphas[i] * p[i + 1]) / (alphas[i + m] - alphas[i]);
  return p[0];
}

/// Sandwiched Renyi divergence (s-1)^{-1} log Tr(sigma^g rho sigma^g)^s with
/// g = (1-s)/(2s), for s in [1/2, 1).
inline DivergenceValue sandwiched_renyi(const DensityMatrix& rho, const DensityMatrix& sigma, double s) {
  if (!(s >= 0.5 && s < 1.0)) throw std::invalid_argument("sandwiched_renyi: s must lie in [1/2, 1)");
  detail::require_same_dim(rho.mat(), sigma.mat(), "sandwiched_renyi");
  DivergenceValue out;
  out.kind = DivergenceValue::Kind::renyi;
  out.order = s;
  const double g = (1.0 - s) / (2.0 * s);
  const Mat sg = psd_power(sigma.herm(), g);
  const RVec ev = eigh(Mat(sg * rho.mat() * sg)).eigenvalues;
  double q = 0.0;
  for (Eigen::Index i = 0; i < ev.size(); ++i) q += std::pow(std::max(ev(i), 0.0), s);
  if (!(q > 0.0)) {
    out.value = std::numeric_limits<double>::infinity();
    out.reason = "orthogonal supports";
    return out;
  }
  out.value = std::max(0.0, std::log(q) / (s - 1.0));
  return out;
}

/// Same quantity through the weighted norm: (s-1)^{-1} log ||rho^{1/2}||_{2s,sigma}^{2s}.
inline DivergenceValue sandwiched_renyi_lp(const DensityMatrix& rho, const DensityMatrix& sigma, double s) {
  if (!(s >= 0.5 && s < 1.0)) throw std::invalid_argument("sandwiched_renyi_lp: s must lie in [1/2, 1)");
  DivergenceValue out;
  out.kind = DivergenceValue::Kind::renyi;
  out.order = s;
  const double nrm = am_lp_norm(natural_cone_rep(rho), sigma, 2.0 * s).value;
  if (!(nrm > 0.0)) {
    out.value = std::numeric_limits<double>::infinity();
    out.reason = "orthogonal supports";
    return out;
  }
  out.value = std::max(0.0, 2.0 * s * std::log(nrm) / (s - 1.0));
  return out;
}

/// Tr |sqrt(rho) sqrt(sigma)|
inline double fidelity(const DensityMatrix& rho, const DensityMatrix& sigma) {
  detail::require_same_dim(rho.mat(), sigma.mat(), "fidelity");
  const Mat a = natural_cone_rep(rho).mat * natural_cone_rep(sigma).mat;
  return std::min(1.0, trace_norm(a));
}

/// -2 log F
inline DivergenceValue fidelity_divergence(const DensityMatrix& rho, const DensityMatrix& sigma) {
  DivergenceValue out;
  out.kind = DivergenceValue::Kind::fidelity_neg_log;
  const double f = fidelity(rho, sigma);
  if (!(f > 0.0)) {
    out.value = std::numeric_limits<double>::infinity();
    out.reason = "orthogonal supports";
    return out;
  }
  out.value = std::max(0.0, -2.0 * std::log(f));
  return out;
}

/// sup over commutant unitaries u' of |<rho^{1/2} | sigma^{1/2} u'>| for
/// qubits, by random sampling of SU(2) x U(1) followed by local refinement.
inline double fidelity_commutant_oracle(const DensityMatrix& rho, const DensityMatrix& sigma, int samples = 2000,
                                        std::uint64_t seed = 11) {
  if (rho.dim() != 2 || sigma.dim() != 2) throw DimensionError("fidelity_commutant_oracle: qubits only");
  const Mat x = natural_cone_rep(rho).mat.adjoint() * natural_cone_rep(sigma).mat;
  auto unitary = [](const Eigen::Vector3d& v) {
    // exp(i v . pauli)
    const double a = v.norm();
    Mat u = Mat::Identity(2, 2) * std::cos(a);
    if (a > 0.0) {
      Mat n(2, 2);
      n << cplx(v(2), 0), cplx(v(0), -v(1)), cplx(v(0), v(1)), cplx(-v(2), 0);
      u += cplx(0.0, std::sin(a) / a) * n;
    }
    return u;
  };
  auto objective = [&](const Eigen::Vector3d& v) { return std::abs((x * unitary(v)).trace()); };
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> ud(-kPi, kPi);
  Eigen::Vector3d best = Eigen::Vector3d::Zero();
  double best_val = objective(best);
  for (int s = 0; s < samples; ++s) {
    Eigen::Vector3d v(ud(rng), ud(rng), ud(rng));
    const double val = objective(v);
    if (val > best_val) {
      best_val = val;
      best = v;
    }
  }
  std::normal_distribution<double> nd(0.0, 1.0);
  double step = 0.3;
  int stalls = 0;
  while (step > 1e-12 && stalls < 300) {
    Eigen::Vector3d v = best + step * Eigen::Vector3d(nd(rng), nd(rng), nd(rng));
    const double val = objective(v);
    if (val > best_val) {
      best_val = val;
      best = v;
      step *= 1.5;
      stalls = 0;
    } else {
      step *= 0.85;
      ++stalls;
    }
  }
  return best_val;
}

/// sum mu log(mu / nu) with 0 log 0 = 0.
inline double kl_divergence(const std::vector<double>& mu, const std::vector<double>& nu) {
  if (mu.size() != nu.size() || mu.empty()) throw DimensionError("kl_divergence: size mismatch");
  double smu = 0.0;
  double snu = 0.0;
  for (std::size_t i = 0; i < mu.size(); ++i) {
    if (mu[i] < 0.0 || nu[i] < 0.0) throw std::invalid_argument("kl_divergence: negative probability");
    smu += mu[i];
    snu += nu[i];
  }
  if (std::abs(smu - 1.0) > 1e-10 || std::abs(snu - 1.0) > 1e-10)
    throw std::invalid_argument("kl_divergence: inputs must sum to 1");
  double acc = 0.0;
  for (std::size_t i = 0; i < mu.size(); ++i) {
    if (mu[i] == 0.0) continue;
    if (nu[i] == 0.0) return std::numeric_limits<double>::infinity();
    acc += mu[i] * std::log(mu[i] / nu[i]);
  }
  return acc;
}

/// Orthonormal (Hilbert-Schmidt) basis of traceless Hermitian d x d matrices.
inline std::vector<Mat> traceless_hermitian_basis(Eigen::Index d) {
  std::vector<Mat> basis;
  for (Eigen::Index j = 0; j < d; ++j)
    for (Eigen::Index k = j + 1; k < d; ++k) {
      Mat s = Mat::Zero(d, d);
      s(j, k) = s(k, j) = 1.0 / std::sqrt(2.0);
      basis.push_back(s);
      Mat a = Mat::Zero(d, d);
      a(j, k) = cplx(0.0, -1.0 / std::sqrt(2.0));
      a(k, j) = cplx(0.0, 1.0 / std::sqrt(2.0));
      basis.push_back(a);
    }
  for (Eigen::Index l = 1; l < d; ++l) {
    Mat z = Mat::Zero(d, d);
    const double c = 1.0 / std::sqrt(static_cast<double>(l * (l + 1)));
    for (Eigen::Index j = 0; j < l; ++j) z(j, j) = c;
    z(l, l) = -static_cast<double>(l) * c;
    basis.push_back(z);
  }
  return basis;
}

/// Tr(rho h) - log Tr(sigma e^h), evaluated with a shifted exponent.
inline double measured_objective(const DensityMatrix& rho, const DensityMatrix& sigma, const HermitianMatrix& h) {
  const auto sd = eigh(h);
  const double top = sd.eigenvalues.maxCoeff();
  const Mat e = apply_spectral(sd, [top](double x) { return cplx(std::exp(x - top), 0.0); }, false);
  const double z = (sigma.mat() * e).trace().real();
  return (rho.mat() * h.mat()).trace().real() - (top + std::log(z));
}

namespace detail {

struct MeasOptResult {
  Eigen::VectorXd x;
  double value = -std::numeric_limits<double>::infinity();
  bool converged = false;
  int iterations = 0;
};

inline Mat combine(const std::vector<Mat>& basis, const Eigen::VectorXd& x) {
  Mat h = Mat::Zero(basis.front().rows(), basis.front().cols());
  for (std::size_t k = 0; k < basis.size(); ++k) h += x(static_cast<Eigen::Index>(k)) * basis[k];
  return h;
}

/// Value and gradient of the measured objective in basis coordinates. The
/// gradient of log Tr(sigma e^h) along G is Tr(G Dexp(h)[sigma]) / Tr(sigma e^h).
inline double measured_value_grad(const DensityMatrix& rho, const DensityMatrix& sigma, const std::vector<Mat>& basis,
                                  const Eigen::VectorXd& x, Eigen::VectorXd& grad) {
  const HermitianMatrix h(combine(basis, x));
  const auto sd = eigh(h);
  const double top = sd.eigenvalues.maxCoeff();
  const Eigen::Index n = sd.dim();
  // shifted Frechet derivative: Dexp(h - top)[sigma]
  const Mat st = sd.eigenvectors.adjoint() * sigma.mat() * sd.eigenvectors;
  Mat g(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) {
      const double li = sd.eigenvalues(i) - top;
      const double lj = sd.eigenvalues(j) - top;
      const double d = li - lj;
      const double dd = std::abs(d) < 1e-300 ? std::exp(li) : std::exp(std::min(li, lj)) * std::expm1(std::abs(d)) / std::abs(d);
      g(i, j) = dd * st(i, j);
    }
  const double z = g.trace().real(); // Tr Dexp(h)[sigma] = Tr sigma e^h (shifted)
  const Mat dsig = sd.eigenvectors * g * sd.eigenvectors.adjoint();
  const Mat w = rho.mat() - dsig / z;
  grad.resize(static_cast<Eigen::Index>(basis.size()));
  for (std::size_t k = 0; k < basis.size(); ++k) grad(static_cast<Eigen::Index>(k)) = (basis[k] * w).trace().real();
  return (rho.mat() * h.mat()).trace().real() - (top + std::log(z));
}

inline MeasOptResult bfgs_ascent(const DensityMatrix& rho, const DensityMatrix& sigma, const std::vector<Mat>& basis,
                                 Eigen::VectorXd x, const MeasOptConfig& cfg) {
  const Eigen::Index m = x.size();
  Eigen::VectorXd g;
  double f;
  try {
    f = measured_value_grad(rho, sigma, basis, x, g);
  } catch (const std::exception&) {
    return {};
  }
  Eigen::MatrixXd hinv = Eigen::MatrixXd::Identity(m, m);
  MeasOptResult res;
  for (int it = 0; it < cfg.max_iters; ++it) {
    res.iterations = it;
    if (g.norm() < cfg.grad_tol) {
      res.converged = true;
      break;
    }
    Eigen::VectorXd dir = hinv * g;
    if (dir.dot(g) <= 0.0) {
      hinv.setIdentity();
      dir = g;
    }
    double step = 1.0;
    Eigen::VectorXd xn, gn;
    double fn = -std::numeric_limits<double>::infinity();
    bool accepted = false;
    for (int b = 0; b < cfg.max_backtracks; ++b) {
      xn = x + step * dir;
      try {
        fn = measured_value_grad(rho, sigma, basis, xn, gn);
      } catch (const std::exception&) {
        fn = -std::numeric_limits<double>::infinity();
      }
      if (std::isfinite(fn) && fn >= f + cfg.armijo * step * dir.dot(g)) {
        accepted = true;
        break;
      }
      step *= cfg.backtrack;
    }
    if (!accepted) {
      // no ascent possible at working precision
      res.converged = g.norm() < cfg.stall_grad_tol;
      break;
    }
    const Eigen::VectorXd s = xn - x;
    const Eigen::VectorXd y = g - gn; // gradient of the minimised function -f
    const double sy = s.dot(y);
    if (sy > 1e-300) {
      const double r = 1.0 / sy;
      const Eigen::MatrixXd id = Eigen::MatrixXd::Identity(m, m);
      hinv = (id - r * s * y.transpose()) * hinv * (id - r * y * s.transpose()) + r * s * s.transpose();
    }
    x = xn;
    g = gn;
    f = fn;
  }
  res.x = x;
  res.value = f;
  if (g.norm() < cfg.grad_tol) res.converged = true;
  return res;
}

} // namespace detail

/// Lower bound on sup_h Tr(rho h) - log Tr(sigma e^h) from quasi-Newton ascent
/// over traceless h, started at the projected log rho - log sigma and at
/// `cfg.restarts` seeded random points. The best start wins (lowest index on
/// ties); the returned value is the objective at the certificate.
inline DivergenceValue measured_relative_entropy(const DensityMatrix& rho, const DensityMatrix& sigma,
                                                 const MeasOptConfig& cfg = {}) {
  detail::require_same_dim(rho.mat(), sigma.mat(), "measured_relative_entropy");
  if (!sigma.faithful()) throw std::domain_error("measured_relative_entropy: sigma must be faithful");
  const Eigen::Index d = rho.dim();
  DivergenceValue out;
  out.kind = DivergenceValue::Kind::measured;
  if (d == 1) {
    out.value = 0.0;
    out.certificate = Mat::Zero(1, 1);
    return out;
  }
  const auto basis = traceless_hermitian_basis(d);
  const Eigen::Index m = static_cast<Eigen::Index>(basis.size());

  std::vector<Eigen::VectorXd> starts;
  {
    const auto rsd = eigh(rho.herm());
    const double floor = 1e-14 * rsd.eigenvalues.maxCoeff();
    const Mat lr = apply_spectral(rsd, [floor](double x) { return cplx(std::log(std::max(x, floor)), 0.0); }, false);
    const Mat ls = log_on_support(sigma.herm()).mat();
    const Mat h0 = lr - ls;
    Eigen::VectorXd x0(m);
    for (Eigen::Index k = 0; k < m; ++k) x0(k) = (basis[static_cast<std::size_t>(k)] * h0).trace().real();
    starts.push_back(x0);
  }
  std::mt19937_64 rng(cfg.seed);
  std::normal_distribution<double> nd(0.0, 1.0);
  for (int r = 0; r < cfg.restarts; ++r) {
    Eigen::VectorXd x(m);
    for (Eigen::Index k = 0; k < m; ++k) x(k) = nd(rng);
    starts.push_back(x);
  }

  detail::MeasOptResult best;
  int total_iters = 0;
  for (const auto& x0 : starts) {
    auto r = detail::bfgs_ascent(rho, sigma, basis, x0, cfg);
    total_iters += r.iterations;
    if (r.x.size() == m && r.value > best.value) best = r;
  }
  if (best.x.size() != m) {
    best.x = Eigen::VectorXd::Zero(m);
    best.value = 0.0;
    best.converged = false;
  }
  const HermitianMatrix h(detail::combine(basis, best.x));
  out.certificate = h.mat();
  out.value = measured_objective(rho, sigma, h);
  if (out.value < 0.0) {
    // h = 0 is always admissible
    out.value = 0.0;
    out.certificate = Mat::Zero(d, d);
  }
  out.converged = best.converged;
  out.iterations = total_iters;
  return out;
}

/// Qubit oracle: maximal KL divergence between the outcome distributions of
/// the projective measurement along a Bloch direction. Grid scan over
/// (polar, azimuth) followed by alternating golden-section refinement.
inline double measured_grid_oracle(const DensityMatrix& rho, const DensityMatrix& sigma, int grid_resolution = 60) {
  if (rho.dim() != 2 || sigma.dim() != 2) throw DimensionError("measured_grid_oracle: qubits only");
  if (grid_resolution < 4) throw std::invalid_argument("measured_grid_oracle: resolution too small");
  auto bloch = [](const Mat& r) {
    return Eigen::Vector3d(2.0 * r(0, 1).real(), -2.0 * r(0, 1).imag(), (r(0, 0) - r(1, 1)).real());
  };
  const Eigen::Vector3d br = bloch(rho.mat());
  const Eigen::Vector3d bs = bloch(sigma.mat());
  auto value = [&](double th, double ph) {
    const Eigen::Vector3d n(std::sin(th) * std::cos(ph), std::sin(th) * std::sin(ph), std::cos(th));
    const double pr = std::clamp(0.5 * (1.0 + br.dot(n)), 0.0, 1.0);
    const double ps = std::clamp(0.5 * (1.0 + bs.dot(n)), 0.0, 1.0);
    const std::vector<double> mu{pr, 1.0 - pr};
    const std::vector<double> nu{ps, 1.0 - ps};
    return kl_divergence(mu, nu);
  };
  double bt = 0.0;
  double bp = 0.0;
  double bv = value(0.0, 0.0);
  const double dth = kPi / grid_resolution;
  const double dph = 2.0 * kPi / (2 * grid_resolution);
  for (int i = 0; i <= grid_resolution; ++i)
    for (int j = 0; j < 2 * grid_resolution; ++j) {
      const double v = value(i * dth, j * dph);
      if (v > bv) {
        bv = v;
        bt = i * dth;
        bp = j * dph;
      }
    }
  auto golden = [](auto&& f, double a, double b) {
    const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
    double c = b - gr * (b - a);
    double d = a + gr * (b - a);
    double fc = f(c);
    double fd = f(d);
    for (int k = 0; k < 200 && (b - a) > 1e-13; ++k) {
      if (fc > fd) {
        b = d;
        d = c;
        fd = fc;
        c = b - gr * (b - a);
        fc = f(c);
      } else {
        a = c;
        c = d;
        fc = fd;
        d = a + gr * (b - a);
        fd = f(d);
      }
    }
    return 0.5 * (a + b);
  };
  double wt = dth;
  double wp = dph;
  for (int sweep = 0; sweep < 40; ++sweep) {
    const double nt = golden([&](double t) { return value(t, bp); }, bt - wt, bt + wt);
    const double vt = value(nt, bp);
    if (vt > bv) {
      bv = vt;
      bt = nt;
    }
    const double np = golden([&](double p) { return value(bt, p); }, bp - wp, bp + wp);
    const double vp = value(bt, np);
    if (vp > bv) {
      bv = vp;
      bp = np;
    }
    wt *= 0.7;
    wp *= 0.7;
  }
  return bv;
}

/// Tr(rho h) - log Tr exp(log sigma + h)
inline double relative_entropy_variational_objective(const DensityMatrix& rho, const DensityMatrix& sigma,
                                                     const HermitianMatrix& h) {
  const HermitianMatrix a(Mat(log_on_support(sigma.herm()).mat() + h.mat()));
  const auto sd = eigh(a);
  const double top = sd.eigenvalues.maxCoeff();
  double z = 0.0;
  for (Eigen::Index i = 0; i < sd.dim(); ++i) z += std::exp(sd.eigenvalues(i) - top);
  return (rho.mat() * h.mat()).trace().real() - (top + std::log(z));
}

/// Every sampled h stays below S(rho|sigma) and the informed
/// h = log rho - log sigma attains it. lhs = S, rhs = best sampled objective.
inline CheckReport relative_entropy_variational_check(const DensityMatrix& rho, const DensityMatrix& sigma,
                                                      const std::vector<HermitianMatrix>& h_samples,
                                                      double tol = 1e-9, double attain_tol = 1e-5) {
  if (!sigma.faithful()) throw std::domain_error("relative_entropy_variational_check: sigma must be faithful");
  const double s = relative_entropy(rho, sigma).value;
  double best = relative_entropy_variational_objective(rho, sigma, HermitianMatrix(Mat::Zero(rho.dim(), rho.dim())));
  for (const auto& h : h_samples) best = std::max(best, relative_entropy_variational_objective(rho, sigma, h));
  CheckReport r = make_report("entropy_variational", s, best, tol);
  if (rho.faithful()) {
    const HermitianMatrix hi(Mat(log_on_support(rho.herm()).mat() - log_on_support(sigma.herm()).mat()));
    const double att = relative_entropy_variational_objective(rho, sigma, hi);
    r.rhs = std::max(r.rhs, att);
    r.gap = r.lhs - r.rhs;
    r.pass = r.gap >= -tol;
    r.note = "informed_gap=" + std::to_string(s - att);
    if (std::abs(s - att) > attain_tol) {
      r.pass = false;
      r.reason = "informed start does not attain S";
    }
  }
  return r;
}

} // namespace petzlab
