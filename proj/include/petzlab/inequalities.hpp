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
#include "petzlab/divergences.hpp"
#include "petzlab/quadrature.hpp"
#include "petzlab/report.hpp"

#include <sstream>
#include <vector>

namespace petzlab {

namespace detail {

inline std::string fmt(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

inline void fail(CheckReport& r, const std::string& why) {
  r.pass = false;
  r.reason = r.reason.empty() ? why : r.reason + "; " + why;
}

inline void add_note(CheckReport& r, const std::string& s) { r.note = r.note.empty() ? s : r.note + " " + s; }

/// S(rho|sigma) - S(T rho|T sigma); +inf when the first term is infinite.
inline double entropy_drop(const DensityMatrix& rho, const DensityMatrix& sigma, const KrausChannel& t) {
  const double sa = relative_entropy(rho, sigma).value;
  if (std::isinf(sa)) return sa;
  const double sb = relative_entropy(apply_schrodinger(t, rho), apply_schrodinger(t, sigma)).value;
  return sa - sb;
}

/// Sandwiched Renyi divergence against a fixed second argument.
class RenyiAgainst {
public:
  RenyiAgainst(const DensityMatrix& sigma, double s) : s_(s) {
    sg_ = psd_power(sigma.herm(), (1.0 - s) / (2.0 * s));
  }
  double operator()(const Mat& rho) const {
    const RVec ev = eigh(Mat(sg_ * rho * sg_)).eigenvalues;
    double q = 0.0;
    for (Eigen::Index i = 0; i < ev.size(); ++i) q += std::pow(std::max(ev(i), 0.0), s_);
    if (!(q > 0.0)) return std::numeric_limits<double>::infinity();
    return std::max(0.0, std::log(q) / (s_ - 1.0));
  }

private:
  double s_;
  Mat sg_;
};

} // namespace detail

enum class SmeasOrder {
  forward,  ///< S_meas(rho | recovered)
  reversed ///< S_meas(recovered | rho)
};

inline const char* to_string(SmeasOrder o) { return o == SmeasOrder::forward ? "forward" : "reversed"; }

// ---------------------------------------------------------------------------
// Data processing and its improvements

inline CheckReport check_dpi(const DensityMatrix& rho, const DensityMatrix& sigma, const KrausChannel& t,
                             double tol = 1e-8) {
  return make_report("dpi", detail::entropy_drop(rho, sigma, t), 0.0, tol);
}

/// The recovered state alpha(T rho) for the beta_0-integrated rotated Petz map.
inline DensityMatrix recovered_state(const PetzContext& ctx, const DensityMatrix& rho, const QuadratureRule& rule) {
  const Mat rb = ctx.channel().schrodinger(rho.mat());
  return DensityMatrix::normalized(HermitianMatrix(integrated_recovery(ctx, rule).apply(rb)).mat());
}

struct ImprovedDpiOptions {
  SmeasOrder order = SmeasOrder::forward;
  double tol = 1e-6;
  bool grid_cross_check = false; ///< qubits only: compare the optimizer with the grid oracle
  double grid_tol = 1e-4;
  int grid_resolution = 60;
  MeasOptConfig opt;
};

/// S(rho|sigma) - S(T rho|T sigma) >= S_meas between rho and the recovered
/// state, rhs taken from the optimizer certificate (a lower bound).
inline CheckReport check_improved_dpi(const DensityMatrix& rho, const DensityMatrix& sigma, const KrausChannel& t,
                                      const QuadratureRule& rule, const ImprovedDpiOptions& opt = {}) {
  const std::string suite = opt.order == SmeasOrder::forward ? "improved_dpi" : "improved_dpi_reversed";
  const double lhs = detail::entropy_drop(rho, sigma, t);
  if (std::isinf(lhs)) return make_report(suite, lhs, 0.0, opt.tol);
  const PetzContext ctx(t, sigma);
  const DensityMatrix rec = recovered_state(ctx, rho, rule);
  const DensityMatrix& first = opt.order == SmeasOrder::forward ? rho : rec;
  const DensityMatrix& second = opt.order == SmeasOrder::forward ? rec : rho;
  if (!second.faithful()) {
    CheckReport r = make_report(suite, lhs, 0.0, opt.tol);
    detail::fail(r, "second argument of S_meas is singular");
    return r;
  }
  const DivergenceValue sm = measured_relative_entropy(first, second, opt.opt);
  CheckReport r = make_report(suite, lhs, sm.value, opt.tol);
  if (!sm.converged) detail::add_note(r, "optimizer_not_converged");
  if (opt.grid_cross_check && rho.dim() == 2) {
    const double g = measured_grid_oracle(first, second, opt.grid_resolution);
    detail::add_note(r, "grid=" + detail::fmt(g));
    if (std::abs(g - sm.value) > opt.grid_tol) detail::fail(r, "optimizer disagrees with grid oracle");
  }
  return r;
}

/// Commutative instance: diagonal p, q and a column-stochastic matrix. Reports
/// 0 >= |drop - S_meas(p | recovered)|.
inline CheckReport check_commutative_saturation(const std::vector<double>& p, const std::vector<double>& q,
                                                const Eigen::MatrixXd& stochastic, const QuadratureRule& rule,
                                                double tol = 1e-6) {
  RVec pv(static_cast<Eigen::Index>(p.size())), qv(static_cast<Eigen::Index>(q.size()));
  for (std::size_t i = 0; i < p.size(); ++i) {
    pv(static_cast<Eigen::Index>(i)) = p[i];
    qv(static_cast<Eigen::Index>(i)) = q[i];
  }
  const DensityMatrix rho(HermitianMatrix::diagonal(pv).mat());
  const DensityMatrix sigma(HermitianMatrix::diagonal(qv).mat());
  const KrausChannel t = KrausChannel::from_stochastic(stochastic);
  ImprovedDpiOptions opt;
  opt.tol = tol;
  const CheckReport inner = check_improved_dpi(rho, sigma, t, rule, opt);
  CheckReport r = make_equality_report("saturation", inner.lhs, inner.rhs, tol);
  detail::add_note(r, "drop=" + detail::fmt(inner.lhs) + " smeas=" + detail::fmt(inner.rhs));
  if (!inner.pass) detail::fail(r, "improved DPI itself fails: " + inner.reason);
  return r;
}

/// drop >= -log F(recovered, rho)^2, together with S_meas >= -log F^2.
inline CheckReport check_fidelity_bound(const DensityMatrix& rho, const DensityMatrix& sigma, const KrausChannel& t,
                                        const QuadratureRule& rule, double tol = 1e-6,
                                        const MeasOptConfig& cfg = {}) {
  const double lhs = detail::entropy_drop(rho, sigma, t);
  if (std::isinf(lhs)) return make_report("fidelity_bound", lhs, 0.0, tol);
  const PetzContext ctx(t, sigma);
  const DensityMatrix rec = recovered_state(ctx, rho, rule);
  const double fb = fidelity_divergence(rec, rho).value;
  CheckReport r = make_report("fidelity_bound", lhs, fb, tol);
  if (rec.faithful()) {
    const double sm = measured_relative_entropy(rho, rec, cfg).value;
    detail::add_note(r, "smeas=" + detail::fmt(sm));
    if (sm < fb - tol) detail::fail(r, "measured bound below fidelity bound");
  }
  return r;
}

/// drop >= (1-s)/s sum_k w_k D_s(alpha^{t_k}(T rho) | rho). Also checks the
/// channel-inside bound and that the integral dominates it (convexity).
inline CheckReport check_renyi_integral_bound(const DensityMatrix& rho, const DensityMatrix& sigma,
                                              const KrausChannel& t, double s, const QuadratureRule& rule,
                                              double tol = 1e-6, double jensen_tol = 1e-8) {
  if (!(s >= 0.5 && s < 1.0)) throw std::invalid_argument("check_renyi_integral_bound: s in [1/2, 1)");
  const double lhs = detail::entropy_drop(rho, sigma, t);
  if (std::isinf(lhs)) return make_report("renyi", lhs, 0.0, tol);
  const PetzContext ctx(t, sigma);
  const Mat rb = t.schrodinger(rho.mat());
  const detail::RenyiAgainst ds(rho, s);
  double integral = 0.0;
  for (std::size_t k = 0; k < rule.size(); ++k) {
    const double v = ds(ctx.rotated_apply(rule.nodes[k], rb));
    if (std::isinf(v)) {
      CheckReport r = make_report("renyi", lhs, v, tol);
      detail::fail(r, "D_s infinite at a rotated recovery");
      return r;
    }
    integral += rule.weights[k] * v;
  }
  const double pre = (1.0 - s) / s;
  const double inside = ds(integrated_recovery(ctx, rule).apply(rb));
  CheckReport r = make_report("renyi", lhs, pre * integral, tol);
  detail::add_note(r, "s=" + detail::fmt(s) + " channel_inside=" + detail::fmt(pre * inside));
  if (lhs < pre * inside - tol) detail::fail(r, "channel-inside bound violated");
  if (integral < inside - jensen_tol) detail::fail(r, "integral below channel-inside value");
  return r;
}

/// drop >= (1-s)/s D_s(alpha(T rho) | rho)
inline CheckReport check_renyi_channel_bound(const DensityMatrix& rho, const DensityMatrix& sigma,
                                             const KrausChannel& t, double s, const QuadratureRule& rule,
                                             double tol = 1e-6) {
  const double lhs = detail::entropy_drop(rho, sigma, t);
  if (std::isinf(lhs)) return make_report("renyi_channel", lhs, 0.0, tol);
  const PetzContext ctx(t, sigma);
  const double v = sandwiched_renyi(recovered_state(ctx, rho, rule), rho, s).value;
  return make_report("renyi_channel", lhs, (1.0 - s) / s * v, tol);
}

/// S(rho|sigma) >= S_meas(rho|sigma) >= -2 log F; the report carries the worse link.
inline CheckReport check_dominance_chain(const DensityMatrix& rho, const DensityMatrix& sigma, double tol = 1e-6,
                                         const MeasOptConfig& cfg = {}) {
  const double s = relative_entropy(rho, sigma).value;
  const double sm = measured_relative_entropy(rho, sigma, cfg).value;
  const double f = fidelity_divergence(rho, sigma).value;
  CheckReport a = make_report("chain", s, sm, tol);
  const CheckReport b = make_report("chain", sm, f, tol);
  if (b.gap < a.gap) a = b;
  a.pass = (s - sm >= -tol) && (sm - f >= -tol);
  a.note = "S=" + detail::fmt(s) + " Smeas=" + detail::fmt(sm) + " F2=" + detail::fmt(f);
  return a;
}

/// ||alpha(T sigma) - sigma||_1 <= tol
inline CheckReport check_reference_recovery(const KrausChannel& t, const DensityMatrix& sigma,
                                            const QuadratureRule& rule, double tol = 1e-8) {
  const PetzContext ctx(t, sigma);
  const Mat out = integrated_recovery(ctx, rule).apply(t.schrodinger(sigma.mat()));
  return make_report("recovery", 0.0, trace_norm(Mat(out - sigma.mat())), tol);
}

// ---------------------------------------------------------------------------
// Contraction and strip bounds

inline CheckReport check_v_contraction(const KrausChannel& t, const DensityMatrix& rho, double tol = 1e-10) {
  return make_report("vnorm", 1.0, v_contraction_norm(t, rho), tol);
}

/// sup of ||Gamma(z)|| over an n x n grid of the strip, Im z in [-t_max, t_max].
inline CheckReport check_gamma_strip(const KrausChannel& t, const DensityMatrix& rho, const DensityMatrix& sigma,
                                     int n = 20, double t_max = 3.0, double tol = 1e-9) {
  double worst = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const double re = 0.5 * i / (n - 1);
      const double im = -t_max + 2.0 * t_max * j / (n - 1);
      worst = std::max(worst, gamma_vector(t, rho, sigma, cplx(re, im)).norm());
    }
  return make_report("gamma_strip", 1.0, worst, tol);
}

/// <Gamma(1/2+it)| a Gamma(1/2+it)> <= Tr(a alpha^{-t}(T rho)) for PSD a. The
/// same quantity with alpha^{+t} is reported in the note.
inline CheckReport check_gamma_petz_bound(const KrausChannel& t, const DensityMatrix& rho, const DensityMatrix& sigma,
                                          const Mat& a, double time, double tol = 1e-8) {
  const PetzContext ctx(t, sigma);
  const Mat g = gamma_vector(t, rho, sigma, cplx(0.5, time)).mat;
  const double lhs_val = (g.adjoint() * a * g).trace().real();
  const Mat rb = t.schrodinger(rho.mat());
  const double bound = (a * ctx.rotated_apply(-time, rb)).trace().real();
  const double bound_plus = (a * ctx.rotated_apply(time, rb)).trace().real();
  CheckReport r = make_report("gamma_bound", bound, lhs_val, tol);
  detail::add_note(r, "plus_t_gap=" + detail::fmt(bound_plus - lhs_val));
  return r;
}

/// <b eta_B | J Delta^{it} alpha^t(a) eta_B> = <T(b) eta_A | J Delta^{it} a eta_A>
inline CheckReport check_petz_definition(const KrausChannel& t, const DensityMatrix& sigma, const Mat& a, const Mat& b,
                                         double time, double tol = 1e-8) {
  const PetzContext ctx(t, sigma);
  const RecoveryChannel rot = rotated_petz(ctx, time);
  const HermitianMatrix sa = sigma.herm();
  const HermitianMatrix sb(t.schrodinger(sigma.mat()));
  const Mat eta_a = natural_cone_rep(sa).mat;
  const Mat eta_b = natural_cone_rep(sb).mat;
  const cplx it(0.0, time);
  const StandardVector lv =
      modular_conjugation(RelModularOp(sb, sb).apply(it, StandardVector(Mat(rot.dual(a) * eta_b))));
  const StandardVector rv = modular_conjugation(RelModularOp(sa, sa).apply(it, StandardVector(Mat(a * eta_a))));
  const cplx lhs = hs_inner(Mat(b * eta_b), lv.mat);
  const cplx rhs = hs_inner(Mat(t.heisenberg(b) * eta_a), rv.mat);
  return make_report("petz_duality", 0.0, std::abs(lhs - rhs), tol);
}

/// S_A - S_B >= sup_h {Tr(rho h) - log Tr exp(log sigma + h + k)} over samples;
/// the informed h = log rho - log sigma - k must attain it.
inline CheckReport check_entropy_difference_identity(const DensityMatrix& rho, const DensityMatrix& sigma,
                                                     const KrausChannel& t,
                                                     const std::vector<HermitianMatrix>& h_samples,
                                                     double tol = 1e-6, double attain_tol = 1e-5) {
  const HermitianMatrix k = cocycle_generator(t, rho, sigma);
  const double lhs = detail::entropy_drop(rho, sigma, t);
  const double rho_k = (rho.mat() * k.mat()).trace().real();
  auto objective = [&](const Mat& h) {
    return relative_entropy_variational_objective(rho, sigma, HermitianMatrix(Mat(h + k.mat()))) - rho_k;
  };
  const Eigen::Index d = rho.dim();
  double best = objective(Mat::Zero(d, d));
  for (const auto& h : h_samples) best = std::max(best, objective(h.mat()));
  Mat hi = log_on_support(rho.herm()).mat() - log_on_support(sigma.herm()).mat() - k.mat();
  hi -= (hi.trace() / static_cast<double>(d)) * Mat::Identity(d, d);
  const double att = objective(hi);
  best = std::max(best, att);
  CheckReport r = make_report("entropy_identity", lhs, best, tol);
  detail::add_note(r, "informed_gap=" + detail::fmt(lhs - att) + " rho_k=" + detail::fmt(rho_k));
  if (std::abs(lhs - att) > attain_tol) detail::fail(r, "informed h does not attain the entropy difference");
  return r;
}

// ---------------------------------------------------------------------------
// Interpolation

/// Scalar functions holomorphic on the strip, built constructively.
struct ScalarFamily {
  enum class Kind { constant, exponential, matrix_element };
  Kind kind = Kind::constant;
  cplx c = 1.0;
  Mat a;   ///< PSD matrix for matrix_element
  CVec phi;
  CVec chi;

  static ScalarFamily constant(cplx v) { return {Kind::constant, v, {}, {}, {}}; }
  static ScalarFamily exponential(cplx v) { return {Kind::exponential, v, {}, {}, {}}; }
  static ScalarFamily matrix_element(Mat a, CVec phi, CVec chi) {
    return {Kind::matrix_element, 1.0, std::move(a), std::move(phi), std::move(chi)};
  }

  cplx operator()(cplx z) const {
    switch (kind) {
    case Kind::constant: return c;
    case Kind::exponential: return std::exp(c * z);
    case Kind::matrix_element: return phi.dot(psd_power(HermitianMatrix(a), z) * chi);
    }
    return 0.0;
  }
};

/// ln|g(theta)| <= int beta_theta ln|g(1/2+it)|^{2 theta} + alpha_theta ln|g(it)|^{1-2 theta}.
/// Boundary integrals start at n_nodes per panel and are refined by doubling.
inline CheckReport check_hirschman(const ScalarFamily& g, double theta, int n_nodes = kDefaultNodesPerPanel,
                                   double t_max = kDefaultTMax, double tol = 1e-7) {
  if (!(theta > 0.0 && theta < 0.5)) throw std::invalid_argument("check_hirschman: theta in (0, 1/2)");
  const double lower = integrate_refined(
      WeightDensity::alpha(theta), [&](double t) { return std::log(std::abs(g(cplx(0.0, t)))); }, n_nodes, t_max);
  const double upper = integrate_refined(
      WeightDensity::beta(theta), [&](double t) { return std::log(std::abs(g(cplx(0.5, t)))); }, n_nodes, t_max);
  const double rhs_bound = (1.0 - 2.0 * theta) * lower + 2.0 * theta * upper;
  return make_report("hirschman", rhs_bound, std::log(std::abs(g(cplx(theta, 0.0)))), tol);
}

/// z -> X_1^z ... X_m^z zeta with PSD X_i.
struct PowerFamily {
  std::vector<HermitianMatrix> factors;
  Mat zeta;

  Mat operator()(cplx z) const {
    Mat out = zeta;
    for (auto it = factors.rbegin(); it != factors.rend(); ++it) out = psd_power(*it, z) * out;
    return out;
  }
};

inline bool valid_index_pair(double p0, double p1) {
  const bool low = p0 >= 1.0 && p0 <= 2.0 && p1 >= 1.0 && p1 <= 2.0;
  const bool high = p0 >= 2.0 && p1 >= 2.0;
  return low || high;
}

/// ln ||G(theta)||_{p_theta} <= int (1-2 theta) alpha_theta ln||G(it)||_{p0}
///                                 + 2 theta beta_theta ln||G(1/2+it)||_{p1}
inline CheckReport check_lp_interpolation(const PowerFamily& g, const DensityMatrix& psi, double p0, double p1,
                                          double theta, int n_nodes = kDefaultNodesPerPanel,
                                          double t_max = kDefaultTMax, double tol = 1e-6) {
  if (!valid_index_pair(p0, p1)) throw std::invalid_argument("check_lp_interpolation: invalid index pairing");
  if (!(theta > 0.0 && theta < 0.5)) throw std::invalid_argument("check_lp_interpolation: theta in (0, 1/2)");
  if (!psi.faithful()) throw std::domain_error("check_lp_interpolation: psi must be faithful");
  const double inv_pt = (1.0 - 2.0 * theta) / p0 + 2.0 * theta / p1;
  const double pt = 1.0 / inv_pt;
  const auto wsd = eigh(psi.herm());
  auto lognorm = [&](cplx z, double p) { return std::log(am_lp_norm_value(g(z), wsd, p)); };
  const double lower = integrate_refined(
      WeightDensity::alpha(theta), [&](double t) { return lognorm(cplx(0.0, t), p0); }, n_nodes, t_max, 1e-10);
  const double upper = integrate_refined(
      WeightDensity::beta(theta), [&](double t) { return lognorm(cplx(0.5, t), p1); }, n_nodes, t_max, 1e-10);
  const double bound = (1.0 - 2.0 * theta) * lower + 2.0 * theta * upper;
  CheckReport r = make_report("lp_interp", bound, lognorm(cplx(theta, 0.0), pt), tol);
  detail::add_note(r, "p0=" + detail::fmt(p0) + " p1=" + detail::fmt(p1) + " theta=" + detail::fmt(theta));
  return r;
}

// ---------------------------------------------------------------------------
// Multi-trace inequalities

inline Mat product_of_powers(const std::vector<HermitianMatrix>& as, cplx z) {
  Mat out = Mat::Identity(as.front().dim(), as.front().dim());
  for (const auto& a : as) out = out * psd_power(a, z);
  return out;
}

inline double schatten_norm(const Mat& x, double p) {
  Eigen::JacobiSVD<Mat> svd(x);
  const RVec sv = svd.singularValues();
  if (std::isinf(p)) return sv(0);
  double acc = 0.0;
  for (Eigen::Index i = 0; i < sv.size(); ++i) acc += std::pow(sv(i), p);
  return std::pow(acc, 1.0 / p);
}

/// (1/r) log||a_1^r...a_n^r psi||_{p/r} <= int beta_{r/2} log||a_1^{1+ist}...a_n^{1+ist} psi||_p
/// with s = time_scale. Interpolating G(z) = a_1^{2z}...a_n^{2z} psi gives s = 2;
/// s = 1 fails for some non-tracial psi.
inline CheckReport check_multi_power(const std::vector<HermitianMatrix>& as, const DensityMatrix& psi, double r,
                                     double p, const QuadratureRule& rule, double tol = 1e-6,
                                     double time_scale = 1.0) {
  if (as.empty()) throw std::invalid_argument("check_multi_power: empty factor list");
  if (!(r > 0.0 && r <= 1.0) || !(p >= 2.0)) throw std::invalid_argument("check_multi_power: need r in (0,1], p >= 2");
  if (!psi.faithful()) throw std::domain_error("check_multi_power: psi must be faithful");
  const auto wsd = eigh(psi.herm());
  const Mat x = natural_cone_rep(psi).mat;
  const double lhs_small = std::log(am_lp_norm_value(Mat(product_of_powers(as, r) * x), wsd, p / r)) / r;
  const double bound = rule.integrate([&](double t) {
    return std::log(am_lp_norm_value(Mat(product_of_powers(as, cplx(1.0, time_scale * t)) * x), wsd, p));
  });
  return make_report("multi_power", bound, lhs_small, tol);
}

/// Tracial form: (1/p) log Tr|prod a^r|^{p/r} <= int beta_{r/2} (1/p) log Tr|prod a^{1+ist}|^p.
/// Returns {bound side, small side}.
inline std::pair<double, double> multi_power_trace_form(const std::vector<HermitianMatrix>& as, double r,
                                                        double p, const QuadratureRule& rule,
                                                        double time_scale = 1.0) {
  const double small = std::log(std::pow(schatten_norm(product_of_powers(as, r), p / r), p / r)) / p;
  const double bound = rule.integrate([&](double t) {
    return std::log(std::pow(schatten_norm(product_of_powers(as, cplx(1.0, time_scale * t)), p), p)) / p;
  });
  return {bound, small};
}

/// ||zeta||_{r,psi}^2 <= ||Delta_{zeta,psi}^{r/4} psi||^{4/r}, psi the natural-cone vector.
inline CheckReport check_alt(const StandardVector& zeta, const DensityMatrix& psi, double r, double tol = 1e-8) {
  if (!(r >= 2.0)) throw std::invalid_argument("check_alt: r must be >= 2");
  const StandardVector xi = natural_cone_rep(psi);
  const double big = std::pow(rel_modular_apply(zeta, xi, r / 4.0, xi).norm(), 4.0 / r);
  const double small = std::pow(am_lp_norm(zeta, psi, r).value, 2.0);
  CheckReport rep = make_report("alt", big, small, tol);
  // closed form [Tr(w^{(2-r)/4} w_zeta^{r/2} w^{(2-r)/4})]^{2/r}
  const Mat wp = psd_power(psi.herm(), (2.0 - r) / 4.0);
  const double cf = std::pow((wp * psd_power(functional_of(zeta), r / 2.0) * wp).trace().real(), 2.0 / r);
  detail::add_note(rep, "closed_form_diff=" + detail::fmt(cf - big));
  return rep;
}

/// log||psi^{h_1+...+h_k}||^2 <= int beta_0 log(||prod e^{(1/2+it)h_j} psi|| ||prod_rev e^{(1/2-it)h_j} psi||)
inline CheckReport check_exp_product(const std::vector<HermitianMatrix>& hs, const DensityMatrix& psi,
                                     const QuadratureRule& rule, double tol = 1e-6) {
  if (hs.empty()) throw std::invalid_argument("check_exp_product: empty list");
  if (!psi.faithful()) throw std::domain_error("check_exp_product: psi must be strictly positive");
  const StandardVector x = natural_cone_rep(psi);
  Mat sum = Mat::Zero(psi.dim(), psi.dim());
  for (const auto& h : hs) sum += h.mat();
  const double small = 2.0 * std::log(perturbed_vector(x, HermitianMatrix(sum)).norm());
  std::vector<SpectralDecomposition> sds;
  for (const auto& h : hs) sds.push_back(eigh(h));
  const double bound = rule.integrate([&](double t) {
    Mat fwd = x.mat;
    Mat rev = x.mat;
    for (std::size_t j = sds.size(); j-- > 0;) fwd = expm(sds[j], cplx(0.5, t)) * fwd;
    for (std::size_t j = 0; j < sds.size(); ++j) rev = expm(sds[j], cplx(0.5, -t)) * rev;
    return std::log(fwd.norm() * rev.norm());
  });
  return make_report("exp_product", bound, small, tol);
}

/// Tracial form: log Tr e^{sum h} <= int beta_0 log Tr|e^{(1/2+it)h_1}...e^{(1/2+it)h_k}|^2.
inline std::pair<double, double> exp_product_trace_form(const std::vector<HermitianMatrix>& hs,
                                                        const QuadratureRule& rule) {
  Mat sum = Mat::Zero(hs.front().dim(), hs.front().dim());
  for (const auto& h : hs) sum += h.mat();
  const double small = std::log(expm(HermitianMatrix(sum)).mat().trace().real());
  std::vector<SpectralDecomposition> sds;
  for (const auto& h : hs) sds.push_back(eigh(h));
  const double bound = rule.integrate([&](double t) {
    Mat y = Mat::Identity(hs.front().dim(), hs.front().dim());
    for (const auto& sd : sds) y = y * expm(sd, cplx(0.5, t));
    return std::log(y.squaredNorm());
  });
  return {bound, small};
}

/// Product formula: (sigma^{1/(2n)} e^{h/n} sigma^{1/(2n)}) applied n/2 times
/// through Delta_{sigma,rho}^{1/(2n)} l(e^{h/n}) Delta_{sigma,rho}^{1/(2n)} to
/// rho^{1/2} approaches exp((log sigma + h)/2). Reports the deviation at the
/// last n; deviations must not grow along the sequence.
inline CheckReport check_trotter_limit(const DensityMatrix& rho, const DensityMatrix& sigma, const HermitianMatrix& h,
                                       const std::vector<int>& n_sequence, double tol = 1e-4) {
  if (rho.dim() > 4) throw DimensionError("check_trotter_limit: dimension must be <= 4");
  if (!rho.faithful() || !sigma.faithful()) throw std::domain_error("check_trotter_limit: faithful states required");
  const StandardVector target = perturbed_vector(natural_cone_rep(sigma), h);
  const RelModularOp delta(sigma.herm(), rho.herm());
  const auto hsd = eigh(h);
  double prev = std::numeric_limits<double>::infinity();
  double last = 0.0;
  bool monotone = true;
  std::string trace;
  for (int n : n_sequence) {
    if (n < 2 || n % 2 != 0) throw std::invalid_argument("check_trotter_limit: n must be even and >= 2");
    const Mat eh = expm(hsd, cplx(1.0 / n, 0.0));
    const cplx step(0.5 / n, 0.0);
    StandardVector v = natural_cone_rep(rho);
    for (int k = 0; k < n / 2; ++k) {
      v = delta.apply(step, v);
      v = StandardVector(Mat(eh * v.mat));
      v = delta.apply(step, v);
    }
    const double dev = (v.mat - target.mat).norm() / target.norm();
    if (dev > prev * (1.0 + 1e-9) + 1e-13) monotone = false;
    prev = dev;
    last = dev;
    trace += (trace.empty() ? "" : ",") + detail::fmt(dev);
  }
  CheckReport r = make_report("trotter", 0.0, last, tol);
  detail::add_note(r, "deviations=" + trace);
  if (!monotone) detail::fail(r, "deviation grows along the sequence");
  return r;
}

} // namespace petzlab
