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

#include "petzlab/harness/random.hpp"
#include "petzlab/harness/serialize.hpp"
#include "petzlab/inequalities.hpp"

#include <functional>
#include <string>
#include <vector>

namespace petzlab::harness {

/// Shared, read-only data for every trial of a campaign.
struct SuiteEnv {
  int n_nodes = kDefaultNodesPerPanel;
  double t_max = kDefaultTMax;
  QuadratureRule beta0;

  SuiteEnv() : SuiteEnv(kDefaultNodesPerPanel, kDefaultTMax) {}
  SuiteEnv(int nodes, double tmax) : n_nodes(nodes), t_max(tmax), beta0(beta_quadrature(0.0, nodes, tmax)) {}

  QuadratureRule beta(double theta) const { return theta == 0.0 ? beta0 : beta_quadrature(theta, n_nodes, t_max); }
};

struct TrialSpec {
  int dim = 2;
  std::uint64_t seed = 0;
  double tol = 0.0;
};

struct TrialOutcome {
  CheckReport report;
  json instance; ///< generated inputs, enough to inspect the case by hand
};

struct Suite {
  std::string name;
  std::string description;
  std::string generator; ///< faithful-pair | majorized-pair | commuting-pair | classical-channel | random-channel
  std::vector<int> default_dims;
  int min_dim = 2;
  int max_dim = 8;
  int default_trials = 100;
  double default_tol = 1e-6;
  std::function<TrialOutcome(const TrialSpec&, const SuiteEnv&)> run;
};

namespace detail {

/// Worst report of a set; passes only if all pass.
inline CheckReport fold(const std::string& suite, const std::vector<CheckReport>& rs) {
  CheckReport out = rs.front();
  bool pass = true;
  bool vacuous = true;
  std::string notes;
  for (const auto& r : rs) {
    pass = pass && r.pass;
    vacuous = vacuous && r.vacuous;
    if (!r.pass && out.pass) out = r;
    else if (r.pass == out.pass && r.gap < out.gap) out = r;
    if (!r.note.empty()) notes += (notes.empty() ? "" : " | ") + r.note;
  }
  out.suite = suite;
  out.pass = pass;
  out.vacuous = vacuous;
  out.note = notes;
  return out;
}

inline json states_json(const DensityMatrix& rho, const DensityMatrix& sigma) {
  return {{"rho", matrix_to_json(rho.mat())}, {"sigma", matrix_to_json(sigma.mat())}};
}

inline double uniform(Rng& rng, double a, double b) { return std::uniform_real_distribution<double>(a, b)(rng); }

inline int pick(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

/// Faithful pair plus random channel d -> d.
struct ChannelInstance {
  DensityMatrix rho, sigma;
  KrausChannel t;
  json to_json() const {
    json j = states_json(rho, sigma);
    j["channel"] = channel_to_json(t);
    return j;
  }
};

inline ChannelInstance channel_instance(int d, Rng& rng) {
  DensityMatrix rho = random_density(d, rng);
  DensityMatrix sigma = random_density(d, rng);
  KrausChannel t = random_channel(d, d, rng);
  return {std::move(rho), std::move(sigma), std::move(t)};
}

inline ChannelInstance majorized_channel_instance(int d, Rng& rng) {
  auto [rho, sigma] = majorized_pair(d, rng, 2.0);
  KrausChannel t = random_channel(d, d, rng);
  return {std::move(rho), std::move(sigma), std::move(t)};
}

inline json hermitian_list_json(const std::vector<HermitianMatrix>& hs) {
  json a = json::array();
  for (const auto& h : hs) a.push_back(matrix_to_json(h.mat()));
  return a;
}

inline json probs_json(const std::vector<double>& p) { return json(p); }

inline TrialOutcome saturation_trial(const TrialSpec& s, const SuiteEnv& env, bool deterministic) {
  Rng rng(s.seed);
  const int d_out = s.dim;
  const int d_in = deterministic ? s.dim + 1 : s.dim;
  const auto p = random_probability(d_in, rng);
  const auto q = random_probability(d_in, rng);
  const Eigen::MatrixXd m =
      deterministic ? random_deterministic_stochastic(d_in, d_out, rng) : random_stochastic(d_in, d_out, rng);
  json inst{{"p", p}, {"q", q}, {"stochastic", matrix_to_json(m.cast<cplx>())}};
  return {check_commutative_saturation(p, q, m, env.beta0, s.tol), inst};
}

struct MultiPowerInstance {
  std::vector<HermitianMatrix> a;
  double r = 1.0;
  double p = 2.0;
};

inline MultiPowerInstance multi_power_instance(int d, Rng& rng) {
  MultiPowerInstance in;
  const int n = pick(rng, 1, 4);
  for (int i = 0; i < n; ++i) in.a.push_back(random_positive(d, rng));
  in.r = 0.25 * pick(rng, 1, 4);
  in.p = 2.0 + pick(rng, 0, 2);
  return in;
}

inline TrialOutcome multi_power_trial(const TrialSpec& s, const SuiteEnv& env, double time_scale) {
  Rng rng(s.seed);
  const MultiPowerInstance in = multi_power_instance(s.dim, rng);
  const DensityMatrix psi = random_density(s.dim, rng);
  json inst{{"a", hermitian_list_json(in.a)}, {"psi", matrix_to_json(psi.mat())}, {"r", in.r}, {"p", in.p}};
  return {check_multi_power(in.a, psi, in.r, in.p, env.beta(in.r / 2.0), s.tol, time_scale), inst};
}

} // namespace detail

inline std::vector<Suite> make_suites() {
  using namespace detail;
  std::vector<Suite> v;

  v.push_back({"dpi", "S(rho|sigma) - S(T rho|T sigma) >= 0", "random-channel", {2, 3, 4}, 2, 8, 1000, 1e-8,
               [](const TrialSpec& s, const SuiteEnv&) {
                 Rng rng(s.seed);
                 const auto in = channel_instance(s.dim, rng);
                 return TrialOutcome{check_dpi(in.rho, in.sigma, in.t, s.tol), in.to_json()};
               }});

  v.push_back({"improved_dpi", "entropy drop >= S_meas(rho | recovered), grid cross-check at d = 2", "random-channel",
               {2, 3}, 2, 6, 500, 1e-6, [](const TrialSpec& s, const SuiteEnv& env) {
                 Rng rng(s.seed);
                 const auto in = channel_instance(s.dim, rng);
                 ImprovedDpiOptions o;
                 o.tol = s.tol;
                 o.grid_cross_check = true;
                 return TrialOutcome{check_improved_dpi(in.rho, in.sigma, in.t, env.beta0, o), in.to_json()};
               }});

  v.push_back({"improved_dpi_reversed", "entropy drop >= S_meas(recovered | rho)", "random-channel", {2, 3}, 2, 6, 500,
               1e-6, [](const TrialSpec& s, const SuiteEnv& env) {
                 Rng rng(s.seed);
                 const auto in = channel_instance(s.dim, rng);
                 ImprovedDpiOptions o;
                 o.tol = s.tol;
                 o.order = SmeasOrder::reversed;
                 return TrialOutcome{check_improved_dpi(in.rho, in.sigma, in.t, env.beta0, o), in.to_json()};
               }});

  v.push_back({"saturation", "diagonal states, random stochastic map: |drop - S_meas| <= tol", "classical-channel",
               {2, 3}, 2, 6, 100, 1e-6,
               [](const TrialSpec& s, const SuiteEnv& env) { return saturation_trial(s, env, false); }});

  v.push_back({"saturation_deterministic", "diagonal states, deterministic coarse-graining: |drop - S_meas| <= tol",
               "classical-channel", {2, 3}, 2, 6, 100, 1e-6,
               [](const TrialSpec& s, const SuiteEnv& env) { return saturation_trial(s, env, true); }});

  v.push_back({"recovery", "||alpha(T sigma) - sigma||_1 <= tol", "random-channel", {2, 3, 4}, 2, 6, 1000, 1e-8,
               [](const TrialSpec& s, const SuiteEnv& env) {
                 Rng rng(s.seed);
                 const DensityMatrix sigma = random_density(s.dim, rng);
                 const KrausChannel t = random_channel(s.dim, s.dim, rng);
                 json inst{{"sigma", matrix_to_json(sigma.mat())}, {"channel", channel_to_json(t)}};
                 return TrialOutcome{check_reference_recovery(t, sigma, env.beta0, s.tol), inst};
               }});

  v.push_back({"chain", "S >= S_meas >= -2 log F", "faithful-pair", {2, 3}, 2, 6, 500, 1e-6,
               [](const TrialSpec& s, const SuiteEnv&) {
                 Rng rng(s.seed);
                 const DensityMatrix rho = random_density(s.dim, rng);
                 const DensityMatrix sigma = random_density(s.dim, rng);
                 return TrialOutcome{check_dominance_chain(rho, sigma, s.tol), states_json(rho, sigma)};
               }});

  v.push_back({"fidelity_bound", "entropy drop >= -log F(recovered, rho)^2 and S_meas dominance", "random-channel",
               {2, 3}, 2, 6, 300, 1e-6, [](const TrialSpec& s, const SuiteEnv& env) {
                 Rng rng(s.seed);
                 const auto in = channel_instance(s.dim, rng);
                 return TrialOutcome{check_fidelity_bound(in.rho, in.sigma, in.t, env.beta0, s.tol), in.to_json()};
               }});

  v.push_back({"renyi", "integrated and channel-inside Renyi bounds for s in {0.5, 0.7, 0.9}", "random-channel",
               {2, 3}, 2, 6, 300, 1e-6, [](const TrialSpec& s, const SuiteEnv& env) {
                 Rng rng(s.seed);
                 const auto in = channel_instance(s.dim, rng);
                 std::vector<CheckReport> rs;
                 for (double order : {0.5, 0.7, 0.9})
                   rs.push_back(check_renyi_integral_bound(in.rho, in.sigma, in.t, order, env.beta0, s.tol));
                 return TrialOutcome{fold("renyi", rs), in.to_json()};
               }});

  v.push_back({"multi_power", "multi-factor bound with beta_{r/2}, powers a^{1+it} on the upper boundary",
               "faithful-pair", {2, 3, 4}, 2, 6, 300, 1e-6,
               [](const TrialSpec& s, const SuiteEnv& env) { return multi_power_trial(s, env, 1.0); }});

  v.push_back({"multi_power_scaled", "multi_power with powers a^{1+2it} on the upper boundary",
               "faithful-pair", {2, 3, 4}, 2, 6, 300, 1e-6,
               [](const TrialSpec& s, const SuiteEnv& env) { return multi_power_trial(s, env, 2.0); }});

  v.push_back({"multi_power_trace", "tracial psi: standard-form gap equals the direct trace form", "faithful-pair",
               {2, 3, 4}, 2, 6, 300, 1e-9, [](const TrialSpec& s, const SuiteEnv& env) {
                 Rng rng(s.seed);
                 const MultiPowerInstance in = multi_power_instance(s.dim, rng);
                 const QuadratureRule rule = env.beta(in.r / 2.0);
                 std::vector<CheckReport> rs;
                 for (double scale : {1.0, 2.0}) {
                   const CheckReport inner =
                       check_multi_power(in.a, DensityMatrix::maximally_mixed(s.dim), in.r, in.p, rule, 1e-6, scale);
                   const auto tf = multi_power_trace_form(in.a, in.r, in.p, rule, scale);
                   CheckReport rep = make_equality_report("multi_power_trace", inner.gap, tf.first - tf.second, s.tol);
                   petzlab::detail::add_note(rep, "scale=" + num(scale) + " gap=" + num(inner.gap));
                   rs.push_back(rep);
                 }
                 json inst{{"a", hermitian_list_json(in.a)}, {"r", in.r}, {"p", in.p}};
                 return TrialOutcome{fold("multi_power_trace", rs), inst};
               }});

  v.push_back({"alt", "||zeta||_{r,psi}^2 <= ||Delta^{r/4} psi||^{4/r}, zeta in the natural cone", "faithful-pair",
               {2, 3, 4}, 2, 8, 300, 1e-8, [](const TrialSpec& s, const SuiteEnv&) {
                 Rng rng(s.seed);
                 const DensityMatrix w = random_density(s.dim, rng);
                 const DensityMatrix psi = random_density(s.dim, rng);
                 const double r = 2.0 + pick(rng, 0, 2);
                 json inst = states_json(w, psi);
                 inst["r"] = r;
                 return TrialOutcome{check_alt(natural_cone_rep(w), psi, r, s.tol), inst};
               }});

  v.push_back({"alt_general", "as alt, with a general (non-cone) unit vector zeta", "faithful-pair", {2, 3}, 2, 8, 300,
               1e-8, [](const TrialSpec& s, const SuiteEnv&) {
                 Rng rng(s.seed);
                 Mat z = gaussian_matrix(s.dim, s.dim, rng);
                 z /= z.norm();
                 const DensityMatrix psi = random_density(s.dim, rng);
                 const double r = 2.0 + pick(rng, 0, 2);
                 json inst{{"zeta", matrix_to_json(z)}, {"psi", matrix_to_json(psi.mat())}, {"r", r}};
                 return TrialOutcome{check_alt(StandardVector(z), psi, r, s.tol), inst};
               }});

  v.push_back({"exp_product", "log||psi^{sum h}||^2 <= beta_0 integral, random faithful psi", "faithful-pair", {2, 3, 4}, 2,
               6, 300, 1e-6, [](const TrialSpec& s, const SuiteEnv& env) {
                 Rng rng(s.seed);
                 const int k = pick(rng, 1, 3);
                 std::vector<HermitianMatrix> hs;
                 for (int i = 0; i < k; ++i) hs.push_back(random_hermitian(s.dim, rng));
                 const DensityMatrix psi = random_density(s.dim, rng);
                 json inst{{"h", hermitian_list_json(hs)}, {"psi", matrix_to_json(psi.mat())}};
                 return TrialOutcome{check_exp_product(hs, psi, env.beta0, s.tol), inst};
               }});

  v.push_back({"exp_product_trace", "tracial psi: trace form match and Tr e^{h1+h2} <= Tr e^{h1} e^{h2}", "faithful-pair",
               {2, 3, 4}, 2, 6, 300, 1e-9, [](const TrialSpec& s, const SuiteEnv& env) {
                 Rng rng(s.seed);
                 const int k = pick(rng, 1, 3);
                 std::vector<HermitianMatrix> hs;
                 for (int i = 0; i < k; ++i) hs.push_back(random_hermitian(s.dim, rng));
                 const CheckReport inner = check_exp_product(hs, DensityMatrix::maximally_mixed(s.dim), env.beta0, 1e-6);
                 const auto tf = exp_product_trace_form(hs, env.beta0);
                 CheckReport rep = make_equality_report("exp_product_trace", inner.gap, tf.first - tf.second, s.tol);
                 if (!inner.pass) petzlab::detail::fail(rep, "inequality fails: " + inner.reason);
                 // two-factor trace inequality
                 const HermitianMatrix h1 = random_hermitian(s.dim, rng);
                 const HermitianMatrix h2 = random_hermitian(s.dim, rng);
                 const double lhs = std::log((expm(h1).mat() * expm(h2).mat()).trace().real());
                 const double rhs = std::log(expm(HermitianMatrix(Mat(h1.mat() + h2.mat()))).mat().trace().real());
                 petzlab::detail::add_note(rep, "gt_gap=" + num(lhs - rhs));
                 if (lhs - rhs < -s.tol) petzlab::detail::fail(rep, "two-factor trace inequality fails");
                 json inst{{"h", hermitian_list_json(hs)}, {"h1", matrix_to_json(h1.mat())},
                           {"h2", matrix_to_json(h2.mat())}};
                 return TrialOutcome{rep, inst};
               }});

  v.push_back({"hirschman", "boundary-integral bound for <phi|A^z|chi>", "faithful-pair", {2, 3, 4}, 2, 8, 200, 1e-7,
               [](const TrialSpec& s, const SuiteEnv& env) {
                 Rng rng(s.seed);
                 const HermitianMatrix a = random_positive(s.dim, rng);
                 const CVec phi = gaussian_vector(s.dim, rng);
                 const CVec chi = gaussian_vector(s.dim, rng);
                 const double theta = uniform(rng, 0.05, 0.45);
                 json inst{{"a", matrix_to_json(a.mat())}, {"phi", matrix_to_json(phi)}, {"chi", matrix_to_json(chi)},
                           {"theta", theta}};
                 return TrialOutcome{
                     check_hirschman(ScalarFamily::matrix_element(a.mat(), phi, chi), theta, env.n_nodes, env.t_max,
                                     s.tol),
                     inst};
               }});

  v.push_back({"hirschman_exp", "e^{cz} attains the bound: |gap| <= tol", "faithful-pair", {2}, 2, 8, 200, 1e-9,
               [](const TrialSpec& s, const SuiteEnv& env) {
                 Rng rng(s.seed);
                 const cplx c(uniform(rng, -4.0, 4.0), uniform(rng, -4.0, 4.0));
                 const double theta = uniform(rng, 0.05, 0.45);
                 const CheckReport inner =
                     check_hirschman(ScalarFamily::exponential(c), theta, env.n_nodes, env.t_max, s.tol);
                 CheckReport rep = make_equality_report("hirschman_exp", inner.lhs, inner.rhs, s.tol);
                 json inst{{"c", {c.real(), c.imag()}}, {"theta", theta}};
                 return TrialOutcome{rep, inst};
               }});

  v.push_back({"lp_interp", "interpolation of weighted Lp norms, both index regimes per trial", "faithful-pair",
               {2, 3}, 2, 6, 200, 1e-6, [](const TrialSpec& s, const SuiteEnv& env) {
                 Rng rng(s.seed);
                 PowerFamily g;
                 const int m = pick(rng, 1, 3);
                 for (int i = 0; i < m; ++i) g.factors.push_back(random_positive(s.dim, rng));
                 g.zeta = gaussian_matrix(s.dim, s.dim, rng);
                 const DensityMatrix psi = random_density(s.dim, rng);
                 const double theta = uniform(rng, 0.05, 0.45);
                 const double high[] = {2.0, 3.0, 4.0, kInfinity};
                 const double hp0 = high[pick(rng, 0, 3)];
                 const double hp1 = high[pick(rng, 0, 3)];
                 const double lp0 = uniform(rng, 1.0, 2.0);
                 const double lp1 = uniform(rng, 1.0, 2.0);
                 std::vector<CheckReport> rs;
                 rs.push_back(check_lp_interpolation(g, psi, hp0, hp1, theta, env.n_nodes, env.t_max, s.tol));
                 rs.push_back(check_lp_interpolation(g, psi, lp0, lp1, theta, env.n_nodes, env.t_max, s.tol));
                 json inst{{"factors", hermitian_list_json(g.factors)},
                           {"zeta", matrix_to_json(g.zeta)},
                           {"psi", matrix_to_json(psi.mat())},
                           {"theta", theta},
                           {"high", {num(hp0), num(hp1)}},
                           {"low", {lp0, lp1}}};
                 return TrialOutcome{fold("lp_interp", rs), inst};
               }});

  v.push_back({"entropy_identity", "S_A - S_B as a supremum shifted by the cocycle generator", "majorized-pair",
               {2, 3}, 2, 6, 200, 1e-6, [](const TrialSpec& s, const SuiteEnv&) {
                 Rng rng(s.seed);
                 const auto in = majorized_channel_instance(s.dim, rng);
                 std::vector<HermitianMatrix> hs;
                 for (int i = 0; i < 20; ++i) hs.push_back(random_hermitian(s.dim, rng));
                 return TrialOutcome{check_entropy_difference_identity(in.rho, in.sigma, in.t, hs, s.tol),
                                     in.to_json()};
               }});

  v.push_back({"trotter", "product formula converges to the perturbed vector, n = 2..1024", "faithful-pair",
               {2, 3, 4}, 2, 4, 60, 1e-4, [](const TrialSpec& s, const SuiteEnv&) {
                 Rng rng(s.seed);
                 const DensityMatrix rho = random_density(s.dim, rng);
                 const DensityMatrix sigma = random_density(s.dim, rng);
                 const HermitianMatrix h = random_hermitian(s.dim, rng);
                 std::vector<int> ns;
                 for (int k = 1; k <= 10; ++k) ns.push_back(1 << k);
                 json inst = states_json(rho, sigma);
                 inst["h"] = matrix_to_json(h.mat());
                 return TrialOutcome{check_trotter_limit(rho, sigma, h, ns, s.tol), inst};
               }});

  v.push_back({"entropy_limit_oracle", "relative entropy vs the small-alpha limit oracle", "faithful-pair", {2, 3, 4}, 2, 8,
               100, 1e-6, [](const TrialSpec& s, const SuiteEnv&) {
                 Rng rng(s.seed);
                 const DensityMatrix rho = random_density(s.dim, rng);
                 const DensityMatrix sigma = random_density(s.dim, rng);
                 return TrialOutcome{make_equality_report("entropy_limit_oracle", relative_entropy(rho, sigma).value,
                                                          relative_entropy_limit_oracle(rho, sigma), s.tol),
                                     states_json(rho, sigma)};
               }});

  v.push_back({"renyi_routes", "sandwiched Renyi: direct and Lp-norm routes agree", "faithful-pair", {2, 3, 4}, 2, 8,
               200, 1e-9, [](const TrialSpec& s, const SuiteEnv&) {
                 Rng rng(s.seed);
                 const DensityMatrix rho = random_density(s.dim, rng);
                 const DensityMatrix sigma = random_density(s.dim, rng);
                 const double order = uniform(rng, 0.5, 0.99);
                 json inst = states_json(rho, sigma);
                 inst["s"] = order;
                 return TrialOutcome{make_equality_report("renyi_routes", sandwiched_renyi(rho, sigma, order).value,
                                                          sandwiched_renyi_lp(rho, sigma, order).value, s.tol),
                                     inst};
               }});

  v.push_back({"lp_oracle", "Lp norm trace formula vs the variational oracle, p in {2, 3, 4}", "faithful-pair", {2},
               2, 2, 100, 1e-4, [](const TrialSpec& s, const SuiteEnv&) {
                 Rng rng(s.seed);
                 Mat z = gaussian_matrix(s.dim, s.dim, rng);
                 z /= z.norm();
                 const DensityMatrix psi = random_density(s.dim, rng);
                 const double p = 2.0 + pick(rng, 0, 2);
                 const StandardVector zeta(z);
                 json inst{{"zeta", matrix_to_json(z)}, {"psi", matrix_to_json(psi.mat())}, {"p", p}};
                 return TrialOutcome{make_equality_report("lp_oracle", am_lp_norm(zeta, psi, p).value,
                                                          am_lp_variational_oracle(zeta, psi, p, 2000, s.seed), s.tol),
                                     inst};
               }});

  v.push_back({"lp_mixing", "Lp norm (1 <= p < 2) at a singular psi is the limit of its faithful mixtures",
               "faithful-pair", {2, 3, 4}, 2, 8, 100, 1e-4, [](const TrialSpec& s, const SuiteEnv&) {
                 Rng rng(s.seed);
                 const DensityMatrix psi = random_low_rank_density(s.dim, s.dim - 1, rng);
                 const DensityMatrix eta = random_density(s.dim, rng);
                 const Mat z = gaussian_matrix(s.dim, s.dim, rng) * support_projection(eigh(psi.herm()));
                 const double p = uniform(rng, 1.0, 2.0);
                 const StandardVector zeta(Mat(z / z.norm()));
                 json inst = states_json(psi, eta);
                 inst["zeta"] = matrix_to_json(zeta.mat);
                 inst["p"] = p;
                 return TrialOutcome{lp_mixing_convergence_check(zeta, psi, eta, p,
                                                                 {1e-1, 1e-2, 1e-3, 1e-4, 1e-5, 1e-6}, s.tol),
                                     inst};
               }});

  v.push_back({"series_oracle", "iterated-integral series (order 12) vs the closed-form perturbed vector",
               "faithful-pair", {2, 3}, 2, 6, 100, 1e-8, [](const TrialSpec& s, const SuiteEnv&) {
                 Rng rng(s.seed);
                 const DensityMatrix w = random_density(s.dim, rng);
                 const HermitianMatrix h = random_hermitian(s.dim, rng, 0.5);
                 const StandardVector psi = natural_cone_rep(w);
                 const double dev =
                     (perturbation_series_oracle(psi, h, 12).mat - perturbed_vector(psi, h).mat).norm();
                 json inst{{"omega", matrix_to_json(w.mat())}, {"h", matrix_to_json(h.mat())}};
                 return TrialOutcome{make_report("series_oracle", 0.0, dev, s.tol), inst};
               }});

  v.push_back({"smeas_grid", "S_meas optimizer vs qubit grid oracle on (rho, recovered)", "random-channel", {2}, 2, 2,
               100, 1e-4, [](const TrialSpec& s, const SuiteEnv& env) {
                 Rng rng(s.seed);
                 const auto in = channel_instance(s.dim, rng);
                 const PetzContext ctx(in.t, in.sigma);
                 const DensityMatrix rec = recovered_state(ctx, in.rho, env.beta0);
                 return TrialOutcome{make_equality_report("smeas_grid", measured_relative_entropy(in.rho, rec).value,
                                                          measured_grid_oracle(in.rho, rec), s.tol),
                                     in.to_json()};
               }});

  v.push_back({"vnorm", "||V|| <= 1", "random-channel", {2, 3, 4}, 2, 5, 200, 1e-10,
               [](const TrialSpec& s, const SuiteEnv&) {
                 Rng rng(s.seed);
                 const auto in = channel_instance(s.dim, rng);
                 return TrialOutcome{check_v_contraction(in.t, in.rho, s.tol), in.to_json()};
               }});

  v.push_back({"gamma_strip", "sup of ||Gamma(z)|| on a 20 x 20 strip grid <= 1", "random-channel", {2, 3}, 2, 5, 50,
               1e-9, [](const TrialSpec& s, const SuiteEnv&) {
                 Rng rng(s.seed);
                 const auto in = channel_instance(s.dim, rng);
                 return TrialOutcome{check_gamma_strip(in.t, in.rho, in.sigma, 20, 3.0, s.tol), in.to_json()};
               }});

  v.push_back({"gamma_bound", "<Gamma|a Gamma> at Re z = 1/2 bounded by the rotated recovery", "random-channel",
               {2, 3}, 2, 5, 200, 1e-8, [](const TrialSpec& s, const SuiteEnv&) {
                 Rng rng(s.seed);
                 const auto in = channel_instance(s.dim, rng);
                 const Mat g = gaussian_matrix(s.dim, s.dim, rng);
                 const Mat a = g * g.adjoint();
                 const double time = uniform(rng, -3.0, 3.0);
                 json inst = in.to_json();
                 inst["a"] = matrix_to_json(a);
                 inst["t"] = time;
                 return TrialOutcome{check_gamma_petz_bound(in.t, in.rho, in.sigma, a, time, s.tol), inst};
               }});

  v.push_back({"petz_duality", "Heisenberg-picture identity of the rotated Petz map", "random-channel", {2, 3}, 2, 5, 200,
               1e-8, [](const TrialSpec& s, const SuiteEnv&) {
                 Rng rng(s.seed);
                 const auto in = channel_instance(s.dim, rng);
                 const Mat a = gaussian_matrix(s.dim, s.dim, rng);
                 const Mat b = gaussian_matrix(s.dim, s.dim, rng);
                 const double time = uniform(rng, -3.0, 3.0);
                 json inst = in.to_json();
                 inst["a"] = matrix_to_json(a);
                 inst["b"] = matrix_to_json(b);
                 inst["t"] = time;
                 return TrialOutcome{check_petz_definition(in.t, in.sigma, a, b, time, s.tol), inst};
               }});

  return v;
}

inline const std::vector<Suite>& suites() {
  static const std::vector<Suite> all = make_suites();
  return all;
}

inline const Suite* find_suite(const std::string& name) {
  for (const auto& s : suites())
    if (s.name == name) return &s;
  return nullptr;
}

} // namespace petzlab::harness
