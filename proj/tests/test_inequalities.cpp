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

#include "petzlab/harness/random.hpp"
#include "petzlab/harness/serialize.hpp"
#include "petzlab/inequalities.hpp"

#include <gtest/gtest.h>

#include <fstream>

using namespace petzlab;
using namespace petzlab::harness;

namespace {

struct Fixture
{
  DensityMatrix rho, sigma;
  KrausChannel t;
};

Fixture make(int d, std::uint64_t seed, int d_out = 0)
{
  Rng rng(seed);
  DensityMatrix rho   = random_density(d, rng);
  DensityMatrix sigma = random_density(d, rng);
  KrausChannel  t     = random_channel(d, d_out ? d_out : d, rng);
  return {std::move(rho), std::move(sigma), std::move(t)};
}

const QuadratureRule &beta0()
{
  static const QuadratureRule r = beta_quadrature(0.0);
  return r;
}

}  // namespace

TEST(InequalityTest, data_processing)
{
  for (std::uint64_t s = 1; s <= 10; ++s)
  {
    const Fixture f = make(3, s);
    EXPECT_TRUE(check_dpi(f.rho, f.sigma, f.t).pass) << s;
  }
  // identity channel: no drop
  const Fixture f = make(2, 4);
  EXPECT_NEAR(check_dpi(f.rho, f.sigma, KrausChannel::identity(2)).gap, 0.0, 1e-14);
}

TEST(InequalityTest, improved_dpi_both_orders_on_sample)
{
  for (std::uint64_t s = 1; s <= 5; ++s)
  {
    const Fixture      f = make(2, s);
    ImprovedDpiOptions o;
    o.grid_cross_check = true;
    const CheckReport r = check_improved_dpi(f.rho, f.sigma, f.t, beta0(), o);
    EXPECT_TRUE(r.pass) << r.reason << " " << r.note;
    EXPECT_EQ(r.suite, "improved_dpi");
  }
  ImprovedDpiOptions o;
  o.order = SmeasOrder::reversed;
  const Fixture f = make(2, 1);
  EXPECT_EQ(check_improved_dpi(f.rho, f.sigma, f.t, beta0(), o).suite, "improved_dpi_reversed");
}

TEST(InequalityTest, saturation_for_deterministic_coarse_graining)
{
  Rng rng(31);
  for (int i = 0; i < 5; ++i)
  {
    const auto        p = random_probability(4, rng);
    const auto        q = random_probability(4, rng);
    const auto        m = random_deterministic_stochastic(4, 3, rng);
    const CheckReport r = check_commutative_saturation(p, q, m, beta0());
    EXPECT_TRUE(r.pass) << r.note;
  }
}

TEST(InequalityTest, saturation_is_strict_for_generic_stochastic_maps)
{
  // A fully mixing stochastic matrix leaves a strict gap between the entropy
  // drop and the measured entropy of the recovered state.
  Rng rng(32);
  const auto        p = random_probability(3, rng);
  const auto        q = random_probability(3, rng);
  const auto        m = random_stochastic(3, 3, rng);
  const CheckReport r = check_commutative_saturation(p, q, m, beta0());
  EXPECT_FALSE(r.pass) << r.note;
}

TEST(InequalityTest, fidelity_renyi_and_chain_bounds)
{
  const Fixture f = make(3, 12);
  EXPECT_TRUE(check_fidelity_bound(f.rho, f.sigma, f.t, beta0()).pass);
  for (double s : {0.5, 0.7, 0.9})
  {
    EXPECT_TRUE(check_renyi_integral_bound(f.rho, f.sigma, f.t, s, beta0()).pass) << s;
    EXPECT_TRUE(check_renyi_channel_bound(f.rho, f.sigma, f.t, s, beta0()).pass) << s;
  }
  EXPECT_TRUE(check_dominance_chain(f.rho, f.sigma).pass);
}

TEST(InequalityTest, reference_recovery_and_proof_devices)
{
  const Fixture f = make(3, 13, 2);
  EXPECT_TRUE(check_reference_recovery(f.t, f.sigma, beta0()).pass);
  EXPECT_TRUE(check_v_contraction(f.t, f.rho).pass);
  EXPECT_TRUE(check_gamma_strip(f.t, f.rho, f.sigma, 8, 2.0).pass);
  Rng        rng(14);
  const Mat  a = random_positive(3, rng).mat();
  const Mat  b = gaussian_matrix(2, 2, rng);
  EXPECT_TRUE(check_gamma_petz_bound(f.t, f.rho, f.sigma, a, 0.6).pass);
  EXPECT_TRUE(check_petz_definition(f.t, f.sigma, a, b, -0.9).pass);
}

TEST(InequalityTest, entropy_difference_identity_is_attained)
{
  Rng  rng(15);
  auto pair = majorized_pair(3, rng, 2.0);
  const KrausChannel          t = random_channel(3, 3, rng);
  std::vector<HermitianMatrix> hs;
  for (int i = 0; i < 10; ++i)
  {
    hs.push_back(random_hermitian(3, rng, 2.0));
  }
  const CheckReport r = check_entropy_difference_identity(pair.first, pair.second, t, hs);
  EXPECT_TRUE(r.pass) << r.reason << " " << r.note;
}

TEST(InequalityTest, hirschman_equality_for_exponentials)
{
  for (double theta : {0.1, 0.25, 0.4})
  {
    const CheckReport r = check_hirschman(ScalarFamily::exponential(cplx(1.7, -2.3)), theta);
    EXPECT_NEAR(r.gap, 0.0, 1e-9) << theta;
  }
  EXPECT_NEAR(check_hirschman(ScalarFamily::constant(cplx(0.3, 0.4)), 0.2).gap, 0.0, 1e-10);
}

TEST(InequalityTest, lp_interpolation_in_both_regimes)
{
  Rng               rng(16);
  const DensityMatrix psi = random_density(2, rng);
  PowerFamily       g{{random_positive(2, rng), random_positive(2, rng)}, gaussian_matrix(2, 2, rng)};
  EXPECT_TRUE(check_lp_interpolation(g, psi, 2.0, 4.0, 0.3).pass);
  EXPECT_TRUE(check_lp_interpolation(g, psi, 1.2, 1.8, 0.2).pass);
  EXPECT_THROW(check_lp_interpolation(g, psi, 1.5, 3.0, 0.2), std::invalid_argument);
}

TEST(InequalityTest, multi_factor_bound_counterexample)
{
  // Frozen instance: dimension 3, four factors, r = 3/4, p = 4.
  std::ifstream in(PETZLAB_TEST_DATA "/multi_power_counterexample.json");
  ASSERT_TRUE(in.good());
  const json                   j = json::parse(in);
  std::vector<HermitianMatrix> as;
  for (const auto &a : j.at("a"))
  {
    as.emplace_back(matrix_from_json(a));
  }
  const DensityMatrix psi(matrix_from_json(j.at("psi")));
  const double        r    = j.at("r").get<double>();
  const double        p    = j.at("p").get<double>();
  const QuadratureRule rule = beta_quadrature(r / 2.0, 32);
  // powers a^{1+it} on the upper boundary: violated
  const CheckReport printed = check_multi_power(as, psi, r, p, rule, 1e-6, 1.0);
  EXPECT_FALSE(printed.pass);
  EXPECT_NEAR(printed.gap, -0.0492665359853, 1e-6);
  // powers a^{1+2it}: holds
  const CheckReport scaled = check_multi_power(as, psi, r, p, rule, 1e-6, 2.0);
  EXPECT_TRUE(scaled.pass);
  EXPECT_NEAR(scaled.gap, 0.0757011252269, 1e-6);
}

TEST(InequalityTest, multi_factor_bound_tracial_form)
{
  Rng rng(17);
  const std::vector<HermitianMatrix> as{random_positive(3, rng), random_positive(3, rng)};
  const QuadratureRule rule = beta_quadrature(0.25);
  for (double scale : {1.0, 2.0})
  {
    const CheckReport r  = check_multi_power(as, DensityMatrix::maximally_mixed(3), 0.5, 3.0, rule, 1e-6, scale);
    const auto        tf = multi_power_trace_form(as, 0.5, 3.0, rule, scale);
    EXPECT_NEAR(r.gap, tf.first - tf.second, 1e-9);
  }
  // r = 1 collapses the bound to the left-hand side
  const CheckReport one = check_multi_power(as, random_density(3, rng), 1.0, 2.0, beta_quadrature(0.5));
  EXPECT_NEAR(one.gap, 0.0, 1e-12);
}

TEST(InequalityTest, araki_lieb_thirring_natural_cone_and_general_vectors)
{
  Rng rng(18);
  int general_failures = 0;
  for (int i = 0; i < 40; ++i)
  {
    const DensityMatrix psi  = random_density(2, rng);
    const DensityMatrix zeta = random_density(2, rng);
    const double        r    = 2.0 + (i % 3);
    const CheckReport   cone = check_alt(natural_cone_rep(zeta), psi, r);
    EXPECT_TRUE(cone.pass) << cone.note;
    const CheckReport gen = check_alt(StandardVector(gaussian_matrix(2, 2, rng)), psi, r);
    general_failures += gen.pass ? 0 : 1;
  }
  // the bound does not extend to vectors outside the natural cone
  EXPECT_GT(general_failures, 0);
}

TEST(InequalityTest, exponential_product_bound_and_golden_thompson)
{
  Rng rng(19);
  const std::vector<HermitianMatrix> hs{random_hermitian(3, rng, 2.0), random_hermitian(3, rng, 2.0)};
  const auto tf = exp_product_trace_form(hs, beta0());
  EXPECT_GE(tf.first, tf.second - 1e-9);
  const double gt = std::log((expm(hs[0]).mat() * expm(hs[1]).mat()).trace().real());
  EXPECT_GE(gt, tf.second - 1e-12);
  EXPECT_TRUE(check_exp_product(hs, random_density(3, rng), beta0()).pass);
  // tracial state: standard-form gap equals the trace form
  const CheckReport tr = check_exp_product(hs, DensityMatrix::maximally_mixed(3), beta0());
  EXPECT_NEAR(tr.gap, tf.first - tf.second, 1e-9);
}

TEST(InequalityTest, product_formula_converges)
{
  Rng                 rng(20);
  const DensityMatrix rho   = random_density(2, rng);
  const DensityMatrix sigma = random_density(2, rng);
  const HermitianMatrix h   = random_hermitian(2, rng);
  const CheckReport r = check_trotter_limit(rho, sigma, h, {2, 8, 32, 128, 512, 1024});
  EXPECT_TRUE(r.pass) << r.note;
}
