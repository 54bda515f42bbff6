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

#include "petzlab/channels.hpp"
#include "petzlab/divergences.hpp"
#include "petzlab/harness/random.hpp"

#include <gtest/gtest.h>

using namespace petzlab;
using petzlab::harness::Rng;

namespace {

Mat qubit(cplx a, cplx b, cplx c, cplx d)
{
  Mat m(2, 2);
  m << a, b, c, d;
  return m;
}

KrausChannel amplitude_damping(double g)
{
  return KrausChannel({qubit(1.0, 0.0, 0.0, std::sqrt(1.0 - g)), qubit(0.0, std::sqrt(g), 0.0, 0.0)});
}

const DensityMatrix kSigmaA(qubit(0.6, 0.1, 0.1, 0.4));
const Mat kY = qubit(0.55, cplx(0, 0.2), cplx(0, -0.2), 0.45);

}  // namespace

TEST(QuadratureTest, beta_and_alpha_densities_are_normalised)
{
  EXPECT_NEAR(beta_quadrature(0.0).weight_sum(), 1.0, 1e-10);
  EXPECT_NEAR(beta_quadrature(0.2).weight_sum(), 1.0, 1e-8);
  EXPECT_NEAR(alpha_quadrature(0.3).weight_sum(), 1.0, 1e-8);
  EXPECT_NEAR(WeightDensity::beta(0.0)(0.0), kPi / 2.0, 1e-15);
  EXPECT_THROW(WeightDensity::beta(0.5), std::invalid_argument);
  EXPECT_THROW(WeightDensity::alpha(0.0), std::invalid_argument);
}

TEST(QuadratureTest, beta_moments)
{
  // second moments: 1/12 for beta_0 and 0.07 for beta_{0.2}
  EXPECT_NEAR(beta_quadrature(0.0).integrate([](double t) { return t * t; }), 1.0 / 12.0, 1e-10);
  EXPECT_NEAR(beta_quadrature(0.2, 32, 10.0).integrate([](double t) { return t * t; }), 0.07, 1e-8);
}

TEST(QuadratureTest, beta0_fourier_transform)
{
  const QuadratureRule rule = beta_quadrature(0.0, 32, 8.0);
  for (double w : {0.0, 0.5, 2.0, 5.0})
    EXPECT_NEAR(rule.integrate([&](double t) { return std::cos(w * t); }), beta0_fourier(w), 1e-10) << w;
}

TEST(QuadratureTest, half_is_a_point_mass)
{
  const QuadratureRule r = beta_quadrature(0.5);
  ASSERT_EQ(r.size(), 1u);
  EXPECT_EQ(r.nodes[0], 0.0);
  EXPECT_EQ(r.weights[0], 1.0);
}

TEST(ChannelTest, kraus_validation_and_duality)
{
  EXPECT_THROW(KrausChannel({qubit(1.0, 0.0, 0.0, 0.5)}), std::invalid_argument);
  const KrausChannel t = amplitude_damping(0.3);
  const Mat x = qubit(0.2, cplx(0.1, 0.4), cplx(0.3, -0.2), -0.5);
  // Tr(T(rho) x) = Tr(rho T*(x))
  EXPECT_NEAR(std::abs((t.schrodinger(kY) * x).trace() - (kY * t.heisenberg(x)).trace()), 0.0, 1e-14);
  EXPECT_LT((t.heisenberg(Mat::Identity(2, 2)) - Mat::Identity(2, 2)).norm(), 1e-14);
}

TEST(ChannelTest, stochastic_matrix_acts_on_diagonals)
{
  Eigen::MatrixXd p(2, 3);
  p << 0.5, 0.2, 1.0, 0.5, 0.8, 0.0;
  const KrausChannel t = KrausChannel::from_stochastic(p);
  const Mat rho = Eigen::Vector3cd(0.2, 0.3, 0.5).asDiagonal();
  const Mat out = t.schrodinger(rho);
  EXPECT_NEAR(out(0, 0).real(), 0.1 + 0.06 + 0.5, 1e-14);
  EXPECT_NEAR(std::abs(out(0, 1)), 0.0, 1e-14);
}

TEST(ChannelTest, rotated_petz_reference_value)
{
  // independent evaluation with scipy
  const Mat a = rotated_petz(amplitude_damping(0.3), kSigmaA, 0.4).apply(kY);
  EXPECT_NEAR(a(0, 0).real(), 0.45299382064379207, 1e-13);
  EXPECT_NEAR(a(0, 1).real(), -0.018446881005060284, 1e-13);
  EXPECT_NEAR(a(0, 1).imag(), 0.1601563411005814, 1e-13);
  EXPECT_NEAR(a(1, 1).real(), 0.5470061793562081, 1e-13);
}

TEST(ChannelTest, integrated_recovery_reference_value)
{
  const PetzContext ctx(amplitude_damping(0.3), kSigmaA);
  for (const Mat& r : {integrated_recovery(ctx, beta_quadrature(0.0)).apply(kY), ctx.beta0_exact().apply(kY)}) {
    EXPECT_NEAR(r(0, 0).real(), 0.45822490399579113, 1e-9);
    EXPECT_NEAR(r(0, 1).real(), 0.020129777842084688, 1e-9);
    EXPECT_NEAR(r(0, 1).imag(), 0.1793809234919013, 1e-9);
    EXPECT_NEAR(r(1, 1).real(), 0.5417750960042091, 1e-9);
  }
}

TEST(ChannelTest, mixture_matches_direct_rotated_maps)
{
  const PetzContext ctx(amplitude_damping(0.3), kSigmaA);
  const std::vector<double> nodes = {-0.7, 0.1, 1.9};
  const std::vector<double> weights = {0.2, 0.5, 0.3};
  Mat direct = Mat::Zero(2, 2);
  for (std::size_t k = 0; k < nodes.size(); ++k) direct += weights[k] * ctx.rotated_apply(nodes[k], kY);
  EXPECT_LT((ctx.mixture(nodes, weights).apply(kY) - direct).norm(), 1e-13);
}

TEST(ChannelTest, recovery_maps_return_the_reference_state)
{
  Rng rng(2);
  const DensityMatrix sigma = harness::random_density(3, rng);
  const KrausChannel t = harness::random_channel(3, 2, rng);
  const Mat sb = t.schrodinger(sigma.mat());
  EXPECT_LT(trace_norm(petz_map(t, sigma).apply(sb) - sigma.mat()), 1e-10);
  EXPECT_LT(trace_norm(rotated_petz(t, sigma, 1.3).apply(sb) - sigma.mat()), 1e-10);
  EXPECT_LT(trace_norm(integrated_recovery(t, sigma, beta_quadrature(0.0)).apply(sb) - sigma.mat()), 1e-10);
}

TEST(ChannelTest, petz_of_depolarizing_channel_prepares_sigma)
{
  const KrausChannel t = KrausChannel::completely_depolarizing(2);
  const Mat out = petz_map(t, kSigmaA).apply(kY);
  EXPECT_LT((out - kSigmaA.mat()).norm(), 1e-13);
}

TEST(ChannelTest, singular_reference_is_rejected)
{
  const DensityMatrix pure(qubit(1.0, 0.0, 0.0, 0.0));
  EXPECT_THROW(PetzContext(amplitude_damping(0.3), pure), SingularReferenceError);
}

TEST(ChannelTest, cocycle_generator_expectation_is_output_entropy)
{
  Rng rng(8);
  const DensityMatrix rho = harness::random_density(3, rng);
  const DensityMatrix sigma = harness::random_density(3, rng);
  const KrausChannel t = harness::random_channel(3, 3, rng);
  const double sb = relative_entropy(apply_schrodinger(t, rho), apply_schrodinger(t, sigma)).value;
  EXPECT_NEAR((rho.mat() * cocycle_generator(t, rho, sigma).mat()).trace().real(), sb, 1e-12);
}

TEST(ChannelTest, v_is_a_contraction_and_gamma_starts_at_xi)
{
  Rng rng(9);
  const DensityMatrix rho = harness::random_density(3, rng);
  const DensityMatrix sigma = harness::random_density(3, rng);
  const KrausChannel t = harness::random_channel(3, 2, rng);
  EXPECT_LE(v_contraction_norm(t, rho), 1.0 + 1e-10);
  const StandardVector g0 = gamma_vector(t, rho, sigma, 0.0);
  EXPECT_LT((g0.mat - natural_cone_rep(rho).mat).norm(), 1e-12);
  EXPECT_THROW(gamma_vector(t, rho, sigma, cplx(0.7, 0.0)), std::domain_error);
}

TEST(ChannelTest, seeded_random_channel_is_reproducible)
{
  const KrausChannel a = random_channel(3, 2, 4, 99);
  const KrausChannel b = random_channel(3, 2, 4, 99);
  ASSERT_EQ(a.kraus().size(), b.kraus().size());
  for (std::size_t k = 0; k < a.kraus().size(); ++k) EXPECT_EQ(a.kraus()[k], b.kraus()[k]);
}
