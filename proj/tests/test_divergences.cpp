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

DensityMatrix diag(double a, double b)
{
  return DensityMatrix(qubit(a, 0.0, 0.0, b));
}

// Reference pair; values below computed independently with scipy.
const DensityMatrix kRho(qubit(0.7, 0.2, 0.2, 0.3));
const DensityMatrix kSigma(qubit(0.5, cplx(0, 0.1), cplx(0, -0.1), 0.5));

}  // namespace

TEST(DivergenceTest, relative_entropy_reference_values)
{
  // 0.75 ln 1.5 + 0.25 ln 0.5
  EXPECT_NEAR(relative_entropy(diag(0.75, 0.25), DensityMatrix::maximally_mixed(2)).value, 0.130812035941137, 1e-12);
  EXPECT_NEAR(relative_entropy(diag(1.0, 0.0), DensityMatrix::maximally_mixed(2)).value, std::log(2.0), 1e-12);
  EXPECT_NEAR(relative_entropy(kRho, kSigma).value, 0.19027176139376273, 1e-12);
  EXPECT_NEAR(relative_entropy(kRho, kRho).value, 0.0, 1e-14);
}

TEST(DivergenceTest, relative_entropy_support_violation_is_infinite)
{
  const DivergenceValue v = relative_entropy(DensityMatrix::maximally_mixed(2), diag(1.0, 0.0));
  EXPECT_TRUE(v.infinite());
  EXPECT_FALSE(v.reason.empty());
}

TEST(DivergenceTest, limit_oracle_agrees_with_closed_form)
{
  EXPECT_NEAR(relative_entropy_limit_oracle(kRho, kSigma), relative_entropy(kRho, kSigma).value, 1e-6);
  Rng rng(3);
  const DensityMatrix a = harness::random_density(4, rng);
  const DensityMatrix b = harness::random_density(4, rng);
  EXPECT_NEAR(relative_entropy_limit_oracle(a, b), relative_entropy(a, b).value, 1e-6);
}

TEST(DivergenceTest, sandwiched_renyi_reference_values)
{
  EXPECT_NEAR(sandwiched_renyi(kRho, kSigma, 0.7).value, 0.13878658081834674, 1e-12);
  EXPECT_NEAR(sandwiched_renyi_lp(kRho, kSigma, 0.7).value, sandwiched_renyi(kRho, kSigma, 0.7).value, 1e-9);
  // s = 1/2 is -2 log F
  EXPECT_NEAR(sandwiched_renyi(kRho, kSigma, 0.5).value, 0.10094782421209526, 1e-12);
  // s -> 1 approaches the relative entropy
  EXPECT_NEAR(sandwiched_renyi(kRho, kSigma, 1.0 - 1e-6).value, 0.19027176139376273, 1e-6);
}

TEST(DivergenceTest, fidelity_reference_values)
{
  EXPECT_NEAR(fidelity(kRho, kSigma), 0.9507787321635269, 1e-12);
  EXPECT_NEAR(fidelity_divergence(kRho, kSigma).value, 0.10094782421209526, 1e-12);
  // pure states at relative angle pi/12: F = cos(pi/12)
  const double c = std::cos(kPi / 24.0), s = std::sin(kPi / 24.0);
  const DensityMatrix a(qubit(c * c, c * s, c * s, s * s));
  const DensityMatrix b(qubit(c * c, -c * s, -c * s, s * s));
  EXPECT_NEAR(fidelity(a, b), 0.965925826289068, 1e-12);
  EXPECT_NEAR(fidelity_commutant_oracle(kRho, kSigma), fidelity(kRho, kSigma), 1e-6);
}

TEST(DivergenceTest, kl_divergence_of_distributions)
{
  EXPECT_NEAR(kl_divergence({0.75, 0.25}, {0.5, 0.5}), 0.130812035941137, 1e-14);
  EXPECT_TRUE(std::isinf(kl_divergence({0.5, 0.5}, {1.0, 0.0})));
  EXPECT_NEAR(kl_divergence({1.0, 0.0}, {0.5, 0.5}), std::log(2.0), 1e-14);
}

TEST(DivergenceTest, measured_entropy_reference_value)
{
  const DivergenceValue v = measured_relative_entropy(kRho, kSigma);
  EXPECT_TRUE(v.converged);
  EXPECT_NEAR(v.value, 0.1878733227681115, 1e-8);
  EXPECT_NEAR(measured_grid_oracle(kRho, kSigma), v.value, 1e-4);
  ASSERT_TRUE(v.certificate.has_value());
  EXPECT_NEAR(measured_objective(kRho, kSigma, HermitianMatrix(*v.certificate)), v.value, 1e-10);
}

TEST(DivergenceTest, measured_entropy_of_commuting_pair_is_kl)
{
  const DivergenceValue v = measured_relative_entropy(diag(0.8, 0.2), diag(0.3, 0.7));
  EXPECT_NEAR(v.value, kl_divergence({0.8, 0.2}, {0.3, 0.7}), 1e-9);
}

TEST(DivergenceTest, ordering_of_divergences)
{
  Rng rng(17);
  for (int i = 0; i < 20; ++i) {
    const DensityMatrix a = harness::random_density(3, rng);
    const DensityMatrix b = harness::random_density(3, rng);
    const double s = relative_entropy(a, b).value;
    const double m = measured_relative_entropy(a, b).value;
    const double f = fidelity_divergence(a, b).value;
    EXPECT_GE(s, m - 1e-9);
    EXPECT_GE(m, f - 1e-9);
    EXPECT_GE(sandwiched_renyi(a, b, 0.9).value, sandwiched_renyi(a, b, 0.6).value - 1e-12);
  }
}

TEST(DivergenceTest, variational_formula_attained_at_log_difference)
{
  Rng rng(23);
  std::vector<HermitianMatrix> hs;
  for (int i = 0; i < 30; ++i) hs.push_back(harness::random_hermitian(2, rng, 2.0));
  const CheckReport r = relative_entropy_variational_check(kRho, kSigma, hs);
  EXPECT_TRUE(r.pass) << r.reason << " " << r.note;
}
