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
#include "petzlab/standard_form.hpp"

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

const DensityMatrix kRho(qubit(0.7, 0.2, 0.2, 0.3));
const DensityMatrix kSigma(qubit(0.5, cplx(0, 0.1), cplx(0, -0.1), 0.5));

}  // namespace

TEST(StandardFormTest, natural_cone_representative_squares_to_state)
{
  const StandardVector x = natural_cone_rep(kRho);
  EXPECT_LT((x.mat * x.mat - kRho.mat()).norm(), 1e-14);
  EXPECT_LT((functional_of(x).mat() - kRho.mat()).norm(), 1e-14);
  EXPECT_LT((commutant_functional_of(x).mat() - kRho.mat()).norm(), 1e-14);
  EXPECT_LT((modular_conjugation(x).mat - x.mat).norm(), 1e-14);
}

TEST(StandardFormTest, modular_operator_group_law)
{
  const RelModularOp d = RelModularOp::from_states(kRho, kSigma);
  const StandardVector z(qubit(0.3, cplx(0.1, 0.2), -0.4, 0.9));
  const StandardVector a = d.apply(cplx(0.2, 0.5), d.apply(cplx(0.1, -1.3), z));
  const StandardVector b = d.apply(cplx(0.3, -0.8), z);
  EXPECT_LT((a.mat - b.mat).norm(), 1e-13);
  // Delta_{sigma,sigma}^{1/2} sigma^{1/2} = sigma^{1/2}
  const StandardVector s = natural_cone_rep(kSigma);
  EXPECT_LT((rel_modular_apply(s, s, 0.5, s).mat - s.mat).norm(), 1e-13);
}

TEST(StandardFormTest, cocycle_is_unitary_and_satisfies_chain_rule)
{
  const Mat u = connes_cocycle(kRho, kSigma, 0.7);
  EXPECT_LT((u * u.adjoint() - Mat::Identity(2, 2)).norm(), 1e-13);
  EXPECT_LT((connes_cocycle(kRho, kRho, 1.3) - Mat::Identity(2, 2)).norm(), 1e-13);
  EXPECT_GE(majorization_constant(kRho, kSigma), 1.0);
}

TEST(StandardFormTest, lp_norm_reference_values)
{
  const StandardVector x = natural_cone_rep(kRho);
  // the state vector has unit norm in every Lp space of its own state
  for (double p : {1.0, 1.5, 2.0, 3.0, 7.0, kInfinity}) EXPECT_NEAR(am_lp_norm(x, kRho, p).value, 1.0, 1e-12) << p;
  // p = 2 is the Hilbert-Schmidt norm whatever the state
  const StandardVector z(qubit(0.3, cplx(0.1, 0.2), -0.4, 0.9));
  EXPECT_NEAR(am_lp_norm(z, kSigma, 2.0).value, z.mat.norm(), 1e-14);
  // tracial state: ||z||_{p,tau} = d^{1/2 - 1/p} ||z||_p
  const DensityMatrix tau = DensityMatrix::maximally_mixed(2);
  const auto sv = Eigen::JacobiSVD<Mat>(z.mat).singularValues();
  const double s4 = std::pow(std::pow(sv(0), 4) + std::pow(sv(1), 4), 0.25);
  EXPECT_NEAR(am_lp_norm(z, tau, 4.0).value, std::pow(2.0, 0.25) * s4, 1e-13);
}

TEST(StandardFormTest, lp_norm_matches_variational_oracle_on_a_qubit)
{
  Rng rng(11);
  const DensityMatrix psi = harness::random_density(2, rng);
  const StandardVector z(harness::gaussian_matrix(2, 2, rng));
  for (double p : {2.0, 3.0, 4.0})
    EXPECT_NEAR(am_lp_variational_oracle(z, psi, p, 2000), am_lp_norm(z, psi, p).value, 1e-4) << p;
}

TEST(StandardFormTest, perturbation_series_matches_closed_form)
{
  const StandardVector x = natural_cone_rep(kRho);
  const HermitianMatrix h(qubit(0.2, cplx(0.1, -0.15), cplx(0.1, 0.15), -0.3));
  const StandardVector exact = perturbed_vector(x, h);
  const StandardVector series = perturbation_series_oracle(x, h, 12);
  EXPECT_LT((exact.mat - series.mat).norm(), 1e-8);
  // perturbed vector represents e^{log rho + h} / normalisation up to scale
  const Mat e = expm(HermitianMatrix(Mat(log_on_support(kRho.herm()).mat() + h.mat()))).mat();
  EXPECT_LT((exact.mat * exact.mat.adjoint() - e).norm(), 1e-12);
}

TEST(StandardFormTest, lp_norm_is_continuous_under_mixing_at_singular_state)
{
  Rng rng(5);
  const DensityMatrix psi = harness::random_low_rank_density(3, 2, rng);
  const DensityMatrix eta = harness::random_density(3, rng);
  const Mat z = harness::gaussian_matrix(3, 3, rng) * support_projection(eigh(psi.herm()));
  const CheckReport r =
      lp_mixing_convergence_check(StandardVector(z), psi, eta, 1.5, {1e-1, 1e-2, 1e-3, 1e-4, 1e-5, 1e-6});
  EXPECT_TRUE(r.pass) << r.note;
}
