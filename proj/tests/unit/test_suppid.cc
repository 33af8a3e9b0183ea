// Copyright 2026 The paramtomo Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "paramtomo/suppid.h"

#include <cmath>
#include <vector>

#include "gtest/gtest.h"
#include "paramtomo/errors.h"
#include "paramtomo/qsim.h"

namespace paramtomo {
namespace {

// n = 2, H = diag(0, 1, 3, 4), |psi> = (|00> + |01>) / sqrt(2): the only
// nonzero Fourier coefficients are k in {-1, 0, 1}.
struct Sparse {
  BasisSystem basis = BasisSystem::Fourier(4);
  MeasurementMatrix a;
  std::vector<Estimate> obs;
  ParametrizedOperator truth;
};

Sparse MakeSparse(int m, uint64_t seed) {
  IntegerSpectrumHamiltonian h = IntegerSpectrumHamiltonian::FromDiagonal({0, 1, 3, 4});
  Vector psi = Vector::Zero(4);
  psi(0) = psi(1) = 1.0 / std::sqrt(2.0);
  Matrix rho0 = psi * psi.adjoint();
  BasisSystem basis = BasisSystem::Fourier(4);
  MeasurementMatrix a = BuildMeasurementMatrix(basis, SampleMeasure(basis, m, seed));
  std::vector<Estimate> obs;
  Hamiltonian dense = h.ToHamiltonian();
  for (double x : a.points) obs.emplace_back(Evolve(dense, rho0, x));
  return Sparse{basis, a, obs, FourierCoefficients(h, rho0)};
}

TEST(ProbeCountTest, Formula) {
  EXPECT_EQ(ProbeCount(9, 0.1, 0.5, 0.0),
            static_cast<int64_t>(std::ceil(std::log(180.0) / (2.0 * 0.0625))));
  EXPECT_EQ(ProbeCount(9, 0.1, 0.5, 1.0),
            static_cast<int64_t>(std::ceil(std::log(180.0) * 4.0 / (2.0 * 0.0625))));
  EXPECT_THROW(ProbeCount(0, 0.1, 0.5, 0.0), ArgumentError);
}

TEST(IdentifySupportTest, FindsSparseSupport) {
  Sparse f = MakeSparse(40, 1);
  SupportIdOptions opt;
  opt.strict = false;
  SupportEstimate est = IdentifySupport(f.obs, f.a, 3, 200, 99, opt);
  EXPECT_EQ(est.support, (std::vector<int>{-1, 0, 1}));
  EXPECT_EQ(est.probes, 200);
  EXPECT_GT(est.gap, 0.0);
  EXPECT_EQ(est.labels, f.basis.labels());
  EXPECT_FALSE(est.warnings.empty());
  EXPECT_EQ(est.coefficient_bound_violations, 0);
  EXPECT_DOUBLE_EQ(est.local_assumption_fraction, 1.0);
}

TEST(IdentifySupportTest, SameSeedSameResult) {
  Sparse f = MakeSparse(30, 2);
  SupportIdOptions opt;
  opt.strict = false;
  SupportEstimate a = IdentifySupport(f.obs, f.a, 3, 50, 5, opt);
  SupportEstimate b = IdentifySupport(f.obs, f.a, 3, 50, 5, opt);
  EXPECT_EQ(a.support, b.support);
  EXPECT_TRUE(a.xhat == b.xhat);
}

TEST(IdentifySupportTest, StrictModeNeedsMatchingCertificate) {
  Sparse f = MakeSparse(40, 3);
  EXPECT_THROW(IdentifySupport(f.obs, f.a, 3, 10, 0), CertificationError);
  Matrix an = f.a.entries / std::sqrt(40.0);
  SupportIdOptions opt;
  opt.certificate = RipConstantBruteForce(an, 9);
  if (opt.certificate->delta_s <= 0.5) {
    EXPECT_NO_THROW(IdentifySupport(f.obs, f.a, 3, 10, 0, opt));
  }
  RipCertificate wrong = *opt.certificate;
  wrong.matrix_id ^= 1;
  opt.certificate = wrong;
  EXPECT_THROW(IdentifySupport(f.obs, f.a, 3, 10, 0, opt), CertificationError);
}

TEST(IdentifySupportTest, ExhaustiveXhatIsNormalizedHsNorm) {
  Sparse f = MakeSparse(40, 4);
  SupportIdOptions opt;
  opt.strict = false;
  opt.exhaustive = true;
  SupportEstimate est = IdentifySupport(f.obs, f.a, 3, 0, 0, opt);
  EXPECT_EQ(est.probes, 16);
  for (size_t i = 0; i < est.labels.size(); ++i) {
    double expected = f.truth.Coefficient(est.labels[i]).norm() / 2.0;
    EXPECT_NEAR(est.xhat(i), expected, 1e-9) << est.labels[i];
  }
}

TEST(HsNormTest, IdentityOnRandomOperators) {
  Rng rng(6);
  for (int n = 1; n <= 3; ++n) {
    Matrix alpha = Matrix::Random(1 << n, 1 << n);
    auto [lhs, rhs] = HsNormEstimatorCheck(alpha);
    EXPECT_NEAR(lhs, rhs, 1e-12);
  }
}

TEST(FlatnessTest, Values) {
  EXPECT_DOUBLE_EQ(Flatness(RealVector::Zero(4)), 1.0);
  EXPECT_NEAR(Flatness(RealVector::Ones(4)), 1.0, 1e-15);
  RealVector spike = RealVector::Zero(4);
  spike(2) = -3.0;
  EXPECT_NEAR(Flatness(spike), 0.5, 1e-15);
}

TEST(BestSparseApproxTest, TailMass) {
  RealVector v(5);
  v << 0.1, -3.0, 0.5, 2.0, -0.2;
  EXPECT_NEAR(BestSparseApproxError(v, 2), 0.8, 1e-15);
  EXPECT_NEAR(BestSparseApproxError(v, 5), 0.0, 1e-15);
}

TEST(SeparabilityTest, ExactSparseStateSeparates) {
  Sparse f = MakeSparse(10, 5);
  ParametrizedOperator zero(f.basis, {}, {}, 4);
  SeparabilityMargin m = EvaluateSeparability(f.truth, zero, {-1, 0, 1}, 0.01, 0.0);
  EXPECT_TRUE(m.worst_case_holds);
  EXPECT_NEAR(m.sigma_term, 0.0, 1e-12);
  EXPECT_GT(m.worst_case_lhs, 0.0);
  EXPECT_TRUE(m.flatness_holds);
  SeparabilityMargin wrong = EvaluateSeparability(f.truth, zero, {-4, 3, 4}, 0.01, 0.0);
  EXPECT_FALSE(wrong.worst_case_holds);
}

TEST(CoefficientBoundTest, Slack) {
  EXPECT_TRUE(CoefficientBoundCheck(1.0, 0.0));
  EXPECT_TRUE(CoefficientBoundCheck(1.0 + 5e-9, 0.0));
  EXPECT_FALSE(CoefficientBoundCheck(1.01, 0.0));
  EXPECT_TRUE(CoefficientBoundCheck(1.4, 0.5));
}

}  // namespace
}  // namespace paramtomo
