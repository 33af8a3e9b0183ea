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

#include "paramtomo/recovery.h"

#include <cmath>
#include <vector>

#include "gtest/gtest.h"
#include "paramtomo/csolve.h"
#include "paramtomo/errors.h"
#include "paramtomo/qsim.h"

namespace paramtomo {
namespace {

struct Fixture {
  IntegerSpectrumHamiltonian h;
  Matrix rho0;
  ParametrizedOperator truth;
};

Fixture PlusFixture(std::vector<int64_t> weights) {
  IntegerSpectrumHamiltonian h = IntegerSpectrumHamiltonian::FromWeights(weights);
  int d = 1 << weights.size();
  Vector psi = Vector::Constant(d, Complex(1.0 / std::sqrt(static_cast<double>(d)), 0.0));
  Matrix rho0 = psi * psi.adjoint();
  return Fixture{h, rho0, FourierCoefficients(h, rho0)};
}

std::vector<Estimate> ExactObservations(const Fixture& f, const std::vector<double>& xs) {
  Hamiltonian dense = f.h.ToHamiltonian();
  std::vector<Estimate> out;
  for (double x : xs) out.emplace_back(Evolve(dense, f.rho0, x));
  return out;
}

TEST(SampleCountTest, PinnedValues) {
  EXPECT_EQ(SampleCountFull(8, 1.0, 0.05), 508);
  EXPECT_EQ(SampleCountFull(1, 1.0, 0.5), static_cast<int64_t>(std::ceil(11 * std::log(4.0))));
  double ls = std::log(300.0);
  double expected = 1.0 * (kSparseC1 * ls * ls * std::log(16.0) + kSparseC2 * std::log(20.0));
  EXPECT_EQ(SampleCountSparse(1, 4, 1.0, 1.0, 0.1), static_cast<int64_t>(std::ceil(expected)));
  double corollary = kSparseC1 * ls * std::log(16.0) + kSparseC2 * std::log(20.0);
  EXPECT_EQ(SampleCountSparse(1, 4, 1.0, 1.0, 0.1, FormulaVariant::kCorollary),
            static_cast<int64_t>(std::ceil(corollary)));
}

TEST(SampleCountTest, MonotoneAndValidated) {
  EXPECT_LT(SampleCountSparse(2, 9, 1.0, 1.0, 0.1), SampleCountSparse(3, 9, 1.0, 1.0, 0.1));
  EXPECT_LT(SampleCountSparse(2, 9, 1.0, 1.0, 0.1), SampleCountSparse(2, 9, 1.0, 0.5, 0.1));
  EXPECT_LT(SampleCountSparse(2, 9, 1.0, 1.0, 0.1), SampleCountSparse(2, 9, std::sqrt(2.0), 1.0, 0.1));
  EXPECT_THROW(SampleCountSparse(0, 9, 1.0, 1.0, 0.1), ArgumentError);
  EXPECT_THROW(SampleCountSparse(2, 9, 1.0, 0.0, 0.1), ArgumentError);
  EXPECT_THROW(SampleCountFull(0, 1.0, 0.1), ArgumentError);
}

TEST(RecoveryPlanTest, DerivedTolerances) {
  RecoveryPlan plan;
  plan.epsilon = 0.3;
  plan.delta = 0.2;
  plan.m = 10;
  EXPECT_DOUBLE_EQ(plan.epsilon_prime(), 0.3 / std::sqrt(6.0));
  EXPECT_DOUBLE_EQ(plan.delta_prime(), 0.01);
  plan.attenuation = 1.5;
  EXPECT_THROW(plan.Validate(), ArgumentError);
}

TEST(RecoverFullTest, ExactOracleReproducesCoefficients) {
  Fixture f = PlusFixture({1, 2});
  BasisSystem basis = BasisSystem::Fourier(3);
  MeasurementMatrix a = BuildMeasurementMatrix(basis, SampleMeasure(basis, 40, uint64_t{1}));
  RecoveryPlan plan;
  plan.basis = basis;
  plan.m = 40;
  RecoveryReport report = RecoverFull(plan, ExactObservations(f, a.points), a);
  ASSERT_TRUE(report.has_dense_coefficients());
  EXPECT_TRUE(report.budget.gammas_known);
  EXPECT_DOUBLE_EQ(report.budget.Total(), plan.epsilon);
  ParametrizedOperator got = report.Densify();
  for (int k : basis.labels()) {
    EXPECT_LT((got.Coefficient(k) - f.truth.Coefficient(k)).norm(), 1e-10) << k;
  }
}

TEST(RecoverSparseTest, ExactSupportRecovery) {
  Fixture f = PlusFixture({2, 2});  // energies {0, 2, 2, 4}: support {-4, -2, 0, 2, 4}
  BasisSystem basis = BasisSystem::Fourier(4);
  MeasurementMatrix a = BuildMeasurementMatrix(basis, SampleMeasure(basis, 12, uint64_t{2}));
  RecoveryPlan plan;
  plan.basis = basis;
  plan.m = 12;
  RecoveryReport report = RecoverSparse(plan, {4, -4, 0, 2, -2}, ExactObservations(f, a.points), a);
  EXPECT_EQ(report.support, (std::vector<int>{-4, -2, 0, 2, 4}));
  EXPECT_EQ(report.weights.rows(), 5);
  EXPECT_EQ(report.weights.cols(), 12);
  ParametrizedOperator got = report.Densify();
  for (int k : report.support) {
    EXPECT_LT((got.Coefficient(k) - f.truth.Coefficient(k)).norm(), 1e-10);
  }
  EXPECT_GT(report.diagnostics.sigma_min, 0.0);
  EXPECT_NEAR(report.diagnostics.pinv_norm, 1.0 / report.diagnostics.sigma_min, 1e-9);
}

TEST(RecoverSparseTest, ValidatesInputs) {
  Fixture f = PlusFixture({1});
  BasisSystem basis = BasisSystem::Fourier(2);
  MeasurementMatrix a = BuildMeasurementMatrix(basis, {0.1, 0.2, 0.3});
  RecoveryPlan plan;
  plan.basis = basis;
  plan.m = 3;
  std::vector<Estimate> obs = ExactObservations(f, a.points);
  EXPECT_THROW(RecoverSparse(plan, {}, obs, a), ArgumentError);
  EXPECT_THROW(RecoverSparse(plan, {0, 0}, obs, a), ArgumentError);
  EXPECT_THROW(RecoverSparse(plan, {0}, {obs[0]}, a), ArgumentError);
  MeasurementMatrix twin = BuildMeasurementMatrix(basis, {0.5, 0.5, 0.5});
  EXPECT_THROW(RecoverSparse(plan, {0, 1}, obs, twin), SingularMatrixError);
}

TEST(RecoverSparseTest, ShadowsKeepSnapshotsUntilDensified) {
  Fixture f = PlusFixture({1});
  BasisSystem basis = BasisSystem::Fourier(1);
  MeasurementMatrix a = BuildMeasurementMatrix(basis, SampleMeasure(basis, 8, uint64_t{3}));
  RecoveryPlan plan;
  plan.basis = basis;
  plan.m = 8;
  Rng rng(4);
  Hamiltonian dense = f.h.ToHamiltonian();
  std::vector<Estimate> obs;
  for (double x : a.points) obs.emplace_back(AcquireShadows(Evolve(dense, f.rho0, x), 2000, rng));
  RecoveryReport report = RecoverFull(plan, obs, a);
  EXPECT_FALSE(report.has_dense_coefficients());
  EXPECT_TRUE(report.has_shadow_observations());
  ParametrizedOperator densified = report.Densify();
  PauliWord x = PauliWord::Parse("X");
  std::vector<Complex> traces = report.CoefficientPauliTraces(x);
  for (size_t k = 0; k < traces.size(); ++k) {
    Complex dense_trace = PauliTrace(x, densified.coeffs()[k]);
    EXPECT_NEAR(std::abs(traces[k] - dense_trace), 0.0, 1e-10);
  }
  // <X>(t) = cos t, so alpha_{+-1} carry Tr[X alpha] = 1/2 each.
  EXPECT_NEAR(traces[0].real(), 0.5, 0.1);
  EXPECT_NEAR(traces[2].real(), 0.5, 0.1);
}

TEST(ErrorBudgetTest, ExactRecoveryErrorIsWithinBudget) {
  // Truncating S drops part of alpha; the reconstruction error stays below
  // gamma_l2 + Delta gamma_l1 whenever Delta_2s(A / sqrt(M)) <= Delta.
  Fixture f = PlusFixture({1, 2});
  BasisSystem basis = BasisSystem::Fourier(3);
  ObservableSet obs = ObservableSet::LocalPaulis(2, 2);
  std::vector<int> s = {-1, 0, 1};
  int checked = 0;
  for (uint64_t seed = 0; seed < 20 && checked < 5; ++seed) {
    int m = 60;
    MeasurementMatrix a = BuildMeasurementMatrix(basis, SampleMeasure(basis, m, seed));
    double delta2s = RipConstantBruteForce(a.entries / std::sqrt(double(m)), 7).delta_s;
    if (delta2s > 0.5) continue;
    ++checked;
    RecoveryPlan plan;
    plan.basis = basis;
    plan.m = m;
    plan.attenuation = delta2s;
    RecoveryReport report = RecoverSparse(plan, s, ExactObservations(f, a.points), a);
    ErrorBudget budget = ComputeBudget(f.truth, s, obs, delta2s, 0.0);
    std::vector<Matrix> diffs;
    for (int k : basis.labels()) {
      Matrix est = report.Densify().HasLabel(k) ? report.Densify().Coefficient(k)
                                                 : Matrix::Zero(4, 4);
      diffs.push_back(est - f.truth.Coefficient(k));
    }
    double err = InducedLpVector(diffs, obs, LpOrder::kTwo).value();
    EXPECT_LE(err, budget.gamma_l2 + budget.spillover() + 1e-10);
  }
  EXPECT_GE(checked, 1);
}

TEST(ComputeBudgetTest, GammasFromTruth) {
  Fixture f = PlusFixture({1, 1});
  ObservableSet hs = ObservableSet::HilbertSchmidtBall(2);
  ErrorBudget b = ComputeBudget(f.truth, {-1, 0, 1}, hs, 0.5, 0.1);
  EXPECT_TRUE(b.gammas_known);
  // alpha_{+-2} = |11><00| / 4 and its adjoint; the best Hermitian O puts
  // weight 1/sqrt(2) on both off-diagonal corners.
  EXPECT_NEAR(b.gamma_l2, 0.25, 1e-12);
  EXPECT_NEAR(b.gamma_l1, SparsityDefect(f.truth, {-1, 0, 1}, hs, LpOrder::kOne).upper, 0.0);
  EXPECT_GE(b.gamma_l1 + 1e-12, 0.5 / std::sqrt(2.0));
  EXPECT_NEAR(b.Total(), b.gamma_l2 + 0.5 * b.gamma_l1 + 0.1, 1e-12);
}

TEST(DeviationBoundTest, Norms) {
  std::vector<double> e = {0.3, -0.4};
  EXPECT_DOUBLE_EQ(DeviationBound(e, LpOrder::kOne), 0.7);
  EXPECT_DOUBLE_EQ(DeviationBound(e, LpOrder::kTwo), 0.5);
  EXPECT_DOUBLE_EQ(DeviationBound(e, LpOrder::kInf), 0.4);
  EXPECT_THROW(DeviationBound({}, LpOrder::kOne), ArgumentError);
}

TEST(SupportRadiusTest, FormulaAndVacuousCase) {
  SupportRadius r = SubgaussianSupportRadius(2, 1.0, 1.0, 1e-3);
  double pre = std::pow(2.0, 5.0) * kPi;
  EXPECT_FALSE(r.vacuous);
  EXPECT_EQ(r.r, static_cast<int>(std::ceil(1.0 + std::sqrt(8.0 * std::log(pre / 1e-3)))));
  SupportRadius v = SubgaussianSupportRadius(2, 0.1, 1.0, 10.0);
  EXPECT_TRUE(v.vacuous);
  EXPECT_EQ(v.r, 2);
}

TEST(SupportRadiusTest, TailMassBelowGamma) {
  Rng rng(5);
  IntegerSpectrumHamiltonian h = IntegerSpectrumHamiltonian::FromWeights({1, 2, 4});
  double sigma = 0.8;
  double gamma = 0.05;
  SubgaussianState st = PrepareSubgaussianState(h, 3.0, sigma, rng);
  ParametrizedOperator alpha = FourierCoefficients(h, st.rho);
  SupportRadius r = SubgaussianSupportRadius(3, sigma, st.tau, gamma);
  double tail = 0.0;
  for (int k : alpha.support()) {
    if (std::abs(k) > r.r) tail += TraceNorm(alpha.Coefficient(k));
  }
  EXPECT_LE(tail, gamma);
}

TEST(ChebyshevCutoffTest, FormulaAndTail) {
  EXPECT_EQ(ChebyshevSupportCutoff(2, 1.0, 1e-3, 1.0), 15);
  EXPECT_EQ(ChebyshevSupportCutoff(2, 10.0, 1e-3, 1.0, 2), 30);
  EXPECT_DOUBLE_EQ(OmegaMaxFromInteraction(2, 0.5), 12.0);
  EXPECT_THROW(ChebyshevSupportCutoff(0, 1.0, 0.1, 1.0), ArgumentError);
}

}  // namespace
}  // namespace paramtomo
