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

#include "paramtomo/qsim.h"

#include <cmath>
#include <vector>

#include "gtest/gtest.h"
#include "paramtomo/errors.h"
#include "paramtomo/pauli.h"

namespace paramtomo {
namespace {

Matrix PlusPlus() {
  Vector psi = Vector::Constant(4, Complex(0.5, 0.0));
  return psi * psi.adjoint();
}

TEST(QubitCountTest, PowersOfTwo) {
  EXPECT_EQ(QubitCount(1), 0);
  EXPECT_EQ(QubitCount(8), 3);
  EXPECT_THROW(QubitCount(6), ArgumentError);
}

TEST(IntegerSpectrumTest, FromWeights) {
  IntegerSpectrumHamiltonian h = IntegerSpectrumHamiltonian::FromWeights({1, 1});
  EXPECT_EQ(h.diagonal, (std::vector<int64_t>{0, 1, 1, 2}));
  EXPECT_EQ(h.e_max(), 2);
  IntegerSpectrumHamiltonian c =
      IntegerSpectrumHamiltonian::FromWeights({1, 2}, {{0, 3}, {0, 0}});
  EXPECT_EQ(c.diagonal, (std::vector<int64_t>{0, 2, 1, 6}));
  EXPECT_THROW(IntegerSpectrumHamiltonian::FromDiagonal({0, 1, 2}), ArgumentError);
  EXPECT_THROW(IntegerSpectrumHamiltonian::FromDiagonal({0, -1}), ArgumentError);
}

TEST(EvolveTest, ZeroTimeIsIdentity) {
  Rng rng(1);
  Matrix rho = RandomDensityMatrix(4, rng);
  Hamiltonian h(RandomHermitian(4, rng));
  EXPECT_TRUE(Evolve(h, rho, 0.0) == rho);
}

TEST(EvolveTest, PreservesDensityOperator) {
  Rng rng(2);
  Matrix rho = RandomDensityMatrix(8, rng);
  Hamiltonian h(RandomHermitian(8, rng));
  for (double t : {0.1, 1.0, 7.3}) EXPECT_TRUE(IsDensityOperator(Evolve(h, rho, t)));
}

TEST(EvolveTest, DiagonalHamiltonianPhases) {
  Hamiltonian h = Hamiltonian::Diagonal({0, 1, 1, 2});
  Matrix rho = Evolve(h, PlusPlus(), 0.4);
  EXPECT_NEAR(std::abs(rho(0, 1) - 0.25 * std::exp(Complex(0, 0.4))), 0.0, 1e-14);
  EXPECT_NEAR(std::abs(rho(0, 3) - 0.25 * std::exp(Complex(0, 0.8))), 0.0, 1e-14);
}

TEST(FourierCoefficientsTest, PlusPlusOnUnitWeights) {
  IntegerSpectrumHamiltonian h = IntegerSpectrumHamiltonian::FromDiagonal({0, 1, 1, 2});
  ParametrizedOperator alpha = FourierCoefficients(h, PlusPlus());
  EXPECT_EQ(alpha.support(), (std::vector<int>{-2, -1, 0, 1, 2}));
  // alpha_k collects the entries (a, b) with E_a - E_b = k.
  Matrix a2 = alpha.Coefficient(2);
  EXPECT_NEAR(std::abs(a2(3, 0) - 0.25), 0.0, 1e-15);
  EXPECT_NEAR(a2.norm(), 0.25, 1e-15);
  Matrix a0 = alpha.Coefficient(0);
  EXPECT_NEAR(a0.trace().real(), 1.0, 1e-15);
  EXPECT_NEAR(std::abs(a0(1, 2) - 0.25), 0.0, 1e-15);
  EXPECT_NEAR(alpha.Coefficient(1).norm(), 0.5, 1e-15);
  Matrix sum = Matrix::Zero(4, 4);
  for (int k = -2; k <= 2; ++k) sum += alpha.Coefficient(k);
  EXPECT_TRUE(sum.isApprox(PlusPlus()));
}

TEST(FourierCoefficientsTest, ReconstructsEvolution) {
  Rng rng(3);
  IntegerSpectrumHamiltonian h = IntegerSpectrumHamiltonian::FromWeights({1, 2, 3});
  Matrix rho = RandomDensityMatrix(8, rng);
  ParametrizedOperator alpha = FourierCoefficients(h, rho);
  Hamiltonian dense = h.ToHamiltonian();
  for (double t : {0.0, 0.5, 2.0, 6.0}) {
    EXPECT_LT((alpha.Evaluate(t) - Evolve(dense, rho, t)).norm(), 1e-12);
  }
}

TEST(ChebyshevCoefficientsTest, ReconstructsEvolution) {
  Rng rng(4);
  Hamiltonian h(RandomHermitian(4, rng));
  Matrix rho = RandomDensityMatrix(4, rng);
  double horizon = 2.0;
  ParametrizedOperator alpha = ChebyshevCoefficients(h, rho, horizon, 60);
  for (double x : {-1.0, -0.4, 0.0, 0.7, 1.0}) {
    EXPECT_LT((alpha.Evaluate(x) - Evolve(h, rho, horizon * x)).norm(), 1e-10);
  }
}

TEST(SpectralDecomposeTest, GroupsDegenerateEnergies) {
  SpectralDecomposition sd = SpectralDecompose(Hamiltonian::Diagonal({0, 1, 1, 2}));
  ASSERT_EQ(sd.energies.size(), 3u);
  EXPECT_NEAR(sd.projectors[1].trace().real(), 2.0, 1e-12);
  Matrix total = Matrix::Zero(4, 4);
  for (const Matrix& p : sd.projectors) total += p;
  EXPECT_TRUE(total.isApprox(Matrix::Identity(4, 4)));
}

TEST(SubgaussianStateTest, PopulationsWithinEnvelope) {
  Rng rng(6);
  IntegerSpectrumHamiltonian h = IntegerSpectrumHamiltonian::FromWeights({1, 2, 3});
  SubgaussianState st = PrepareSubgaussianState(h, 3.0, 1.0, rng);
  EXPECT_TRUE(IsDensityOperator(st.rho));
  EXPECT_NEAR(st.rho.trace().real(), 1.0, 1e-12);
  double total = 0.0;
  for (size_t i = 0; i < st.energies.size(); ++i) {
    double env = std::exp(-std::pow(st.energies[i] - 3.0, 2) / 2.0);
    EXPECT_LE(st.populations[i], st.tau * env * (1 + 1e-9));
    total += st.populations[i];
  }
  EXPECT_NEAR(total, 1.0, 1e-12);
}

TEST(PartialTraceTest, ProductState) {
  Rng rng(7);
  Matrix a = RandomDensityMatrix(2, rng);
  Matrix b = RandomDensityMatrix(4, rng);
  Matrix ab = Kron(a, b);
  EXPECT_TRUE(PartialTrace(ab, {0}).isApprox(a, 1e-12));
  EXPECT_TRUE(PartialTrace(ab, {1, 2}).isApprox(b, 1e-12));
}

TEST(CrossTermTest, LemmaHoldsOnRandomStates) {
  Rng rng(8);
  Matrix p1 = Matrix::Zero(8, 8);
  Matrix p2 = Matrix::Zero(8, 8);
  for (int i = 0; i < 3; ++i) p1(i, i) = 1.0;
  for (int i = 3; i < 8; ++i) p2(i, i) = 1.0;
  for (int trial = 0; trial < 50; ++trial) {
    Matrix rho = RandomDensityMatrix(8, rng);
    auto [lhs, rhs] = ProjectorCrossTermCheck(rho, p1, p2);
    EXPECT_LE(lhs, rhs + 1e-12);
  }
  EXPECT_THROW(ProjectorCrossTermCheck(Matrix::Identity(8, 8), p1, p1), ArgumentError);
}

TEST(RandomObjectsTest, UnitaryAndDensity) {
  Rng rng(9);
  Matrix u = RandomUnitary(8, rng);
  EXPECT_TRUE((u.adjoint() * u).isApprox(Matrix::Identity(8, 8), 1e-12));
  Matrix rho = RandomDensityMatrix(8, rng, 2);
  EXPECT_TRUE(IsDensityOperator(rho));
  EXPECT_NEAR(std::abs((rho * rho).trace().real()), (rho * rho).trace().real(), 1e-12);
  EXPECT_LT(HermiticityDefect(RandomHermitian(5, rng)), 1e-15);
}

}  // namespace
}  // namespace paramtomo
