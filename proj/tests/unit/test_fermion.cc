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

#include "paramtomo/fermion.h"

#include <algorithm>
#include <cmath>
#include <vector>

#include "gtest/gtest.h"
#include "paramtomo/errors.h"
#include "paramtomo/pauli.h"
#include "paramtomo/qsim.h"

namespace paramtomo {
namespace {

std::vector<double> SortedEigenvalues(const Matrix& h) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(h);
  std::vector<double> ev(es.eigenvalues().data(), es.eigenvalues().data() + h.rows());
  std::sort(ev.begin(), ev.end());
  return ev;
}

TEST(MajoranaTest, Anticommutation) {
  std::vector<Matrix> g = MajoranaOperators(3);
  ASSERT_EQ(g.size(), 6u);
  for (int a = 0; a < 6; ++a) {
    for (int b = 0; b < 6; ++b) {
      Matrix ac = g[a] * g[b] + g[b] * g[a];
      Matrix expected = (a == b ? 2.0 : 0.0) * Matrix::Identity(8, 8);
      EXPECT_LT((ac - expected).norm(), 1e-12) << a << "," << b;
    }
  }
}

TEST(FermionHamiltonianTest, RejectsNonSkew) {
  RealMatrix f = RealMatrix::Zero(2, 2);
  f(0, 1) = 1.0;
  EXPECT_THROW(FermionicGaussianHamiltonian{f}, ArgumentError);
  EXPECT_THROW(FermionicGaussianHamiltonian{RealMatrix::Zero(3, 3)}, ArgumentError);
}

TEST(FermionHamiltonianTest, SingleModeSpectrum) {
  double lambda = 0.8;
  RealMatrix f = RealMatrix::Zero(2, 2);
  f(0, 1) = lambda / 2.0;
  f(1, 0) = -lambda / 2.0;
  FermionicGaussianHamiltonian h(f);
  std::vector<double> ev = SortedEigenvalues(JordanWigner(h));
  EXPECT_NEAR(ev[0], -lambda, 1e-12);
  EXPECT_NEAR(ev[1], lambda, 1e-12);
  std::vector<double> spec = FermionSpectrum(h);
  EXPECT_NEAR(spec[0], -lambda, 1e-12);
  EXPECT_NEAR(spec[1], lambda, 1e-12);
}

TEST(FermionHamiltonianTest, SpectrumMatchesDense) {
  Rng rng(12);
  for (int trial = 0; trial < 5; ++trial) {
    FermionicGaussianHamiltonian h(RandomSkewSymmetric(3, 1.0, rng));
    Matrix dense = JordanWigner(h);
    EXPECT_LT(HermiticityDefect(dense), 1e-12);
    std::vector<double> ev = SortedEigenvalues(dense);
    std::vector<double> spec = FermionSpectrum(h);
    ASSERT_EQ(ev.size(), spec.size());
    for (size_t i = 0; i < ev.size(); ++i) EXPECT_NEAR(ev[i], spec[i], 1e-10);
    EXPECT_NEAR(OperatorNorm(dense), h.TraceNormF(), 1e-10);
    EXPECT_NEAR(ev.back() - ev.front(), h.OmegaMax(), 1e-10);
  }
}

TEST(FermionHamiltonianTest, RandomInteractionStrength) {
  Rng rng(13);
  FermionicGaussianHamiltonian h(RandomSkewSymmetric(3, 0.7, rng));
  EXPECT_NEAR(h.interaction_strength(), 0.7, 1e-15);
}

TEST(TimeReversalTest, FlipsGenericHamiltonian) {
  Rng rng(14);
  for (int trial = 0; trial < 5; ++trial) {
    FermionicGaussianHamiltonian h(RandomSkewSymmetric(3, 1.0, rng));
    Matrix dense = JordanWigner(h);
    Matrix v = TimeReversalUnitary(h);
    EXPECT_TRUE((v.adjoint() * v).isApprox(Matrix::Identity(8, 8), 1e-10));
    EXPECT_LT((v * dense * v.adjoint() + dense).norm(), 1e-9);
  }
}

TEST(TimeReversalTest, GlobalFlipOnlyForOnSiteTerms) {
  // F coupling gamma_j with gamma_{n+j} only gives H = sum_j lambda_j Z_j.
  RealMatrix onsite = RealMatrix::Zero(4, 4);
  onsite(0, 2) = 0.3;
  onsite(2, 0) = -0.3;
  onsite(1, 3) = 0.9;
  onsite(3, 1) = -0.9;
  FermionicGaussianHamiltonian h(onsite);
  Matrix dense = JordanWigner(h);
  Matrix x = GlobalXFlip(2);
  EXPECT_LT((x * dense * x + dense).norm(), 1e-12);

  // A hopping term spoils the global flip; the normal-mode unitary still works.
  RealMatrix hop = RealMatrix::Zero(2, 2);
  hop(0, 0) = 0.5;
  hop(0, 1) = hop(1, 0) = 0.7;
  hop(1, 1) = -0.2;
  FermionicGaussianHamiltonian hh(HoppingToMajorana(hop));
  EXPECT_TRUE(hh.IsParticlePreserving());
  Matrix dh = JordanWigner(hh);
  EXPECT_GT((x * dh * x + dh).norm(), 1e-3);
  Matrix v = TimeReversalUnitary(hh);
  EXPECT_LT((v * dh * v.adjoint() + dh).norm(), 1e-9);
}

TEST(TimeReversalTest, EvolveSignedMatchesBackwardEvolution) {
  Rng rng(15);
  FermionicGaussianHamiltonian fh(RandomSkewSymmetric(2, 1.0, rng));
  Hamiltonian h(JordanWigner(fh));
  Matrix v = TimeReversalUnitary(fh);
  Matrix rho = RandomDensityMatrix(4, rng);
  for (double t : {-1.5, -0.2, 0.0, 0.9}) {
    EXPECT_LT((EvolveSigned(h, v, rho, t) - Evolve(h, rho, t)).norm(), 1e-10);
  }
}

TEST(JordanWignerTest, DenseLimit) {
  Rng rng(16);
  FermionicGaussianHamiltonian h(RandomSkewSymmetric(3, 1.0, rng));
  EXPECT_THROW(JordanWigner(h, 2), ArgumentError);
}

}  // namespace
}  // namespace paramtomo
