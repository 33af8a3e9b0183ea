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

#include "paramtomo/channels.h"

#include <cmath>
#include <vector>

#include "gtest/gtest.h"
#include "paramtomo/errors.h"
#include "paramtomo/qsim.h"

namespace paramtomo {
namespace {

TEST(VectorizeTest, ColumnStackingRoundTrip) {
  Matrix x(2, 2);
  x << 1.0, 2.0, 3.0, 4.0;
  Vector v = Vectorize(x);
  EXPECT_EQ(v(1), Complex(3.0));
  EXPECT_EQ(v(2), Complex(2.0));
  EXPECT_TRUE(Unvectorize(v) == x);
}

TEST(SuperoperatorTest, KrausActionMatchesDirect) {
  Rng rng(41);
  Matrix u = RandomUnitary(4, rng);
  Matrix rho = RandomDensityMatrix(4, rng);
  EXPECT_TRUE(ChannelApply(UnitaryChannel(u), rho).isApprox(u * rho * u.adjoint(), 1e-12));
  EXPECT_TRUE(ChannelApply(IdentityChannel(2), rho).isApprox(rho));
  Matrix dep = ChannelApply(DepolarizingChannel(2, 1.0), rho);
  EXPECT_TRUE(dep.isApprox(Matrix::Identity(4, 4) / 4.0, 1e-12));
  EXPECT_THROW(ChannelApply(IdentityChannel(1), rho), ArgumentError);
}

TEST(SuperoperatorTest, RandomChannelsAreCptp) {
  Rng rng(42);
  for (int rank : {1, 2, 4}) {
    Matrix c = RandomChannel(2, rank, rng);
    EXPECT_TRUE(IsCptp(c));
    Matrix rho = RandomDensityMatrix(4, rng);
    EXPECT_TRUE(IsDensityOperator(ChannelApply(c, rho), 1e-10, 1e-10));
  }
  Matrix not_tp = 2.0 * IdentityChannel(1);
  EXPECT_FALSE(IsCptp(not_tp));
}

TEST(ChoiTest, RoundTripAndTrace) {
  Rng rng(43);
  Matrix c = RandomChannel(2, 3, rng);
  Matrix j = ChoiState(c);
  EXPECT_NEAR(j.trace().real(), 1.0, 1e-12);
  EXPECT_TRUE(SuperoperatorFromChoi(j).isApprox(c, 1e-12));
}

TEST(ChoiTest, PauliTransferRoutesAgree) {
  Rng rng(44);
  for (int trial = 0; trial < 10; ++trial) {
    Matrix c = RandomChannel(2, 2, rng);
    for (const PauliWord& p : AllPauliWords(2)) {
      for (const PauliWord& q : AllPauliWords(2)) {
        PauliTransferValue v = PauliTransferProbe(c, p, q);
        EXPECT_NEAR(v.direct, v.choi, 1e-12);
      }
    }
  }
}

TEST(PauliTransferMatrixTest, UnitalAndTracePreserving) {
  Rng rng(45);
  RealMatrix r = PauliTransferMatrix(RandomChannel(1, 2, rng));
  EXPECT_NEAR(r(0, 0), 1.0, 1e-12);
  for (int p = 1; p < 4; ++p) EXPECT_NEAR(r(0, p), 0.0, 1e-12);
  RealMatrix id = PauliTransferMatrix(IdentityChannel(1));
  EXPECT_TRUE(id.isApprox(RealMatrix::Identity(4, 4)));
}

TEST(TesterSeminormTest, MaxOverTesters) {
  Matrix zero = Matrix::Zero(2, 2);
  zero(0, 0) = 1.0;
  Matrix z = PauliMatrix(PauliWord::Parse("Z"));
  Matrix x = PauliMatrix(PauliWord::Parse("X"));
  double v = TesterSeminorm(IdentityChannel(1), {{zero, z}, {zero, x}});
  EXPECT_NEAR(v, 1.0, 1e-12);
}

TEST(AcquireChannelTest, Procedures) {
  Rng rng(46);
  Matrix c = RandomChannel(1, 2, rng);
  EXPECT_TRUE(AcquireChannel(ChannelProcedureKind::kExactOracle, c, 0, rng) == c);
  Matrix est = AcquireChannel(ChannelProcedureKind::kChoiPauliTomography, c, 50000, rng);
  EXPECT_LT((est - c).norm(), 0.1);
  EXPECT_THROW(AcquireChannel(ChannelProcedureKind::kPauliSparseLearning, c, 10, rng), CapabilityError);
  EXPECT_THROW(AcquireChannel(ChannelProcedureKind::kAverageCaseLocalLearning, c, 10, rng),
               CapabilityError);
}

TEST(RecoverChannelTest, ZRotationHasThreeFrequencies) {
  BasisSystem basis = BasisSystem::Fourier(2);
  MeasurementMatrix a = BuildMeasurementMatrix(basis, SampleMeasure(basis, 10, uint64_t{47}));
  std::vector<Matrix> obs;
  for (double x : a.points) obs.push_back(ZRotationChannel(x));
  RecoveryPlan plan;
  plan.basis = basis;
  plan.m = 10;
  RecoveryReport report;
  ParametrizedChannel ch = RecoverChannel(plan, {-1, 0, 1}, obs, a, &report);
  EXPECT_TRUE(report.is_channel);
  EXPECT_EQ(ch.n_qubits, 1);
  Rng rng(48);
  Matrix rho = RandomDensityMatrix(2, rng);
  for (double x : {0.0, 1.0, 4.0}) {
    EXPECT_LT((ch.Evaluate(x) - ZRotationChannel(x)).norm(), 1e-10);
    EXPECT_LT((ch.Apply(x, rho) - ChannelApply(ZRotationChannel(x), rho)).norm(), 1e-10);
  }
}

}  // namespace
}  // namespace paramtomo
