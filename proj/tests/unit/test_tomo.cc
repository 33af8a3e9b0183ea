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

#include "paramtomo/tomo.h"

#include <cmath>
#include <variant>

#include "gtest/gtest.h"
#include "paramtomo/errors.h"
#include "paramtomo/qsim.h"

namespace paramtomo {
namespace {

TEST(SnapshotTest, BitLayout) {
  Snapshot s{0b0010, 0b01};  // qubit 0 basis X, qubit 1 basis Z; qubit 1 outcome -1
  EXPECT_EQ(s.Basis(0, 2), 0);
  EXPECT_EQ(s.Basis(1, 2), 2);
  EXPECT_EQ(s.Outcome(0, 2), 0);
  EXPECT_EQ(s.Outcome(1, 2), 1);
}

TEST(SnapshotEstimateTest, MatchAndMismatch) {
  Snapshot s{0b0010, 0b01};
  EXPECT_DOUBLE_EQ(SnapshotEstimate(s, PauliWord::Parse("XZ")), -9.0);
  EXPECT_DOUBLE_EQ(SnapshotEstimate(s, PauliWord::Parse("XI")), 3.0);
  EXPECT_DOUBLE_EQ(SnapshotEstimate(s, PauliWord::Parse("YI")), 0.0);
  EXPECT_DOUBLE_EQ(SnapshotEstimate(s, PauliWord::Parse("II")), 1.0);
}

TEST(ShadowDataTest, ValidateRejectsBadCodes) {
  ShadowData d{1, {Snapshot{3, 0}}};
  EXPECT_THROW(d.Validate(), ArgumentError);
  ShadowData hi{1, {Snapshot{0, 2}}};
  EXPECT_THROW(hi.Validate(), ArgumentError);
}

TEST(ShadowsTest, UnbiasedOnAverage) {
  Rng rng(31);
  Matrix rho = RandomDensityMatrix(4, rng);
  ShadowData data = AcquireShadows(rho, 200000, rng);
  for (const PauliWord& w : LocalPauliWords(2, 2)) {
    double truth = PauliTrace(w, rho).real();
    double est = ShadowExpectation(data, w);
    double se = ShadowStandardError(data, w);
    EXPECT_LT(std::abs(est - truth), 5.0 * se + 1e-3) << w.ToString();
  }
}

TEST(ShadowsTest, DensifiedShadowMatchesPauliMeans) {
  Rng rng(32);
  Matrix rho = RandomDensityMatrix(4, rng);
  ShadowData data = AcquireShadows(rho, 3000, rng);
  Matrix dense = DensifyShadow(data);
  EXPECT_NEAR(dense.trace().real(), 1.0, 1e-12);
  for (const PauliWord& w : AllPauliWords(2)) {
    EXPECT_NEAR(PauliTrace(w, dense).real(), ShadowExpectation(data, w), 1e-10);
    EXPECT_NEAR(EstimatePauliExpectation(Estimate(data), w), ShadowExpectation(data, w), 1e-12);
  }
}

TEST(ShadowsTest, MedianOfMeansBatches) {
  Rng rng(33);
  ShadowData data = AcquireShadows(RandomDensityMatrix(2, rng), 99, rng);
  EXPECT_NO_THROW(ShadowExpectation(data, PauliWord::Parse("Z"), 9));
  EXPECT_THROW(ShadowExpectation(data, PauliWord::Parse("Z"), 0), ArgumentError);
  EXPECT_THROW(ShadowExpectation(data, PauliWord::Parse("Z"), 100), ArgumentError);
}

TEST(FullTomographyTest, ConvergesAndIsPhysical) {
  Rng rng(34);
  Matrix rho = RandomDensityMatrix(4, rng);
  Matrix est = FullPauliTomography(rho, 20000, rng);
  EXPECT_TRUE(IsDensityOperator(est, 1e-9, 1e-9));
  EXPECT_LT((est - rho).norm(), 0.05);
}

TEST(ProjectToDensityTest, FixesNegativeEigenvalue) {
  Matrix h = Matrix::Zero(2, 2);
  h(0, 0) = 1.2;
  h(1, 1) = -0.2;
  Matrix p = ProjectToDensityMatrix(h);
  EXPECT_NEAR(p(0, 0).real(), 1.0, 1e-12);
  EXPECT_NEAR(p(1, 1).real(), 0.0, 1e-12);
}

TEST(AcquireTest, ExactOracleAndValidation) {
  Rng rng(35);
  Matrix rho = RandomDensityMatrix(2, rng);
  TomographicProcedure exact;
  Estimate e = Acquire(exact, rho, 0.1, 0.1, rng);
  ASSERT_TRUE(std::holds_alternative<Matrix>(e));
  EXPECT_TRUE(std::get<Matrix>(e) == rho);
  EXPECT_THROW(Acquire(exact, rho, 0.0, 0.1, rng), ArgumentError);
  EXPECT_THROW(Acquire(exact, rho, 0.1, 1.0, rng), ArgumentError);
  TomographicProcedure shadows{TomographyKind::kLocalCliffordShadows, 1, kDefaultShadowC0, 50};
  Estimate s = Acquire(shadows, rho, 0.1, 0.1, rng);
  ASSERT_TRUE(std::holds_alternative<ShadowData>(s));
  EXPECT_EQ(std::get<ShadowData>(s).snapshots.size(), 50u);
}

TEST(SampleCountTest, Formulas) {
  EXPECT_EQ(ShadowSampleCount(0.5, 0.1, 4, 1, 1.0),
            static_cast<int64_t>(std::ceil(12.0 / 0.25 * std::log(40.0))));
  EXPECT_EQ(FullTomographyShotsPerPauli(0.5, 0.1, 1),
            static_cast<int64_t>(std::ceil(2 * 4 * std::log(80.0) / 0.25)));
  EXPECT_EQ(FermionicShadowSampleCount(0.5, 0.1, 4, 2),
            static_cast<int64_t>(std::ceil(16 * std::pow(2.0, 1.5) / 0.25 * std::log(40.0))));
  EXPECT_DOUBLE_EQ(ShadowNormBound(PauliMatrix(PauliWord::Parse("XZ")), 2), 16.0);
}

TEST(SampleCountTest, PauliListHoeffdingCount) {
  EXPECT_EQ(ShadowPauliListSampleCount(0.1, 0.01, 2, 36),
            static_cast<int64_t>(std::ceil(2.0 * 81.0 / 0.01 * std::log(7200.0))));
  EXPECT_EQ(ShadowPauliListSampleCount(0.5, 0.5, 0, 1), 12);
  EXPECT_THROW(ShadowPauliListSampleCount(0.1, 0.01, 2, 0), ArgumentError);
}

TEST(SampleCountTest, ShadowCountScalesInverseSquare) {
  int64_t a = ShadowSampleCount(0.2, 0.1, 3, 2);
  int64_t b = ShadowSampleCount(0.1, 0.1, 3, 2);
  EXPECT_NEAR(static_cast<double>(b) / a, 4.0, 1e-3);
}

}  // namespace
}  // namespace paramtomo
