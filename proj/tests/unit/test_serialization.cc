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

#include "paramtomo/serialization.h"

#include <cmath>
#include <filesystem>
#include <limits>
#include <sstream>
#include <string>

#include "gtest/gtest.h"
#include "paramtomo/errors.h"
#include "paramtomo/qsim.h"

namespace paramtomo {
namespace {

ShadowData SampleShadows() {
  Rng rng(51);
  return AcquireShadows(RandomDensityMatrix(8, rng), 100, rng);
}

TEST(FormatDoubleTest, RoundTrips) {
  for (double v : {0.1, 1.0 / 3.0, -2.5e-300, 6.02214076e23, 0.0}) {
    EXPECT_EQ(std::stod(FormatDouble(v)), v);
  }
}

TEST(ShadowJsonTest, RoundTrip) {
  ShadowData data = SampleShadows();
  ShadowData back = ShadowFromJson(ShadowToJson(data));
  EXPECT_EQ(back.n_qubits, 3);
  EXPECT_EQ(back.snapshots, data.snapshots);
}

TEST(ShadowJsonTest, MalformedInputThrows) {
  EXPECT_THROW(ShadowFromJson("{"), IoError);
  EXPECT_THROW(ShadowFromJson(R"({"format": "other", "version": 1})"), IoError);
  EXPECT_THROW(ShadowFromJson(
                   R"({"format": "paramtomo.shadow", "version": 1, "n_qubits": 1,
                       "bases": [[3]], "outcomes": [0]})"),
               IoError);
}

TEST(ShadowBinaryTest, RoundTripAndHeader) {
  ShadowData data = SampleShadows();
  std::stringstream buf;
  WriteShadowBinary(buf, data);
  std::string bytes = buf.str();
  EXPECT_EQ(bytes.substr(0, 4), "PTSH");
  EXPECT_EQ(bytes.size(), 4u + 4 + 4 + 8 + 100 * (3 + 4));
  std::stringstream in(bytes);
  EXPECT_EQ(ReadShadowBinary(in).snapshots, data.snapshots);
  std::stringstream bad("XXXX");
  EXPECT_THROW(ReadShadowBinary(bad), IoError);
  std::stringstream truncated(bytes.substr(0, 30));
  EXPECT_THROW(ReadShadowBinary(truncated), IoError);
}

TEST(SidecarTest, RoundTripIsBitExact) {
  Rng rng(52);
  IntegerSpectrumHamiltonian h = IntegerSpectrumHamiltonian::FromWeights({1, 2});
  ParametrizedOperator op = FourierCoefficients(h, RandomDensityMatrix(4, rng));
  std::stringstream buf;
  WriteCoefficientSidecar(buf, op);
  EXPECT_EQ(buf.str().substr(0, 4), "PTCF");
  ParametrizedOperator back = ReadCoefficientSidecar(buf);
  EXPECT_EQ(back.support(), op.support());
  EXPECT_TRUE(back.basis() == op.basis());
  for (int i = 0; i < op.size(); ++i) EXPECT_TRUE(back.coeffs()[i] == op.coeffs()[i]);
  std::stringstream bad("PTCF\x09\x00\x00\x00");
  EXPECT_THROW(ReadCoefficientSidecar(bad), IoError);
}

TEST(ReportJsonTest, RoundTripKeepsPredictions) {
  IntegerSpectrumHamiltonian h = IntegerSpectrumHamiltonian::FromWeights({1, 1});
  Vector psi = Vector::Constant(4, Complex(0.5, 0.0));
  Matrix rho0 = psi * psi.adjoint();
  BasisSystem basis = BasisSystem::Fourier(2);
  MeasurementMatrix a = BuildMeasurementMatrix(basis, SampleMeasure(basis, 10, uint64_t{53}));
  RecoveryPlan plan;
  plan.basis = basis;
  plan.m = 10;
  std::vector<Estimate> obs;
  for (double x : a.points) obs.emplace_back(Evolve(h.ToHamiltonian(), rho0, x));
  RecoveryReport report = RecoverFull(plan, obs, a);
  std::string text = RecoveryReportToJson(report, "coeffs.bin");
  EXPECT_NE(text.find("coeffs.bin"), std::string::npos);
  RecoveryReport back = RecoveryReportFromJson(text, report.Densify());
  EXPECT_EQ(back.support, report.support);
  EXPECT_EQ(back.points, report.points);
  EXPECT_EQ(back.plan.m, 10);
  EXPECT_DOUBLE_EQ(back.budget.Total(), report.budget.Total());
  ASSERT_TRUE(back.has_dense_coefficients());
  EXPECT_THROW(RecoveryReportFromJson("[]", report.Densify()), IoError);
}

TEST(SupportEstimateJsonTest, RoundTrip) {
  SupportEstimate est;
  est.support = {-1, 2};
  est.labels = {-2, -1, 0, 1, 2};
  est.xhat = RealVector::LinSpaced(5, 0.1, 0.5);
  est.probes = 17;
  est.gap = 0.25;
  est.seed = 123456789012345ULL;
  est.warnings = {"uncertified"};
  SupportEstimate back = SupportEstimateFromJson(SupportEstimateToJson(est));
  EXPECT_EQ(back.support, est.support);
  EXPECT_EQ(back.labels, est.labels);
  EXPECT_TRUE(back.xhat == est.xhat);
  EXPECT_EQ(back.probes, 17);
  EXPECT_EQ(back.seed, est.seed);
  EXPECT_EQ(back.warnings, est.warnings);
}

TEST(TrajectoryCsvTest, HeaderAndEmptyStderr) {
  std::stringstream out;
  WriteTrajectoryCsv(out, {{0.5, "XI", 0.25, std::nullopt}, {1.0, "ZZ", -1.0, 0.01}});
  std::string text = out.str();
  EXPECT_EQ(text.substr(0, text.find('\n')), "x,observable_id,estimate,stderr");
  EXPECT_NE(text.find("0.5,XI,0.25,\n"), std::string::npos);
  EXPECT_NE(text.find("1,ZZ,-1,0.01\n"), std::string::npos);
}

TEST(TextFileTest, IoErrors) {
  EXPECT_THROW(ReadTextFile("/nonexistent/dir/file.json"), IoError);
  EXPECT_THROW(WriteTextFile("/nonexistent/dir/file.json", "x"), IoError);
  std::string path = (std::filesystem::temp_directory_path() / "paramtomo_text_test.txt").string();
  WriteTextFile(path, "hello");
  EXPECT_EQ(ReadTextFile(path), "hello");
  std::filesystem::remove(path);
}

}  // namespace
}  // namespace paramtomo
