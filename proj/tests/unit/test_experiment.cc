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

#include "paramtomo/experiment.h"

#include <filesystem>
#include <string>

#include "gtest/gtest.h"
#include "paramtomo/errors.h"

namespace paramtomo {
namespace {

std::string ConfigError_(const std::string& text) {
  try {
    ParseConfig(text);
  } catch (const ConfigError& e) {
    return e.what();
  }
  return "";
}

TEST(ParseConfigTest, Defaults) {
  ExperimentConfig c = ParseConfig(R"({"experiment": "nmr"})");
  EXPECT_EQ(c.kind, ExperimentKind::kNmr);
  EXPECT_EQ(c.grid_points, 101);
  EXPECT_EQ(c.tomography.kind, TomographyKind::kExactOracle);
  EXPECT_EQ(c.recovery.mode, RunMode::kEmpirical);
}

TEST(ParseConfigTest, FullDocument) {
  ExperimentConfig c = ParseConfig(R"({
    "experiment": "fermion", "seed": 11,
    "system": {"n_modes": 2, "interaction": 0.5, "horizon": 2.0, "initial_state": "zero"},
    "tomography": {"procedure": "shadows", "epsilon": 0.3, "delta": 0.05, "shots": 100, "ell": 1},
    "recovery": {"mode": "theorem", "m": 20, "gamma": 0.01, "guard": 2, "formula_variant": "corollary"},
    "observables": ["ZI", "IZ"], "grid_points": 11, "out_dir": "x"})");
  EXPECT_EQ(c.kind, ExperimentKind::kFermion);
  EXPECT_EQ(c.seed, 11u);
  EXPECT_DOUBLE_EQ(c.system.horizon, 2.0);
  EXPECT_EQ(c.system.initial_state, "zero");
  EXPECT_EQ(c.tomography.kind, TomographyKind::kLocalCliffordShadows);
  EXPECT_EQ(c.tomography.shots, 100);
  EXPECT_EQ(c.recovery.mode, RunMode::kTheorem);
  EXPECT_EQ(c.recovery.variant, FormulaVariant::kCorollary);
  EXPECT_EQ(c.recovery.guard, 2);
  EXPECT_EQ(c.observables.size(), 2u);
}

TEST(ParseConfigTest, ErrorsNameTheField) {
  EXPECT_NE(ConfigError_(R"({"experiment": "nmr", "recovery": {"m": -3}})").find("recovery.m"),
            std::string::npos);
  EXPECT_NE(ConfigError_(R"({"experiment": "nmr", "bogus": 1})").find("bogus"), std::string::npos);
  EXPECT_NE(ConfigError_(R"({"experiment": "nmr", "tomography": {"procedure": "magic"}})")
                .find("tomography.procedure"),
            std::string::npos);
  EXPECT_NE(ConfigError_(R"({"experiment": "nmr", "observables": ["XQ"]})").find("observables"),
            std::string::npos);
  EXPECT_NE(ConfigError_(R"({"experiment": "teleport"})").find("experiment"), std::string::npos);
  EXPECT_NE(ConfigError_("{\n  \"experiment\": \n}").find("line"), std::string::npos);
}

TEST(LoadConfigTest, MissingFileIsIoError) {
  EXPECT_THROW(LoadConfig("/nonexistent/config.json"), IoError);
}

ExperimentConfig SmallNmr() {
  ExperimentConfig c = ParseConfig(R"({
    "experiment": "nmr", "seed": 3,
    "system": {"n": 2, "weights": [1, 2], "sigma": 1.0},
    "tomography": {"procedure": "exact"},
    "grid_points": 16})");
  return c;
}

TEST(RunNmrTest, ExactOracleIsAccurate) {
  ExperimentResult r = RunNmr(SmallNmr());
  EXPECT_EQ(r.name, "nmr");
  ASSERT_TRUE(r.report.has_value());
  EXPECT_LT(r.max_grid_error, 1e-9);
  EXPECT_TRUE(r.guarantee_met);
  EXPECT_FALSE(r.trajectory.empty());
}

TEST(RunNmrTest, DeterministicInSeed) {
  ExperimentResult a = RunNmr(SmallNmr());
  ExperimentResult b = RunNmr(SmallNmr());
  EXPECT_EQ(a.summary_json, b.summary_json);
}

TEST(RunFermionTest, ExactOracleIsAccurate) {
  ExperimentConfig c = ParseConfig(R"({
    "experiment": "fermion", "seed": 4,
    "system": {"n_modes": 1, "interaction": 0.5, "horizon": 1.0},
    "tomography": {"procedure": "exact"}, "grid_points": 9})");
  ExperimentResult r = RunFermion(c);
  EXPECT_LT(r.max_grid_error, 1e-6);
  EXPECT_TRUE(r.guarantee_met);
}

TEST(RunSupportIdTest, FindsSupport) {
  ExperimentConfig c = ParseConfig(R"({
    "experiment": "support_id", "seed": 5,
    "system": {"n": 2, "weights": [1, 3], "sigma": 0.5},
    "tomography": {"procedure": "exact"},
    "recovery": {"s": 3, "probes": 60}})");
  ExperimentResult r = RunSupportId(c);
  ASSERT_TRUE(r.support_estimate.has_value());
  EXPECT_EQ(r.support_estimate->support.size(), 3u);
  EXPECT_TRUE(r.guarantee_met);
}

TEST(WriteOutputsTest, FilesAndPredictRoundTrip) {
  std::filesystem::path dir = std::filesystem::temp_directory_path() / "paramtomo_experiment_test";
  std::filesystem::remove_all(dir);
  ExperimentResult r = RunNmr(SmallNmr());
  WriteExperimentOutputs(r, dir.string());
  for (const char* f : {"nmr_summary.json", "nmr_trajectory.csv", "nmr_report.json", "nmr_coefficients.bin"}) {
    EXPECT_TRUE(std::filesystem::exists(dir / f)) << f;
  }
  ExperimentConfig p = SmallNmr();
  p.predict.report = (dir / "nmr_report.json").string();
  p.predict.coefficients = (dir / "nmr_coefficients.bin").string();
  ExperimentResult pred = RunPredict(p);
  ASSERT_EQ(pred.trajectory.size(), r.trajectory.size());
  for (size_t i = 0; i < r.trajectory.size(); ++i) {
    EXPECT_NEAR(pred.trajectory[i].estimate, r.trajectory[i].estimate, 1e-12);
  }
  std::filesystem::remove_all(dir);
  EXPECT_THROW(WriteExperimentOutputs(r, "/proc/paramtomo_cannot_write"), IoError);
}

}  // namespace
}  // namespace paramtomo
