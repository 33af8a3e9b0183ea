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

#ifndef PARAMTOMO_EXPERIMENT_H_
#define PARAMTOMO_EXPERIMENT_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "paramtomo/parametrized_operator.h"
#include "paramtomo/recovery.h"
#include "paramtomo/serialization.h"
#include "paramtomo/suppid.h"
#include "paramtomo/tomo.h"

namespace paramtomo {

// End-to-end experiment configuration. The file format is JSON; the grammar
// is documented in README.md. Every run is determined by (config, seed).

enum class ExperimentKind { kNmr, kFermion, kSupportId, kAudit };
enum class RunMode { kEmpirical, kTheorem };

struct SystemConfig {
  // NMR: integer-spectrum Hamiltonian E(b) = sum w_q b_q + sum c_qr b_q b_r
  // with a sub-Gaussian initial state.
  int n = 3;
  std::vector<int64_t> weights;                  // default all ones
  std::vector<std::vector<int64_t>> couplings;   // optional n x n
  std::optional<double> e0;                      // default e_max / 2
  double sigma = 1.0;
  // Fermion: random skew-symmetric F with |F_ab| <= J, evolution up to the
  // horizon T, and a product initial state.
  int n_modes = 2;
  double interaction = 1.0;
  double horizon = 1.0;
  std::string initial_state = "plus";  // "plus", "zero" or "random"
};

struct TomographyConfig {
  TomographyKind kind = TomographyKind::kExactOracle;
  double epsilon = 0.2;
  double delta = 0.1;
  // Explicit per-point shots (snapshots or shots per Pauli); 0 uses the
  // procedure's own sample count at (epsilon', delta').
  int64_t shots = 0;
  int ell = 2;
};

struct RecoveryConfig {
  RunMode mode = RunMode::kEmpirical;
  int m = 0;  // 0: 2|S| (empirical) or the sample-count formula (theorem)
  double attenuation = 1.0;
  std::vector<int> support;  // explicit S; otherwise derived from the system
  int s = 0;                 // sparsity for support identification
  FormulaVariant variant = FormulaVariant::kAlgorithm1;
  double gamma = 1e-3;       // tail target for the support radius / cutoff
  int guard = 0;             // extra Chebyshev labels beyond the cutoff
  bool certify = true;       // brute-force Delta_3s(A/sqrt(M)) when feasible
  int64_t probes = 0;        // support identification L; 0 uses ProbeCount
  double kappa = 0.0;
};

struct PredictConfig {
  std::string report;        // recovery report JSON path
  std::string coefficients;  // coefficient sidecar path
};

struct ExperimentConfig {
  ExperimentKind kind = ExperimentKind::kNmr;
  uint64_t seed = 0;
  SystemConfig system;
  TomographyConfig tomography;
  RecoveryConfig recovery;
  PredictConfig predict;
  std::vector<std::string> observables;  // Pauli strings; empty uses defaults
  int grid_points = 101;
  std::string out_dir = "out";
};

// Parses and validates a configuration. Throws ConfigError naming the field
// path (e.g. "recovery.m") or the line and column of a syntax error.
ExperimentConfig ParseConfig(const std::string& text);
ExperimentConfig LoadConfig(const std::string& path);

// Theorem-mode runs refuse when M times the per-point sample count exceeds
// this many snapshots.
inline constexpr double kTheoremWorkCap = 5e8;

struct ExperimentResult {
  std::string name;  // "nmr", "fermion", "support_id"
  std::string summary_json;
  std::vector<TrajectoryRow> trajectory;
  std::optional<RecoveryReport> report;
  std::optional<SupportEstimate> support_estimate;
  // Largest |predicted - exact| over the grid and tracked observables.
  double max_grid_error = 0.0;
  // ||alpha - alpha_hat||_{O,2} on the tracked Pauli list and its bound
  // gamma_l2 + Delta gamma_l1 + epsilon.
  double coefficient_error = 0.0;
  double error_bound = 0.0;
  bool guarantee_met = false;
};

ExperimentResult RunNmr(const ExperimentConfig& config);
ExperimentResult RunFermion(const ExperimentConfig& config);
ExperimentResult RunSupportId(const ExperimentConfig& config);
// Evaluates a stored report on the configured observables and grid.
ExperimentResult RunPredict(const ExperimentConfig& config);

// Writes <name>_summary.json, <name>_trajectory.csv and, when a report is
// present, <name>_report.json with its <name>_coefficients.bin sidecar.
// Creates the directory if needed; throws IoError on failure.
void WriteExperimentOutputs(const ExperimentResult& result,
                            const std::string& out_dir);

}  // namespace paramtomo

#endif  // PARAMTOMO_EXPERIMENT_H_
