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

#ifndef PARAMTOMO_SUPPID_H_
#define PARAMTOMO_SUPPID_H_

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "paramtomo/bos.h"
#include "paramtomo/csolve.h"
#include "paramtomo/parametrized_operator.h"
#include "paramtomo/tomo.h"
#include "paramtomo/types.h"

namespace paramtomo {

// Default recovery-guarantee constants in
// ||c - c#||_2 <= D1 sigma_s(c)_1 / sqrt(s) + D2 eta. These are placeholders
// for the unspecified solver constants and can be overridden.
inline constexpr double kDefaultD1 = 3.0;
inline constexpr double kDefaultD2 = 6.0;

// Tolerance added to 1 + kappa when checking HTP output coefficients.
inline constexpr double kCoefficientBoundSlack = 1e-8;
// Entries of the exact solution below this fraction of its largest entry
// (or of 1) are ignored when checking the local support assumption.
inline constexpr double kLocalAssumptionTolerance = 1e-9;

struct SupportEstimate {
  std::vector<int> support;  // argtop-s of xhat, ascending labels
  std::vector<int> labels;   // every basis label, aligned with xhat
  RealVector xhat;           // X_hat_k = sqrt(mean_l |c#_k(P_l)|^2)
  int64_t probes = 0;        // L
  double gap = 0.0;          // min_{k in S} X_hat_k - max_{k not in S} X_hat_k
  uint64_t seed = 0;
  // HTP outputs exceeding 1 + kappa (solver anomalies).
  int64_t coefficient_bound_violations = 0;
  double max_abs_coefficient = 0.0;
  // Fraction of probes whose HTP support contains every significant entry
  // among the top-s entries of the unique least-squares solution; -1 when A
  // has fewer rows than columns.
  double local_assumption_fraction = -1.0;
  std::vector<std::string> warnings;
};

// L = ceil(ln(2D/delta) (1 + kappa)^2 / (2 epsilon^4)).
int64_t ProbeCount(int d, double delta, double epsilon, double kappa);

struct SupportIdOptions {
  // Certificate for Delta_3s(A / sqrt(M)) computed on the normalized matrix.
  std::optional<RipCertificate> certificate;
  // Strict mode refuses to run without a valid certificate; otherwise a
  // warning is recorded.
  bool strict = true;
  double kappa = 0.0;
  // Enumerate all 4^n Pauli words instead of sampling; `probes` is ignored.
  bool exhaustive = false;
  SolverOptions solver;
};

// Algorithm 3: for L uniformly random Pauli words P_l, solve
// A c(P_l) = (Tr[P_l rho_hat(x_i)])_i with HTP at sparsity s and rank the
// labels by X_hat_k. Probe l draws its word from DeriveSeed(seed, l).
SupportEstimate IdentifySupport(const std::vector<Estimate>& observations,
                                const MeasurementMatrix& a, int s,
                                int64_t probes, uint64_t seed,
                                const SupportIdOptions& options = {});

// (||alpha||_2 / sqrt(d), sqrt(mean over all 4^n P of |Tr[P alpha]|^2)).
// Both are the normalized Hilbert-Schmidt norm; n <= 5.
std::pair<double, double> HsNormEstimatorCheck(const Matrix& alpha);

// (1 / sqrt(len)) ||v||_2 / ||v||_inf; 1 for the zero vector.
double Flatness(const RealVector& v);

// sigma_s(v)_1: l1 mass outside the s largest-magnitude entries.
double BestSparseApproxError(const RealVector& magnitudes, int s);

struct SeparabilityMargin {
  // Worst-case criterion:
  //   min_S ||alpha_k||_2 - max_notS ||alpha_k'||_2
  //   >= 2 eps + (2 D1 / sqrt(s)) sqrt(E[sigma_s(c(P))_1^2]) + 2 D2 eta.
  double worst_case_lhs = 0.0;
  double worst_case_rhs = 0.0;
  double sigma_term = 0.0;  // sqrt(E[sigma_s(c(P))_1^2])
  bool worst_case_holds = false;
  // Flatness criterion:
  //   min_S (||alpha_k||_2 - ||gamma_k||_2)
  //   >= 2 eps + (beta_c + 1)/beta_c max_notS ||alpha_k'||_2
  //            + (beta_n + 1)/beta_n max_notS ||gamma_k'||_2.
  double beta_c = 1.0;
  double beta_n = 1.0;
  double flatness_lhs = 0.0;
  double flatness_rhs = 0.0;
  bool flatness_holds = false;
};

// Evaluates both separability criteria exhaustively over all 4^n Pauli
// words (n <= 4). `alphas` holds the true coefficients and `gammas` the
// coefficient perturbations; labels missing from either count as zero.
SeparabilityMargin EvaluateSeparability(const ParametrizedOperator& alphas,
                                        const ParametrizedOperator& gammas,
                                        const std::vector<int>& s,
                                        double epsilon, double eta,
                                        double d1 = kDefaultD1,
                                        double d2 = kDefaultD2);

// |c#| <= 1 + kappa + slack.
bool CoefficientBoundCheck(double c_sharp_abs, double kappa,
                           double slack = kCoefficientBoundSlack);

}  // namespace paramtomo

#endif  // PARAMTOMO_SUPPID_H_
