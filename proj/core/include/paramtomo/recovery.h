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

#ifndef PARAMTOMO_RECOVERY_H_
#define PARAMTOMO_RECOVERY_H_

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "paramtomo/bos.h"
#include "paramtomo/norms.h"
#include "paramtomo/parametrized_operator.h"
#include "paramtomo/tomo.h"
#include "paramtomo/types.h"

namespace paramtomo {

// Constants of the bounded-orthonormal-system sample complexity.
inline constexpr double kSparseC1 = 103140.0;
inline constexpr double kSparseC2 = 2736.0;
inline constexpr double kFullC = 11.0;

enum class FormulaVariant {
  // M = (s K^2 / Delta^2)(C1 ln(300 s) ln(4D) + C2 ln(2/delta))
  kCorollary,
  // M = (s K^2 / Delta^2)(C1 ln^2(300 s) ln(4D) + C2 ln(2/delta))
  kAlgorithm1,
};

int64_t SampleCountSparse(int s, int d, double k, double attenuation,
                          double delta,
                          FormulaVariant variant = FormulaVariant::kAlgorithm1);

// ceil(11 D K^2 ln(2D / delta)).
int64_t SampleCountFull(int d, double k, double delta);

struct RecoveryPlan {
  BasisSystem basis = BasisSystem::Fourier(0);
  std::vector<int> support;   // S, or every label for full recovery
  double attenuation = 1.0;   // Delta in (0, 1]
  double epsilon = 0.1;
  double delta = 0.1;
  int m = 1;                  // number of sampled parameter values
  FormulaVariant variant = FormulaVariant::kAlgorithm1;

  // Per-point accuracy epsilon' = epsilon / sqrt(6).
  double epsilon_prime() const;
  // Per-point failure probability delta' = delta / (2M).
  double delta_prime() const;
  // Throws ArgumentError on an invalid field.
  void Validate() const;
};

// The three terms of gamma_{l2} + Delta gamma_{l1} + epsilon.
struct ErrorBudget {
  double gamma_l2 = 0.0;
  double gamma_l1 = 0.0;
  double attenuation = 1.0;
  double epsilon = 0.0;
  // False until the sparsity defects were evaluated against a known state.
  bool gammas_known = false;

  double spillover() const { return attenuation * gamma_l1; }
  double Total() const { return gamma_l2 + spillover() + epsilon; }
};

struct RecoveryDiagnostics {
  double sigma_min = 0.0;        // smallest singular value of A_S
  double pinv_norm = 0.0;        // ||A_S^+||_inf
  double pinv_norm_bound = 0.0;  // sqrt(1+Delta_s)/(sqrt(M)(1-Delta_s)) or 0
  int m = 0;
  int s = 0;
};

// Coefficients alpha_hat_k = sum_i W_{k,i} rho_hat(x_i) with W = A_S^+. With
// dense observations they are stored as matrices; with shadows they stay as
// weighted snapshot collections until densified.
class RecoveryReport {
 public:
  RecoveryPlan plan;
  std::vector<int> support;
  std::vector<double> points;
  Matrix weights;  // |S| x M
  std::shared_ptr<const std::vector<Estimate>> observations;
  std::optional<std::vector<Matrix>> dense_coeffs;
  ErrorBudget budget;
  RecoveryDiagnostics diagnostics;
  bool is_channel = false;

  const BasisSystem& basis() const { return plan.basis; }
  bool has_dense_coefficients() const { return dense_coeffs.has_value(); }
  bool has_shadow_observations() const;

  // Tr[P alpha_hat_k] for every k in the support, aligned with `support`.
  std::vector<Complex> CoefficientPauliTraces(const PauliWord& word) const;
  // Dense coefficient operators. Shadows are densified point by point
  // (n at most the dense qubit cap).
  ParametrizedOperator Densify() const;
};

// sum_i weights(k, i) ops[i] for every row k.
std::vector<Matrix> LinearCombination(const Matrix& weights,
                                      const std::vector<Matrix>& ops);

// Algorithm 1 with a known support S. Throws SingularMatrixError when A_S is
// not injective and ArgumentError when counts disagree.
RecoveryReport RecoverSparse(const RecoveryPlan& plan, const std::vector<int>& s,
                             std::vector<Estimate> observations,
                             const MeasurementMatrix& a);

// Algorithm 2: S equals the full index set; the budget reduces to epsilon.
RecoveryReport RecoverFull(const RecoveryPlan& plan,
                           std::vector<Estimate> observations,
                           const MeasurementMatrix& a);

// Fills the sparsity defects of `truth` outside S into a budget.
ErrorBudget ComputeBudget(const ParametrizedOperator& truth,
                          const std::vector<int>& s, const ObservableSet& obs,
                          double attenuation, double epsilon);

// l^p norm of the per-point tolerances.
double DeviationBound(const std::vector<double>& epsilons, LpOrder p);

struct SupportRadius {
  int r = 2;
  // True when gamma >= 2^{n/2+4} tau pi sigma^2, so the bound is vacuous and
  // R falls back to its minimum 2.
  bool vacuous = false;
};

// Smallest integer R >= 2 with R >= 1 + sqrt(8 sigma^2 ln(2^{n/2+4} tau pi
// sigma^2 / gamma)); S = {-R..R} then has l^1 sparsity defect <= gamma.
SupportRadius SubgaussianSupportRadius(int n, double sigma, double tau,
                                       double gamma);

// R = max(ceil(e omega_max T), ceil(2n + 1/2 + log2(1/gamma))) + guard, the
// Chebyshev cutoff with tail sum_{k>R} ||alpha_k||_1 <= gamma.
int ChebyshevSupportCutoff(int n_modes, double omega_max, double gamma,
                           double horizon, int guard = 0);

// Rigorous omega_max bound from J = max |F_ij| alone:
// 2 ||F||_1 <= 2 (2n) ||F||_op <= 4n(2n - 1) J.
double OmegaMaxFromInteraction(int n_modes, double j);

}  // namespace paramtomo

#endif  // PARAMTOMO_RECOVERY_H_
