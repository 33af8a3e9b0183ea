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

#include <algorithm>
#include <cmath>
#include <sstream>

#include "paramtomo/csolve.h"
#include "paramtomo/errors.h"

namespace paramtomo {

int64_t SampleCountSparse(int s, int d, double k, double attenuation,
                          double delta, FormulaVariant variant) {
  if (s < 1 || s > d) throw ArgumentError("sparsity must satisfy 1 <= s <= D");
  if (!(attenuation > 0.0 && attenuation <= 1.0)) {
    throw ArgumentError("attenuation Delta must lie in (0, 1]");
  }
  if (!(delta > 0.0) || !(k > 0.0)) {
    throw ArgumentError("delta and K must be positive");
  }
  double log_s = std::log(300.0 * s);
  double rip_term = variant == FormulaVariant::kCorollary ? log_s : log_s * log_s;
  double value = s * k * k / (attenuation * attenuation) *
                 (kSparseC1 * rip_term * std::log(4.0 * d) +
                  kSparseC2 * std::log(2.0 / delta));
  return static_cast<int64_t>(std::ceil(value));
}

int64_t SampleCountFull(int d, double k, double delta) {
  if (d < 1) throw ArgumentError("D must be >= 1");
  if (!(delta > 0.0) || !(k > 0.0)) {
    throw ArgumentError("delta and K must be positive");
  }
  return static_cast<int64_t>(
      std::ceil(kFullC * d * k * k * std::log(2.0 * d / delta)));
}

double RecoveryPlan::epsilon_prime() const { return epsilon / std::sqrt(6.0); }

double RecoveryPlan::delta_prime() const { return delta / (2.0 * m); }

void RecoveryPlan::Validate() const {
  if (m < 1) throw ArgumentError("plan needs M >= 1");
  if (!(attenuation > 0.0 && attenuation <= 1.0)) {
    throw ArgumentError("plan attenuation Delta must lie in (0, 1]");
  }
  if (!(epsilon > 0.0) || !(delta > 0.0 && delta < 1.0)) {
    throw ArgumentError("plan needs epsilon > 0 and delta in (0, 1)");
  }
  for (int label : support) basis.IndexOf(label);
}

bool RecoveryReport::has_shadow_observations() const {
  if (!observations) return false;
  for (const Estimate& e : *observations) {
    if (std::holds_alternative<ShadowData>(e)) return true;
  }
  return false;
}

std::vector<Complex> RecoveryReport::CoefficientPauliTraces(
    const PauliWord& word) const {
  std::vector<Complex> out(support.size(), 0.0);
  if (dense_coeffs) {
    for (size_t k = 0; k < support.size(); ++k) {
      out[k] = PauliTrace(word, (*dense_coeffs)[k]);
    }
    return out;
  }
  if (!observations) throw ArgumentError("report carries no observations");
  Vector values(static_cast<Eigen::Index>(observations->size()));
  for (size_t i = 0; i < observations->size(); ++i) {
    values(i) = EstimatePauliExpectation((*observations)[i], word);
  }
  Vector coeffs = weights * values;
  for (size_t k = 0; k < support.size(); ++k) out[k] = coeffs(k);
  return out;
}

ParametrizedOperator RecoveryReport::Densify() const {
  if (dense_coeffs) return ParametrizedOperator(plan.basis, support, *dense_coeffs);
  if (!observations) throw ArgumentError("report carries no observations");
  std::vector<Matrix> dense;
  dense.reserve(observations->size());
  for (const Estimate& e : *observations) {
    if (const Matrix* m = std::get_if<Matrix>(&e)) {
      dense.push_back(*m);
    } else {
      dense.push_back(DensifyShadow(std::get<ShadowData>(e)));
    }
  }
  return ParametrizedOperator(plan.basis, support, LinearCombination(weights, dense));
}

std::vector<Matrix> LinearCombination(const Matrix& weights,
                                      const std::vector<Matrix>& ops) {
  if (static_cast<size_t>(weights.cols()) != ops.size()) {
    throw ArgumentError("weight columns and operator count differ");
  }
  std::vector<Matrix> out;
  if (ops.empty()) return out;
  for (Eigen::Index k = 0; k < weights.rows(); ++k) {
    Matrix acc = Matrix::Zero(ops.front().rows(), ops.front().cols());
    for (size_t i = 0; i < ops.size(); ++i) {
      if (ops[i].rows() != acc.rows() || ops[i].cols() != acc.cols()) {
        throw ArgumentError("observations have inconsistent shapes");
      }
      acc += weights(k, static_cast<Eigen::Index>(i)) * ops[i];
    }
    out.push_back(std::move(acc));
  }
  return out;
}

RecoveryReport RecoverSparse(const RecoveryPlan& plan, const std::vector<int>& s,
                             std::vector<Estimate> observations,
                             const MeasurementMatrix& a) {
  if (observations.size() != static_cast<size_t>(a.rows())) {
    throw ArgumentError("need exactly one observation per sample point");
  }
  if (!(a.basis == plan.basis)) {
    throw ArgumentError("measurement matrix and plan use different bases");
  }
  if (s.empty()) throw ArgumentError("support S is empty");
  std::vector<int> support = s;
  std::sort(support.begin(), support.end());
  if (std::adjacent_find(support.begin(), support.end()) != support.end()) {
    throw ArgumentError("support S has repeated labels");
  }
  Matrix a_s = a.Columns(support);

  RecoveryReport report;
  report.plan = plan;
  report.plan.support = support;
  report.support = support;
  report.points = a.points;
  report.weights = PseudoInverse(a_s);
  report.diagnostics.sigma_min = SmallestSingularValue(a_s);
  report.diagnostics.pinv_norm = OperatorNorm(report.weights);
  report.diagnostics.m = a.rows();
  report.diagnostics.s = static_cast<int>(support.size());
  report.budget.attenuation = plan.attenuation;
  report.budget.epsilon = plan.epsilon;

  bool all_dense = std::all_of(observations.begin(), observations.end(),
                               [](const Estimate& e) {
                                 return std::holds_alternative<Matrix>(e);
                               });
  if (all_dense) {
    std::vector<Matrix> dense;
    dense.reserve(observations.size());
    for (const Estimate& e : observations) dense.push_back(std::get<Matrix>(e));
    report.dense_coeffs = LinearCombination(report.weights, dense);
  }
  report.observations =
      std::make_shared<const std::vector<Estimate>>(std::move(observations));
  return report;
}

RecoveryReport RecoverFull(const RecoveryPlan& plan,
                           std::vector<Estimate> observations,
                           const MeasurementMatrix& a) {
  RecoveryReport report =
      RecoverSparse(plan, plan.basis.labels(), std::move(observations), a);
  report.budget.gamma_l1 = 0.0;
  report.budget.gamma_l2 = 0.0;
  report.budget.gammas_known = true;
  return report;
}

ErrorBudget ComputeBudget(const ParametrizedOperator& truth,
                          const std::vector<int>& s, const ObservableSet& obs,
                          double attenuation, double epsilon) {
  std::vector<int> inside;
  for (int label : s) {
    if (truth.HasLabel(label)) inside.push_back(label);
  }
  ErrorBudget budget;
  budget.gamma_l2 = SparsityDefect(truth, inside, obs, LpOrder::kTwo).upper;
  budget.gamma_l1 = SparsityDefect(truth, inside, obs, LpOrder::kOne).upper;
  budget.attenuation = attenuation;
  budget.epsilon = epsilon;
  budget.gammas_known = true;
  return budget;
}

double DeviationBound(const std::vector<double>& epsilons, LpOrder p) {
  if (epsilons.empty()) throw ArgumentError("tolerance list is empty");
  double acc = 0.0;
  for (double e : epsilons) {
    double v = std::abs(e);
    if (p == LpOrder::kOne) acc += v;
    if (p == LpOrder::kTwo) acc += v * v;
    if (p == LpOrder::kInf) acc = std::max(acc, v);
  }
  return p == LpOrder::kTwo ? std::sqrt(acc) : acc;
}

SupportRadius SubgaussianSupportRadius(int n, double sigma, double tau,
                                       double gamma) {
  if (n < 1 || !(sigma > 0.0) || !(tau > 0.0) || !(gamma > 0.0)) {
    throw ArgumentError("support radius needs positive arguments");
  }
  double prefactor = std::pow(2.0, n / 2.0 + 4.0) * tau * kPi * sigma * sigma;
  if (gamma >= prefactor) return SupportRadius{2, true};
  double bound = 1.0 + std::sqrt(8.0 * sigma * sigma * std::log(prefactor / gamma));
  return SupportRadius{std::max(2, static_cast<int>(std::ceil(bound))), false};
}

int ChebyshevSupportCutoff(int n_modes, double omega_max, double gamma,
                           double horizon, int guard) {
  if (n_modes < 1 || !(omega_max >= 0.0) || !(gamma > 0.0) ||
      !(horizon > 0.0) || guard < 0) {
    throw ArgumentError("Chebyshev cutoff needs positive arguments");
  }
  double frequency_term = std::ceil(std::exp(1.0) * omega_max * horizon);
  double tail_term = std::ceil(2.0 * n_modes + 0.5 + std::log2(1.0 / gamma));
  return static_cast<int>(std::max(frequency_term, tail_term)) + guard;
}

double OmegaMaxFromInteraction(int n_modes, double j) {
  if (n_modes < 1 || !(j >= 0.0)) throw ArgumentError("need n >= 1 and J >= 0");
  return 4.0 * n_modes * (2.0 * n_modes - 1.0) * j;
}

}  // namespace paramtomo
