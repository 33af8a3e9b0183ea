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

#ifndef PARAMTOMO_PREDICT_H_
#define PARAMTOMO_PREDICT_H_

#include <cstdint>
#include <vector>

#include "paramtomo/pauli.h"
#include "paramtomo/recovery.h"
#include "paramtomo/types.h"

namespace paramtomo {

struct PauliTerm {
  double coeff = 0.0;
  PauliWord word;
};

// O = sum_j h_j P_j.
using PauliSum = std::vector<PauliTerm>;

// Dense matrix of a Pauli sum on n qubits.
Matrix PauliSumMatrix(const PauliSum& o, int n);

struct PredictionWeights {
  double x = 0.0;
  Vector m;  // m_i(x) = sum_{k in S} (A_S^+)_{k,i} phi_k(x), length M
};

// Throws DomainError when x lies outside the basis domain.
PredictionWeights ComputePredictionWeights(const RecoveryReport& report,
                                           double x);

enum class PredictionRoute {
  kCoefficients,  // sum_k Tr[O alpha_hat_k] phi_k(x)
  kWeights,       // sum_i m_i(x) Tr[O rho_hat(x_i)]
};

// Dense observable. Needs dense coefficients or dense observations; shadow
// observations raise CapabilityError.
double PredictExpectation(const RecoveryReport& report, const Matrix& o,
                          double x,
                          PredictionRoute route = PredictionRoute::kCoefficients);

// Pauli-sum observable, available for every observation type. For shadows
// both routes use the full shadow means.
double PredictExpectation(const RecoveryReport& report, const PauliSum& o,
                          double x,
                          PredictionRoute route = PredictionRoute::kCoefficients);

std::vector<double> PredictTrajectory(const RecoveryReport& report,
                                      const PauliSum& o,
                                      const std::vector<double>& xs);

struct ImportanceEstimate {
  double value = 0.0;
  double standard_error = 0.0;
  int64_t evaluated_snapshots = 0;
  // Set when every m_i(x) vanishes; value is then 0.
  bool zero_weights = false;
};

// Importance-sampled evaluation: draw a point i with probability
// |m_i(x)| / sum_i' |m_i'(x)|, a snapshot uniformly within its shadow, and
// weight the single-snapshot estimate by phase(m_i) sum_i' |m_i'(x)|.
// The budget is split across Pauli terms in proportion to |h_j| (largest
// remainder, at least one draw per term when the budget allows); for a
// budget below the term count the term is drawn with probability
// proportional to |h_j| instead. Exactly `budget` snapshots are evaluated.
ImportanceEstimate PredictImportanceSampled(const RecoveryReport& report,
                                            const PauliSum& o, double x,
                                            int64_t budget, uint64_t seed);

}  // namespace paramtomo

#endif  // PARAMTOMO_PREDICT_H_
