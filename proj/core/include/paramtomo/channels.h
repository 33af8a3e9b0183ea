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

#ifndef PARAMTOMO_CHANNELS_H_
#define PARAMTOMO_CHANNELS_H_

#include <cstdint>
#include <utility>
#include <vector>

#include "paramtomo/bos.h"
#include "paramtomo/parametrized_operator.h"
#include "paramtomo/pauli.h"
#include "paramtomo/recovery.h"
#include "paramtomo/types.h"

namespace paramtomo {

// Superoperators act on column-stacked vectorizations:
// vec(C[rho]) = C vec(rho), so K rho K^dagger maps to conj(K) (x) K.

Vector Vectorize(const Matrix& x);
Matrix Unvectorize(const Vector& v);

Matrix SuperoperatorFromKraus(const std::vector<Matrix>& kraus);
Matrix IdentityChannel(int n);
Matrix UnitaryChannel(const Matrix& u);
// rho -> (1 - p) rho + p Tr[rho] I / d; p = 1 is completely depolarizing.
Matrix DepolarizingChannel(int n, double p);
// Random CPTP map from a Haar-random Stinespring isometry with `kraus_rank`
// Kraus operators.
Matrix RandomChannel(int n, int kraus_rank, Rng& rng);

// Throws ArgumentError on a dimension mismatch.
Matrix ChannelApply(const Matrix& superop, const Matrix& rho);

// J = (I (x) C)[|Omega><Omega|] with |Omega> = sum_i |ii> / sqrt(d); the
// ancilla is the first tensor factor.
Matrix ChoiState(const Matrix& superop);
Matrix SuperoperatorFromChoi(const Matrix& choi);

// Complete positivity and trace preservation via the Choi state.
bool IsCptp(const Matrix& superop, double tol = 1e-8);

struct PauliTransferValue {
  double direct = 0.0;  // 2^{-n} Tr[Q C[P]]
  double choi = 0.0;    // Tr[J (P^T (x) Q)]
};

// Pauli transfer matrix entry by both routes. The Choi route pairs the
// ancilla with P^T; for Pauli words P^T = +-P, the sign flipping with Y.
PauliTransferValue PauliTransferProbe(const Matrix& superop, const PauliWord& p,
                                      const PauliWord& q);

// R_{QP} = 2^{-n} Tr[Q C[P]] over all word pairs (rows Q, columns P).
RealMatrix PauliTransferMatrix(const Matrix& superop);

// max_j |Tr[O_j C[rho_j]]| over explicit (state, observable) testers.
double TesterSeminorm(const Matrix& superop,
                      const std::vector<std::pair<Matrix, Matrix>>& testers);

enum class ChannelProcedureKind {
  kExactOracle,
  // Full Pauli tomography of the Choi state, mapped back to a superoperator.
  kChoiPauliTomography,
  // Efficient learners named for completeness; acquiring with them raises
  // CapabilityError.
  kPauliSparseLearning,
  kAverageCaseLocalLearning,
};

Matrix AcquireChannel(ChannelProcedureKind kind, const Matrix& superop,
                      int64_t shots_per_pauli, Rng& rng);

struct ParametrizedChannel {
  ParametrizedOperator superops;  // coefficients are d^2 x d^2
  int n_qubits = 0;

  const BasisSystem& basis() const { return superops.basis(); }
  const std::vector<int>& support() const { return superops.support(); }
  Matrix Evaluate(double x) const { return superops.Evaluate(x); }
  Matrix Apply(double x, const Matrix& rho) const;
};

ParametrizedChannel MakeParametrizedChannel(ParametrizedOperator superops);

// Recovery engine applied to superoperator-valued observations. When
// `report` is non-null it receives the underlying report (is_channel set).
ParametrizedChannel RecoverChannel(const RecoveryPlan& plan,
                                   const std::vector<int>& s,
                                   const std::vector<Matrix>& observations,
                                   const MeasurementMatrix& a,
                                   RecoveryReport* report = nullptr);

// theta -> exp(-i theta Z / 2) . exp(i theta Z / 2) on one qubit.
Matrix ZRotationChannel(double theta);

}  // namespace paramtomo

#endif  // PARAMTOMO_CHANNELS_H_
