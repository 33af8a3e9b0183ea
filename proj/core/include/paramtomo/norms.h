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

#ifndef PARAMTOMO_NORMS_H_
#define PARAMTOMO_NORMS_H_

#include <cstdint>
#include <vector>

#include "paramtomo/parametrized_operator.h"
#include "paramtomo/pauli.h"
#include "paramtomo/types.h"

namespace paramtomo {

enum class ObservableKind {
  kTraceBall,           // {O : ||O||_inf <= 1}, induces the trace norm
  kLocalBall,           // ell-local O with ||O||_inf <= 1
  kHilbertSchmidtBall,  // {O : ||O||_2 <= 1}, induces the Frobenius norm
  kExplicitPauliList,   // a finite list of Pauli words
};

// The observable class defining an induced semi-norm
// ||X||_O = sup_{O in class} |Tr[X O]|.
struct ObservableSet {
  ObservableKind kind = ObservableKind::kTraceBall;
  int n_qubits = 0;
  int ell = 0;                    // kLocalBall only
  std::vector<PauliWord> paulis;  // kExplicitPauliList only

  static ObservableSet TraceBall(int n);
  static ObservableSet LocalBall(int n, int ell);
  static ObservableSet HilbertSchmidtBall(int n);
  static ObservableSet PauliList(int n, std::vector<PauliWord> paulis);
  // All Pauli words of weight 1..ell.
  static ObservableSet LocalPaulis(int n, int ell);

  // Throws ArgumentError if ell > n, the list is empty or word sizes differ.
  void Validate() const;
};

enum class LpOrder { kOne, kTwo, kInf };

// Parses 1, 2 or infinity (any value >= 1e300); throws ArgumentError
// otherwise.
LpOrder LpOrderFromDouble(double p);

// Value of an induced norm that may only be bracketed.
struct NormBound {
  double lower = 0.0;
  double upper = 0.0;
  bool exact = false;
  double value() const { return exact ? lower : upper; }
};

// ||X||_O. Non-Hermitian inputs are replaced by their Hermitian part.
double InducedSeminorm(const Matrix& x, const ObservableSet& obs);

// sup_{O} (sum_i |Tr[O V_i]|^p)^(1/p).
//
// Exact routes: any kind at p = inf; kExplicitPauliList at every p; the
// Hilbert-Schmidt ball at p = 2 (largest eigenvalue of the m x m Gram matrix
// G_ij = Tr[V_i^dagger V_j], the complex-ball value). Other combinations
// return a bracket: a lower bound from candidate observables and the upper
// bound (sum_i ||V_i||_O^p)^(1/p).
NormBound InducedLpVector(const std::vector<Matrix>& v, const ObservableSet& obs,
                          LpOrder p, uint64_t seed = 0);

// (sum_i |Tr[P V_i]|^p)^(1/p) for a single Pauli word.
double PauliLpValue(const std::vector<Matrix>& v, const PauliWord& word,
                    LpOrder p);

// sup_O ||Tr[O X(.)]||_{L^p(mu)}.
//
// p = 2 follows the Parseval identity through InducedLpVector. For
// kExplicitPauliList and p in {1, inf}, the scalar trajectories are evaluated
// on `quadrature_nodes` nodes (trapezoid for Fourier, Gauss-Chebyshev for
// Chebyshev; the inf-norm is the maximum over those nodes). Other
// combinations throw CapabilityError.
NormBound InducedLpSeminorm(const ParametrizedOperator& x,
                            const ObservableSet& obs, LpOrder p,
                            int quadrature_nodes = 2048);

// L^2 norm of Pauli trajectories by quadrature, without Parseval. Used as an
// independent route in audits.
double QuadratureL2PauliList(const ParametrizedOperator& x,
                             const ObservableSet& obs, int quadrature_nodes);

// Quadrature nodes and probability weights for the basis measure.
void QuadratureRule(const BasisSystem& basis, int nodes,
                    std::vector<double>* points, std::vector<double>* weights);

// gamma_{l^p}: the induced l^p norm of the coefficients outside S. Throws
// ArgumentError unless S is a subset of the support of X.
NormBound SparsityDefect(const ParametrizedOperator& x,
                         const std::vector<int>& s, const ObservableSet& obs,
                         LpOrder p);

}  // namespace paramtomo

#endif  // PARAMTOMO_NORMS_H_
