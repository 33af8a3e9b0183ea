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

#ifndef PARAMTOMO_FERMION_H_
#define PARAMTOMO_FERMION_H_

#include <vector>

#include "paramtomo/types.h"

namespace paramtomo {

// Largest mode count for which dense Jordan-Wigner matrices are built.
inline constexpr int kDefaultFermionDenseLimit = 6;

// H = i sum_{a,b} F_ab gamma_a gamma_b with F a real skew-symmetric 2n x 2n
// matrix. Majoranas follow {gamma_a, gamma_b} = 2 delta_ab, realized as
// gamma_j = Z^(j-1) X I..., gamma_{n+j} = Z^(j-1) Y I... (modes 1-based).
// If +-i mu_j are the eigenvalues of F, the spectrum of H is
// {+-2mu_1 +- ... +- 2mu_n}, so ||H||_inf = ||F||_1.
class FermionicGaussianHamiltonian {
 public:
  // Throws ArgumentError unless F is square with even size and F = -F^T
  // exactly.
  explicit FermionicGaussianHamiltonian(const RealMatrix& f);

  int n_modes() const { return static_cast<int>(f_.rows() / 2); }
  const RealMatrix& f() const { return f_; }
  // J = max |F_ij|.
  double interaction_strength() const;
  // Trace norm ||F||_1.
  double TraceNormF() const;
  // Largest energy gap of H, 2 ||F||_1.
  double OmegaMax() const;
  // True when F couples only positions (a <= n) to momenta (b > n), the
  // Majorana pattern of a real number-conserving hopping Hamiltonian.
  bool IsParticlePreserving() const;

 private:
  RealMatrix f_;
};

// Random F with entries of magnitude at most J (and at least one equal to J).
RealMatrix RandomSkewSymmetric(int n_modes, double j, Rng& rng);

// F for the number-conserving Hamiltonian sum_ij h_ij a_i^dagger a_j (h real
// symmetric), up to an additive constant.
RealMatrix HoppingToMajorana(const RealMatrix& h);

// The 2n Majorana operators as dense 2^n x 2^n matrices.
std::vector<Matrix> MajoranaOperators(int n_modes);

// Dense qubit Hamiltonian. Throws ArgumentError above `dense_limit` modes.
Matrix JordanWigner(const FermionicGaussianHamiltonian& h,
                    int dense_limit = kDefaultFermionDenseLimit);

// All 2^n values +-2mu_1 +- ... +- 2mu_n, sorted ascending.
std::vector<double> FermionSpectrum(const FermionicGaussianHamiltonian& h);

// A unitary V with V H V^dagger = -H for the Jordan-Wigner Hamiltonian. It is
// the product Gamma(q_1) ... Gamma(q_m) of one rotated Majorana
// Gamma(q) = sum_b q_b gamma_b from each normal-mode pair of F; this is the
// operator U_O^dagger X^(n) U_O written in the original modes.
Matrix TimeReversalUnitary(const FermionicGaussianHamiltonian& h,
                           int dense_limit = kDefaultFermionDenseLimit);

// X on every qubit.
Matrix GlobalXFlip(int n_qubits);

}  // namespace paramtomo

#endif  // PARAMTOMO_FERMION_H_
