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

#ifndef PARAMTOMO_QSIM_H_
#define PARAMTOMO_QSIM_H_

#include <cstdint>
#include <utility>
#include <vector>

#include "paramtomo/parametrized_operator.h"
#include "paramtomo/types.h"

namespace paramtomo {

// Dense simulation refuses systems larger than this many qubits.
inline constexpr int kDefaultDenseQubitCap = 10;

// Number of qubits n with 2^n == dim; throws ArgumentError otherwise.
int QubitCount(Eigen::Index dim);

// Hermitian to `tol`, unit trace to `tol`, smallest eigenvalue >= -psd_tol.
bool IsDensityOperator(const Matrix& rho, double tol = 1e-10,
                       double psd_tol = 1e-10);

// A dense Hermitian Hamiltonian with a cached eigendecomposition.
class Hamiltonian {
 public:
  explicit Hamiltonian(const Matrix& h);
  // Diagonal Hamiltonian in the computational basis.
  static Hamiltonian Diagonal(const std::vector<double>& energies);

  const Matrix& matrix() const { return matrix_; }
  const RealVector& eigenvalues() const { return eigenvalues_; }
  const Matrix& eigenvectors() const { return eigenvectors_; }
  int dim() const { return static_cast<int>(matrix_.rows()); }
  bool is_diagonal() const { return diagonal_; }
  // exp(-i H t).
  Matrix Propagator(double t) const;

 private:
  Matrix matrix_;
  RealVector eigenvalues_;
  Matrix eigenvectors_;
  bool diagonal_ = false;
};

// Distinct eigenvalues with the projectors onto their eigenspaces.
struct SpectralDecomposition {
  std::vector<double> energies;
  std::vector<Matrix> projectors;
};

// Groups eigenvalues closer than `tol` into one eigenspace.
SpectralDecomposition SpectralDecompose(const Hamiltonian& h,
                                        double tol = 1e-9);

// NMR-type Hamiltonian: integer energies on the computational basis states.
struct IntegerSpectrumHamiltonian {
  int n_qubits = 0;
  std::vector<int64_t> diagonal;  // length 2^n, entries in [0, e_max]

  // Validates length and non-negativity.
  static IntegerSpectrumHamiltonian FromDiagonal(std::vector<int64_t> diag);
  // E(b) = sum_q weights[q] b_q + sum_{q<r} couplings(q, r) b_q b_r, with
  // b_q the bit of qubit q. Weighted number operators plus integer ZZ-type
  // couplings in the occupation basis.
  static IntegerSpectrumHamiltonian FromWeights(
      const std::vector<int64_t>& weights,
      const std::vector<std::vector<int64_t>>& couplings = {});

  int64_t e_max() const;
  Hamiltonian ToHamiltonian() const;
};

// rho(t) = exp(-iHt) rho0 exp(iHt). Returns rho0 unchanged for t == 0.
Matrix Evolve(const Hamiltonian& h, const Matrix& rho0, double t);

// Evolution for either sign of t using only forward evolution under H: for
// t < 0, exp(-iHt) = V exp(-iH|t|) V^dagger whenever V H V^dagger = -H.
Matrix EvolveSigned(const Hamiltonian& h, const Matrix& time_reversal,
                    const Matrix& rho0, double t);

// Exact Fourier coefficients of rho(t) in phi_k(t) = exp(-ikt):
// alpha_k = sum_{e - e' = k} Pi_e rho0 Pi_{e'}, k in -e_max..e_max, so that
// sum_k alpha_k phi_k(t) = Evolve(H, rho0, t).
ParametrizedOperator FourierCoefficients(const IntegerSpectrumHamiltonian& h,
                                         const Matrix& rho0);

// Exact Chebyshev coefficients of rho(x) = exp(-iHTx) rho0 exp(iHTx) on
// x in [-1, 1] (T = horizon), truncated to labels 0..cutoff. In the
// eigenbasis of H, entry (a, b) of coefficient k is
// (-i)^k xi_k J_k((E_a - E_b) T) times the rotated rho0 entry.
ParametrizedOperator ChebyshevCoefficients(const Hamiltonian& h,
                                           const Matrix& rho0, double horizon,
                                           int cutoff);

struct SubgaussianState {
  Matrix rho;
  double tau = 0.0;
  std::vector<double> energies;     // distinct energies of H
  std::vector<double> populations;  // Tr[rho Pi_e]
};

// Pure state with populations p_e proportional to exp(-(e-e0)^2/(2 sigma^2))
// and Haar-random directions inside each eigenspace, plus the smallest tau
// with Tr[rho Pi_e] <= tau exp(-(e-e0)^2/(2 sigma^2)) for every e.
SubgaussianState PrepareSubgaussianState(const IntegerSpectrumHamiltonian& h,
                                         double e0, double sigma, Rng& rng);

// Tr over the complement of `keep` (qubit indices, qubit 0 most significant).
// The result acts on the kept qubits in ascending order.
Matrix PartialTrace(const Matrix& x, const std::vector<int>& keep);

// (||P1 rho P2||_1, sqrt(r ||P1 rho P1||_1 ||P2 rho P2||_1)), r the smaller
// projector rank. Throws ArgumentError unless P1 P2 = 0.
std::pair<double, double> ProjectorCrossTermCheck(const Matrix& rho,
                                                  const Matrix& p1,
                                                  const Matrix& p2);

// Random test objects.
Matrix RandomUnitary(int dim, Rng& rng);
Vector RandomStateVector(int dim, Rng& rng);
Matrix RandomDensityMatrix(int dim, Rng& rng, int rank = 0);
Matrix RandomHermitian(int dim, Rng& rng);

}  // namespace paramtomo

#endif  // PARAMTOMO_QSIM_H_
