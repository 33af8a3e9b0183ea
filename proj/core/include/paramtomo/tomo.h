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

#ifndef PARAMTOMO_TOMO_H_
#define PARAMTOMO_TOMO_H_

#include <cstdint>
#include <variant>
#include <vector>

#include "paramtomo/norms.h"
#include "paramtomo/pauli.h"
#include "paramtomo/types.h"

namespace paramtomo {

// Shadows pack 2 basis bits and 1 outcome bit per qubit into 32-bit words.
inline constexpr int kMaxShadowQubits = 16;

// Default multiplicative constant of the local-shadow sample count.
inline constexpr double kDefaultShadowC0 = 34.0;

// One randomized single-qubit-basis measurement. Qubit q uses bits
// [2(n-1-q), 2(n-1-q)+1] of `bases` (0 = X, 1 = Y, 2 = Z) and bit (n-1-q) of
// `outcomes` (0 for the +1 eigenvalue, 1 for -1).
struct Snapshot {
  uint32_t bases = 0;
  uint32_t outcomes = 0;

  int Basis(int q, int n) const { return (bases >> (2 * (n - 1 - q))) & 3; }
  int Outcome(int q, int n) const { return (outcomes >> (n - 1 - q)) & 1; }
  bool operator==(const Snapshot& o) const {
    return bases == o.bases && outcomes == o.outcomes;
  }
};

struct ShadowData {
  int n_qubits = 0;
  std::vector<Snapshot> snapshots;

  // Throws ArgumentError if a snapshot uses a basis code > 2 or bits above
  // the qubit count.
  void Validate() const;
};

// A per-point tomographic estimate: a dense matrix or a shadow record.
using Estimate = std::variant<Matrix, ShadowData>;

enum class TomographyKind { kExactOracle, kFullPauliTomography, kLocalCliffordShadows };

struct TomographicProcedure {
  TomographyKind kind = TomographyKind::kExactOracle;
  // Locality of the guaranteed observable class (shadows).
  int ell = 2;
  // Multiplicative constant of the shadow sample count.
  double c0 = kDefaultShadowC0;
  // When positive, overrides the copy count derived from (epsilon, delta):
  // snapshots for shadows, shots per Pauli for full tomography.
  int64_t explicit_count = 0;

  // Observable class for which the (epsilon, delta) contract is stated.
  ObservableSet Guarantees(int n) const;
  // Number of copies consumed for accuracy epsilon, failure probability delta.
  int64_t SampleCount(double epsilon, double delta, int n) const;
};

// Runs the procedure on one copy source. Throws ArgumentError unless
// epsilon, delta in (0, 1) and rho is a 2^n x 2^n matrix.
Estimate Acquire(const TomographicProcedure& proc, const Matrix& rho,
                 double epsilon, double delta, Rng& rng);

// `count` snapshots of rho, each measuring every qubit in a uniformly random
// Pauli eigenbasis.
ShadowData AcquireShadows(const Matrix& rho, int64_t count, Rng& rng);

// Linear-inversion Pauli tomography from `shots_per_pauli` projective
// measurements of every non-identity Pauli word, followed by projection onto
// the density matrices (eigenvalue clipping and renormalization).
Matrix FullPauliTomography(const Matrix& rho, int64_t shots_per_pauli, Rng& rng);

// Closest density matrix in Frobenius norm.
Matrix ProjectToDensityMatrix(const Matrix& h);

// Single-snapshot estimator of Tr[P rho]: 3^{|supp P|} prod (+-1) when the
// snapshot bases match P on its support, 0 otherwise.
double SnapshotEstimate(const Snapshot& snap, const PauliWord& word);

// Median of `batches` contiguous batch means of SnapshotEstimate. Throws
// ArgumentError if batches < 1 or exceeds the snapshot count.
double ShadowExpectation(const ShadowData& data, const PauliWord& word,
                         int batches = 1);

// Sample standard error of the plain mean.
double ShadowStandardError(const ShadowData& data, const PauliWord& word);

// Dense classical shadow (1/T) sum_t (x)_q (3 |s_q><s_q| - I). Groups
// identical snapshots so the cost is O(T + distinct * 4^n).
Matrix DensifyShadow(const ShadowData& data);

// Tr[P rho_hat] for either estimate representation.
double EstimatePauliExpectation(const Estimate& est, const PauliWord& word);

// ceil(c0 * max(ell, 1) * 12^ell / epsilon^2 * ln(n / delta)).
int64_t ShadowSampleCount(double epsilon, double delta, int n, int ell,
                          double c0 = kDefaultShadowC0);

// Snapshots after which the plain shadow mean of each of `list_size` Pauli
// words of weight <= max_weight is within epsilon of Tr[P rho], jointly with
// probability >= 1 - delta. Hoeffding with estimator range 2 * 3^w and a
// union bound: ceil(2 * 9^w / epsilon^2 * ln(2 * list_size / delta)).
int64_t ShadowPauliListSampleCount(double epsilon, double delta, int max_weight,
                                   int64_t list_size);
// 4^ell ||O||_inf^2.
double ShadowNormBound(const Matrix& o, int ell);

// Shots per Pauli word for full tomography with Hilbert-Schmidt-ball
// accuracy: ceil(2 * 4^n ln(2 * 4^n / delta) / epsilon^2).
int64_t FullTomographyShotsPerPauli(double epsilon, double delta, int n);

// ceil(n^ell ell^{3/2} / epsilon^2 ln(n / delta)). Budget formula of the
// fermionic shadow protocol; no procedure in this library backs it.
int64_t FermionicShadowSampleCount(double epsilon, double delta, int n, int ell);

}  // namespace paramtomo

#endif  // PARAMTOMO_TOMO_H_
