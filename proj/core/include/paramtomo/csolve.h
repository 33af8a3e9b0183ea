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

#ifndef PARAMTOMO_CSOLVE_H_
#define PARAMTOMO_CSOLVE_H_

#include <cstdint>
#include <string>
#include <vector>

#include "paramtomo/types.h"

namespace paramtomo {

// Relative rank threshold: A is treated as injective when
// sigma_min > kInjectivityThreshold * sigma_max.
inline constexpr double kInjectivityThreshold = 1e-10;

// Maximum number of supports a brute-force RIP scan may enumerate.
inline constexpr double kRipSupportGuard = 1e6;

// A^+ = (A^dagger A)^{-1} A^dagger via the SVD. Throws SingularMatrixError
// (carrying sigma_min) when A is not injective.
Matrix PseudoInverse(const Matrix& a);

// Smallest singular value (0 for empty input).
double SmallestSingularValue(const Matrix& a);

// T_s: keeps the s entries of largest magnitude; ties go to the lowest index.
Vector HardThreshold(const Vector& v, int s);

// Indices of the s largest-magnitude entries, ascending. Same tie rule.
std::vector<int> TopIndices(const Eigen::VectorXd& magnitudes, int s);

struct SolverOptions {
  int max_iters = 1000;
  // Stop when the relative residual change falls below tol.
  double tol = 1e-12;
  // IHT step size mu in c + mu A^dagger (f - A c). The default 1 matches the
  // update rule for A normalized by 1/sqrt(M).
  double step = 1.0;
};

struct SolverResult {
  Vector c;
  double residual = 0.0;  // ||A c - f||_2 of the returned iterate
  int iterations = 0;
  std::vector<int> support;
};

// Iterative hard thresholding c_{t+1} = T_s[c_t + mu A^dagger (f - A c_t)].
// Returns the iterate with the smallest residual seen.
SolverResult Iht(const Matrix& a, const Vector& f, int s,
                 const SolverOptions& options = {});

// Hard thresholding pursuit: the IHT support step followed by least squares
// on the selected support. `initial_support` seeds the first least-squares
// solve when nonempty.
SolverResult Htp(const Matrix& a, const Vector& f, int s,
                 const SolverOptions& options = {},
                 const std::vector<int>& initial_support = {});

enum class RipMethod { kBruteForce, kBoundOnly };

struct RipCertificate {
  uint64_t matrix_id = 0;
  int s = 0;
  double delta_s = 0.0;
  RipMethod method = RipMethod::kBruteForce;
};

// FNV-1a hash of the matrix shape and entries.
uint64_t MatrixId(const Matrix& a);

// Number of supports C(d, s) as a double.
double BinomialCount(int d, int s);

// Delta_s = max over |S| = s of ||I - A_S^dagger A_S||_inf, exact. The caller
// normalizes A (typically by 1/sqrt(M)). Throws CombinatorialGuardError when
// C(D, s) exceeds `guard`. s is clamped to D.
RipCertificate RipConstantBruteForce(const Matrix& a, int s,
                                     double guard = kRipSupportGuard);

struct SpilloverResult {
  double lhs = 0.0;        // ||A_S^+ A_S'||_inf
  double rhs = 0.0;        // Delta_2s / (1 - Delta_2s)
  double cross_gram = 0.0; // ||A_S^dagger A_S'||_inf
  double delta_2s = 0.0;
};

// Evaluates the spillover bound for disjoint supports S, S' given a
// certified Delta_2s of the normalized matrix. Throws ArgumentError for
// overlapping sets or Delta_2s >= 1.
SpilloverResult SpilloverCheck(const Matrix& a_normalized,
                               const std::vector<int>& s,
                               const std::vector<int>& s_prime,
                               double delta_2s);

// sqrt(1 + delta) / (sqrt(M) (1 - delta)), the bound on ||A_S^+||_inf when
// Delta_s(A / sqrt(M)) <= delta <= 1/2.
double PseudoInverseNormBound(int m, double delta);

}  // namespace paramtomo

#endif  // PARAMTOMO_CSOLVE_H_
