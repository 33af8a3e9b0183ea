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

#ifndef PARAMTOMO_BOS_H_
#define PARAMTOMO_BOS_H_

#include <cstdint>
#include <vector>

#include "paramtomo/types.h"

namespace paramtomo {

enum class BasisKind { kFourier, kChebyshev };

// A bounded orthonormal system of univariate functions.
//
// Fourier: phi_k(t) = exp(-i k t) on [0, 2pi) with the uniform probability
// measure, K = 1. Labels are integers in ascending order.
//
// Chebyshev: phi_k(x) = xi_k T_k(x) on [-1, 1] with the arcsine measure
// (1/pi)(1 - x^2)^(-1/2), xi_0 = 1 and xi_k = sqrt(2) otherwise, K = sqrt(2).
// Labels are 0..D-1.
class BasisSystem {
 public:
  // Labels -e_max..e_max.
  static BasisSystem Fourier(int e_max);
  // Arbitrary distinct labels; stored sorted ascending.
  static BasisSystem FourierLabels(std::vector<int> labels);
  // Labels 0..d-1.
  static BasisSystem Chebyshev(int d);

  BasisKind kind() const { return kind_; }
  const std::vector<int>& labels() const { return labels_; }
  double bound_k() const { return bound_k_; }
  int size() const { return static_cast<int>(labels_.size()); }

  bool Contains(int label) const;
  // Column position of `label`; throws DomainError if absent.
  int IndexOf(int label) const;
  bool InDomain(double x) const;
  double domain_low() const;
  double domain_high() const;

  bool operator==(const BasisSystem& other) const {
    return kind_ == other.kind_ && labels_ == other.labels_;
  }

 private:
  BasisSystem(BasisKind kind, std::vector<int> labels, double bound_k);

  BasisKind kind_;
  std::vector<int> labels_;
  double bound_k_;
};

// phi_k(x). Throws DomainError for a label outside the index set or x outside
// the domain.
Complex EvaluateBasis(const BasisSystem& basis, int label, double x);

// Chebyshev normalization xi_k.
double ChebyshevXi(int k);

// Draws `count` i.i.d. points from the orthogonality measure of `basis`.
std::vector<double> SampleMeasure(const BasisSystem& basis, int count, Rng& rng);
std::vector<double> SampleMeasure(const BasisSystem& basis, int count,
                                  uint64_t seed);

struct MeasurementMatrix {
  Matrix entries;              // entries(i, j) = phi_{labels[j]}(points[i])
  std::vector<double> points;  // x_i
  BasisSystem basis;

  int rows() const { return static_cast<int>(entries.rows()); }
  int cols() const { return static_cast<int>(entries.cols()); }
  // Column positions of the given labels, in the given order.
  std::vector<int> ColumnsOf(const std::vector<int>& labels) const;
  // Submatrix A_S for the given labels.
  Matrix Columns(const std::vector<int>& labels) const;
};

MeasurementMatrix BuildMeasurementMatrix(const BasisSystem& basis,
                                         const std::vector<double>& points);

// Bessel function of the first kind J_k(x) for integer k >= 0.
double BesselJ(int k, double x);

// Coefficients c_k = (-i)^k xi_k J_k(omega), k = 0..cutoff, of the expansion
// exp(-i omega x) = sum_k c_k phi_k(x) in the normalized Chebyshev basis.
Vector ChebyshevCoeffsOfPhase(double omega, int cutoff);

// (e |omega| / (2k))^k, an upper bound on |J_k(omega)|. Requires k >= 1.
double BesselTailBound(double omega, int k);

}  // namespace paramtomo

#endif  // PARAMTOMO_BOS_H_
