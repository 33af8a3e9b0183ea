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

#include "paramtomo/bos.h"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "paramtomo/errors.h"

namespace paramtomo {

BasisSystem::BasisSystem(BasisKind kind, std::vector<int> labels,
                         double bound_k)
    : kind_(kind), labels_(std::move(labels)), bound_k_(bound_k) {}

BasisSystem BasisSystem::Fourier(int e_max) {
  if (e_max < 0) throw ArgumentError("Fourier basis needs e_max >= 0");
  std::vector<int> labels;
  for (int k = -e_max; k <= e_max; ++k) labels.push_back(k);
  return BasisSystem(BasisKind::kFourier, std::move(labels), 1.0);
}

BasisSystem BasisSystem::FourierLabels(std::vector<int> labels) {
  if (labels.empty()) throw ArgumentError("Fourier basis needs >= 1 label");
  std::sort(labels.begin(), labels.end());
  if (std::adjacent_find(labels.begin(), labels.end()) != labels.end()) {
    throw ArgumentError("Fourier basis labels must be distinct");
  }
  return BasisSystem(BasisKind::kFourier, std::move(labels), 1.0);
}

BasisSystem BasisSystem::Chebyshev(int d) {
  if (d < 1) throw ArgumentError("Chebyshev basis needs D >= 1");
  std::vector<int> labels;
  for (int k = 0; k < d; ++k) labels.push_back(k);
  return BasisSystem(BasisKind::kChebyshev, std::move(labels), std::sqrt(2.0));
}

bool BasisSystem::Contains(int label) const {
  return std::binary_search(labels_.begin(), labels_.end(), label);
}

int BasisSystem::IndexOf(int label) const {
  auto it = std::lower_bound(labels_.begin(), labels_.end(), label);
  if (it == labels_.end() || *it != label) {
    std::ostringstream msg;
    msg << "basis label " << label << " is not in the index set";
    throw DomainError(msg.str());
  }
  return static_cast<int>(it - labels_.begin());
}

double BasisSystem::domain_low() const {
  return kind_ == BasisKind::kFourier ? 0.0 : -1.0;
}

double BasisSystem::domain_high() const {
  return kind_ == BasisKind::kFourier ? 2.0 * kPi : 1.0;
}

bool BasisSystem::InDomain(double x) const {
  if (!std::isfinite(x)) return false;
  if (kind_ == BasisKind::kFourier) return x >= 0.0 && x < 2.0 * kPi;
  return x >= -1.0 && x <= 1.0;
}

double ChebyshevXi(int k) { return k == 0 ? 1.0 : std::sqrt(2.0); }

namespace {

Complex EvaluateUnchecked(BasisKind kind, int label, double x) {
  if (kind == BasisKind::kFourier) {
    double phase = -static_cast<double>(label) * x;
    return {std::cos(phase), std::sin(phase)};
  }
  double theta = std::acos(std::clamp(x, -1.0, 1.0));
  return {ChebyshevXi(label) * std::cos(label * theta), 0.0};
}

}  // namespace

Complex EvaluateBasis(const BasisSystem& basis, int label, double x) {
  if (!basis.Contains(label)) {
    std::ostringstream msg;
    msg << "basis label " << label << " is not in the index set";
    throw DomainError(msg.str());
  }
  if (!basis.InDomain(x)) {
    std::ostringstream msg;
    msg << "parameter " << x << " is outside the basis domain";
    throw DomainError(msg.str());
  }
  return EvaluateUnchecked(basis.kind(), label, x);
}

std::vector<double> SampleMeasure(const BasisSystem& basis, int count,
                                  Rng& rng) {
  if (count < 1) throw ArgumentError("sample count must be >= 1");
  std::uniform_real_distribution<double> uniform(0.0, 1.0);
  std::vector<double> points;
  points.reserve(count);
  for (int i = 0; i < count; ++i) {
    double u = uniform(rng);
    if (basis.kind() == BasisKind::kFourier) {
      double t = 2.0 * kPi * u;
      // Rounding can land exactly on 2pi; the domain is half-open.
      points.push_back(t < 2.0 * kPi ? t : 0.0);
    } else {
      points.push_back(std::cos(kPi * u));
    }
  }
  return points;
}

std::vector<double> SampleMeasure(const BasisSystem& basis, int count,
                                  uint64_t seed) {
  Rng rng(seed);
  return SampleMeasure(basis, count, rng);
}

std::vector<int> MeasurementMatrix::ColumnsOf(
    const std::vector<int>& labels) const {
  std::vector<int> cols;
  cols.reserve(labels.size());
  for (int label : labels) cols.push_back(basis.IndexOf(label));
  return cols;
}

Matrix MeasurementMatrix::Columns(const std::vector<int>& labels) const {
  std::vector<int> cols = ColumnsOf(labels);
  Matrix out(entries.rows(), static_cast<Eigen::Index>(cols.size()));
  for (size_t j = 0; j < cols.size(); ++j) out.col(j) = entries.col(cols[j]);
  return out;
}

MeasurementMatrix BuildMeasurementMatrix(const BasisSystem& basis,
                                         const std::vector<double>& points) {
  if (points.empty()) {
    throw ArgumentError("measurement matrix needs at least one point");
  }
  for (double x : points) {
    if (!basis.InDomain(x)) {
      std::ostringstream msg;
      msg << "sample point " << x << " is outside the basis domain";
      throw DomainError(msg.str());
    }
  }
  Matrix entries(static_cast<Eigen::Index>(points.size()), basis.size());
  for (size_t i = 0; i < points.size(); ++i) {
    for (int j = 0; j < basis.size(); ++j) {
      entries(i, j) = EvaluateUnchecked(basis.kind(), basis.labels()[j],
                                        points[i]);
    }
  }
  return MeasurementMatrix{std::move(entries), points, basis};
}

namespace {

double BesselSeries(int k, double x) {
  // J_k(x) = sum_m (-1)^m (x/2)^(2m+k) / (m! (m+k)!), x > 0.
  double half = x / 2.0;
  double term = std::exp(k * std::log(half) - std::lgamma(k + 1.0));
  double sum = term;
  double q = half * half;
  for (int m = 1; m < 500; ++m) {
    term *= -q / (static_cast<double>(m) * (m + k));
    sum += term;
    if (std::abs(term) <= 1e-17 * std::abs(sum)) break;
  }
  return sum;
}

double BesselMiller(int k, double x) {
  // Downward recurrence J_{m-1} = (2m/x) J_m - J_{m+1} from a start index well
  // above max(k, x), normalized with J_0 + 2 sum_{m>=1} J_{2m} = 1.
  double big = std::max(static_cast<double>(k), x);
  int start = 2 * ((static_cast<int>(big + 20.0 + std::sqrt(60.0 * big)) + 1) / 2);
  double next = 0.0;
  double current = 1e-300;
  double value_at_k = 0.0;
  double norm = 0.0;
  for (int m = start; m >= 1; --m) {
    double prev = (2.0 * m / x) * current - next;
    next = current;
    current = prev;
    // `current` now holds the unnormalized J_{m-1}.
    if (std::abs(current) > 1e250) {
      current *= 1e-250;
      next *= 1e-250;
      value_at_k *= 1e-250;
      norm *= 1e-250;
    }
    int index = m - 1;
    if (index == k) value_at_k = current;
    if (index > 0 && index % 2 == 0) norm += 2.0 * current;
    if (index == 0) norm += current;
  }
  return value_at_k / norm;
}

}  // namespace

double BesselJ(int k, double x) {
  if (k < 0) throw ArgumentError("BesselJ needs k >= 0");
  if (x == 0.0) return k == 0 ? 1.0 : 0.0;
  double sign = 1.0;
  if (x < 0.0) {
    x = -x;
    if (k % 2 == 1) sign = -1.0;
  }
  if (k > 0 && x <= 0.1 * k) return sign * BesselSeries(k, x);
  if (x < 1e-3) return sign * BesselSeries(k, x);
  return sign * BesselMiller(k, x);
}

Vector ChebyshevCoeffsOfPhase(double omega, int cutoff) {
  if (cutoff < 0) throw ArgumentError("cutoff must be >= 0");
  Vector coeffs(cutoff + 1);
  // (-i)^k cycles through 1, -i, -1, i.
  const Complex cycle[4] = {{1, 0}, {0, -1}, {-1, 0}, {0, 1}};
  for (int k = 0; k <= cutoff; ++k) {
    coeffs(k) = cycle[k % 4] * ChebyshevXi(k) * BesselJ(k, omega);
  }
  return coeffs;
}

double BesselTailBound(double omega, int k) {
  if (k < 1) throw ArgumentError("Bessel tail bound needs k >= 1");
  if (omega == 0.0) return 0.0;
  return std::pow(std::exp(1.0) * std::abs(omega) / (2.0 * k), k);
}

}  // namespace paramtomo
