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

#include "paramtomo/csolve.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include <Eigen/Eigenvalues>
#include <Eigen/QR>
#include <Eigen/SVD>

#include "paramtomo/errors.h"

namespace paramtomo {

Matrix PseudoInverse(const Matrix& a) {
  if (a.rows() == 0 || a.cols() == 0) throw ArgumentError("empty matrix");
  if (a.rows() < a.cols()) {
    throw SingularMatrixError("matrix has more columns than rows", 0.0);
  }
  Eigen::JacobiSVD<Matrix> svd(a, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const RealVector& sv = svd.singularValues();
  double smax = sv(0);
  double smin = sv(sv.size() - 1);
  if (!(smin > kInjectivityThreshold * smax)) {
    std::ostringstream msg;
    msg << "matrix is not injective (smallest singular value " << smin
        << "); increase the number of sample points";
    throw SingularMatrixError(msg.str(), smin);
  }
  return svd.matrixV() * sv.cwiseInverse().asDiagonal() *
         svd.matrixU().adjoint();
}

double SmallestSingularValue(const Matrix& a) {
  if (a.size() == 0) return 0.0;
  Eigen::JacobiSVD<Matrix> svd(a);
  const RealVector& sv = svd.singularValues();
  if (a.rows() < a.cols()) return 0.0;
  return sv(sv.size() - 1);
}

std::vector<int> TopIndices(const Eigen::VectorXd& magnitudes, int s) {
  int d = static_cast<int>(magnitudes.size());
  s = std::clamp(s, 0, d);
  std::vector<int> order(d);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int i, int j) {
    return magnitudes(i) > magnitudes(j);
  });
  order.resize(s);
  std::sort(order.begin(), order.end());
  return order;
}

Vector HardThreshold(const Vector& v, int s) {
  Vector out = Vector::Zero(v.size());
  for (int i : TopIndices(v.cwiseAbs(), s)) out(i) = v(i);
  return out;
}

namespace {

void CheckSystem(const Matrix& a, const Vector& f, int s) {
  if (a.rows() != f.size()) throw ArgumentError("A and f sizes differ");
  if (s < 0 || s > a.cols()) throw ArgumentError("sparsity must be in [0, D]");
}

Vector LeastSquaresOnSupport(const Matrix& a, const Vector& f,
                             const std::vector<int>& support) {
  Vector c = Vector::Zero(a.cols());
  if (support.empty()) return c;
  Matrix a_s(a.rows(), static_cast<Eigen::Index>(support.size()));
  for (size_t j = 0; j < support.size(); ++j) a_s.col(j) = a.col(support[j]);
  Vector sol = a_s.completeOrthogonalDecomposition().solve(f);
  for (size_t j = 0; j < support.size(); ++j) c(support[j]) = sol(j);
  return c;
}

std::vector<int> SupportOf(const Vector& c) {
  std::vector<int> out;
  for (Eigen::Index i = 0; i < c.size(); ++i) {
    if (c(i) != Complex(0.0, 0.0)) out.push_back(static_cast<int>(i));
  }
  return out;
}

bool Converged(double previous, double current, double tol, double scale) {
  if (current <= 1e-15 * scale) return true;
  return std::abs(previous - current) <= tol * std::max(previous, 1e-300);
}

}  // namespace

SolverResult Iht(const Matrix& a, const Vector& f, int s,
                 const SolverOptions& options) {
  CheckSystem(a, f, s);
  double scale = std::max(f.norm(), 1e-300);
  Vector c = Vector::Zero(a.cols());
  SolverResult best{c, f.norm(), 0, {}};
  double previous = best.residual;
  for (int it = 1; it <= options.max_iters; ++it) {
    c = HardThreshold(c + options.step * (a.adjoint() * (f - a * c)), s);
    double residual = (a * c - f).norm();
    if (residual < best.residual) best = {c, residual, it, SupportOf(c)};
    if (Converged(previous, residual, options.tol, scale)) break;
    previous = residual;
  }
  return best;
}

SolverResult Htp(const Matrix& a, const Vector& f, int s,
                 const SolverOptions& options,
                 const std::vector<int>& initial_support) {
  CheckSystem(a, f, s);
  double scale = std::max(f.norm(), 1e-300);
  Vector c = Vector::Zero(a.cols());
  SolverResult best{c, f.norm(), 0, {}};
  std::vector<int> support;
  int start = 1;
  if (!initial_support.empty()) {
    support = initial_support;
    std::sort(support.begin(), support.end());
    c = LeastSquaresOnSupport(a, f, support);
    double residual = (a * c - f).norm();
    if (residual < best.residual) best = {c, residual, 1, support};
    start = 2;
  }
  double previous = (a * c - f).norm();
  for (int it = start; it <= options.max_iters; ++it) {
    Vector g = c + options.step * (a.adjoint() * (f - a * c));
    std::vector<int> next = TopIndices(g.cwiseAbs(), s);
    if (next == support && it > 1) break;
    support = std::move(next);
    c = LeastSquaresOnSupport(a, f, support);
    double residual = (a * c - f).norm();
    if (residual < best.residual) best = {c, residual, it, support};
    if (Converged(previous, residual, options.tol, scale)) break;
    previous = residual;
  }
  if (best.support.empty() && s > 0) best.support = SupportOf(best.c);
  return best;
}

uint64_t MatrixId(const Matrix& a) {
  uint64_t h = 1469598103934665603ULL;
  auto mix = [&h](const void* data, size_t bytes) {
    const unsigned char* p = static_cast<const unsigned char*>(data);
    for (size_t i = 0; i < bytes; ++i) {
      h ^= p[i];
      h *= 1099511628211ULL;
    }
  };
  int64_t rows = a.rows(), cols = a.cols();
  mix(&rows, sizeof(rows));
  mix(&cols, sizeof(cols));
  for (Eigen::Index j = 0; j < a.cols(); ++j) {
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
      double re = a(i, j).real(), im = a(i, j).imag();
      mix(&re, sizeof(re));
      mix(&im, sizeof(im));
    }
  }
  return h;
}

double BinomialCount(int d, int s) {
  if (s < 0 || s > d) return 0.0;
  s = std::min(s, d - s);
  double out = 1.0;
  for (int i = 1; i <= s; ++i) out = out * (d - s + i) / i;
  return std::round(out);
}

RipCertificate RipConstantBruteForce(const Matrix& a, int s, double guard) {
  int d = static_cast<int>(a.cols());
  if (s < 1) throw ArgumentError("RIP order must be >= 1");
  s = std::min(s, d);
  if (BinomialCount(d, s) > guard) {
    std::ostringstream msg;
    msg << "brute-force RIP over C(" << d << ", " << s
        << ") supports exceeds the guard " << guard;
    throw CombinatorialGuardError(msg.str());
  }
  Matrix gram = a.adjoint() * a;
  std::vector<int> idx(s);
  std::iota(idx.begin(), idx.end(), 0);
  Matrix sub(s, s);
  Eigen::SelfAdjointEigenSolver<Matrix> es;
  double delta = 0.0;
  while (true) {
    for (int i = 0; i < s; ++i) {
      for (int j = 0; j < s; ++j) sub(i, j) = gram(idx[i], idx[j]);
    }
    es.compute(sub, Eigen::EigenvaluesOnly);
    delta = std::max({delta, es.eigenvalues()(s - 1) - 1.0,
                      1.0 - es.eigenvalues()(0)});
    int pos = s - 1;
    while (pos >= 0 && idx[pos] == d - s + pos) --pos;
    if (pos < 0) break;
    ++idx[pos];
    for (int k = pos + 1; k < s; ++k) idx[k] = idx[k - 1] + 1;
  }
  return RipCertificate{MatrixId(a), s, delta, RipMethod::kBruteForce};
}

SpilloverResult SpilloverCheck(const Matrix& a_normalized,
                               const std::vector<int>& s,
                               const std::vector<int>& s_prime,
                               double delta_2s) {
  for (int i : s) {
    if (std::find(s_prime.begin(), s_prime.end(), i) != s_prime.end()) {
      throw ArgumentError("supports S and S' overlap");
    }
  }
  if (!(delta_2s < 1.0)) throw ArgumentError("spillover bound needs Delta_2s < 1");
  auto columns = [&](const std::vector<int>& cols) {
    Matrix out(a_normalized.rows(), static_cast<Eigen::Index>(cols.size()));
    for (size_t j = 0; j < cols.size(); ++j) {
      if (cols[j] < 0 || cols[j] >= a_normalized.cols()) {
        throw ArgumentError("support index out of range");
      }
      out.col(j) = a_normalized.col(cols[j]);
    }
    return out;
  };
  Matrix a_s = columns(s);
  Matrix a_sp = columns(s_prime);
  SpilloverResult out;
  out.lhs = OperatorNorm(PseudoInverse(a_s) * a_sp);
  out.cross_gram = OperatorNorm(a_s.adjoint() * a_sp);
  out.delta_2s = delta_2s;
  out.rhs = delta_2s / (1.0 - delta_2s);
  return out;
}

double PseudoInverseNormBound(int m, double delta) {
  if (m < 1 || delta < 0.0 || delta >= 1.0) {
    throw ArgumentError("bound needs M >= 1 and 0 <= delta < 1");
  }
  return std::sqrt(1.0 + delta) / (std::sqrt(static_cast<double>(m)) * (1.0 - delta));
}

}  // namespace paramtomo
