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

#include "paramtomo/norms.h"

#include <algorithm>
#include <cmath>
#include <limits>

#include <Eigen/Eigenvalues>

#include "paramtomo/errors.h"
#include "paramtomo/qsim.h"

namespace paramtomo {

ObservableSet ObservableSet::TraceBall(int n) {
  return ObservableSet{ObservableKind::kTraceBall, n, 0, {}};
}

ObservableSet ObservableSet::LocalBall(int n, int ell) {
  ObservableSet obs{ObservableKind::kLocalBall, n, ell, {}};
  obs.Validate();
  return obs;
}

ObservableSet ObservableSet::HilbertSchmidtBall(int n) {
  return ObservableSet{ObservableKind::kHilbertSchmidtBall, n, 0, {}};
}

ObservableSet ObservableSet::PauliList(int n, std::vector<PauliWord> paulis) {
  ObservableSet obs{ObservableKind::kExplicitPauliList, n, 0, std::move(paulis)};
  obs.Validate();
  return obs;
}

ObservableSet ObservableSet::LocalPaulis(int n, int ell) {
  return PauliList(n, LocalPauliWords(n, ell));
}

void ObservableSet::Validate() const {
  if (n_qubits < 1) throw ArgumentError("observable set needs n >= 1");
  if (kind == ObservableKind::kLocalBall && (ell < 0 || ell > n_qubits)) {
    throw ArgumentError("locality ell must satisfy 0 <= ell <= n");
  }
  if (kind == ObservableKind::kExplicitPauliList) {
    if (paulis.empty()) throw ArgumentError("explicit Pauli list is empty");
    for (const PauliWord& w : paulis) {
      if (w.num_qubits() != n_qubits) {
        throw ArgumentError("Pauli word size differs from n");
      }
    }
  }
}

LpOrder LpOrderFromDouble(double p) {
  if (p == 1.0) return LpOrder::kOne;
  if (p == 2.0) return LpOrder::kTwo;
  if (p >= 1e300) return LpOrder::kInf;
  throw ArgumentError("norm order p must be 1, 2 or infinity");
}

namespace {

double Combine(const std::vector<double>& values, LpOrder p) {
  double acc = 0.0;
  switch (p) {
    case LpOrder::kOne:
      for (double v : values) acc += v;
      return acc;
    case LpOrder::kTwo:
      for (double v : values) acc += v * v;
      return std::sqrt(acc);
    case LpOrder::kInf:
      for (double v : values) acc = std::max(acc, v);
      return acc;
  }
  return acc;
}

void CheckDim(const Matrix& x, const ObservableSet& obs) {
  obs.Validate();
  Eigen::Index dim = Eigen::Index{1} << obs.n_qubits;
  if (x.rows() != dim || x.cols() != dim) {
    throw ArgumentError("operator dimension does not match observable set");
  }
}

std::vector<std::vector<int>> Subsets(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> current;
  auto rec = [&](auto&& self, int start) -> void {
    if (static_cast<int>(current.size()) == k) {
      out.push_back(current);
      return;
    }
    for (int q = start; q < n; ++q) {
      current.push_back(q);
      self(self, q + 1);
      current.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

// sign(H) for Hermitian H.
Matrix SignOperator(const Matrix& h) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(HermitianPart(h));
  Vector s(es.eigenvalues().size());
  for (Eigen::Index i = 0; i < s.size(); ++i) {
    s(i) = es.eigenvalues()(i) >= 0 ? 1.0 : -1.0;
  }
  return es.eigenvectors() * s.asDiagonal() * es.eigenvectors().adjoint();
}

double SumAbsEigen(const Matrix& h) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(HermitianPart(h),
                                           Eigen::EigenvaluesOnly);
  return es.eigenvalues().cwiseAbs().sum();
}

bool IsHermitian(const Matrix& v) {
  double scale = std::max(1.0, v.cwiseAbs().maxCoeff());
  return HermiticityDefect(v) <= 1e-12 * scale;
}

// Reduced operators Tr_{complement of I}[V] for every ell-subset I.
std::vector<Matrix> Reductions(const Matrix& v, int n, int ell) {
  std::vector<Matrix> out;
  for (const auto& subset : Subsets(n, ell)) out.push_back(PartialTrace(v, subset));
  return out;
}

constexpr int kPhaseGrid = 64;

// sup over Hermitian O in the trace ball of |Tr[O V]| for one operator,
// bracketed when V is not Hermitian.
NormBound TraceBallSingle(const Matrix& v) {
  if (IsHermitian(v)) {
    double value = SumAbsEigen(v);
    return {value, value, true};
  }
  double lower = 0.0;
  for (int j = 0; j < kPhaseGrid; ++j) {
    Complex phase = std::exp(Complex(0.0, kPi * j / kPhaseGrid));
    lower = std::max(lower, SumAbsEigen(HermitianPart(phase * v)));
  }
  return {lower, TraceNorm(v), false};
}

NormBound LocalBallSingle(const Matrix& v, int n, int ell) {
  NormBound out{0.0, 0.0, true};
  for (const Matrix& r : Reductions(v, n, ell)) {
    NormBound b = TraceBallSingle(r);
    out.lower = std::max(out.lower, b.lower);
    out.upper = std::max(out.upper, b.upper);
    out.exact = out.exact && b.exact;
  }
  if (out.exact) out.upper = out.lower;
  return out;
}

// sup over Hermitian O with ||O||_2 <= 1 of sum_i |Tr[O V_i]|^2. Writing
// V_i = A_i + i B_i with Hermitian A_i, B_i, this is the largest eigenvalue of
// the real Gram matrix of {A_i, B_i} under <X, Y> = Tr[X Y].
double HilbertSchmidtL2Squared(const std::vector<Matrix>& v) {
  std::vector<Matrix> parts;
  for (const Matrix& vi : v) {
    parts.push_back(HermitianPart(vi));
    parts.push_back(HermitianPart(Complex(0.0, -1.0) * vi));
  }
  int m = static_cast<int>(parts.size());
  RealMatrix gram(m, m);
  for (int a = 0; a < m; ++a) {
    for (int b = a; b < m; ++b) {
      gram(a, b) = (parts[a].adjoint().cwiseProduct(parts[b].transpose()))
                       .sum()
                       .real();
      gram(b, a) = gram(a, b);
    }
  }
  Eigen::SelfAdjointEigenSolver<RealMatrix> es(gram, Eigen::EigenvaluesOnly);
  return std::max(0.0, es.eigenvalues().maxCoeff());
}

// Lower bound for sup_O (sum_i |Tr[O W_i]|^p)^(1/p) over Hermitian O with
// ||O||_inf <= 1, all W_i acting on one subsystem, from sign-operator
// candidates.
double CandidateLowerBound(const std::vector<Matrix>& w, LpOrder p, Rng& rng) {
  std::vector<Matrix> candidates;
  for (const Matrix& wi : w) {
    for (int j = 0; j < 8; ++j) {
      Complex phase = std::exp(Complex(0.0, kPi * j / 8.0));
      candidates.push_back(SignOperator(HermitianPart(phase * wi)));
    }
  }
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * kPi);
  for (int trial = 0; trial < 16; ++trial) {
    Matrix mix = Matrix::Zero(w.front().rows(), w.front().cols());
    for (const Matrix& wi : w) {
      mix += gauss(rng) * HermitianPart(std::exp(Complex(0.0, angle(rng))) * wi);
    }
    candidates.push_back(SignOperator(mix));
  }
  double best = 0.0;
  std::vector<double> values(w.size());
  for (const Matrix& o : candidates) {
    for (size_t i = 0; i < w.size(); ++i) {
      values[i] = std::abs((o.cwiseProduct(w[i].transpose())).sum());
    }
    best = std::max(best, Combine(values, p));
  }
  return best;
}

}  // namespace

double InducedSeminorm(const Matrix& x, const ObservableSet& obs) {
  CheckDim(x, obs);
  Matrix h = HermitianPart(x);
  switch (obs.kind) {
    case ObservableKind::kTraceBall:
      return SumAbsEigen(h);
    case ObservableKind::kHilbertSchmidtBall:
      return h.norm();
    case ObservableKind::kLocalBall: {
      double best = 0.0;
      for (const Matrix& r : Reductions(h, obs.n_qubits, obs.ell)) {
        best = std::max(best, SumAbsEigen(r));
      }
      return best;
    }
    case ObservableKind::kExplicitPauliList: {
      double best = 0.0;
      for (const PauliWord& w : obs.paulis) {
        best = std::max(best, std::abs(PauliTrace(w, h).real()));
      }
      return best;
    }
  }
  throw CapabilityError("unsupported observable kind");
}

double PauliLpValue(const std::vector<Matrix>& v, const PauliWord& word,
                    LpOrder p) {
  std::vector<double> values;
  values.reserve(v.size());
  for (const Matrix& vi : v) values.push_back(std::abs(PauliTrace(word, vi)));
  return Combine(values, p);
}

NormBound InducedLpVector(const std::vector<Matrix>& v, const ObservableSet& obs,
                          LpOrder p, uint64_t seed) {
  if (v.empty()) throw ArgumentError("operator vector is empty");
  for (const Matrix& vi : v) CheckDim(vi, obs);

  if (obs.kind == ObservableKind::kExplicitPauliList) {
    double best = 0.0;
    for (const PauliWord& w : obs.paulis) best = std::max(best, PauliLpValue(v, w, p));
    return {best, best, true};
  }

  if (obs.kind == ObservableKind::kHilbertSchmidtBall) {
    if (p == LpOrder::kTwo) {
      double value = std::sqrt(HilbertSchmidtL2Squared(v));
      return {value, value, true};
    }
    std::vector<double> singles;
    for (const Matrix& vi : v) singles.push_back(std::sqrt(HilbertSchmidtL2Squared({vi})));
    if (p == LpOrder::kInf) {
      double value = Combine(singles, p);
      return {value, value, true};
    }
    // p = 1: the optimal O aligned with one element gives a lower bound.
    double lower = 0.0;
    for (const Matrix& vi : v) {
      Matrix o = HermitianPart(vi);
      if (o.norm() == 0.0) o = HermitianPart(Complex(0.0, -1.0) * vi);
      if (o.norm() == 0.0) continue;
      o /= o.norm();
      double total = 0.0;
      for (const Matrix& vj : v) total += std::abs((o.cwiseProduct(vj.transpose())).sum());
      lower = std::max(lower, total);
    }
    return {lower, Combine(singles, p), false};
  }

  // Trace ball and local ball.
  std::vector<NormBound> singles;
  for (const Matrix& vi : v) {
    singles.push_back(obs.kind == ObservableKind::kTraceBall
                          ? TraceBallSingle(vi)
                          : LocalBallSingle(vi, obs.n_qubits, obs.ell));
  }
  std::vector<double> uppers, lowers;
  bool all_exact = true;
  for (const NormBound& b : singles) {
    uppers.push_back(b.upper);
    lowers.push_back(b.lower);
    all_exact = all_exact && b.exact;
  }
  if (p == LpOrder::kInf) {
    return {Combine(lowers, p), Combine(uppers, p), all_exact};
  }
  Rng rng(seed);
  double lower = Combine(lowers, LpOrder::kInf);
  if (obs.kind == ObservableKind::kTraceBall) {
    lower = std::max(lower, CandidateLowerBound(v, p, rng));
  } else {
    for (const auto& subset : Subsets(obs.n_qubits, obs.ell)) {
      std::vector<Matrix> reduced;
      for (const Matrix& vi : v) reduced.push_back(PartialTrace(vi, subset));
      lower = std::max(lower, CandidateLowerBound(reduced, p, rng));
    }
  }
  double upper = Combine(uppers, p);
  lower = std::min(lower, upper);
  bool exact = v.size() == 1 && all_exact;
  return {exact ? upper : lower, upper, exact};
}

void QuadratureRule(const BasisSystem& basis, int nodes,
                    std::vector<double>* points, std::vector<double>* weights) {
  if (nodes < 1) throw ArgumentError("quadrature needs >= 1 node");
  points->resize(nodes);
  weights->assign(nodes, 1.0 / nodes);
  for (int j = 0; j < nodes; ++j) {
    (*points)[j] = basis.kind() == BasisKind::kFourier
                       ? 2.0 * kPi * j / nodes
                       : std::cos(kPi * (j + 0.5) / nodes);
  }
}

namespace {

// Trajectory samples Tr[P X(x_j)] for one Pauli word.
std::vector<Complex> PauliTrajectory(const ParametrizedOperator& x,
                                     const PauliWord& word,
                                     const std::vector<double>& points) {
  std::vector<Complex> c;
  for (const Matrix& a : x.coeffs()) c.push_back(PauliTrace(word, a));
  std::vector<Complex> out(points.size(), 0.0);
  for (size_t j = 0; j < points.size(); ++j) {
    for (size_t k = 0; k < c.size(); ++k) {
      out[j] += c[k] * EvaluateBasis(x.basis(), x.support()[k], points[j]);
    }
  }
  return out;
}

}  // namespace

double QuadratureL2PauliList(const ParametrizedOperator& x,
                             const ObservableSet& obs, int quadrature_nodes) {
  if (obs.kind != ObservableKind::kExplicitPauliList) {
    throw CapabilityError("quadrature route needs an explicit Pauli list");
  }
  obs.Validate();
  std::vector<double> points, weights;
  QuadratureRule(x.basis(), quadrature_nodes, &points, &weights);
  double best = 0.0;
  for (const PauliWord& w : obs.paulis) {
    std::vector<Complex> f = PauliTrajectory(x, w, points);
    double acc = 0.0;
    for (size_t j = 0; j < f.size(); ++j) acc += weights[j] * std::norm(f[j]);
    best = std::max(best, std::sqrt(acc));
  }
  return best;
}

NormBound InducedLpSeminorm(const ParametrizedOperator& x,
                            const ObservableSet& obs, LpOrder p,
                            int quadrature_nodes) {
  if (x.size() == 0) return {0.0, 0.0, true};
  if (p == LpOrder::kTwo) return InducedLpVector(x.coeffs(), obs, p);
  if (obs.kind != ObservableKind::kExplicitPauliList) {
    throw CapabilityError(
        "L^1 and L^inf semi-norms are implemented for explicit Pauli lists only");
  }
  obs.Validate();
  std::vector<double> points, weights;
  QuadratureRule(x.basis(), quadrature_nodes, &points, &weights);
  double best = 0.0;
  for (const PauliWord& w : obs.paulis) {
    std::vector<Complex> f = PauliTrajectory(x, w, points);
    double acc = 0.0;
    for (size_t j = 0; j < f.size(); ++j) {
      if (p == LpOrder::kOne) {
        acc += weights[j] * std::abs(f[j]);
      } else {
        acc = std::max(acc, std::abs(f[j]));
      }
    }
    best = std::max(best, acc);
  }
  return {best, best, true};
}

NormBound SparsityDefect(const ParametrizedOperator& x,
                         const std::vector<int>& s, const ObservableSet& obs,
                         LpOrder p) {
  for (int label : s) {
    if (!x.HasLabel(label)) {
      throw ArgumentError("support S is not a subset of the operator support");
    }
  }
  ParametrizedOperator rest = x.RestrictComplement(s);
  if (rest.size() == 0) return {0.0, 0.0, true};
  return InducedLpVector(rest.coeffs(), obs, p);
}

}  // namespace paramtomo
