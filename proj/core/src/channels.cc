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

#include "paramtomo/channels.h"

#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>

#include "paramtomo/errors.h"
#include "paramtomo/qsim.h"
#include "paramtomo/tomo.h"

namespace paramtomo {
namespace {

int SuperopDim(const Matrix& superop) {
  if (superop.rows() != superop.cols()) {
    throw ArgumentError("superoperator must be square");
  }
  int d = static_cast<int>(std::lround(std::sqrt(static_cast<double>(superop.rows()))));
  if (static_cast<Eigen::Index>(d) * d != superop.rows()) {
    throw ArgumentError("superoperator size is not a square dimension");
  }
  return d;
}

}  // namespace

Vector Vectorize(const Matrix& x) {
  return Eigen::Map<const Vector>(x.data(), x.size());
}

Matrix Unvectorize(const Vector& v) {
  int d = static_cast<int>(std::lround(std::sqrt(static_cast<double>(v.size()))));
  if (static_cast<Eigen::Index>(d) * d != v.size()) {
    throw ArgumentError("vector length is not a square dimension");
  }
  return Eigen::Map<const Matrix>(v.data(), d, d);
}

Matrix SuperoperatorFromKraus(const std::vector<Matrix>& kraus) {
  if (kraus.empty()) throw ArgumentError("need at least one Kraus operator");
  Eigen::Index d = kraus.front().rows();
  Matrix out = Matrix::Zero(d * d, d * d);
  for (const Matrix& k : kraus) {
    if (k.rows() != d || k.cols() != d) {
      throw ArgumentError("Kraus operators must share one square shape");
    }
    out += Kron(k.conjugate(), k);
  }
  return out;
}

Matrix IdentityChannel(int n) {
  Eigen::Index d = Eigen::Index{1} << n;
  return Matrix::Identity(d * d, d * d);
}

Matrix UnitaryChannel(const Matrix& u) { return SuperoperatorFromKraus({u}); }

Matrix DepolarizingChannel(int n, double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw ArgumentError("depolarizing p must lie in [0, 1]");
  Eigen::Index d = Eigen::Index{1} << n;
  Vector vec_id = Vectorize(Matrix::Identity(d, d));
  return (1.0 - p) * Matrix::Identity(d * d, d * d) +
         (p / static_cast<double>(d)) * vec_id * vec_id.transpose();
}

Matrix RandomChannel(int n, int kraus_rank, Rng& rng) {
  if (kraus_rank < 1) throw ArgumentError("Kraus rank must be >= 1");
  int d = 1 << n;
  Matrix u = RandomUnitary(d * kraus_rank, rng);
  // Columns 0..d-1 form an isometry V; K_r is the r-th d x d row block.
  std::vector<Matrix> kraus;
  for (int r = 0; r < kraus_rank; ++r) kraus.push_back(u.block(r * d, 0, d, d));
  return SuperoperatorFromKraus(kraus);
}

Matrix ChannelApply(const Matrix& superop, const Matrix& rho) {
  int d = SuperopDim(superop);
  if (rho.rows() != d || rho.cols() != d) {
    throw ArgumentError("state dimension does not match the channel");
  }
  return Unvectorize(superop * Vectorize(rho));
}

Matrix ChoiState(const Matrix& superop) {
  int d = SuperopDim(superop);
  Matrix j = Matrix::Zero(d * d, d * d);
  for (int a = 0; a < d; ++a) {
    for (int b = 0; b < d; ++b) {
      // C[|a><b|] is column b*d + a of the superoperator.
      Matrix image = Unvectorize(superop.col(b * d + a));
      j.block(a * d, b * d, d, d) = image / static_cast<double>(d);
    }
  }
  return j;
}

Matrix SuperoperatorFromChoi(const Matrix& choi) {
  int d = SuperopDim(choi);
  Matrix out(d * d, d * d);
  for (int a = 0; a < d; ++a) {
    for (int b = 0; b < d; ++b) {
      Matrix image = static_cast<double>(d) * choi.block(a * d, b * d, d, d);
      out.col(b * d + a) = Vectorize(image);
    }
  }
  return out;
}

bool IsCptp(const Matrix& superop, double tol) {
  int d = SuperopDim(superop);
  Matrix j = ChoiState(superop);
  if ((j - j.adjoint()).norm() > tol) return false;
  Eigen::SelfAdjointEigenSolver<Matrix> eig(HermitianPart(j));
  if (eig.eigenvalues().minCoeff() < -tol) return false;
  // Trace preservation: the output partial trace of J is I / d.
  Matrix reduced = Matrix::Zero(d, d);
  for (int a = 0; a < d; ++a) {
    for (int b = 0; b < d; ++b) reduced(a, b) = j.block(a * d, b * d, d, d).trace();
  }
  return (reduced - Matrix::Identity(d, d) / static_cast<double>(d)).norm() <= tol;
}

PauliTransferValue PauliTransferProbe(const Matrix& superop, const PauliWord& p,
                                      const PauliWord& q) {
  int d = SuperopDim(superop);
  if (p.num_qubits() != q.num_qubits() || (1 << p.num_qubits()) != d) {
    throw ArgumentError("Pauli words do not match the channel dimension");
  }
  Matrix pm = PauliMatrix(p);
  PauliTransferValue out;
  out.direct = (PauliTrace(q, ChannelApply(superop, pm)) /
                static_cast<double>(d)).real();
  out.choi = (ChoiState(superop) * Kron(pm.transpose(), PauliMatrix(q)))
                 .trace()
                 .real();
  return out;
}

RealMatrix PauliTransferMatrix(const Matrix& superop) {
  int d = SuperopDim(superop);
  int n = QubitCount(d);
  std::vector<PauliWord> words = AllPauliWords(n);
  RealMatrix r(words.size(), words.size());
  for (size_t col = 0; col < words.size(); ++col) {
    Matrix image = ChannelApply(superop, PauliMatrix(words[col]));
    for (size_t row = 0; row < words.size(); ++row) {
      r(row, col) = PauliTrace(words[row], image).real() / d;
    }
  }
  return r;
}

double TesterSeminorm(const Matrix& superop,
                      const std::vector<std::pair<Matrix, Matrix>>& testers) {
  double best = 0.0;
  for (const auto& [rho, o] : testers) {
    Matrix image = ChannelApply(superop, rho);
    if (o.rows() != image.rows() || o.cols() != image.cols()) {
      throw ArgumentError("tester observable has the wrong dimension");
    }
    best = std::max(best, std::abs((o * image).trace()));
  }
  return best;
}

Matrix AcquireChannel(ChannelProcedureKind kind, const Matrix& superop,
                      int64_t shots_per_pauli, Rng& rng) {
  switch (kind) {
    case ChannelProcedureKind::kExactOracle:
      return superop;
    case ChannelProcedureKind::kChoiPauliTomography: {
      if (shots_per_pauli < 1) throw ArgumentError("need shots_per_pauli >= 1");
      Matrix choi = FullPauliTomography(ChoiState(superop), shots_per_pauli, rng);
      return SuperoperatorFromChoi(choi);
    }
    case ChannelProcedureKind::kPauliSparseLearning:
      throw CapabilityError("Pauli-sparse channel learning is not implemented");
    case ChannelProcedureKind::kAverageCaseLocalLearning:
      throw CapabilityError("average-case local channel learning is not implemented");
  }
  throw ArgumentError("unknown channel procedure");
}

Matrix ParametrizedChannel::Apply(double x, const Matrix& rho) const {
  return ChannelApply(Evaluate(x), rho);
}

ParametrizedChannel MakeParametrizedChannel(ParametrizedOperator superops) {
  int d = SuperopDim(Matrix::Zero(superops.dim(), superops.dim()));
  ParametrizedChannel out{std::move(superops), QubitCount(d)};
  return out;
}

ParametrizedChannel RecoverChannel(const RecoveryPlan& plan,
                                   const std::vector<int>& s,
                                   const std::vector<Matrix>& observations,
                                   const MeasurementMatrix& a,
                                   RecoveryReport* report) {
  std::vector<Estimate> estimates;
  estimates.reserve(observations.size());
  for (const Matrix& m : observations) {
    SuperopDim(m);
    estimates.emplace_back(m);
  }
  RecoveryReport r = RecoverSparse(plan, s, std::move(estimates), a);
  r.is_channel = true;
  ParametrizedChannel out = MakeParametrizedChannel(r.Densify());
  if (report != nullptr) *report = std::move(r);
  return out;
}

Matrix ZRotationChannel(double theta) {
  Matrix u = Matrix::Zero(2, 2);
  u(0, 0) = std::exp(Complex(0.0, -theta / 2.0));
  u(1, 1) = std::exp(Complex(0.0, theta / 2.0));
  return UnitaryChannel(u);
}

}  // namespace paramtomo
