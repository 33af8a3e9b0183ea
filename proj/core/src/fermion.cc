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

#include "paramtomo/fermion.h"

#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>

#include "paramtomo/errors.h"
#include "paramtomo/pauli.h"

namespace paramtomo {

FermionicGaussianHamiltonian::FermionicGaussianHamiltonian(const RealMatrix& f)
    : f_(f) {
  if (f.rows() != f.cols() || f.rows() == 0 || f.rows() % 2 != 0) {
    throw ArgumentError("F must be a nonempty 2n x 2n matrix");
  }
  if ((f + f.transpose()).cwiseAbs().maxCoeff() != 0.0) {
    throw ArgumentError("F must be exactly skew-symmetric");
  }
}

double FermionicGaussianHamiltonian::interaction_strength() const {
  return f_.cwiseAbs().maxCoeff();
}

double FermionicGaussianHamiltonian::TraceNormF() const {
  Eigen::JacobiSVD<RealMatrix> svd(f_);
  return svd.singularValues().sum();
}

double FermionicGaussianHamiltonian::OmegaMax() const {
  return 2.0 * TraceNormF();
}

bool FermionicGaussianHamiltonian::IsParticlePreserving() const {
  int n = n_modes();
  return f_.topLeftCorner(n, n).cwiseAbs().maxCoeff() == 0.0 &&
         f_.bottomRightCorner(n, n).cwiseAbs().maxCoeff() == 0.0;
}

RealMatrix RandomSkewSymmetric(int n_modes, double j, Rng& rng) {
  if (n_modes < 1) throw ArgumentError("need at least one mode");
  int m = 2 * n_modes;
  std::uniform_real_distribution<double> uniform(-1.0, 1.0);
  RealMatrix f = RealMatrix::Zero(m, m);
  for (int a = 0; a < m; ++a) {
    for (int b = a + 1; b < m; ++b) {
      f(a, b) = uniform(rng);
      f(b, a) = -f(a, b);
    }
  }
  double top = f.cwiseAbs().maxCoeff();
  if (top > 0.0) f *= j / top;
  return f;
}

RealMatrix HoppingToMajorana(const RealMatrix& h) {
  if (h.rows() != h.cols()) throw ArgumentError("h must be square");
  if ((h - h.transpose()).cwiseAbs().maxCoeff() != 0.0) {
    throw ArgumentError("h must be symmetric");
  }
  int n = static_cast<int>(h.rows());
  RealMatrix f = RealMatrix::Zero(2 * n, 2 * n);
  // sum_ij h_ij a_i^dagger a_j = const + (i/2) sum_ij h_ij gamma_i gamma_{n+j}.
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      f(i, n + j) = h(i, j) / 4.0;
      f(n + j, i) = -h(i, j) / 4.0;
    }
  }
  return f;
}

std::vector<Matrix> MajoranaOperators(int n_modes) {
  if (n_modes < 1) throw ArgumentError("need at least one mode");
  std::vector<Matrix> out(2 * n_modes);
  Matrix id = Matrix::Identity(2, 2);
  for (int j = 0; j < n_modes; ++j) {
    std::vector<Matrix> x_factors, y_factors;
    for (int q = 0; q < n_modes; ++q) {
      const Matrix& before = q < j ? PauliZ() : id;
      x_factors.push_back(q == j ? PauliX() : before);
      y_factors.push_back(q == j ? PauliY() : before);
    }
    out[j] = KronAll(x_factors);
    out[n_modes + j] = KronAll(y_factors);
  }
  return out;
}

namespace {

void CheckDenseLimit(int n_modes, int dense_limit) {
  if (n_modes > dense_limit) {
    throw ArgumentError("mode count exceeds the dense simulation limit");
  }
}

}  // namespace

Matrix JordanWigner(const FermionicGaussianHamiltonian& h, int dense_limit) {
  int n = h.n_modes();
  CheckDenseLimit(n, dense_limit);
  std::vector<Matrix> gamma = MajoranaOperators(n);
  int dim = 1 << n;
  Matrix out = Matrix::Zero(dim, dim);
  for (int a = 0; a < 2 * n; ++a) {
    for (int b = 0; b < 2 * n; ++b) {
      if (h.f()(a, b) != 0.0) {
        out += Complex(0.0, h.f()(a, b)) * (gamma[a] * gamma[b]);
      }
    }
  }
  return HermitianPart(out);
}

namespace {

// Eigen-decomposition of the Hermitian matrix iF.
Eigen::SelfAdjointEigenSolver<Matrix> SolveIF(const RealMatrix& f) {
  Matrix i_f = Complex(0.0, 1.0) * f.cast<Complex>();
  return Eigen::SelfAdjointEigenSolver<Matrix>(i_f);
}

}  // namespace

std::vector<double> FermionSpectrum(const FermionicGaussianHamiltonian& h) {
  int n = h.n_modes();
  auto es = SolveIF(h.f());
  // Eigenvalues come in +-mu pairs; the largest n are the mu_j >= 0.
  std::vector<double> mu;
  for (int j = 0; j < n; ++j) {
    mu.push_back(std::max(0.0, es.eigenvalues()(2 * n - 1 - j)));
  }
  std::vector<double> spectrum;
  for (int signs = 0; signs < (1 << n); ++signs) {
    double e = 0.0;
    for (int j = 0; j < n; ++j) e += ((signs >> j) & 1 ? -2.0 : 2.0) * mu[j];
    spectrum.push_back(e);
  }
  std::sort(spectrum.begin(), spectrum.end());
  return spectrum;
}

Matrix TimeReversalUnitary(const FermionicGaussianHamiltonian& h,
                           int dense_limit) {
  int n = h.n_modes();
  CheckDenseLimit(n, dense_limit);
  std::vector<Matrix> gamma = MajoranaOperators(n);
  int dim = 1 << n;
  auto es = SolveIF(h.f());
  double tol = 1e-12 * std::max(1.0, h.f().cwiseAbs().maxCoeff());
  Matrix v = Matrix::Identity(dim, dim);
  for (int idx = 0; idx < 2 * n; ++idx) {
    if (es.eigenvalues()(idx) <= tol) continue;
    // For iF w = mu w with mu > 0, Re w and Im w span one normal-mode plane of
    // F and are orthogonal to every other such plane.
    RealVector q = es.eigenvectors().col(idx).imag();
    q.normalize();
    Matrix g = Matrix::Zero(dim, dim);
    for (int b = 0; b < 2 * n; ++b) g += q(b) * gamma[b];
    v = v * g;
  }
  return v;
}

Matrix GlobalXFlip(int n_qubits) {
  std::vector<Matrix> factors(n_qubits, PauliX());
  return KronAll(factors);
}

}  // namespace paramtomo
