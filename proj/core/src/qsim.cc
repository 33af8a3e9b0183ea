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

#include "paramtomo/qsim.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

#include <Eigen/Eigenvalues>
#include <Eigen/QR>

#include "paramtomo/errors.h"

namespace paramtomo {

int QubitCount(Eigen::Index dim) {
  if (dim < 1 || (dim & (dim - 1)) != 0) {
    std::ostringstream msg;
    msg << "dimension " << dim << " is not a power of two";
    throw ArgumentError(msg.str());
  }
  int n = 0;
  while ((Eigen::Index{1} << n) < dim) ++n;
  return n;
}

bool IsDensityOperator(const Matrix& rho, double tol, double psd_tol) {
  if (rho.rows() != rho.cols() || rho.rows() == 0) return false;
  if (HermiticityDefect(rho) > tol) return false;
  if (std::abs(rho.trace() - Complex(1.0, 0.0)) > tol) return false;
  Eigen::SelfAdjointEigenSolver<Matrix> es(HermitianPart(rho),
                                           Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff() >= -psd_tol;
}

Hamiltonian::Hamiltonian(const Matrix& h) : matrix_(h) {
  if (h.rows() != h.cols() || h.rows() == 0) {
    throw ArgumentError("Hamiltonian must be a nonempty square matrix");
  }
  if (HermiticityDefect(h) > 1e-9 * std::max(1.0, h.cwiseAbs().maxCoeff())) {
    throw ArgumentError("Hamiltonian must be Hermitian");
  }
  Matrix off = h;
  off.diagonal().setZero();
  diagonal_ = off.cwiseAbs().maxCoeff() == 0.0;
  if (diagonal_) {
    eigenvalues_ = h.diagonal().real();
    eigenvectors_ = Matrix::Identity(h.rows(), h.cols());
  } else {
    Eigen::SelfAdjointEigenSolver<Matrix> es(HermitianPart(h));
    eigenvalues_ = es.eigenvalues();
    eigenvectors_ = es.eigenvectors();
  }
}

Hamiltonian Hamiltonian::Diagonal(const std::vector<double>& energies) {
  Matrix h = Matrix::Zero(energies.size(), energies.size());
  for (size_t i = 0; i < energies.size(); ++i) h(i, i) = energies[i];
  return Hamiltonian(h);
}

Matrix Hamiltonian::Propagator(double t) const {
  Vector phases(dim());
  for (int i = 0; i < dim(); ++i) {
    phases(i) = std::exp(Complex(0.0, -eigenvalues_(i) * t));
  }
  if (diagonal_) return phases.asDiagonal();
  return eigenvectors_ * phases.asDiagonal() * eigenvectors_.adjoint();
}

SpectralDecomposition SpectralDecompose(const Hamiltonian& h, double tol) {
  std::vector<int> order(h.dim());
  for (int i = 0; i < h.dim(); ++i) order[i] = i;
  const RealVector& ev = h.eigenvalues();
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return ev(a) < ev(b); });
  SpectralDecomposition out;
  for (size_t pos = 0; pos < order.size();) {
    size_t end = pos + 1;
    while (end < order.size() && ev(order[end]) - ev(order[pos]) <= tol) ++end;
    Matrix proj = Matrix::Zero(h.dim(), h.dim());
    double mean = 0.0;
    for (size_t j = pos; j < end; ++j) {
      auto v = h.eigenvectors().col(order[j]);
      proj += v * v.adjoint();
      mean += ev(order[j]);
    }
    out.energies.push_back(mean / static_cast<double>(end - pos));
    out.projectors.push_back(std::move(proj));
    pos = end;
  }
  return out;
}

IntegerSpectrumHamiltonian IntegerSpectrumHamiltonian::FromDiagonal(
    std::vector<int64_t> diag) {
  int n = QubitCount(static_cast<Eigen::Index>(diag.size()));
  for (int64_t e : diag) {
    if (e < 0) throw ArgumentError("integer energies must be >= 0");
  }
  return IntegerSpectrumHamiltonian{n, std::move(diag)};
}

IntegerSpectrumHamiltonian IntegerSpectrumHamiltonian::FromWeights(
    const std::vector<int64_t>& weights,
    const std::vector<std::vector<int64_t>>& couplings) {
  int n = static_cast<int>(weights.size());
  if (n < 1 || n > 20) throw ArgumentError("need 1..20 qubits");
  std::vector<int64_t> diag(size_t{1} << n, 0);
  for (size_t b = 0; b < diag.size(); ++b) {
    int64_t e = 0;
    for (int q = 0; q < n; ++q) {
      int bq = (b >> (n - 1 - q)) & 1;
      e += weights[q] * bq;
      if (static_cast<int>(couplings.size()) > q) {
        for (int r = q + 1; r < n && r < static_cast<int>(couplings[q].size());
             ++r) {
          e += couplings[q][r] * bq * ((b >> (n - 1 - r)) & 1);
        }
      }
    }
    diag[b] = e;
  }
  int64_t lowest = *std::min_element(diag.begin(), diag.end());
  for (int64_t& e : diag) e -= lowest;
  return FromDiagonal(std::move(diag));
}

int64_t IntegerSpectrumHamiltonian::e_max() const {
  return diagonal.empty() ? 0 : *std::max_element(diagonal.begin(), diagonal.end());
}

Hamiltonian IntegerSpectrumHamiltonian::ToHamiltonian() const {
  std::vector<double> e(diagonal.begin(), diagonal.end());
  return Hamiltonian::Diagonal(e);
}

namespace {

void CheckSameShape(const Hamiltonian& h, const Matrix& rho) {
  if (rho.rows() != h.dim() || rho.cols() != h.dim()) {
    throw ArgumentError("state and Hamiltonian dimensions differ");
  }
}

}  // namespace

Matrix Evolve(const Hamiltonian& h, const Matrix& rho0, double t) {
  CheckSameShape(h, rho0);
  if (t == 0.0) return rho0;
  const RealVector& ev = h.eigenvalues();
  Matrix rotated = h.is_diagonal()
                       ? rho0
                       : Matrix(h.eigenvectors().adjoint() * rho0 *
                                h.eigenvectors());
  for (int a = 0; a < h.dim(); ++a) {
    for (int b = 0; b < h.dim(); ++b) {
      rotated(a, b) *= std::exp(Complex(0.0, -(ev(a) - ev(b)) * t));
    }
  }
  if (h.is_diagonal()) return rotated;
  return h.eigenvectors() * rotated * h.eigenvectors().adjoint();
}

Matrix EvolveSigned(const Hamiltonian& h, const Matrix& time_reversal,
                    const Matrix& rho0, double t) {
  if (t >= 0.0) return Evolve(h, rho0, t);
  const Matrix& v = time_reversal;
  return v * Evolve(h, v.adjoint() * rho0 * v, -t) * v.adjoint();
}

ParametrizedOperator FourierCoefficients(const IntegerSpectrumHamiltonian& h,
                                         const Matrix& rho0) {
  int dim = static_cast<int>(h.diagonal.size());
  if (rho0.rows() != dim || rho0.cols() != dim) {
    throw ArgumentError("state and Hamiltonian dimensions differ");
  }
  int e_max = static_cast<int>(h.e_max());
  BasisSystem basis = BasisSystem::Fourier(e_max);
  std::vector<Matrix> coeffs(basis.size(), Matrix::Zero(dim, dim));
  // Entry (a, b) of rho(t) carries exp(-i (E_a - E_b) t) = phi_{E_a - E_b}.
  for (int a = 0; a < dim; ++a) {
    for (int b = 0; b < dim; ++b) {
      int label = static_cast<int>(h.diagonal[a] - h.diagonal[b]);
      coeffs[label + e_max](a, b) = rho0(a, b);
    }
  }
  return ParametrizedOperator(basis, basis.labels(), std::move(coeffs));
}

ParametrizedOperator ChebyshevCoefficients(const Hamiltonian& h,
                                           const Matrix& rho0, double horizon,
                                           int cutoff) {
  CheckSameShape(h, rho0);
  if (cutoff < 0) throw ArgumentError("cutoff must be >= 0");
  int dim = h.dim();
  BasisSystem basis = BasisSystem::Chebyshev(cutoff + 1);
  Matrix rotated = h.eigenvectors().adjoint() * rho0 * h.eigenvectors();
  std::vector<Matrix> coeffs(cutoff + 1, Matrix::Zero(dim, dim));
  const RealVector& ev = h.eigenvalues();
  for (int a = 0; a < dim; ++a) {
    for (int b = 0; b < dim; ++b) {
      Vector c = ChebyshevCoeffsOfPhase((ev(a) - ev(b)) * horizon, cutoff);
      for (int k = 0; k <= cutoff; ++k) coeffs[k](a, b) = c(k) * rotated(a, b);
    }
  }
  for (Matrix& c : coeffs) c = h.eigenvectors() * c * h.eigenvectors().adjoint();
  return ParametrizedOperator(basis, basis.labels(), std::move(coeffs));
}

SubgaussianState PrepareSubgaussianState(const IntegerSpectrumHamiltonian& h,
                                         double e0, double sigma, Rng& rng) {
  if (!(sigma > 0.0)) throw ArgumentError("sigma must be positive");
  if (h.diagonal.empty()) throw ArgumentError("empty spectrum");
  std::map<int64_t, std::vector<int>> eigenspaces;
  for (size_t i = 0; i < h.diagonal.size(); ++i) {
    eigenspaces[h.diagonal[i]].push_back(static_cast<int>(i));
  }
  std::vector<double> log_weights;
  for (const auto& [e, indices] : eigenspaces) {
    double d = static_cast<double>(e) - e0;
    log_weights.push_back(-d * d / (2.0 * sigma * sigma));
  }
  double top = *std::max_element(log_weights.begin(), log_weights.end());
  double sum = 0.0;
  for (double lw : log_weights) sum += std::exp(lw - top);

  SubgaussianState out;
  // p_e exp(+(e-e0)^2/(2 sigma^2)) = 1/Z for every e, so tau = 1/Z.
  out.tau = std::exp(-top - std::log(sum));
  Vector psi = Vector::Zero(static_cast<Eigen::Index>(h.diagonal.size()));
  std::normal_distribution<double> gauss(0.0, 1.0);
  size_t idx = 0;
  for (const auto& [e, indices] : eigenspaces) {
    double p = std::exp(log_weights[idx++] - top) / sum;
    Vector dir(static_cast<Eigen::Index>(indices.size()));
    for (Eigen::Index j = 0; j < dir.size(); ++j) {
      dir(j) = Complex(gauss(rng), gauss(rng));
    }
    dir.normalize();
    for (size_t j = 0; j < indices.size(); ++j) {
      psi(indices[j]) = std::sqrt(p) * dir(static_cast<Eigen::Index>(j));
    }
    out.energies.push_back(static_cast<double>(e));
    out.populations.push_back(p);
  }
  psi.normalize();
  out.rho = psi * psi.adjoint();
  return out;
}

Matrix PartialTrace(const Matrix& x, const std::vector<int>& keep) {
  if (x.rows() != x.cols()) throw ArgumentError("operator must be square");
  int n = QubitCount(x.rows());
  std::vector<int> kept = keep;
  std::sort(kept.begin(), kept.end());
  for (size_t i = 0; i < kept.size(); ++i) {
    if (kept[i] < 0 || kept[i] >= n || (i > 0 && kept[i] == kept[i - 1])) {
      throw ArgumentError("invalid qubit subset for partial trace");
    }
  }
  std::vector<int> traced;
  for (int q = 0; q < n; ++q) {
    if (!std::binary_search(kept.begin(), kept.end(), q)) traced.push_back(q);
  }
  auto spread = [n](uint64_t compact, const std::vector<int>& qubits) {
    uint64_t full = 0;
    int k = static_cast<int>(qubits.size());
    for (int idx = 0; idx < k; ++idx) {
      if ((compact >> (k - 1 - idx)) & 1) full |= uint64_t{1} << (n - 1 - qubits[idx]);
    }
    return full;
  };
  uint64_t dk = uint64_t{1} << kept.size();
  uint64_t dt = uint64_t{1} << traced.size();
  std::vector<uint64_t> kept_full(dk), traced_full(dt);
  for (uint64_t a = 0; a < dk; ++a) kept_full[a] = spread(a, kept);
  for (uint64_t c = 0; c < dt; ++c) traced_full[c] = spread(c, traced);
  Matrix out = Matrix::Zero(dk, dk);
  for (uint64_t a = 0; a < dk; ++a) {
    for (uint64_t b = 0; b < dk; ++b) {
      Complex sum = 0.0;
      for (uint64_t c = 0; c < dt; ++c) {
        sum += x(kept_full[a] | traced_full[c], kept_full[b] | traced_full[c]);
      }
      out(a, b) = sum;
    }
  }
  return out;
}

std::pair<double, double> ProjectorCrossTermCheck(const Matrix& rho,
                                                  const Matrix& p1,
                                                  const Matrix& p2) {
  if (rho.rows() != p1.rows() || rho.rows() != p2.rows() ||
      rho.cols() != p1.cols() || rho.cols() != p2.cols()) {
    throw ArgumentError("state and projector dimensions differ");
  }
  if ((p1 * p2).cwiseAbs().maxCoeff() > 1e-8) {
    throw ArgumentError("projectors are not orthogonal");
  }
  double lhs = TraceNorm(p1 * rho * p2);
  long r1 = std::lround(p1.trace().real());
  long r2 = std::lround(p2.trace().real());
  double r = static_cast<double>(std::min(r1, r2));
  double rhs = std::sqrt(std::max(0.0, r * TraceNorm(p1 * rho * p1) *
                                           TraceNorm(p2 * rho * p2)));
  return {lhs, rhs};
}

Matrix RandomUnitary(int dim, Rng& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Matrix g(dim, dim);
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) g(i, j) = Complex(gauss(rng), gauss(rng));
  }
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ();
  Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  // Fix the column phases so the distribution is Haar.
  for (int j = 0; j < dim; ++j) {
    Complex d = r(j, j);
    if (std::abs(d) > 0) q.col(j) *= d / std::abs(d);
  }
  return q;
}

Vector RandomStateVector(int dim, Rng& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Vector v(dim);
  for (int i = 0; i < dim; ++i) v(i) = Complex(gauss(rng), gauss(rng));
  return v.normalized();
}

Matrix RandomDensityMatrix(int dim, Rng& rng, int rank) {
  if (rank <= 0 || rank > dim) rank = dim;
  std::normal_distribution<double> gauss(0.0, 1.0);
  Matrix g(dim, rank);
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < rank; ++j) g(i, j) = Complex(gauss(rng), gauss(rng));
  }
  Matrix rho = g * g.adjoint();
  return rho / rho.trace().real();
}

Matrix RandomHermitian(int dim, Rng& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Matrix g(dim, dim);
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) g(i, j) = Complex(gauss(rng), gauss(rng));
  }
  return HermitianPart(g);
}

}  // namespace paramtomo
