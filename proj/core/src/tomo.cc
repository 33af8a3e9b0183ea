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

#include "paramtomo/tomo.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>
#include <unordered_map>

#include <Eigen/Eigenvalues>

#include "paramtomo/errors.h"
#include "paramtomo/qsim.h"

namespace paramtomo {

void ShadowData::Validate() const {
  if (n_qubits < 1 || n_qubits > kMaxShadowQubits) {
    throw ArgumentError("shadow qubit count must be in [1, 16]");
  }
  uint64_t outcome_limit = uint64_t{1} << n_qubits;
  uint64_t basis_limit = uint64_t{1} << (2 * n_qubits);
  for (const Snapshot& s : snapshots) {
    if (s.outcomes >= outcome_limit || s.bases >= basis_limit) {
      throw ArgumentError("snapshot has bits above the qubit count");
    }
    for (int q = 0; q < n_qubits; ++q) {
      if (s.Basis(q, n_qubits) > 2) {
        throw ArgumentError("snapshot basis code must be 0, 1 or 2");
      }
    }
  }
}

ObservableSet TomographicProcedure::Guarantees(int n) const {
  switch (kind) {
    case TomographyKind::kExactOracle:
    case TomographyKind::kFullPauliTomography:
      return ObservableSet::TraceBall(n);
    case TomographyKind::kLocalCliffordShadows:
      return ObservableSet::LocalBall(n, std::min(ell, n));
  }
  return ObservableSet::TraceBall(n);
}

int64_t TomographicProcedure::SampleCount(double epsilon, double delta,
                                          int n) const {
  switch (kind) {
    case TomographyKind::kExactOracle:
      return 1;
    case TomographyKind::kFullPauliTomography:
      return explicit_count > 0 ? explicit_count
                                : FullTomographyShotsPerPauli(epsilon, delta, n);
    case TomographyKind::kLocalCliffordShadows:
      return explicit_count > 0 ? explicit_count
                                : ShadowSampleCount(epsilon, delta, n, ell, c0);
  }
  return 1;
}

namespace {

void CheckUnitInterval(double value, const char* name) {
  if (!(value > 0.0 && value < 1.0)) {
    std::ostringstream msg;
    msg << name << " must lie in (0, 1), got " << value;
    throw ArgumentError(msg.str());
  }
}

// Rotation taking the eigenbasis of the measured Pauli to the Z basis.
Matrix BasisRotation(int basis) {
  Matrix h(2, 2);
  h << 1, 1, 1, -1;
  h /= std::sqrt(2.0);
  if (basis == 0) return h;
  if (basis == 1) {
    Matrix s_dag(2, 2);
    s_dag << 1, 0, 0, Complex(0, -1);
    return h * s_dag;
  }
  return Matrix::Identity(2, 2);
}

}  // namespace

Estimate Acquire(const TomographicProcedure& proc, const Matrix& rho,
                 double epsilon, double delta, Rng& rng) {
  CheckUnitInterval(epsilon, "epsilon");
  CheckUnitInterval(delta, "delta");
  if (rho.rows() != rho.cols()) throw ArgumentError("state must be square");
  int n = QubitCount(rho.rows());
  switch (proc.kind) {
    case TomographyKind::kExactOracle:
      return rho;
    case TomographyKind::kFullPauliTomography:
      return FullPauliTomography(rho, proc.SampleCount(epsilon, delta, n), rng);
    case TomographyKind::kLocalCliffordShadows:
      return AcquireShadows(rho, proc.SampleCount(epsilon, delta, n), rng);
  }
  throw ArgumentError("unknown tomography kind");
}

ShadowData AcquireShadows(const Matrix& rho, int64_t count, Rng& rng) {
  if (count < 1) throw ArgumentError("snapshot count must be >= 1");
  if (rho.rows() != rho.cols()) throw ArgumentError("state must be square");
  int n = QubitCount(rho.rows());
  if (n > kMaxShadowQubits) throw ArgumentError("too many qubits for shadows");
  ShadowData data;
  data.n_qubits = n;
  data.snapshots.reserve(static_cast<size_t>(count));
  std::uniform_int_distribution<int> pick_basis(0, 2);
  std::unordered_map<uint32_t, std::discrete_distribution<uint32_t>> cache;
  for (int64_t t = 0; t < count; ++t) {
    uint32_t bases = 0;
    for (int q = 0; q < n; ++q) bases = (bases << 2) | pick_basis(rng);
    auto it = cache.find(bases);
    if (it == cache.end()) {
      std::vector<Matrix> factors;
      for (int q = 0; q < n; ++q) {
        factors.push_back(BasisRotation((bases >> (2 * (n - 1 - q))) & 3));
      }
      Matrix u = KronAll(factors);
      Matrix rotated = u * rho * u.adjoint();
      std::vector<double> probs(rotated.rows());
      for (Eigen::Index j = 0; j < rotated.rows(); ++j) {
        probs[j] = std::max(0.0, rotated(j, j).real());
      }
      it = cache.emplace(bases, std::discrete_distribution<uint32_t>(
                                    probs.begin(), probs.end()))
               .first;
    }
    data.snapshots.push_back(Snapshot{bases, it->second(rng)});
  }
  return data;
}

Matrix ProjectToDensityMatrix(const Matrix& h) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(HermitianPart(h));
  // Euclidean projection of the spectrum onto the probability simplex:
  // lambda_i -> max(lambda_i - theta, 0) with theta fixing the trace to 1.
  std::vector<double> sorted(es.eigenvalues().data(),
                             es.eigenvalues().data() + es.eigenvalues().size());
  std::sort(sorted.rbegin(), sorted.rend());
  double cumulative = 0.0;
  double theta = 0.0;
  for (size_t i = 0; i < sorted.size(); ++i) {
    cumulative += sorted[i];
    double candidate = (cumulative - 1.0) / static_cast<double>(i + 1);
    if (sorted[i] - candidate > 0.0) theta = candidate;
  }
  Vector clipped(es.eigenvalues().size());
  for (Eigen::Index i = 0; i < clipped.size(); ++i) {
    clipped(i) = std::max(es.eigenvalues()(i) - theta, 0.0);
  }
  return es.eigenvectors() * clipped.asDiagonal() * es.eigenvectors().adjoint();
}

Matrix FullPauliTomography(const Matrix& rho, int64_t shots_per_pauli,
                           Rng& rng) {
  if (shots_per_pauli < 1) throw ArgumentError("shots per Pauli must be >= 1");
  int n = QubitCount(rho.rows());
  Eigen::Index dim = rho.rows();
  Matrix estimate = Matrix::Identity(dim, dim);
  for (const PauliWord& w : AllPauliWords(n)) {
    if (w.Weight() == 0) continue;
    double e = std::clamp(PauliTrace(w, rho).real(), -1.0, 1.0);
    std::binomial_distribution<int64_t> shots(shots_per_pauli, (1.0 + e) / 2.0);
    int64_t plus = shots(rng);
    double mean = (2.0 * static_cast<double>(plus) -
                   static_cast<double>(shots_per_pauli)) /
                  static_cast<double>(shots_per_pauli);
    estimate += mean * PauliMatrix(w);
  }
  estimate /= static_cast<double>(dim);
  return ProjectToDensityMatrix(estimate);
}

double SnapshotEstimate(const Snapshot& snap, const PauliWord& word) {
  int n = word.num_qubits();
  double value = 1.0;
  for (int q = 0; q < n; ++q) {
    PauliLetter l = word[q];
    if (l == PauliLetter::kI) continue;
    if (snap.Basis(q, n) != static_cast<int>(l) - 1) return 0.0;
    value *= snap.Outcome(q, n) ? -3.0 : 3.0;
  }
  return value;
}

namespace {

void CheckWord(const ShadowData& data, const PauliWord& word) {
  if (word.num_qubits() != data.n_qubits) {
    throw ArgumentError("Pauli word size differs from shadow qubit count");
  }
  if (data.snapshots.empty()) throw ArgumentError("shadow has no snapshots");
}

}  // namespace

double ShadowExpectation(const ShadowData& data, const PauliWord& word,
                         int batches) {
  CheckWord(data, word);
  size_t total = data.snapshots.size();
  if (batches < 1 || static_cast<size_t>(batches) > total) {
    throw ArgumentError("median-of-means batch count must be in [1, T]");
  }
  std::vector<double> means;
  means.reserve(batches);
  for (int b = 0; b < batches; ++b) {
    size_t begin = total * b / batches;
    size_t end = total * (b + 1) / batches;
    double sum = 0.0;
    for (size_t t = begin; t < end; ++t) sum += SnapshotEstimate(data.snapshots[t], word);
    means.push_back(sum / static_cast<double>(end - begin));
  }
  std::sort(means.begin(), means.end());
  size_t mid = means.size() / 2;
  if (means.size() % 2 == 1) return means[mid];
  return 0.5 * (means[mid - 1] + means[mid]);
}

double ShadowStandardError(const ShadowData& data, const PauliWord& word) {
  CheckWord(data, word);
  double sum = 0.0, sum_sq = 0.0;
  for (const Snapshot& s : data.snapshots) {
    double v = SnapshotEstimate(s, word);
    sum += v;
    sum_sq += v * v;
  }
  double t = static_cast<double>(data.snapshots.size());
  if (t < 2) return 0.0;
  double mean = sum / t;
  double var = std::max(0.0, (sum_sq - t * mean * mean) / (t - 1.0));
  return std::sqrt(var / t);
}

Matrix DensifyShadow(const ShadowData& data) {
  if (data.snapshots.empty()) throw ArgumentError("shadow has no snapshots");
  int n = data.n_qubits;
  if (n > kDefaultDenseQubitCap) {
    throw ArgumentError("densification is limited to the dense qubit cap");
  }
  std::map<uint64_t, int64_t> counts;
  for (const Snapshot& s : data.snapshots) {
    ++counts[(static_cast<uint64_t>(s.bases) << 32) | s.outcomes];
  }
  const Matrix paulis[3] = {PauliX(), PauliY(), PauliZ()};
  Matrix id = Matrix::Identity(2, 2);
  Eigen::Index dim = Eigen::Index{1} << n;
  Matrix out = Matrix::Zero(dim, dim);
  for (const auto& [key, count] : counts) {
    Snapshot s{static_cast<uint32_t>(key >> 32), static_cast<uint32_t>(key)};
    std::vector<Matrix> factors;
    for (int q = 0; q < n; ++q) {
      double sign = s.Outcome(q, n) ? -1.0 : 1.0;
      // 3|s><s| - I = (I + 3 lambda sigma) / 2.
      factors.push_back((id + 3.0 * sign * paulis[s.Basis(q, n)]) / 2.0);
    }
    out += static_cast<double>(count) * KronAll(factors);
  }
  return out / static_cast<double>(data.snapshots.size());
}

double EstimatePauliExpectation(const Estimate& est, const PauliWord& word) {
  if (const Matrix* m = std::get_if<Matrix>(&est)) {
    return PauliTrace(word, *m).real();
  }
  return ShadowExpectation(std::get<ShadowData>(est), word, 1);
}

int64_t ShadowSampleCount(double epsilon, double delta, int n, int ell,
                          double c0) {
  if (!(epsilon > 0.0) || !(delta > 0.0) || n < 1 || ell < 0 || !(c0 > 0.0)) {
    throw ArgumentError("shadow sample count needs positive arguments");
  }
  double locality = std::max(ell, 1) * std::pow(12.0, ell);
  double value = c0 * locality / (epsilon * epsilon) *
                 std::log(static_cast<double>(n) / delta);
  return static_cast<int64_t>(std::ceil(std::max(value, 1.0)));
}

int64_t ShadowPauliListSampleCount(double epsilon, double delta, int max_weight,
                                   int64_t list_size) {
  if (!(epsilon > 0.0) || !(delta > 0.0 && delta < 1.0) || max_weight < 0 ||
      list_size < 1) {
    throw ArgumentError("Pauli-list shadow count needs positive arguments");
  }
  double value = 2.0 * std::pow(9.0, max_weight) / (epsilon * epsilon) *
                 std::log(2.0 * static_cast<double>(list_size) / delta);
  return static_cast<int64_t>(std::ceil(std::max(value, 1.0)));
}

double ShadowNormBound(const Matrix& o, int ell) {
  double norm = OperatorNorm(o);
  return std::pow(4.0, ell) * norm * norm;
}

int64_t FullTomographyShotsPerPauli(double epsilon, double delta, int n) {
  if (!(epsilon > 0.0) || !(delta > 0.0) || n < 1) {
    throw ArgumentError("full tomography shot count needs positive arguments");
  }
  double words = std::pow(4.0, n);
  return static_cast<int64_t>(
      std::ceil(2.0 * words * std::log(2.0 * words / delta) / (epsilon * epsilon)));
}

int64_t FermionicShadowSampleCount(double epsilon, double delta, int n,
                                   int ell) {
  if (!(epsilon > 0.0) || !(delta > 0.0) || n < 1 || ell < 1) {
    throw ArgumentError("fermionic shadow count needs positive arguments");
  }
  double value = std::pow(n, ell) * std::pow(ell, 1.5) / (epsilon * epsilon) *
                 std::log(static_cast<double>(n) / delta);
  return static_cast<int64_t>(std::ceil(value));
}

}  // namespace paramtomo
