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

#include "paramtomo/predict.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "paramtomo/errors.h"
#include "paramtomo/qsim.h"

namespace paramtomo {
namespace {

const std::vector<Estimate>& RequireObservations(const RecoveryReport& report) {
  if (!report.observations) {
    throw ArgumentError("report carries no observations for the weight route");
  }
  return *report.observations;
}

// Accumulates samples and returns the mean and the standard error of the mean.
struct RunningStats {
  int64_t count = 0;
  double mean = 0.0;
  double m2 = 0.0;
  void Add(double v) {
    ++count;
    double d = v - mean;
    mean += d / static_cast<double>(count);
    m2 += d * (v - mean);
  }
  double VarianceOfMean() const {
    if (count < 2) return 0.0;
    return m2 / static_cast<double>(count - 1) / static_cast<double>(count);
  }
};

}  // namespace

Matrix PauliSumMatrix(const PauliSum& o, int n) {
  int64_t dim = int64_t{1} << n;
  Matrix out = Matrix::Zero(dim, dim);
  for (const PauliTerm& t : o) {
    if (t.word.num_qubits() != n) {
      throw ArgumentError("Pauli term acts on the wrong number of qubits");
    }
    out += t.coeff * PauliMatrix(t.word);
  }
  return out;
}

PredictionWeights ComputePredictionWeights(const RecoveryReport& report,
                                           double x) {
  if (!report.basis().InDomain(x)) {
    throw DomainError("prediction point lies outside the basis domain");
  }
  PredictionWeights out;
  out.x = x;
  Vector phi(static_cast<Eigen::Index>(report.support.size()));
  for (size_t k = 0; k < report.support.size(); ++k) {
    phi(static_cast<Eigen::Index>(k)) =
        EvaluateBasis(report.basis(), report.support[k], x);
  }
  out.m = report.weights.transpose() * phi;
  return out;
}

double PredictExpectation(const RecoveryReport& report, const Matrix& o,
                          double x, PredictionRoute route) {
  if (!report.basis().InDomain(x)) {
    throw DomainError("prediction point lies outside the basis domain");
  }
  if (route == PredictionRoute::kCoefficients && report.dense_coeffs) {
    Complex acc = 0.0;
    for (size_t k = 0; k < report.support.size(); ++k) {
      const Matrix& alpha = (*report.dense_coeffs)[k];
      if (alpha.rows() != o.rows() || alpha.cols() != o.cols()) {
        throw ArgumentError("observable dimension does not match the state");
      }
      acc += (o * alpha).trace() *
             EvaluateBasis(report.basis(), report.support[k], x);
    }
    return acc.real();
  }
  if (report.has_shadow_observations()) {
    throw CapabilityError(
        "dense observables are not covered by shadow guarantees; use a Pauli "
        "sum");
  }
  const std::vector<Estimate>& obs = RequireObservations(report);
  Vector m = ComputePredictionWeights(report, x).m;
  Complex acc = 0.0;
  for (size_t i = 0; i < obs.size(); ++i) {
    const Matrix& rho = std::get<Matrix>(obs[i]);
    if (rho.rows() != o.rows() || rho.cols() != o.cols()) {
      throw ArgumentError("observable dimension does not match the state");
    }
    acc += m(static_cast<Eigen::Index>(i)) * (o * rho).trace();
  }
  return acc.real();
}

double PredictExpectation(const RecoveryReport& report, const PauliSum& o,
                          double x, PredictionRoute route) {
  if (!report.basis().InDomain(x)) {
    throw DomainError("prediction point lies outside the basis domain");
  }
  Complex acc = 0.0;
  if (route == PredictionRoute::kCoefficients) {
    std::vector<Complex> phi(report.support.size());
    for (size_t k = 0; k < report.support.size(); ++k) {
      phi[k] = EvaluateBasis(report.basis(), report.support[k], x);
    }
    for (const PauliTerm& t : o) {
      if (t.coeff == 0.0) continue;
      std::vector<Complex> traces = report.CoefficientPauliTraces(t.word);
      for (size_t k = 0; k < traces.size(); ++k) {
        acc += t.coeff * traces[k] * phi[k];
      }
    }
    return acc.real();
  }
  const std::vector<Estimate>& obs = RequireObservations(report);
  Vector m = ComputePredictionWeights(report, x).m;
  for (size_t i = 0; i < obs.size(); ++i) {
    double value = 0.0;
    for (const PauliTerm& t : o) {
      if (t.coeff != 0.0) value += t.coeff * EstimatePauliExpectation(obs[i], t.word);
    }
    acc += m(static_cast<Eigen::Index>(i)) * value;
  }
  return acc.real();
}

std::vector<double> PredictTrajectory(const RecoveryReport& report,
                                      const PauliSum& o,
                                      const std::vector<double>& xs) {
  std::vector<double> out;
  out.reserve(xs.size());
  for (double x : xs) out.push_back(PredictExpectation(report, o, x));
  return out;
}

ImportanceEstimate PredictImportanceSampled(const RecoveryReport& report,
                                            const PauliSum& o, double x,
                                            int64_t budget, uint64_t seed) {
  if (budget < 1) throw ArgumentError("importance sampling needs budget >= 1");
  const std::vector<Estimate>& obs = RequireObservations(report);
  std::vector<const ShadowData*> shadows;
  for (const Estimate& e : obs) {
    const ShadowData* sd = std::get_if<ShadowData>(&e);
    if (sd == nullptr) {
      throw CapabilityError("importance sampling needs shadow observations");
    }
    if (sd->snapshots.empty()) throw ArgumentError("a shadow has no snapshots");
    shadows.push_back(sd);
  }
  std::vector<PauliTerm> terms;
  for (const PauliTerm& t : o) {
    if (t.coeff != 0.0) terms.push_back(t);
  }

  ImportanceEstimate out;
  Vector m = ComputePredictionWeights(report, x).m;
  std::vector<double> mags(static_cast<size_t>(m.size()));
  for (Eigen::Index i = 0; i < m.size(); ++i) mags[i] = std::abs(m(i));
  double m_l1 = std::accumulate(mags.begin(), mags.end(), 0.0);
  if (m_l1 == 0.0 || terms.empty()) {
    out.zero_weights = m_l1 == 0.0;
    return out;
  }

  Rng rng(seed);
  std::discrete_distribution<size_t> pick_point(mags.begin(), mags.end());
  auto draw = [&](const PauliWord& word) {
    size_t i = pick_point(rng);
    const ShadowData& sd = *shadows[i];
    std::uniform_int_distribution<size_t> pick_snap(0, sd.snapshots.size() - 1);
    double v = SnapshotEstimate(sd.snapshots[pick_snap(rng)], word);
    ++out.evaluated_snapshots;
    Complex phase = m(static_cast<Eigen::Index>(i)) / mags[i];
    return (phase * v * m_l1).real();
  };

  double h_l1 = 0.0;
  for (const PauliTerm& t : terms) h_l1 += std::abs(t.coeff);

  if (budget < static_cast<int64_t>(terms.size())) {
    std::vector<double> h_mags;
    for (const PauliTerm& t : terms) h_mags.push_back(std::abs(t.coeff));
    std::discrete_distribution<size_t> pick_term(h_mags.begin(), h_mags.end());
    RunningStats stats;
    for (int64_t b = 0; b < budget; ++b) {
      const PauliTerm& t = terms[pick_term(rng)];
      stats.Add((t.coeff > 0 ? h_l1 : -h_l1) * draw(t.word));
    }
    out.value = stats.mean;
    out.standard_error = std::sqrt(stats.VarianceOfMean());
    return out;
  }

  // Largest-remainder allocation with one guaranteed draw per term.
  size_t num_terms = terms.size();
  std::vector<int64_t> alloc(num_terms, 1);
  int64_t spare = budget - static_cast<int64_t>(num_terms);
  std::vector<std::pair<double, size_t>> remainders;
  int64_t assigned = 0;
  for (size_t j = 0; j < num_terms; ++j) {
    double share = spare * std::abs(terms[j].coeff) / h_l1;
    int64_t whole = static_cast<int64_t>(std::floor(share));
    alloc[j] += whole;
    assigned += whole;
    remainders.push_back({share - static_cast<double>(whole), j});
  }
  std::stable_sort(remainders.begin(), remainders.end(),
                   [](const auto& a, const auto& b) { return a.first > b.first; });
  for (int64_t r = 0; r < spare - assigned; ++r) {
    ++alloc[remainders[static_cast<size_t>(r) % num_terms].second];
  }

  double variance = 0.0;
  for (size_t j = 0; j < num_terms; ++j) {
    RunningStats stats;
    for (int64_t b = 0; b < alloc[j]; ++b) stats.Add(draw(terms[j].word));
    out.value += terms[j].coeff * stats.mean;
    variance += terms[j].coeff * terms[j].coeff * stats.VarianceOfMean();
  }
  out.standard_error = std::sqrt(variance);
  return out;
}

}  // namespace paramtomo
