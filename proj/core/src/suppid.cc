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

#include "paramtomo/suppid.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "paramtomo/errors.h"
#include "paramtomo/pauli.h"
#include "paramtomo/qsim.h"

namespace paramtomo {
namespace {

int ObservationQubits(const Estimate& e) {
  if (const Matrix* m = std::get_if<Matrix>(&e)) return QubitCount(m->rows());
  return std::get<ShadowData>(e).n_qubits;
}

// Validates the RIP certificate against the normalized matrix; returns an
// empty string when it is acceptable and the reason otherwise.
std::string CertificateProblem(const std::optional<RipCertificate>& cert,
                               const Matrix& a_normalized, int s) {
  if (!cert) return "no Delta_3s certificate supplied";
  int needed = std::min<int>(3 * s, static_cast<int>(a_normalized.cols()));
  if (cert->matrix_id != MatrixId(a_normalized)) {
    return "certificate was issued for a different matrix";
  }
  if (cert->s < needed) {
    std::ostringstream out;
    out << "certificate covers sparsity " << cert->s << " but " << needed
        << " is required";
    return out.str();
  }
  if (!(cert->delta_s <= 0.5)) {
    std::ostringstream out;
    out << "certified Delta_3s = " << cert->delta_s << " exceeds 1/2";
    return out.str();
  }
  return "";
}

double NormalizedHs(const Matrix& x) {
  if (x.size() == 0) return 0.0;
  return x.norm() / std::sqrt(static_cast<double>(x.rows()));
}

}  // namespace

int64_t ProbeCount(int d, double delta, double epsilon, double kappa) {
  if (d < 1 || !(delta > 0.0) || !(epsilon > 0.0) || !(kappa >= 0.0)) {
    throw ArgumentError("probe count needs D >= 1, delta > 0, eps > 0, kappa >= 0");
  }
  double e2 = epsilon * epsilon;
  double value = std::log(2.0 * d / delta) * (1.0 + kappa) * (1.0 + kappa) /
                 (2.0 * e2 * e2);
  return static_cast<int64_t>(std::ceil(value));
}

SupportEstimate IdentifySupport(const std::vector<Estimate>& observations,
                                const MeasurementMatrix& a, int s,
                                int64_t probes, uint64_t seed,
                                const SupportIdOptions& options) {
  if (observations.size() != static_cast<size_t>(a.rows())) {
    throw ArgumentError("need exactly one observation per sample point");
  }
  if (observations.empty()) throw ArgumentError("no observations");
  int d = a.cols();
  if (s < 1 || s > d) throw ArgumentError("sparsity must satisfy 1 <= s <= D");
  int n = ObservationQubits(observations.front());
  for (const Estimate& e : observations) {
    if (ObservationQubits(e) != n) {
      throw ArgumentError("observations act on different qubit counts");
    }
  }
  if (options.exhaustive) {
    if (n > 8) throw CombinatorialGuardError("exhaustive probing needs n <= 8");
    probes = int64_t{1} << (2 * n);
  }
  if (probes < 1) throw ArgumentError("need at least one probe");

  double sqrt_m = std::sqrt(static_cast<double>(a.rows()));
  Matrix a_normalized = a.entries / sqrt_m;

  SupportEstimate out;
  out.labels = a.basis.labels();
  out.probes = probes;
  out.seed = seed;
  std::string problem = CertificateProblem(options.certificate, a_normalized, s);
  if (!problem.empty()) {
    if (options.strict) {
      throw CertificationError("support identification refused: " + problem);
    }
    out.warnings.push_back(problem);
  }

  // The local support assumption is only checkable when the exact solution
  // of A c = f is unique.
  std::optional<Matrix> exact_solver;
  if (a.rows() >= d && SmallestSingularValue(a.entries) > 0.0) {
    try {
      exact_solver = PseudoInverse(a.entries);
    } catch (const SingularMatrixError&) {
    }
  }
  int64_t assumption_hits = 0;

  RealVector accum = RealVector::Zero(d);
  Vector f(a.rows());
  for (int64_t l = 0; l < probes; ++l) {
    PauliWord word = PauliWord::Identity(n);
    if (options.exhaustive) {
      word = PauliWord::FromIndex(n, static_cast<uint64_t>(l));
    } else {
      Rng rng(DeriveSeed(seed, static_cast<uint64_t>(l)));
      word = RandomPauliWord(n, rng);
    }
    for (size_t i = 0; i < observations.size(); ++i) {
      f(static_cast<Eigen::Index>(i)) =
          EstimatePauliExpectation(observations[i], word);
    }
    SolverResult result = Htp(a_normalized, f / sqrt_m, s, options.solver);
    for (int k = 0; k < d; ++k) {
      double mag = std::abs(result.c(k));
      accum(k) += mag * mag;
      out.max_abs_coefficient = std::max(out.max_abs_coefficient, mag);
      if (!CoefficientBoundCheck(mag, options.kappa)) {
        ++out.coefficient_bound_violations;
      }
    }
    if (exact_solver) {
      Vector exact = *exact_solver * f;
      // Entries at rounding level carry no support information, so only the
      // significant part of the top-s set has to be selected by HTP.
      Eigen::VectorXd mags = exact.cwiseAbs();
      double floor = kLocalAssumptionTolerance * std::max(1.0, mags.maxCoeff());
      std::vector<int> htp = result.support;
      std::sort(htp.begin(), htp.end());
      bool hit = true;
      for (int k : TopIndices(mags, s)) {
        if (mags(k) > floor && !std::binary_search(htp.begin(), htp.end(), k)) {
          hit = false;
        }
      }
      if (hit) ++assumption_hits;
    }
  }
  if (exact_solver) {
    out.local_assumption_fraction =
        static_cast<double>(assumption_hits) / static_cast<double>(probes);
  }
  out.xhat = (accum / static_cast<double>(probes)).cwiseSqrt();

  std::vector<int> top = TopIndices(out.xhat, s);
  std::vector<bool> chosen(d, false);
  for (int idx : top) {
    chosen[idx] = true;
    out.support.push_back(out.labels[idx]);
  }
  std::sort(out.support.begin(), out.support.end());
  double min_in = std::numeric_limits<double>::infinity();
  double max_out = 0.0;
  for (int k = 0; k < d; ++k) {
    if (chosen[k]) {
      min_in = std::min(min_in, out.xhat(k));
    } else {
      max_out = std::max(max_out, out.xhat(k));
    }
  }
  out.gap = min_in - max_out;
  return out;
}

std::pair<double, double> HsNormEstimatorCheck(const Matrix& alpha) {
  if (alpha.rows() != alpha.cols()) throw ArgumentError("operator must be square");
  int n = QubitCount(alpha.rows());
  if (n > 5) throw CombinatorialGuardError("HS estimator check needs n <= 5");
  double acc = 0.0;
  std::vector<PauliWord> words = AllPauliWords(n);
  for (const PauliWord& p : words) acc += std::norm(PauliTrace(p, alpha));
  return {NormalizedHs(alpha), std::sqrt(acc / static_cast<double>(words.size()))};
}

double Flatness(const RealVector& v) {
  if (v.size() == 0) throw ArgumentError("flatness of an empty vector");
  double inf = v.cwiseAbs().maxCoeff();
  if (inf == 0.0) return 1.0;
  return v.norm() / (std::sqrt(static_cast<double>(v.size())) * inf);
}

double BestSparseApproxError(const RealVector& magnitudes, int s) {
  if (s < 0) throw ArgumentError("sparsity must be nonnegative");
  if (s >= magnitudes.size()) return 0.0;
  std::vector<double> sorted(magnitudes.size());
  for (Eigen::Index i = 0; i < magnitudes.size(); ++i) {
    sorted[i] = std::abs(magnitudes(i));
  }
  std::sort(sorted.begin(), sorted.end(), std::greater<double>());
  double tail = 0.0;
  for (size_t i = static_cast<size_t>(s); i < sorted.size(); ++i) tail += sorted[i];
  return tail;
}

SeparabilityMargin EvaluateSeparability(const ParametrizedOperator& alphas,
                                        const ParametrizedOperator& gammas,
                                        const std::vector<int>& s,
                                        double epsilon, double eta, double d1,
                                        double d2) {
  if (!(alphas.basis() == gammas.basis())) {
    throw ArgumentError("alphas and gammas use different bases");
  }
  if (alphas.dim() != gammas.dim()) {
    throw ArgumentError("alphas and gammas have different dimensions");
  }
  int n = QubitCount(alphas.dim());
  if (n > 4) throw CombinatorialGuardError("separability diagnostics need n <= 4");
  const std::vector<int>& labels = alphas.basis().labels();
  int d = static_cast<int>(labels.size());
  if (s.empty() || static_cast<int>(s.size()) > d) {
    throw ArgumentError("support S must have 1..D labels");
  }
  std::vector<bool> in_s(d, false);
  for (int label : s) in_s[alphas.basis().IndexOf(label)] = true;
  int s_size = static_cast<int>(std::count(in_s.begin(), in_s.end(), true));

  std::vector<PauliWord> words = AllPauliWords(n);
  int num_words = static_cast<int>(words.size());
  // c(k)_P = |Tr[P alpha_k]|, nvec(k)_P = |Tr[P gamma_k]|.
  RealMatrix c(d, num_words), nvec(d, num_words);
  for (int k = 0; k < d; ++k) {
    Matrix alpha = alphas.Coefficient(labels[k]);
    Matrix gamma = gammas.Coefficient(labels[k]);
    for (int p = 0; p < num_words; ++p) {
      c(k, p) = std::abs(PauliTrace(words[p], alpha));
      nvec(k, p) = std::abs(PauliTrace(words[p], gamma));
    }
  }
  auto hs = [num_words](const RealMatrix& m, int k) {
    return m.row(k).norm() / std::sqrt(static_cast<double>(num_words));
  };

  SeparabilityMargin out;
  double min_alpha_s = std::numeric_limits<double>::infinity();
  double min_diff_s = std::numeric_limits<double>::infinity();
  double max_alpha_out = 0.0, max_gamma_out = 0.0;
  for (int k = 0; k < d; ++k) {
    if (in_s[k]) {
      min_alpha_s = std::min(min_alpha_s, hs(c, k));
      min_diff_s = std::min(min_diff_s, hs(c, k) - hs(nvec, k));
    } else {
      max_alpha_out = std::max(max_alpha_out, hs(c, k));
      max_gamma_out = std::max(max_gamma_out, hs(nvec, k));
      out.beta_c = std::min(out.beta_c, Flatness(c.row(k).transpose()));
      out.beta_n = std::min(out.beta_n, Flatness(nvec.row(k).transpose()));
    }
  }

  double sigma_sq = 0.0;
  for (int p = 0; p < num_words; ++p) {
    double tail = BestSparseApproxError(c.col(p), s_size);
    sigma_sq += tail * tail;
  }
  out.sigma_term = std::sqrt(sigma_sq / num_words);

  out.worst_case_lhs = min_alpha_s - max_alpha_out;
  out.worst_case_rhs = 2.0 * epsilon +
                       2.0 * d1 / std::sqrt(static_cast<double>(s_size)) *
                           out.sigma_term +
                       2.0 * d2 * eta;
  out.worst_case_holds = out.worst_case_lhs >= out.worst_case_rhs;

  out.flatness_lhs = min_diff_s;
  out.flatness_rhs = 2.0 * epsilon +
                     (out.beta_c + 1.0) / out.beta_c * max_alpha_out +
                     (out.beta_n + 1.0) / out.beta_n * max_gamma_out;
  out.flatness_holds = out.flatness_lhs >= out.flatness_rhs;
  return out;
}

bool CoefficientBoundCheck(double c_sharp_abs, double kappa, double slack) {
  return std::abs(c_sharp_abs) <= 1.0 + kappa + slack;
}

}  // namespace paramtomo
