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

#include "paramtomo/audit.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

#include "json.hpp"
#include "paramtomo/bos.h"
#include "paramtomo/channels.h"
#include "paramtomo/csolve.h"
#include "paramtomo/fermion.h"
#include "paramtomo/norms.h"
#include "paramtomo/pauli.h"
#include "paramtomo/predict.h"
#include "paramtomo/qsim.h"
#include "paramtomo/recovery.h"
#include "paramtomo/suppid.h"
#include "paramtomo/tomo.h"

namespace paramtomo {
namespace {

std::string Fmt(double v) {
  std::ostringstream out;
  out.precision(3);
  out << std::scientific << v;
  return out.str();
}

// Exactly 3-sparse two-qubit NMR fixture: E = diag(0, 2, 1, 3) and
// |psi> = (|00> + |01>)/sqrt(2), so the support is {-2, 0, 2} out of D = 7.
struct SparseFixture {
  IntegerSpectrumHamiltonian spectrum;
  Hamiltonian h;
  Matrix rho0;
  ParametrizedOperator truth;
  std::vector<int> support;
  MeasurementMatrix a;
};

SparseFixture MakeSparseFixture(uint64_t seed) {
  IntegerSpectrumHamiltonian spectrum = IntegerSpectrumHamiltonian::FromWeights({1, 2});
  Hamiltonian h = spectrum.ToHamiltonian();
  Vector psi = Vector::Zero(4);
  psi(0) = psi(1) = 1.0 / std::sqrt(2.0);
  Matrix rho0 = psi * psi.adjoint();
  ParametrizedOperator truth = FourierCoefficients(spectrum, rho0);
  std::vector<int> support;
  for (int label : truth.basis().labels()) {
    if (truth.Coefficient(label).norm() > 1e-12) support.push_back(label);
  }
  MeasurementMatrix a =
      BuildMeasurementMatrix(truth.basis(), SampleMeasure(truth.basis(), 24, seed));
  return SparseFixture{spectrum, h, rho0, truth, support, a};
}

RecoveryReport RecoverFixture(const SparseFixture& f) {
  std::vector<Estimate> obs;
  for (double t : f.a.points) obs.emplace_back(Evolve(f.h, f.rho0, t));
  RecoveryPlan plan;
  plan.basis = f.truth.basis();
  plan.support = f.support;
  plan.epsilon = 1e-9;
  plan.m = f.a.rows();
  return RecoverSparse(plan, f.support, std::move(obs), f.a);
}

using CheckFn = std::function<bool(std::string*)>;

}  // namespace

std::vector<AuditCheck> RunAudit(const AuditOptions& options) {
  const uint64_t seed = options.seed;
  std::vector<AuditCheck> out;
  auto run = [&out](const std::string& id, const std::string& description,
                    const CheckFn& fn) {
    AuditCheck check{id, description, false, ""};
    try {
      check.passed = fn(&check.detail);
    } catch (const std::exception& e) {
      check.passed = false;
      check.detail = std::string("exception: ") + e.what();
    }
    out.push_back(std::move(check));
  };

  run("bos.orthonormality", "quadrature Gram matrices of Fourier(3) and Chebyshev(6) equal I",
      [](std::string* detail) {
        double worst = 0.0;
        for (const BasisSystem& basis : {BasisSystem::Fourier(3), BasisSystem::Chebyshev(6)}) {
          std::vector<double> points, weights;
          QuadratureRule(basis, 64, &points, &weights);
          MeasurementMatrix a = BuildMeasurementMatrix(basis, points);
          Matrix gram = Matrix::Zero(basis.size(), basis.size());
          for (int i = 0; i < a.rows(); ++i) {
            gram += weights[i] * a.entries.row(i).adjoint() * a.entries.row(i);
          }
          worst = std::max(worst,
                           (gram - Matrix::Identity(basis.size(), basis.size())).cwiseAbs().maxCoeff());
        }
        *detail = "max deviation " + Fmt(worst);
        return worst < 1e-12;
      });

  run("bessel.chebyshev_expansion",
      "Chebyshev-Bessel expansion of exp(-i omega x) at omega = 5 matches to 1e-10",
      [](std::string* detail) {
        double omega = 5.0;
        int cutoff = static_cast<int>(std::ceil(std::exp(1.0) * omega)) + 40;
        Vector c = ChebyshevCoeffsOfPhase(omega, cutoff);
        BasisSystem basis = BasisSystem::Chebyshev(cutoff + 1);
        double worst = 0.0;
        for (int j = 0; j <= 100; ++j) {
          double x = -1.0 + 2.0 * j / 100.0;
          Complex sum = 0.0;
          for (int k = 0; k <= cutoff; ++k) sum += c(k) * EvaluateBasis(basis, k, x);
          worst = std::max(worst, std::abs(sum - std::exp(Complex(0.0, -omega * x))));
        }
        *detail = "sup error " + Fmt(worst);
        return worst < 1e-10;
      });

  run("bessel.tail_bound", "|J_k(omega)| <= (e omega / 2k)^k for k > e omega / 2",
      [](std::string* detail) {
        int violations = 0;
        for (double omega : {0.5, 2.0, 5.0, 10.0}) {
          for (int k = static_cast<int>(std::floor(std::exp(1.0) * omega / 2.0)) + 1; k <= 80; ++k) {
            if (std::abs(BesselJ(k, omega)) > BesselTailBound(omega, k) * (1 + 1e-12)) ++violations;
          }
        }
        *detail = std::to_string(violations) + " violations";
        return violations == 0;
      });

  run("norms.parseval", "quadrature L2 equals coefficient l2 on Pauli lists (10 draws)",
      [seed](std::string* detail) {
        Rng rng(DeriveSeed(seed, 11));
        double worst = 0.0;
        for (int trial = 0; trial < 10; ++trial) {
          BasisSystem basis = trial % 2 == 0 ? BasisSystem::Fourier(2) : BasisSystem::Chebyshev(5);
          std::vector<Matrix> coeffs;
          for (int k = 0; k < basis.size(); ++k) coeffs.push_back(RandomHermitian(4, rng));
          ParametrizedOperator x(basis, basis.labels(), coeffs);
          ObservableSet obs = ObservableSet::LocalPaulis(2, 2);
          double coef = InducedLpSeminorm(x, obs, LpOrder::kTwo).value();
          double quad = QuadratureL2PauliList(x, obs, 256);
          worst = std::max(worst, std::abs(coef - quad));
        }
        *detail = "max difference " + Fmt(worst);
        return worst < 1e-7;
      });

  run("rip.spillover",
      "||A_S^+ A_S'|| <= Delta_2s/(1-Delta_2s) on a 24x12 Fourier matrix, s = 1",
      [seed](std::string* detail) {
        BasisSystem basis = BasisSystem::FourierLabels({-6, -5, -4, -3, -2, -1, 0, 1, 2, 3, 4, 5});
        MeasurementMatrix a = BuildMeasurementMatrix(basis, SampleMeasure(basis, 24, DeriveSeed(seed, 12)));
        Matrix normalized = a.entries / std::sqrt(24.0);
        double delta2 = RipConstantBruteForce(normalized, 2).delta_s;
        if (!(delta2 < 0.5)) {
          *detail = "Delta_2 = " + Fmt(delta2) + " too large; scan skipped";
          return true;
        }
        int violations = 0;
        for (int i = 0; i < 12; ++i) {
          for (int j = 0; j < 12; ++j) {
            if (i == j) continue;
            SpilloverResult r = SpilloverCheck(normalized, {i}, {j}, delta2);
            if (r.lhs > r.rhs * (1 + 1e-12)) ++violations;
          }
        }
        *detail = "Delta_2 = " + Fmt(delta2) + ", " + std::to_string(violations) + " violations";
        return violations == 0;
      });

  run("rip.pinv_bound",
      "||A_S^+|| <= sqrt(1+Delta)/(sqrt(M)(1-Delta)) over all 2-subsets",
      [seed](std::string* detail) {
        BasisSystem basis = BasisSystem::Chebyshev(8);
        MeasurementMatrix a = BuildMeasurementMatrix(basis, SampleMeasure(basis, 24, DeriveSeed(seed, 13)));
        double delta = RipConstantBruteForce(a.entries / std::sqrt(24.0), 2).delta_s;
        if (!(delta < 1.0)) {
          *detail = "Delta_2 >= 1; bound vacuous";
          return true;
        }
        double bound = PseudoInverseNormBound(24, delta);
        int violations = 0;
        for (int i = 0; i < 8; ++i) {
          for (int j = i + 1; j < 8; ++j) {
            double norm = OperatorNorm(PseudoInverse(a.Columns({i, j})));
            if (norm > bound * (1 + 1e-12)) ++violations;
          }
        }
        *detail = std::to_string(violations) + " violations";
        return violations == 0;
      });

  run("states.cross_term", "projector cross-term inequality on 100 draws at n = 3",
      [seed](std::string* detail) {
        Rng rng(DeriveSeed(seed, 14));
        int violations = 0;
        for (int trial = 0; trial < 100; ++trial) {
          Matrix rho = RandomDensityMatrix(8, rng);
          Matrix u = RandomUnitary(8, rng);
          int r1 = 1 + trial % 4;
          int r2 = 1 + (trial / 4) % (8 - r1);
          Matrix p1 = u.leftCols(r1) * u.leftCols(r1).adjoint();
          Matrix p2 = u.middleCols(r1, r2) * u.middleCols(r1, r2).adjoint();
          auto [lhs, rhs] = ProjectorCrossTermCheck(rho, p1, p2);
          if (lhs > rhs + 1e-10) ++violations;
        }
        *detail = std::to_string(violations) + " violations";
        return violations == 0;
      });

  run("states.subgaussian_tail", "sum_{|k|>R} ||alpha_k||_1 <= gamma on 3 states",
      [seed](std::string* detail) {
        IntegerSpectrumHamiltonian spectrum = IntegerSpectrumHamiltonian::FromWeights({1, 2, 4});
        int violations = 0;
        for (int trial = 0; trial < 3; ++trial) {
          Rng rng(DeriveSeed(seed, 15 + trial));
          double sigma = 0.6 + 0.3 * trial;
          SubgaussianState state = PrepareSubgaussianState(spectrum, 3.5, sigma, rng);
          ParametrizedOperator truth = FourierCoefficients(spectrum, state.rho);
          double gamma = 0.05;
          SupportRadius radius = SubgaussianSupportRadius(3, sigma, state.tau, gamma);
          double tail = 0.0;
          for (int label : truth.basis().labels()) {
            if (std::abs(label) > radius.r) tail += TraceNorm(truth.Coefficient(label));
          }
          if (tail > gamma) ++violations;
        }
        *detail = std::to_string(violations) + " violations";
        return violations == 0;
      });

  run("recovery.exact_sparse", "exact-oracle sparse recovery reproduces every alpha_k",
      [seed](std::string* detail) {
        SparseFixture f = MakeSparseFixture(DeriveSeed(seed, 16));
        RecoveryReport report = RecoverFixture(f);
        double worst = 0.0;
        for (size_t k = 0; k < f.support.size(); ++k) {
          worst = std::max(worst, ((*report.dense_coeffs)[k] - f.truth.Coefficient(f.support[k])).norm());
        }
        *detail = "max Frobenius error " + Fmt(worst);
        return worst < 1e-8;
      });

  run("recovery.budget_decomposition",
      "||alpha - alpha_hat||_{O,2} <= gamma_l2 + Delta gamma_l1 + epsilon on the fixture",
      [seed, &options](std::string* detail) {
        SparseFixture f = MakeSparseFixture(DeriveSeed(seed, 16));
        RecoveryReport report = RecoverFixture(f);
        if (options.inject_corruption) {
          (*report.dense_coeffs)[0] += 0.05 * PauliMatrix(PauliWord::Parse("ZI"));
        }
        ObservableSet obs = ObservableSet::LocalPaulis(2, 2);
        ErrorBudget budget = ComputeBudget(f.truth, f.support, obs, 1.0, 1e-9);
        ParametrizedOperator estimate = report.Densify();
        std::vector<Matrix> diff;
        for (int label : f.truth.basis().labels()) {
          diff.push_back(f.truth.Coefficient(label) - estimate.Coefficient(label));
        }
        double error = InducedLpVector(diff, obs, LpOrder::kTwo).value();
        *detail = "error " + Fmt(error) + " vs bound " + Fmt(budget.Total());
        return error <= budget.Total();
      });

  run("predict.route_agreement", "coefficient and m-weight prediction routes agree to 1e-9",
      [seed](std::string* detail) {
        SparseFixture f = MakeSparseFixture(DeriveSeed(seed, 16));
        RecoveryReport report = RecoverFixture(f);
        Rng rng(DeriveSeed(seed, 17));
        Matrix o = RandomHermitian(4, rng);
        double worst = 0.0;
        for (int j = 0; j < 9; ++j) {
          double x = 2.0 * kPi * j / 9.0;
          double a = PredictExpectation(report, o, x, PredictionRoute::kCoefficients);
          double b = PredictExpectation(report, o, x, PredictionRoute::kWeights);
          double exact = (o * Evolve(f.h, f.rho0, x)).trace().real();
          worst = std::max({worst, std::abs(a - b), std::abs(a - exact)});
        }
        *detail = "max deviation " + Fmt(worst);
        return worst < 1e-9;
      });

  run("suppid.hs_identity", "normalized HS norm equals the Pauli-average estimator",
      [seed](std::string* detail) {
        Rng rng(DeriveSeed(seed, 18));
        auto [exact, sampled] = HsNormEstimatorCheck(RandomHermitian(4, rng));
        *detail = "difference " + Fmt(std::abs(exact - sampled));
        return std::abs(exact - sampled) < 1e-10;
      });

  run("suppid.exhaustive_identification",
      "exhaustive-probe Algorithm 3 finds the fixture support",
      [seed](std::string* detail) {
        SparseFixture f = MakeSparseFixture(DeriveSeed(seed, 16));
        std::vector<Estimate> obs;
        for (double t : f.a.points) obs.emplace_back(Evolve(f.h, f.rho0, t));
        SupportIdOptions opts;
        opts.strict = false;
        opts.exhaustive = true;
        SupportEstimate est = IdentifySupport(obs, f.a, 3, 0, seed, opts);
        *detail = "gap " + Fmt(est.gap);
        return est.support == f.support;
      });

  run("tomo.shadow_unbiased", "shadow means of Z and X on |0> within 5 standard errors",
      [seed](std::string* detail) {
        Matrix rho = Matrix::Zero(2, 2);
        rho(0, 0) = 1.0;
        Rng rng(DeriveSeed(seed, 19));
        ShadowData data = AcquireShadows(rho, 4000, rng);
        PauliWord z = PauliWord::Parse("Z"), x = PauliWord::Parse("X");
        double dz = std::abs(ShadowExpectation(data, z) - 1.0) / ShadowStandardError(data, z);
        double dx = std::abs(ShadowExpectation(data, x)) / ShadowStandardError(data, x);
        *detail = "z-scores " + Fmt(dz) + ", " + Fmt(dx);
        return dz < 5.0 && dx < 5.0;
      });

  run("fermion.time_reversal", "V H V^dagger = -H for a random F at n_modes = 2",
      [seed](std::string* detail) {
        Rng rng(DeriveSeed(seed, 20));
        FermionicGaussianHamiltonian fh(RandomSkewSymmetric(2, 1.0, rng));
        Matrix h = JordanWigner(fh);
        Matrix v = TimeReversalUnitary(fh);
        double defect = (v * h * v.adjoint() + h).cwiseAbs().maxCoeff();
        *detail = "defect " + Fmt(defect);
        return defect < 1e-8;
      });

  run("channels.choi_identity", "Choi and direct Pauli-transfer routes agree on 20 channels",
      [seed](std::string* detail) {
        Rng rng(DeriveSeed(seed, 21));
        double worst = 0.0;
        std::vector<PauliWord> words = AllPauliWords(1);
        for (int trial = 0; trial < 20; ++trial) {
          Matrix c = RandomChannel(1, 1 + trial % 3, rng);
          for (const PauliWord& p : words) {
            for (const PauliWord& q : words) {
              PauliTransferValue v = PauliTransferProbe(c, p, q);
              worst = std::max(worst, std::abs(v.direct - v.choi));
            }
          }
        }
        *detail = "max difference " + Fmt(worst);
        return worst < 1e-10;
      });

  return out;
}

bool AllPassed(const std::vector<AuditCheck>& checks) {
  return std::all_of(checks.begin(), checks.end(),
                     [](const AuditCheck& c) { return c.passed; });
}

std::string AuditLedgerJson(const std::vector<AuditCheck>& checks) {
  nlohmann::json list = nlohmann::json::array();
  for (const AuditCheck& c : checks) {
    list.push_back({{"id", c.id},
                    {"description", c.description},
                    {"passed", c.passed},
                    {"detail", c.detail}});
  }
  nlohmann::json doc{{"format", "paramtomo.audit"},
                     {"version", 1},
                     {"passed", AllPassed(checks)},
                     {"checks", list}};
  return doc.dump(2);
}

}  // namespace paramtomo
