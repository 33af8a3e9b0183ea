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

#include "paramtomo/experiment.h"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"
#include "paramtomo/bos.h"
#include "paramtomo/csolve.h"
#include "paramtomo/errors.h"
#include "paramtomo/fermion.h"
#include "paramtomo/norms.h"
#include "paramtomo/pauli.h"
#include "paramtomo/predict.h"
#include "paramtomo/qsim.h"

namespace paramtomo {
namespace {

using json = nlohmann::json;

// Upper limit for the automatic doubling of M.
constexpr int kMaxAutoM = 4096;

// Stream identifiers for DeriveSeed.
constexpr uint64_t kStreamSystem = 1;
constexpr uint64_t kStreamState = 2;
constexpr uint64_t kStreamPoints = 3;
constexpr uint64_t kStreamTomography = 4;
constexpr uint64_t kStreamProbes = 5;

// ----------------------------------------------------------------------------
// Configuration parsing.

// Reads one JSON object, reporting the dotted field path on every error and
// rejecting keys that were not consumed.
class FieldReader {
 public:
  FieldReader(const json& node, std::string path)
      : node_(node), path_(std::move(path)) {
    if (!node_.is_object()) Fail(path_.empty() ? "<root>" : path_, "expected an object");
  }

  ~FieldReader() = default;

  bool Has(const std::string& key) const { return node_.contains(key); }

  const json* Raw(const std::string& key) {
    seen_.insert(key);
    auto it = node_.find(key);
    return it == node_.end() ? nullptr : &*it;
  }

  template <typename T>
  void Read(const std::string& key, T* out) {
    const json* v = Raw(key);
    if (v == nullptr) return;
    try {
      *out = v->get<T>();
    } catch (const json::exception&) {
      Fail(Path(key), std::string("expected ") + TypeName<T>());
    }
  }

  void ReadInt(const std::string& key, int* out, int min_value) {
    int64_t value = *out;
    ReadInt64(key, &value, min_value);
    *out = static_cast<int>(value);
  }

  void ReadInt64(const std::string& key, int64_t* out, int64_t min_value) {
    const json* v = Raw(key);
    if (v == nullptr) return;
    if (!v->is_number_integer()) Fail(Path(key), "expected an integer");
    int64_t value = v->get<int64_t>();
    if (value < min_value) {
      Fail(Path(key), "must be >= " + std::to_string(min_value));
    }
    *out = value;
  }

  void ReadPositive(const std::string& key, double* out) {
    const json* v = Raw(key);
    if (v == nullptr) return;
    if (!v->is_number()) Fail(Path(key), "expected a number");
    double value = v->get<double>();
    if (!(value > 0.0) || !std::isfinite(value)) Fail(Path(key), "must be positive");
    *out = value;
  }

  void ReadUnit(const std::string& key, double* out) {
    ReadPositive(key, out);
    if (!(*out < 1.0)) Fail(Path(key), "must lie in (0, 1)");
  }

  std::string Choice(const std::string& key, const std::string& fallback,
                     const std::vector<std::string>& allowed) {
    std::string value = fallback;
    Read(key, &value);
    if (std::find(allowed.begin(), allowed.end(), value) == allowed.end()) {
      std::string list;
      for (const std::string& a : allowed) list += (list.empty() ? "" : ", ") + a;
      Fail(Path(key), "must be one of {" + list + "}, got \"" + value + "\"");
    }
    return value;
  }

  FieldReader Child(const std::string& key) {
    const json* v = Raw(key);
    static const json kEmpty = json::object();
    return FieldReader(v == nullptr ? kEmpty : *v, Path(key));
  }

  void RejectUnknown() const {
    for (auto it = node_.begin(); it != node_.end(); ++it) {
      if (seen_.count(it.key()) == 0) Fail(Path(it.key()), "unknown field");
    }
  }

  std::string Path(const std::string& key) const {
    return path_.empty() ? key : path_ + "." + key;
  }

  [[noreturn]] static void Fail(const std::string& path, const std::string& what) {
    throw ConfigError("config field " + path + ": " + what);
  }

 private:
  template <typename T>
  static const char* TypeName() {
    if constexpr (std::is_same_v<T, std::string>) return "a string";
    if constexpr (std::is_same_v<T, bool>) return "a boolean";
    if constexpr (std::is_same_v<T, double>) return "a number";
    return "a value of the documented type";
  }

  const json& node_;
  std::string path_;
  std::set<std::string> seen_;
};

TomographyKind ParseTomographyKind(const std::string& name) {
  if (name == "exact") return TomographyKind::kExactOracle;
  if (name == "full_pauli") return TomographyKind::kFullPauliTomography;
  return TomographyKind::kLocalCliffordShadows;
}

const char* TomographyName(TomographyKind kind) {
  switch (kind) {
    case TomographyKind::kExactOracle:
      return "exact";
    case TomographyKind::kFullPauliTomography:
      return "full_pauli";
    case TomographyKind::kLocalCliffordShadows:
      return "shadows";
  }
  return "unknown";
}

// ----------------------------------------------------------------------------
// Shared pipeline pieces.

struct Sampling {
  MeasurementMatrix a;
  std::optional<RipCertificate> certificate;
  std::string certification_note;
};

// Tries to certify Delta_k(A / sqrt(M)) <= 1/2 by brute force.
std::optional<RipCertificate> TryCertify(const MeasurementMatrix& a, int k,
                                         std::string* note) {
  Matrix normalized = a.entries / std::sqrt(static_cast<double>(a.rows()));
  try {
    return RipConstantBruteForce(normalized, std::min(k, a.cols()));
  } catch (const CombinatorialGuardError& e) {
    *note = e.what();
    return std::nullopt;
  }
}

// Picks M: the configured value, the theorem-mode sample count, or (empirical
// mode) doubling from max(2s, s + 2) until the brute-force Delta_3s is at
// most 1/2.
Sampling ChooseSampling(const BasisSystem& basis, int s,
                        const ExperimentConfig& config) {
  const RecoveryConfig& rc = config.recovery;
  uint64_t point_seed = DeriveSeed(config.seed, kStreamPoints);
  int rip_order = std::min(3 * s, basis.size());
  auto build = [&](int m) {
    return BuildMeasurementMatrix(basis, SampleMeasure(basis, m, point_seed));
  };

  int m = rc.m;
  bool fixed = m > 0;
  if (!fixed && rc.mode == RunMode::kTheorem) {
    int64_t formula = s == basis.size()
                          ? SampleCountFull(basis.size(), basis.bound_k(),
                                            config.tomography.delta)
                          : SampleCountSparse(s, basis.size(), basis.bound_k(),
                                              rc.attenuation,
                                              config.tomography.delta, rc.variant);
    if (formula > 10'000'000) {
      throw CapabilityError("theorem-mode M = " + std::to_string(formula) +
                            " exceeds desk scale; set recovery.m");
    }
    m = static_cast<int>(formula);
    fixed = true;
  }
  if (!fixed) m = std::max(2 * s, s + 2);

  Sampling out{build(m), std::nullopt, ""};
  if (!rc.certify) {
    out.certification_note = "certification disabled";
    return out;
  }
  out.certificate = TryCertify(out.a, rip_order, &out.certification_note);
  while (!fixed && out.certificate && out.certificate->delta_s > 0.5 &&
         m < kMaxAutoM) {
    m *= 2;
    out.a = build(m);
    out.certificate = TryCertify(out.a, rip_order, &out.certification_note);
  }
  return out;
}

std::vector<PauliWord> TrackedObservables(const ExperimentConfig& config, int n,
                                          int default_ell) {
  std::vector<PauliWord> out;
  if (config.observables.empty()) return LocalPauliWords(n, default_ell);
  for (const std::string& text : config.observables) {
    PauliWord w = PauliWord::Parse(text);
    if (w.num_qubits() != n) {
      throw ConfigError("config field observables: \"" + text + "\" acts on " +
                        std::to_string(w.num_qubits()) + " qubits, expected " +
                        std::to_string(n));
    }
    out.push_back(w);
  }
  return out;
}

std::vector<double> Grid(const BasisSystem& basis, int points) {
  std::vector<double> xs;
  if (basis.kind() == BasisKind::kFourier) {
    for (int j = 0; j < points; ++j) xs.push_back(2.0 * kPi * j / points);
  } else {
    for (int j = 0; j < points; ++j) {
      xs.push_back(points == 1 ? 0.0 : -1.0 + 2.0 * j / (points - 1));
    }
  }
  return xs;
}

int64_t PerPointCount(const ExperimentConfig& config, const TomographicProcedure& proc,
                      const RecoveryPlan& plan, int n) {
  if (proc.kind == TomographyKind::kExactOracle) return 0;
  int64_t count = proc.SampleCount(plan.epsilon_prime(), plan.delta_prime(), n);
  if (config.recovery.mode == RunMode::kTheorem &&
      static_cast<double>(count) * plan.m > kTheoremWorkCap) {
    throw CapabilityError("theorem-mode sample count " + std::to_string(count) +
                          " per point exceeds desk scale; set tomography.shots");
  }
  return count;
}

template <typename StateAt>
std::vector<Estimate> AcquireAll(const ExperimentConfig& config,
                              const TomographicProcedure& proc,
                              const RecoveryPlan& plan,
                              const std::vector<double>& points, StateAt state_at) {
  std::vector<Estimate> out;
  out.reserve(points.size());
  uint64_t base = DeriveSeed(config.seed, kStreamTomography);
  for (size_t i = 0; i < points.size(); ++i) {
    Rng rng(DeriveSeed(base, i));
    out.push_back(Acquire(proc, state_at(points[i]), plan.epsilon_prime(),
                          plan.delta_prime(), rng));
  }
  return out;
}

// ||alpha - alpha_hat||_{O,2} over every basis label on the Pauli list.
double CoefficientError(const ParametrizedOperator& truth,
                        const RecoveryReport& report,
                        const ObservableSet& obs) {
  ParametrizedOperator estimate = report.Densify();
  std::vector<Matrix> diff;
  for (int label : truth.basis().labels()) {
    diff.push_back(truth.Coefficient(label) - estimate.Coefficient(label));
  }
  return InducedLpVector(diff, obs, LpOrder::kTwo).value();
}

json BudgetJson(const ErrorBudget& b) {
  return json{{"gamma_l2", b.gamma_l2},     {"gamma_l1", b.gamma_l1},
              {"attenuation", b.attenuation}, {"spillover", b.spillover()},
              {"epsilon", b.epsilon},       {"total", b.Total()}};
}

json SamplingJson(const Sampling& sampling, int rip_order) {
  json rip{{"order", rip_order}};
  if (sampling.certificate) {
    rip["delta"] = sampling.certificate->delta_s;
    rip["certified"] = sampling.certificate->delta_s <= 0.5;
  } else {
    rip["certified"] = false;
    rip["note"] = sampling.certification_note;
  }
  return rip;
}

struct Trajectories {
  std::vector<TrajectoryRow> rows;
  double max_error = 0.0;
};

template <typename ExactAt>
Trajectories EvaluateTrajectories(const RecoveryReport& report,
                                  const std::vector<PauliWord>& observables,
                                  const std::vector<double>& grid, ExactAt exact_at) {
  Trajectories out;
  for (double x : grid) {
    Matrix exact_state = exact_at(x);
    for (const PauliWord& w : observables) {
      double predicted = PredictExpectation(report, PauliSum{{1.0, w}}, x);
      double exact = PauliTrace(w, exact_state).real();
      out.max_error = std::max(out.max_error, std::abs(predicted - exact));
      out.rows.push_back({x, w.ToString(), predicted, std::nullopt});
    }
  }
  return out;
}

std::vector<int> LabelsWithin(const BasisSystem& basis, int radius) {
  std::vector<int> out;
  for (int label : basis.labels()) {
    if (std::abs(label) <= radius) out.push_back(label);
  }
  return out;
}

// The NMR system shared by run-nmr and support-id.
struct NmrSystem {
  IntegerSpectrumHamiltonian spectrum;
  Hamiltonian h;
  SubgaussianState state;
  ParametrizedOperator truth;
  SupportRadius radius;
  double e0 = 0.0;
};

NmrSystem BuildNmrSystem(const ExperimentConfig& config) {
  const SystemConfig& sc = config.system;
  if (sc.n > kDefaultDenseQubitCap) {
    throw CapabilityError("system.n exceeds the dense simulation cap of " +
                          std::to_string(kDefaultDenseQubitCap));
  }
  std::vector<int64_t> weights = sc.weights;
  if (weights.empty()) weights.assign(static_cast<size_t>(sc.n), 1);
  if (static_cast<int>(weights.size()) != sc.n) {
    throw ConfigError("config field system.weights: expected " +
                      std::to_string(sc.n) + " entries");
  }
  IntegerSpectrumHamiltonian spectrum =
      IntegerSpectrumHamiltonian::FromWeights(weights, sc.couplings);
  Hamiltonian h = spectrum.ToHamiltonian();
  double e0 = sc.e0.value_or(static_cast<double>(spectrum.e_max()) / 2.0);
  Rng rng(DeriveSeed(config.seed, kStreamState));
  SubgaussianState state = PrepareSubgaussianState(spectrum, e0, sc.sigma, rng);
  ParametrizedOperator truth = FourierCoefficients(spectrum, state.rho);
  SupportRadius radius =
      SubgaussianSupportRadius(sc.n, sc.sigma, state.tau, config.recovery.gamma);
  return NmrSystem{spectrum, h, state, truth, radius, e0};
}

json ResultJson(const ExperimentResult& r) {
  return json{{"max_grid_error", r.max_grid_error},
              {"coefficient_error", r.coefficient_error},
              {"error_bound", r.error_bound},
              {"guarantee_met", r.guarantee_met}};
}

}  // namespace

// ----------------------------------------------------------------------------

ExperimentConfig ParseConfig(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config syntax error: ") + e.what());
  }
  ExperimentConfig config;
  FieldReader root(doc, "");
  std::string experiment =
      root.Choice("experiment", "nmr", {"nmr", "fermion", "support_id", "audit"});
  config.kind = experiment == "nmr"          ? ExperimentKind::kNmr
                : experiment == "fermion"    ? ExperimentKind::kFermion
                : experiment == "support_id" ? ExperimentKind::kSupportId
                                             : ExperimentKind::kAudit;
  if (const json* seed = root.Raw("seed")) {
    if (!seed->is_number_unsigned() && !(seed->is_number_integer() && seed->get<int64_t>() >= 0)) {
      FieldReader::Fail("seed", "expected a nonnegative integer");
    }
    config.seed = seed->get<uint64_t>();
  }

  {
    FieldReader sys = root.Child("system");
    SystemConfig& sc = config.system;
    sys.ReadInt("n", &sc.n, 1);
    if (const json* w = sys.Raw("weights")) {
      try {
        sc.weights = w->get<std::vector<int64_t>>();
      } catch (const json::exception&) {
        FieldReader::Fail(sys.Path("weights"), "expected a list of integers");
      }
    }
    if (const json* c = sys.Raw("couplings")) {
      try {
        sc.couplings = c->get<std::vector<std::vector<int64_t>>>();
      } catch (const json::exception&) {
        FieldReader::Fail(sys.Path("couplings"), "expected an integer matrix");
      }
    }
    if (const json* e0 = sys.Raw("e0")) {
      if (!e0->is_number()) FieldReader::Fail(sys.Path("e0"), "expected a number");
      sc.e0 = e0->get<double>();
    }
    sys.ReadPositive("sigma", &sc.sigma);
    sys.ReadInt("n_modes", &sc.n_modes, 1);
    sys.ReadPositive("interaction", &sc.interaction);
    sys.ReadPositive("horizon", &sc.horizon);
    sc.initial_state = sys.Choice("initial_state", sc.initial_state,
                                  {"plus", "zero", "random"});
    sys.RejectUnknown();
  }
  {
    FieldReader tomo = root.Child("tomography");
    TomographyConfig& tc = config.tomography;
    tc.kind = ParseTomographyKind(
        tomo.Choice("procedure", "exact", {"exact", "full_pauli", "shadows"}));
    tomo.ReadUnit("epsilon", &tc.epsilon);
    tomo.ReadUnit("delta", &tc.delta);
    tomo.ReadInt64("shots", &tc.shots, 0);
    tomo.ReadInt("ell", &tc.ell, 0);
    tomo.RejectUnknown();
  }
  {
    FieldReader rec = root.Child("recovery");
    RecoveryConfig& rc = config.recovery;
    rc.mode = rec.Choice("mode", "empirical", {"empirical", "theorem"}) == "theorem"
                  ? RunMode::kTheorem
                  : RunMode::kEmpirical;
    rec.ReadInt("m", &rc.m, 0);
    rec.ReadPositive("attenuation", &rc.attenuation);
    if (rc.attenuation > 1.0) FieldReader::Fail(rec.Path("attenuation"), "must lie in (0, 1]");
    if (const json* s = rec.Raw("support")) {
      try {
        rc.support = s->get<std::vector<int>>();
      } catch (const json::exception&) {
        FieldReader::Fail(rec.Path("support"), "expected a list of integers");
      }
    }
    rec.ReadInt("s", &rc.s, 0);
    rc.variant = rec.Choice("formula_variant", "algorithm1", {"algorithm1", "corollary"}) ==
                         "corollary"
                     ? FormulaVariant::kCorollary
                     : FormulaVariant::kAlgorithm1;
    rec.ReadUnit("gamma", &rc.gamma);
    rec.ReadInt("guard", &rc.guard, 0);
    rec.Read("certify", &rc.certify);
    rec.ReadInt64("probes", &rc.probes, 0);
    if (const json* k = rec.Raw("kappa")) {
      if (!k->is_number() || k->get<double>() < 0.0) {
        FieldReader::Fail(rec.Path("kappa"), "expected a nonnegative number");
      }
      rc.kappa = k->get<double>();
    }
    rec.RejectUnknown();
  }
  {
    FieldReader pred = root.Child("predict");
    pred.Read("report", &config.predict.report);
    pred.Read("coefficients", &config.predict.coefficients);
    pred.RejectUnknown();
  }
  if (const json* obs = root.Raw("observables")) {
    try {
      config.observables = obs->get<std::vector<std::string>>();
    } catch (const json::exception&) {
      FieldReader::Fail("observables", "expected a list of Pauli strings");
    }
    for (size_t i = 0; i < config.observables.size(); ++i) {
      try {
        PauliWord::Parse(config.observables[i]);
      } catch (const ArgumentError& e) {
        FieldReader::Fail("observables[" + std::to_string(i) + "]", e.what());
      }
    }
  }
  root.ReadInt("grid_points", &config.grid_points, 1);
  root.Read("out_dir", &config.out_dir);
  root.RejectUnknown();
  return config;
}

ExperimentConfig LoadConfig(const std::string& path) {
  return ParseConfig(ReadTextFile(path));
}

ExperimentResult RunNmr(const ExperimentConfig& config) {
  NmrSystem sys = BuildNmrSystem(config);
  const BasisSystem& basis = sys.truth.basis();
  std::vector<int> support = config.recovery.support;
  if (support.empty()) support = LabelsWithin(basis, sys.radius.r);
  std::sort(support.begin(), support.end());
  int s = static_cast<int>(support.size());

  Sampling sampling = ChooseSampling(basis, s, config);
  RecoveryPlan plan;
  plan.basis = basis;
  plan.support = support;
  plan.attenuation = config.recovery.attenuation;
  plan.epsilon = config.tomography.epsilon;
  plan.delta = config.tomography.delta;
  plan.m = sampling.a.rows();
  plan.variant = config.recovery.variant;
  plan.Validate();

  TomographicProcedure proc;
  proc.kind = config.tomography.kind;
  proc.ell = config.tomography.ell;
  proc.explicit_count = config.tomography.shots;
  int64_t per_point = PerPointCount(config, proc, plan, config.system.n);

  std::vector<Estimate> observations =
      AcquireAll(config, proc, plan, sampling.a.points,
              [&](double t) { return Evolve(sys.h, sys.state.rho, t); });
  RecoveryReport report = RecoverSparse(plan, support, std::move(observations), sampling.a);

  std::vector<PauliWord> tracked =
      TrackedObservables(config, config.system.n, std::max(config.tomography.ell, 1));
  ObservableSet obs = ObservableSet::PauliList(config.system.n, tracked);
  report.budget = ComputeBudget(sys.truth, support, obs, plan.attenuation, plan.epsilon);

  ExperimentResult result;
  result.name = "nmr";
  Trajectories traj = EvaluateTrajectories(
      report, tracked, Grid(basis, config.grid_points),
      [&](double t) { return Evolve(sys.h, sys.state.rho, t); });
  result.trajectory = std::move(traj.rows);
  result.max_grid_error = traj.max_error;
  result.coefficient_error = CoefficientError(sys.truth, report, obs);
  result.error_bound = report.budget.Total();
  result.guarantee_met = result.coefficient_error <= result.error_bound;

  json summary{
      {"experiment", "nmr"},
      {"seed", config.seed},
      {"mode", config.recovery.mode == RunMode::kTheorem ? "theorem" : "empirical"},
      {"system",
       {{"n", config.system.n},
        {"e_max", sys.spectrum.e_max()},
        {"e0", sys.e0},
        {"sigma", config.system.sigma},
        {"tau", sys.state.tau}}},
      {"support_radius", {{"r", sys.radius.r}, {"vacuous", sys.radius.vacuous}}},
      {"basis_size", basis.size()},
      {"support", support},
      {"m", plan.m},
      {"tomography", TomographyName(proc.kind)},
      {"per_point_samples", per_point},
      {"rip", SamplingJson(sampling, std::min(3 * s, basis.size()))},
      {"sigma_min", report.diagnostics.sigma_min},
      {"pinv_norm", report.diagnostics.pinv_norm},
      {"budget", BudgetJson(report.budget)},
      {"result", ResultJson(result)},
  };
  result.summary_json = summary.dump(2);
  result.report = std::move(report);
  return result;
}

ExperimentResult RunFermion(const ExperimentConfig& config) {
  const SystemConfig& sc = config.system;
  if (sc.n_modes > kDefaultFermionDenseLimit) {
    throw CapabilityError("system.n_modes exceeds the dense fermion limit of " +
                          std::to_string(kDefaultFermionDenseLimit));
  }
  Rng system_rng(DeriveSeed(config.seed, kStreamSystem));
  FermionicGaussianHamiltonian fh(RandomSkewSymmetric(sc.n_modes, sc.interaction, system_rng));
  Hamiltonian h(JordanWigner(fh));
  Matrix v = TimeReversalUnitary(fh);
  double reversal_defect = (v * h.matrix() * v.adjoint() + h.matrix()).cwiseAbs().maxCoeff();
  int n = sc.n_modes;
  int dim = 1 << n;

  Vector psi = Vector::Zero(dim);
  if (sc.initial_state == "zero") {
    psi(0) = 1.0;
  } else if (sc.initial_state == "plus") {
    psi.setConstant(1.0 / std::sqrt(static_cast<double>(dim)));
  } else {
    Rng state_rng(DeriveSeed(config.seed, kStreamState));
    psi = RandomStateVector(dim, state_rng);
  }
  Matrix rho0 = psi * psi.adjoint();

  double horizon = sc.horizon;
  int cutoff = ChebyshevSupportCutoff(n, fh.OmegaMax(), config.recovery.gamma, horizon,
                                      config.recovery.guard);
  BasisSystem basis = BasisSystem::Chebyshev(cutoff + 1);
  ParametrizedOperator truth = ChebyshevCoefficients(h, rho0, horizon, cutoff);
  std::vector<int> support = config.recovery.support;
  if (support.empty()) support = basis.labels();
  std::sort(support.begin(), support.end());
  int s = static_cast<int>(support.size());

  Sampling sampling = ChooseSampling(basis, s, config);
  RecoveryPlan plan;
  plan.basis = basis;
  plan.support = support;
  plan.attenuation = config.recovery.attenuation;
  plan.epsilon = config.tomography.epsilon;
  plan.delta = config.tomography.delta;
  plan.m = sampling.a.rows();
  plan.variant = config.recovery.variant;
  plan.Validate();

  TomographicProcedure proc;
  proc.kind = config.tomography.kind;
  proc.ell = config.tomography.ell;
  proc.explicit_count = config.tomography.shots;
  int64_t per_point = PerPointCount(config, proc, plan, n);

  // Negative times go through V exp(-iH|t|) V^dagger.
  auto state_at = [&](double x) { return EvolveSigned(h, v, rho0, x * horizon); };
  std::vector<Estimate> observations =
      AcquireAll(config, proc, plan, sampling.a.points, state_at);
  RecoveryReport report = RecoverSparse(plan, support, std::move(observations), sampling.a);

  std::vector<PauliWord> tracked;
  if (config.observables.empty()) {
    for (int q = 0; q < n; ++q) {
      std::string text(static_cast<size_t>(n), 'I');
      text[q] = 'Z';
      tracked.push_back(PauliWord::Parse(text));
    }
  } else {
    tracked = TrackedObservables(config, n, 1);
  }
  ObservableSet obs = ObservableSet::PauliList(n, tracked);
  report.budget = ComputeBudget(truth, support, obs, plan.attenuation, plan.epsilon);

  ExperimentResult result;
  result.name = "fermion";
  Trajectories traj =
      EvaluateTrajectories(report, tracked, Grid(basis, config.grid_points),
                           [&](double x) { return Evolve(h, rho0, x * horizon); });
  result.trajectory = std::move(traj.rows);
  result.max_grid_error = traj.max_error;
  result.coefficient_error = CoefficientError(truth, report, obs);
  result.error_bound = report.budget.Total();
  result.guarantee_met = result.coefficient_error <= result.error_bound;

  json summary{
      {"experiment", "fermion"},
      {"seed", config.seed},
      {"mode", config.recovery.mode == RunMode::kTheorem ? "theorem" : "empirical"},
      {"system",
       {{"n_modes", n},
        {"interaction", sc.interaction},
        {"horizon", horizon},
        {"omega_max", fh.OmegaMax()},
        {"omega_max_bound", OmegaMaxFromInteraction(n, sc.interaction)},
        {"initial_state", sc.initial_state},
        {"time_reversal_defect", reversal_defect}}},
      {"cutoff", cutoff},
      {"basis_size", basis.size()},
      {"support", support},
      {"m", plan.m},
      {"tomography", TomographyName(proc.kind)},
      {"per_point_samples", per_point},
      {"rip", SamplingJson(sampling, std::min(3 * s, basis.size()))},
      {"sigma_min", report.diagnostics.sigma_min},
      {"pinv_norm", report.diagnostics.pinv_norm},
      {"budget", BudgetJson(report.budget)},
      {"result", ResultJson(result)},
  };
  result.summary_json = summary.dump(2);
  result.report = std::move(report);
  return result;
}

ExperimentResult RunSupportId(const ExperimentConfig& config) {
  NmrSystem sys = BuildNmrSystem(config);
  const BasisSystem& basis = sys.truth.basis();
  int d = basis.size();

  RealVector norms(d);
  for (int k = 0; k < d; ++k) {
    Matrix alpha = sys.truth.Coefficient(basis.labels()[k]);
    norms(k) = alpha.norm() / std::sqrt(static_cast<double>(alpha.rows()));
  }
  int s = config.recovery.s;
  if (s == 0) s = static_cast<int>(LabelsWithin(basis, sys.radius.r).size());
  if (s > d) throw ConfigError("config field recovery.s: exceeds the basis size");
  std::vector<int> true_support;
  for (int idx : TopIndices(norms, s)) true_support.push_back(basis.labels()[idx]);
  std::sort(true_support.begin(), true_support.end());

  Sampling sampling = ChooseSampling(basis, s, config);
  RecoveryPlan plan;
  plan.basis = basis;
  plan.support = true_support;
  plan.epsilon = config.tomography.epsilon;
  plan.delta = config.tomography.delta;
  plan.m = sampling.a.rows();
  plan.Validate();

  TomographicProcedure proc;
  proc.kind = config.tomography.kind;
  proc.ell = config.tomography.ell;
  proc.explicit_count = config.tomography.shots;
  int64_t per_point = PerPointCount(config, proc, plan, config.system.n);
  std::vector<Estimate> observations =
      AcquireAll(config, proc, plan, sampling.a.points,
              [&](double t) { return Evolve(sys.h, sys.state.rho, t); });

  int64_t probes = config.recovery.probes;
  if (probes == 0) {
    probes = ProbeCount(d, config.tomography.delta, config.tomography.epsilon,
                        config.recovery.kappa);
  }
  SupportIdOptions options;
  options.certificate = sampling.certificate;
  options.strict = config.recovery.mode == RunMode::kTheorem;
  options.kappa = config.recovery.kappa;
  SupportEstimate estimate =
      IdentifySupport(observations, sampling.a, s, probes,
                      DeriveSeed(config.seed, kStreamProbes), options);

  ExperimentResult result;
  result.name = "support_id";
  result.guarantee_met = estimate.support == true_support;
  std::vector<double> true_norms(norms.data(), norms.data() + norms.size());
  json summary{
      {"experiment", "support_id"},
      {"seed", config.seed},
      {"mode", config.recovery.mode == RunMode::kTheorem ? "theorem" : "empirical"},
      {"basis_size", d},
      {"s", s},
      {"m", plan.m},
      {"tomography", TomographyName(proc.kind)},
      {"per_point_samples", per_point},
      {"rip", SamplingJson(sampling, std::min(3 * s, d))},
      {"true_support", true_support},
      {"true_hs_norms", true_norms},
      {"estimate", json::parse(SupportEstimateToJson(estimate))},
      {"identified", result.guarantee_met},
  };
  result.summary_json = summary.dump(2);
  result.support_estimate = std::move(estimate);
  return result;
}

ExperimentResult RunPredict(const ExperimentConfig& config) {
  if (config.predict.report.empty() || config.predict.coefficients.empty()) {
    throw ConfigError("config field predict: report and coefficients paths are required");
  }
  std::ifstream sidecar(config.predict.coefficients, std::ios::binary);
  if (!sidecar) throw IoError("cannot open " + config.predict.coefficients);
  ParametrizedOperator coeffs = ReadCoefficientSidecar(sidecar);
  RecoveryReport report =
      RecoveryReportFromJson(ReadTextFile(config.predict.report), coeffs);
  if (report.is_channel) {
    throw ConfigError("config field predict.report: channel reports have no state trajectories");
  }
  int n = QubitCount(coeffs.dim());
  std::vector<PauliWord> tracked = TrackedObservables(config, n, std::min(std::max(config.tomography.ell, 1), n));

  ExperimentResult result;
  result.name = "predict";
  for (double x : Grid(report.basis(), config.grid_points)) {
    for (const PauliWord& w : tracked) {
      result.trajectory.push_back(
          {x, w.ToString(), PredictExpectation(report, PauliSum{{1.0, w}}, x), std::nullopt});
    }
  }
  result.guarantee_met = true;
  json summary{{"experiment", "predict"},
               {"report", config.predict.report},
               {"observables", tracked.size()},
               {"grid_points", config.grid_points}};
  result.summary_json = summary.dump(2);
  return result;
}

void WriteExperimentOutputs(const ExperimentResult& result,
                            const std::string& out_dir) {
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) throw IoError("cannot create " + out_dir + ": " + ec.message());
  std::filesystem::path dir(out_dir);
  WriteTextFile((dir / (result.name + "_summary.json")).string(), result.summary_json + "\n");
  if (!result.trajectory.empty()) {
    std::ostringstream csv;
    WriteTrajectoryCsv(csv, result.trajectory);
    WriteTextFile((dir / (result.name + "_trajectory.csv")).string(), csv.str());
  }
  if (result.report) {
    std::string sidecar_name = result.name + "_coefficients.bin";
    std::ofstream sidecar(dir / sidecar_name, std::ios::binary);
    if (!sidecar) throw IoError("cannot write " + (dir / sidecar_name).string());
    WriteCoefficientSidecar(sidecar, result.report->Densify());
    WriteTextFile((dir / (result.name + "_report.json")).string(),
                  RecoveryReportToJson(*result.report, sidecar_name) + "\n");
  }
  if (result.support_estimate) {
    WriteTextFile((dir / (result.name + "_support.json")).string(),
                  SupportEstimateToJson(*result.support_estimate) + "\n");
  }
}

}  // namespace paramtomo
