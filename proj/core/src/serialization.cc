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

#include "paramtomo/serialization.h"

#include <array>
#include <bit>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "json.hpp"
#include "paramtomo/errors.h"

namespace paramtomo {
namespace {

static_assert(std::endian::native == std::endian::little,
              "binary formats assume a little-endian host");

using json = nlohmann::json;

template <typename T>
void Put(std::ostream& out, T value) {
  out.write(reinterpret_cast<const char*>(&value), sizeof(T));
}

template <typename T>
T Get(std::istream& in) {
  T value{};
  in.read(reinterpret_cast<char*>(&value), sizeof(T));
  if (!in) throw IoError("truncated binary record");
  return value;
}

void ExpectMagic(std::istream& in, const char* magic) {
  std::array<char, 4> buf{};
  in.read(buf.data(), 4);
  if (!in || std::memcmp(buf.data(), magic, 4) != 0) {
    throw IoError(std::string("missing ") + magic + " header");
  }
  uint32_t version = Get<uint32_t>(in);
  if (version != static_cast<uint32_t>(kFormatVersion)) {
    throw IoError("unsupported format version " + std::to_string(version));
  }
}

json Parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw IoError(std::string("malformed JSON: ") + e.what());
  }
}

void ExpectFormat(const json& doc, const std::string& format) {
  if (!doc.is_object() || doc.value("format", "") != format) {
    throw IoError("expected a " + format + " document");
  }
  if (doc.value("version", 0) != kFormatVersion) {
    throw IoError("unsupported " + format + " version");
  }
}

// Non-finite doubles become strings so the document stays valid JSON.
json Num(double v) {
  if (std::isfinite(v)) return v;
  return FormatDouble(v);
}

double ReadNum(const json& v) {
  if (v.is_number()) return v.get<double>();
  if (v.is_string()) return std::stod(v.get<std::string>());
  throw IoError("expected a number");
}

json BasisToJson(const BasisSystem& basis) {
  return json{{"kind", basis.kind() == BasisKind::kFourier ? "fourier" : "chebyshev"},
              {"labels", basis.labels()},
              {"bound_k", basis.bound_k()}};
}

BasisSystem BasisFromParts(int kind, const std::vector<int>& labels) {
  if (kind == 0) return BasisSystem::FourierLabels(labels);
  if (kind == 1) {
    BasisSystem basis = BasisSystem::Chebyshev(static_cast<int>(labels.size()));
    if (basis.labels() != labels) throw IoError("Chebyshev labels must be 0..D-1");
    return basis;
  }
  throw IoError("unknown basis kind");
}

BasisSystem BasisFromJson(const json& j) {
  std::string kind = j.at("kind").get<std::string>();
  return BasisFromParts(kind == "fourier" ? 0 : kind == "chebyshev" ? 1 : -1,
                        j.at("labels").get<std::vector<int>>());
}

// Shadow records read from disk report invalid content as IoError.
void ValidateShadowRecord(const ShadowData& data) {
  try {
    data.Validate();
  } catch (const ArgumentError& e) {
    throw IoError(std::string("invalid shadow record: ") + e.what());
  }
}

uint32_t CheckedBasisCode(int code) {
  if (code < 0 || code > 2) throw IoError("shadow basis code must be 0, 1 or 2");
  return static_cast<uint32_t>(code);
}

}  // namespace

std::string FormatDouble(double v) {
  std::array<char, 64> buf{};
  auto result = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), result.ptr);
}

std::string ShadowToJson(const ShadowData& data) {
  data.Validate();
  json bases = json::array();
  json outcomes = json::array();
  for (const Snapshot& s : data.snapshots) {
    std::vector<int> b(static_cast<size_t>(data.n_qubits));
    for (int q = 0; q < data.n_qubits; ++q) b[q] = s.Basis(q, data.n_qubits);
    bases.push_back(b);
    outcomes.push_back(s.outcomes);
  }
  json doc{{"format", "paramtomo.shadow"},
           {"version", kFormatVersion},
           {"n_qubits", data.n_qubits},
           {"bases", bases},
           {"outcomes", outcomes}};
  return doc.dump();
}

ShadowData ShadowFromJson(const std::string& text) {
  json doc = Parse(text);
  ExpectFormat(doc, "paramtomo.shadow");
  ShadowData data;
  try {
    data.n_qubits = doc.at("n_qubits").get<int>();
    const json& bases = doc.at("bases");
    const json& outcomes = doc.at("outcomes");
    if (bases.size() != outcomes.size()) {
      throw IoError("bases and outcomes have different lengths");
    }
    for (size_t i = 0; i < bases.size(); ++i) {
      std::vector<int> b = bases[i].get<std::vector<int>>();
      if (static_cast<int>(b.size()) != data.n_qubits) {
        throw IoError("snapshot basis record has the wrong length");
      }
      Snapshot s;
      for (int q = 0; q < data.n_qubits; ++q) {
        s.bases = (s.bases << 2) | CheckedBasisCode(b[q]);
      }
      s.outcomes = outcomes[i].get<uint32_t>();
      data.snapshots.push_back(s);
    }
  } catch (const json::exception& e) {
    throw IoError(std::string("malformed shadow document: ") + e.what());
  }
  ValidateShadowRecord(data);
  return data;
}

void WriteShadowBinary(std::ostream& out, const ShadowData& data) {
  data.Validate();
  out.write("PTSH", 4);
  Put<uint32_t>(out, kFormatVersion);
  Put<uint32_t>(out, static_cast<uint32_t>(data.n_qubits));
  Put<uint64_t>(out, data.snapshots.size());
  for (const Snapshot& s : data.snapshots) {
    for (int q = 0; q < data.n_qubits; ++q) {
      Put<uint8_t>(out, static_cast<uint8_t>(s.Basis(q, data.n_qubits)));
    }
    Put<uint32_t>(out, s.outcomes);
  }
  if (!out) throw IoError("failed to write shadow record");
}

ShadowData ReadShadowBinary(std::istream& in) {
  ExpectMagic(in, "PTSH");
  ShadowData data;
  data.n_qubits = static_cast<int>(Get<uint32_t>(in));
  if (data.n_qubits < 1 || data.n_qubits > kMaxShadowQubits) {
    throw IoError("shadow qubit count out of range");
  }
  uint64_t count = Get<uint64_t>(in);
  for (uint64_t i = 0; i < count; ++i) {
    Snapshot s;
    for (int q = 0; q < data.n_qubits; ++q) {
      s.bases = (s.bases << 2) | CheckedBasisCode(Get<uint8_t>(in));
    }
    s.outcomes = Get<uint32_t>(in);
    data.snapshots.push_back(s);
  }
  ValidateShadowRecord(data);
  return data;
}

void WriteCoefficientSidecar(std::ostream& out, const ParametrizedOperator& op) {
  const BasisSystem& basis = op.basis();
  out.write("PTCF", 4);
  Put<uint32_t>(out, kFormatVersion);
  Put<uint8_t>(out, basis.kind() == BasisKind::kFourier ? 0 : 1);
  Put<uint32_t>(out, static_cast<uint32_t>(basis.size()));
  for (int label : basis.labels()) Put<int32_t>(out, label);
  Put<uint32_t>(out, static_cast<uint32_t>(op.support().size()));
  for (int label : op.support()) Put<int32_t>(out, label);
  Put<uint8_t>(out, 1);
  Put<uint32_t>(out, static_cast<uint32_t>(op.dim()));
  Put<uint32_t>(out, static_cast<uint32_t>(op.dim()));
  for (const Matrix& m : op.coeffs()) {
    for (Eigen::Index i = 0; i < m.size(); ++i) {
      Put<double>(out, m.data()[i].real());
      Put<double>(out, m.data()[i].imag());
    }
  }
  if (!out) throw IoError("failed to write coefficient sidecar");
}

ParametrizedOperator ReadCoefficientSidecar(std::istream& in) {
  ExpectMagic(in, "PTCF");
  int kind = Get<uint8_t>(in);
  std::vector<int> labels(Get<uint32_t>(in));
  for (int& label : labels) label = Get<int32_t>(in);
  std::vector<int> support(Get<uint32_t>(in));
  for (int& label : support) label = Get<int32_t>(in);
  if (Get<uint8_t>(in) != 1) throw IoError("unsupported coefficient dtype");
  uint32_t rows = Get<uint32_t>(in);
  uint32_t cols = Get<uint32_t>(in);
  if (rows != cols) throw IoError("coefficient matrices must be square");
  std::vector<Matrix> coeffs;
  for (size_t k = 0; k < support.size(); ++k) {
    Matrix m(rows, cols);
    for (Eigen::Index i = 0; i < m.size(); ++i) {
      double re = Get<double>(in);
      double im = Get<double>(in);
      m.data()[i] = Complex(re, im);
    }
    coeffs.push_back(std::move(m));
  }
  return ParametrizedOperator(BasisFromParts(kind, labels), support, coeffs,
                              static_cast<int>(rows));
}

std::string RecoveryReportToJson(const RecoveryReport& report,
                                 const std::string& sidecar_name) {
  const RecoveryPlan& plan = report.plan;
  json doc{
      {"format", "paramtomo.recovery_report"},
      {"version", kFormatVersion},
      {"is_channel", report.is_channel},
      {"plan",
       {{"basis", BasisToJson(plan.basis)},
        {"support", plan.support},
        {"attenuation", Num(plan.attenuation)},
        {"epsilon", Num(plan.epsilon)},
        {"delta", Num(plan.delta)},
        {"m", plan.m},
        {"formula_variant",
         plan.variant == FormulaVariant::kCorollary ? "corollary" : "algorithm1"}}},
      {"support", report.support},
      {"points", report.points},
      {"budget",
       {{"gamma_l2", Num(report.budget.gamma_l2)},
        {"gamma_l1", Num(report.budget.gamma_l1)},
        {"attenuation", Num(report.budget.attenuation)},
        {"spillover", Num(report.budget.spillover())},
        {"epsilon", Num(report.budget.epsilon)},
        {"total", Num(report.budget.Total())},
        {"gammas_known", report.budget.gammas_known}}},
      {"diagnostics",
       {{"sigma_min", Num(report.diagnostics.sigma_min)},
        {"pinv_norm", Num(report.diagnostics.pinv_norm)},
        {"pinv_norm_bound", Num(report.diagnostics.pinv_norm_bound)},
        {"m", report.diagnostics.m},
        {"s", report.diagnostics.s}}},
  };
  if (!sidecar_name.empty()) doc["coefficients"] = sidecar_name;
  return doc.dump(2);
}

RecoveryReport RecoveryReportFromJson(const std::string& text,
                                      const ParametrizedOperator& coeffs) {
  json doc = Parse(text);
  ExpectFormat(doc, "paramtomo.recovery_report");
  RecoveryReport report;
  try {
    const json& plan = doc.at("plan");
    report.plan.basis = BasisFromJson(plan.at("basis"));
    report.plan.support = plan.at("support").get<std::vector<int>>();
    report.plan.attenuation = ReadNum(plan.at("attenuation"));
    report.plan.epsilon = ReadNum(plan.at("epsilon"));
    report.plan.delta = ReadNum(plan.at("delta"));
    report.plan.m = plan.at("m").get<int>();
    report.plan.variant = plan.at("formula_variant").get<std::string>() == "corollary"
                              ? FormulaVariant::kCorollary
                              : FormulaVariant::kAlgorithm1;
    report.support = doc.at("support").get<std::vector<int>>();
    report.points = doc.at("points").get<std::vector<double>>();
    report.is_channel = doc.at("is_channel").get<bool>();
    const json& budget = doc.at("budget");
    report.budget.gamma_l2 = ReadNum(budget.at("gamma_l2"));
    report.budget.gamma_l1 = ReadNum(budget.at("gamma_l1"));
    report.budget.attenuation = ReadNum(budget.at("attenuation"));
    report.budget.epsilon = ReadNum(budget.at("epsilon"));
    report.budget.gammas_known = budget.at("gammas_known").get<bool>();
    const json& diag = doc.at("diagnostics");
    report.diagnostics.sigma_min = ReadNum(diag.at("sigma_min"));
    report.diagnostics.pinv_norm = ReadNum(diag.at("pinv_norm"));
    report.diagnostics.pinv_norm_bound = ReadNum(diag.at("pinv_norm_bound"));
    report.diagnostics.m = diag.at("m").get<int>();
    report.diagnostics.s = diag.at("s").get<int>();
  } catch (const json::exception& e) {
    throw IoError(std::string("malformed recovery report: ") + e.what());
  }
  if (!(coeffs.basis() == report.plan.basis) || coeffs.support() != report.support) {
    throw IoError("coefficient sidecar does not match the report");
  }
  report.dense_coeffs = coeffs.coeffs();
  return report;
}

std::string SupportEstimateToJson(const SupportEstimate& estimate) {
  std::vector<double> xhat(estimate.xhat.data(),
                           estimate.xhat.data() + estimate.xhat.size());
  json doc{{"format", "paramtomo.support_estimate"},
           {"version", kFormatVersion},
           {"support", estimate.support},
           {"labels", estimate.labels},
           {"xhat", xhat},
           {"gap", Num(estimate.gap)},
           {"probes", estimate.probes},
           {"seed", estimate.seed},
           {"coefficient_bound_violations", estimate.coefficient_bound_violations},
           {"max_abs_coefficient", Num(estimate.max_abs_coefficient)},
           {"local_assumption_fraction", Num(estimate.local_assumption_fraction)},
           {"warnings", estimate.warnings}};
  return doc.dump(2);
}

SupportEstimate SupportEstimateFromJson(const std::string& text) {
  json doc = Parse(text);
  ExpectFormat(doc, "paramtomo.support_estimate");
  SupportEstimate out;
  try {
    out.support = doc.at("support").get<std::vector<int>>();
    out.labels = doc.at("labels").get<std::vector<int>>();
    std::vector<double> xhat = doc.at("xhat").get<std::vector<double>>();
    out.xhat = Eigen::Map<RealVector>(xhat.data(), static_cast<Eigen::Index>(xhat.size()));
    out.gap = ReadNum(doc.at("gap"));
    out.probes = doc.at("probes").get<int64_t>();
    out.seed = doc.at("seed").get<uint64_t>();
    out.coefficient_bound_violations =
        doc.at("coefficient_bound_violations").get<int64_t>();
    out.max_abs_coefficient = ReadNum(doc.at("max_abs_coefficient"));
    out.local_assumption_fraction = ReadNum(doc.at("local_assumption_fraction"));
    out.warnings = doc.at("warnings").get<std::vector<std::string>>();
  } catch (const json::exception& e) {
    throw IoError(std::string("malformed support estimate: ") + e.what());
  }
  return out;
}

void WriteTrajectoryCsv(std::ostream& out, const std::vector<TrajectoryRow>& rows) {
  out << "x,observable_id,estimate,stderr\n";
  for (const TrajectoryRow& row : rows) {
    out << FormatDouble(row.x) << ',' << row.observable_id << ','
        << FormatDouble(row.estimate) << ',';
    if (row.standard_error) out << FormatDouble(*row.standard_error);
    out << '\n';
  }
  if (!out) throw IoError("failed to write trajectory CSV");
}

std::string ReadTextFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void WriteTextFile(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path);
  out << content;
  if (!out) throw IoError("failed while writing " + path);
}

}  // namespace paramtomo
