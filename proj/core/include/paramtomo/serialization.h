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

#ifndef PARAMTOMO_SERIALIZATION_H_
#define PARAMTOMO_SERIALIZATION_H_

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "paramtomo/parametrized_operator.h"
#include "paramtomo/recovery.h"
#include "paramtomo/suppid.h"
#include "paramtomo/tomo.h"

namespace paramtomo {

// Version written into every JSON document and binary header.
inline constexpr int kFormatVersion = 1;

// Shortest decimal text that round-trips the double exactly.
std::string FormatDouble(double v);

// JSON: {"format": "paramtomo.shadow", "version": 1, "n_qubits": n,
//        "bases": [[b_0, ..., b_{n-1}], ...], "outcomes": [mask, ...]}
// with basis indices 0 = X, 1 = Y, 2 = Z per qubit and outcome bitmasks
// (qubit 0 in the most significant of the n bits).
std::string ShadowToJson(const ShadowData& data);
ShadowData ShadowFromJson(const std::string& text);

// Binary: "PTSH", u32 version, u32 n, u64 count, then per snapshot n basis
// bytes followed by a u32 outcome mask. Little-endian.
void WriteShadowBinary(std::ostream& out, const ShadowData& data);
ShadowData ReadShadowBinary(std::istream& in);

// Coefficient sidecar: "PTCF", u32 version, u8 basis kind (0 Fourier,
// 1 Chebyshev), u32 |Lambda|, i32 labels, u32 |S|, i32 support labels,
// u8 dtype (1 = complex128), u32 rows, u32 cols, then |S| column-major
// matrices of (re, im) doubles. Little-endian.
void WriteCoefficientSidecar(std::ostream& out, const ParametrizedOperator& op);
ParametrizedOperator ReadCoefficientSidecar(std::istream& in);

// Plan echo, support, sample points, budget and diagnostics. The
// coefficient payload lives in the sidecar named by `sidecar_name`.
std::string RecoveryReportToJson(const RecoveryReport& report,
                                 const std::string& sidecar_name = "");

// Rebuilds a report from its JSON and sidecar; only the coefficient route of
// prediction is available on the result.
RecoveryReport RecoveryReportFromJson(const std::string& text,
                                      const ParametrizedOperator& coeffs);

std::string SupportEstimateToJson(const SupportEstimate& estimate);
SupportEstimate SupportEstimateFromJson(const std::string& text);

struct TrajectoryRow {
  double x = 0.0;
  std::string observable_id;
  double estimate = 0.0;
  std::optional<double> standard_error;
};

// Columns x,observable_id,estimate,stderr (empty when not sampled).
void WriteTrajectoryCsv(std::ostream& out, const std::vector<TrajectoryRow>& rows);

// Throw IoError when the file cannot be read or written.
std::string ReadTextFile(const std::string& path);
void WriteTextFile(const std::string& path, const std::string& content);

}  // namespace paramtomo

#endif  // PARAMTOMO_SERIALIZATION_H_
