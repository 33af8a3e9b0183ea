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

#ifndef PARAMTOMO_TYPES_H_
#define PARAMTOMO_TYPES_H_

#include <complex>
#include <cstdint>
#include <random>

#include <Eigen/Dense>

namespace paramtomo {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;

// All randomness flows through explicitly passed generators of this type.
using Rng = std::mt19937_64;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr Complex kI{0.0, 1.0};

// Derives an independent child seed from (base, stream) with the SplitMix64
// finalizer, so that per-point or per-probe generators never share a stream.
uint64_t DeriveSeed(uint64_t base, uint64_t stream);

// Returns the Hermitian part (X + X^dagger) / 2.
Matrix HermitianPart(const Matrix& x);

// Largest absolute entry of X - X^dagger.
double HermiticityDefect(const Matrix& x);

// Sum of singular values.
double TraceNorm(const Matrix& x);

// Largest singular value.
double OperatorNorm(const Matrix& x);

}  // namespace paramtomo

#endif  // PARAMTOMO_TYPES_H_
