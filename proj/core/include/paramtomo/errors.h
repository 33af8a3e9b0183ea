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

#ifndef PARAMTOMO_ERRORS_H_
#define PARAMTOMO_ERRORS_H_

#include <stdexcept>
#include <string>

namespace paramtomo {

// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// An argument lies outside the mathematical domain of an operation, such as a
// basis label not in the index set or a parameter outside [-1, 1].
class DomainError : public Error {
 public:
  using Error::Error;
};

// An argument violates a documented precondition (empty list, bad count,
// mismatched dimensions, overlapping supports).
class ArgumentError : public Error {
 public:
  using Error::Error;
};

// A matrix that must be injective is numerically rank deficient. Carries the
// offending smallest singular value so callers can advise a larger sample.
class SingularMatrixError : public Error {
 public:
  SingularMatrixError(const std::string& what, double sigma_min)
      : Error(what), sigma_min_(sigma_min) {}
  double sigma_min() const { return sigma_min_; }

 private:
  double sigma_min_;
};

// The requested (observable set, norm order) combination has no implemented
// evaluation route, or an observable is incompatible with the data format.
class CapabilityError : public Error {
 public:
  using Error::Error;
};

// An exhaustive enumeration would exceed its configured size guard.
class CombinatorialGuardError : public Error {
 public:
  using Error::Error;
};

// A precondition that the caller asked to be certified (for example a
// restricted isometry constant) does not hold.
class CertificationError : public Error {
 public:
  using Error::Error;
};

// Invalid experiment configuration. The message names the offending field.
class ConfigError : public Error {
 public:
  using Error::Error;
};

// File could not be read or written, or has a malformed binary header.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace paramtomo

#endif  // PARAMTOMO_ERRORS_H_
