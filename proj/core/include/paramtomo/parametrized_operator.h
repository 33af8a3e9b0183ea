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

#ifndef PARAMTOMO_PARAMETRIZED_OPERATOR_H_
#define PARAMTOMO_PARAMETRIZED_OPERATOR_H_

#include <vector>

#include "paramtomo/bos.h"
#include "paramtomo/types.h"

namespace paramtomo {

// X(x) = sum_{k in support} coeffs[k] phi_k(x): a finite expansion of an
// operator-valued function in a bounded orthonormal system. Reconstructions
// need not be physical pointwise, so no positivity or trace is enforced.
class ParametrizedOperator {
 public:
  // Validates that labels are in the basis, unique and sorted, and that all
  // coefficients share one square shape. `dim` is only consulted when the
  // coefficient list is empty.
  ParametrizedOperator(BasisSystem basis, std::vector<int> support,
                       std::vector<Matrix> coeffs, int dim = 0);

  const BasisSystem& basis() const { return basis_; }
  const std::vector<int>& support() const { return support_; }
  const std::vector<Matrix>& coeffs() const { return coeffs_; }
  int dim() const { return dim_; }
  int size() const { return static_cast<int>(support_.size()); }

  bool HasLabel(int label) const;
  // Coefficient for `label`; labels of the basis absent from the support
  // return a zero matrix.
  Matrix Coefficient(int label) const;

  // X(x). Throws DomainError outside the basis domain.
  Matrix Evaluate(double x) const;

  // Restriction to `labels` (must be a subset of the support) or to the
  // complement of `labels` within the support.
  ParametrizedOperator Restrict(const std::vector<int>& labels) const;
  ParametrizedOperator RestrictComplement(const std::vector<int>& labels) const;

 private:
  BasisSystem basis_;
  std::vector<int> support_;
  std::vector<Matrix> coeffs_;
  int dim_;
};

}  // namespace paramtomo

#endif  // PARAMTOMO_PARAMETRIZED_OPERATOR_H_
