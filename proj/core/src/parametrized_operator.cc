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

#include "paramtomo/parametrized_operator.h"

#include <algorithm>
#include <sstream>

#include "paramtomo/errors.h"

namespace paramtomo {

ParametrizedOperator::ParametrizedOperator(BasisSystem basis,
                                           std::vector<int> support,
                                           std::vector<Matrix> coeffs,
                                           int dim)
    : basis_(std::move(basis)),
      support_(std::move(support)),
      coeffs_(std::move(coeffs)),
      dim_(coeffs_.empty() ? dim : static_cast<int>(coeffs_.front().rows())) {
  if (support_.size() != coeffs_.size()) {
    throw ArgumentError("support and coefficient list lengths differ");
  }
  for (size_t i = 0; i < support_.size(); ++i) {
    if (!basis_.Contains(support_[i])) {
      std::ostringstream msg;
      msg << "support label " << support_[i] << " is not in the basis";
      throw DomainError(msg.str());
    }
    if (i > 0 && support_[i] <= support_[i - 1]) {
      throw ArgumentError("support labels must be unique and sorted");
    }
  }
  for (const Matrix& c : coeffs_) {
    if (c.rows() != c.cols() || c.rows() != coeffs_.front().rows()) {
      throw ArgumentError("coefficients must share one square shape");
    }
  }
}

bool ParametrizedOperator::HasLabel(int label) const {
  return std::binary_search(support_.begin(), support_.end(), label);
}

Matrix ParametrizedOperator::Coefficient(int label) const {
  auto it = std::lower_bound(support_.begin(), support_.end(), label);
  if (it != support_.end() && *it == label) {
    return coeffs_[it - support_.begin()];
  }
  basis_.IndexOf(label);  // Throws for labels outside the basis.
  return Matrix::Zero(dim(), dim());
}

Matrix ParametrizedOperator::Evaluate(double x) const {
  Matrix out = Matrix::Zero(dim(), dim());
  for (size_t i = 0; i < support_.size(); ++i) {
    out += EvaluateBasis(basis_, support_[i], x) * coeffs_[i];
  }
  return out;
}

ParametrizedOperator ParametrizedOperator::Restrict(
    const std::vector<int>& labels) const {
  std::vector<int> sorted = labels;
  std::sort(sorted.begin(), sorted.end());
  std::vector<Matrix> coeffs;
  for (int label : sorted) {
    if (!HasLabel(label)) {
      std::ostringstream msg;
      msg << "label " << label << " is not in the support";
      throw ArgumentError(msg.str());
    }
    coeffs.push_back(Coefficient(label));
  }
  return ParametrizedOperator(basis_, sorted, std::move(coeffs), dim_);
}

ParametrizedOperator ParametrizedOperator::RestrictComplement(
    const std::vector<int>& labels) const {
  std::vector<int> keep;
  std::vector<Matrix> coeffs;
  for (size_t i = 0; i < support_.size(); ++i) {
    if (std::find(labels.begin(), labels.end(), support_[i]) == labels.end()) {
      keep.push_back(support_[i]);
      coeffs.push_back(coeffs_[i]);
    }
  }
  return ParametrizedOperator(basis_, std::move(keep), std::move(coeffs), dim_);
}

}  // namespace paramtomo
