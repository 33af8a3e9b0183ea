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

#ifndef PARAMTOMO_PAULI_H_
#define PARAMTOMO_PAULI_H_

#include <cstdint>
#include <string>
#include <vector>

#include "paramtomo/types.h"

namespace paramtomo {

// Single-qubit Pauli letters. The numeric values double as shadow basis codes
// shifted by one (X=1 -> basis 0, Y=2 -> basis 1, Z=3 -> basis 2).
enum class PauliLetter : uint8_t { kI = 0, kX = 1, kY = 2, kZ = 3 };

// An n-qubit Pauli word. Qubit 0 is the most significant bit of the
// computational basis index, matching the Kronecker order P_0 (x) P_1 (x) ...
class PauliWord {
 public:
  PauliWord() = default;
  explicit PauliWord(std::vector<PauliLetter> letters)
      : letters_(std::move(letters)) {}
  static PauliWord Identity(int n);
  // Parses a string over {I, X, Y, Z}; throws ArgumentError otherwise.
  static PauliWord Parse(const std::string& text);
  // Decodes the base-4 index used by AllPauliWords (qubit 0 most significant).
  static PauliWord FromIndex(int n, uint64_t index);

  int num_qubits() const { return static_cast<int>(letters_.size()); }
  PauliLetter operator[](int q) const { return letters_[q]; }
  const std::vector<PauliLetter>& letters() const { return letters_; }
  int Weight() const;
  std::vector<int> Support() const;
  std::string ToString() const;
  uint64_t Index() const;

  // Bit masks over computational basis indices: bit (n-1-q) is set in
  // x_mask if letter q is X or Y, and in z_mask if letter q is Z or Y.
  uint64_t XMask() const;
  uint64_t ZMask() const;

  bool operator==(const PauliWord& o) const { return letters_ == o.letters_; }
  bool operator<(const PauliWord& o) const { return letters_ < o.letters_; }

 private:
  std::vector<PauliLetter> letters_;
};

// Dense 2^n x 2^n matrix of the word.
Matrix PauliMatrix(const PauliWord& word);

// Tr[P X] in O(2^n) without forming P.
Complex PauliTrace(const PauliWord& word, const Matrix& x);

// All 4^n words ordered by base-4 index.
std::vector<PauliWord> AllPauliWords(int n);

// All words with 1 <= weight <= ell (the identity is excluded).
std::vector<PauliWord> LocalPauliWords(int n, int ell);

// A word drawn uniformly from all 4^n words (identity included).
PauliWord RandomPauliWord(int n, Rng& rng);

// Single-qubit matrices.
Matrix PauliX();
Matrix PauliY();
Matrix PauliZ();

// Kronecker product helpers.
Matrix Kron(const Matrix& a, const Matrix& b);
Matrix KronAll(const std::vector<Matrix>& factors);

}  // namespace paramtomo

#endif  // PARAMTOMO_PAULI_H_
