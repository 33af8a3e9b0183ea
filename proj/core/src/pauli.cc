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

#include "paramtomo/pauli.h"

#include <bit>

#include "paramtomo/errors.h"

namespace paramtomo {

PauliWord PauliWord::Identity(int n) {
  return PauliWord(std::vector<PauliLetter>(n, PauliLetter::kI));
}

PauliWord PauliWord::Parse(const std::string& text) {
  std::vector<PauliLetter> letters;
  letters.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case 'I': letters.push_back(PauliLetter::kI); break;
      case 'X': letters.push_back(PauliLetter::kX); break;
      case 'Y': letters.push_back(PauliLetter::kY); break;
      case 'Z': letters.push_back(PauliLetter::kZ); break;
      default:
        throw ArgumentError("not a Pauli word: '" + text + "'");
    }
  }
  if (letters.empty()) throw ArgumentError("empty Pauli word");
  return PauliWord(std::move(letters));
}

PauliWord PauliWord::FromIndex(int n, uint64_t index) {
  std::vector<PauliLetter> letters(n);
  for (int q = n - 1; q >= 0; --q) {
    letters[q] = static_cast<PauliLetter>(index & 3);
    index >>= 2;
  }
  return PauliWord(std::move(letters));
}

int PauliWord::Weight() const {
  int w = 0;
  for (PauliLetter l : letters_) w += (l != PauliLetter::kI);
  return w;
}

std::vector<int> PauliWord::Support() const {
  std::vector<int> out;
  for (int q = 0; q < num_qubits(); ++q) {
    if (letters_[q] != PauliLetter::kI) out.push_back(q);
  }
  return out;
}

std::string PauliWord::ToString() const {
  static const char kNames[4] = {'I', 'X', 'Y', 'Z'};
  std::string s;
  for (PauliLetter l : letters_) s.push_back(kNames[static_cast<int>(l)]);
  return s;
}

uint64_t PauliWord::Index() const {
  uint64_t index = 0;
  for (PauliLetter l : letters_) index = (index << 2) | static_cast<uint64_t>(l);
  return index;
}

uint64_t PauliWord::XMask() const {
  uint64_t mask = 0;
  int n = num_qubits();
  for (int q = 0; q < n; ++q) {
    if (letters_[q] == PauliLetter::kX || letters_[q] == PauliLetter::kY) {
      mask |= uint64_t{1} << (n - 1 - q);
    }
  }
  return mask;
}

uint64_t PauliWord::ZMask() const {
  uint64_t mask = 0;
  int n = num_qubits();
  for (int q = 0; q < n; ++q) {
    if (letters_[q] == PauliLetter::kZ || letters_[q] == PauliLetter::kY) {
      mask |= uint64_t{1} << (n - 1 - q);
    }
  }
  return mask;
}

namespace {

// P |i> = phase(i) |i ^ x_mask>. With Y = i X Z, each Y contributes a factor
// i and each Z/Y letter a sign (-1)^{bit}.
Complex ColumnPhase(uint64_t i, uint64_t z_mask, int num_y) {
  static const Complex kPowI[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  int sign_flips = std::popcount(i & z_mask);
  Complex phase = kPowI[num_y & 3];
  return (sign_flips & 1) ? -phase : phase;
}

int CountY(const PauliWord& word) {
  int y = 0;
  for (PauliLetter l : word.letters()) y += (l == PauliLetter::kY);
  return y;
}

}  // namespace

Matrix PauliMatrix(const PauliWord& word) {
  int n = word.num_qubits();
  uint64_t dim = uint64_t{1} << n;
  uint64_t x_mask = word.XMask();
  uint64_t z_mask = word.ZMask();
  int num_y = CountY(word);
  Matrix p = Matrix::Zero(dim, dim);
  for (uint64_t i = 0; i < dim; ++i) {
    p(i ^ x_mask, i) = ColumnPhase(i, z_mask, num_y);
  }
  return p;
}

Complex PauliTrace(const PauliWord& word, const Matrix& x) {
  uint64_t dim = uint64_t{1} << word.num_qubits();
  if (static_cast<uint64_t>(x.rows()) != dim ||
      static_cast<uint64_t>(x.cols()) != dim) {
    throw ArgumentError("Pauli word and operator dimensions differ");
  }
  uint64_t x_mask = word.XMask();
  uint64_t z_mask = word.ZMask();
  int num_y = CountY(word);
  // Tr[P X] = sum_i P_{i^x, i} X_{i, i^x}.
  Complex sum = 0.0;
  for (uint64_t i = 0; i < dim; ++i) {
    sum += ColumnPhase(i, z_mask, num_y) * x(i, i ^ x_mask);
  }
  return sum;
}

std::vector<PauliWord> AllPauliWords(int n) {
  if (n < 0 || n > 12) throw ArgumentError("AllPauliWords supports n <= 12");
  uint64_t count = uint64_t{1} << (2 * n);
  std::vector<PauliWord> words;
  words.reserve(count);
  for (uint64_t idx = 0; idx < count; ++idx) {
    words.push_back(PauliWord::FromIndex(n, idx));
  }
  return words;
}

std::vector<PauliWord> LocalPauliWords(int n, int ell) {
  if (ell < 0 || ell > n) throw ArgumentError("locality must be in [0, n]");
  std::vector<PauliWord> out;
  for (const PauliWord& w : AllPauliWords(n)) {
    int weight = w.Weight();
    if (weight >= 1 && weight <= ell) out.push_back(w);
  }
  return out;
}

PauliWord RandomPauliWord(int n, Rng& rng) {
  std::uniform_int_distribution<int> letter(0, 3);
  std::vector<PauliLetter> letters(n);
  for (int q = 0; q < n; ++q) letters[q] = static_cast<PauliLetter>(letter(rng));
  return PauliWord(std::move(letters));
}

Matrix PauliX() {
  Matrix m(2, 2);
  m << 0, 1, 1, 0;
  return m;
}

Matrix PauliY() {
  Matrix m(2, 2);
  m << 0, Complex(0, -1), Complex(0, 1), 0;
  return m;
}

Matrix PauliZ() {
  Matrix m(2, 2);
  m << 1, 0, 0, -1;
  return m;
}

Matrix Kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

Matrix KronAll(const std::vector<Matrix>& factors) {
  Matrix out = Matrix::Identity(1, 1);
  for (const Matrix& f : factors) out = Kron(out, f);
  return out;
}

}  // namespace paramtomo
