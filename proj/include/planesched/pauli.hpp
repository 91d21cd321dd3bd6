// Copyright 2026 The planesched Authors
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

#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace planesched::pauli {

using cplx = std::complex<double>;

/// i^{|x & z|} X^x Z^z over up to 64 qubits; qubit k is bit k.
struct PauliString {
  std::uint64_t x = 0;
  std::uint64_t z = 0;

  /// Single-qubit factor; `op` is one of I, X, Y, Z.
  static PauliString single(char op, int qubit);

  friend bool operator==(const PauliString&, const PauliString&) = default;
  friend auto operator<=>(const PauliString&, const PauliString&) = default;
};

struct PauliTerm {
  cplx coeff{1.0, 0.0};
  PauliString string;
};

using PauliSum = std::vector<PauliTerm>;

/// Product of two strings, including the phase picked up from reordering.
PauliTerm multiply(const PauliTerm& a, const PauliTerm& b);
PauliSum multiply(const PauliSum& a, const PauliSum& b);
PauliSum add(PauliSum a, const PauliSum& b);
PauliSum scale(PauliSum a, cplx factor);
PauliSum adjoint(PauliSum a);
/// Merges equal strings and drops coefficients below `eps` in magnitude.
PauliSum simplify(const PauliSum& a, double eps = 1e-14);

/// Sign and phase acquired by basis state |b> under the string:
/// P|b> = phase(b) |b xor x>.
cplx basis_phase(const PauliString& s, std::uint64_t basis);

/// Dense row-major square matrix on a small register (bit k of the row/column
/// index is qubit k of the register).
struct DenseMatrix {
  int qubits = 0;
  std::vector<cplx> data;

  DenseMatrix() = default;
  explicit DenseMatrix(int q);
  static DenseMatrix identity(int q);

  std::size_t dim() const noexcept { return std::size_t{1} << qubits; }
  cplx& at(std::size_t r, std::size_t c) { return data[r * dim() + c]; }
  cplx at(std::size_t r, std::size_t c) const { return data[r * dim() + c]; }

  DenseMatrix operator*(const DenseMatrix& other) const;
  DenseMatrix adjoint() const;
  /// Largest magnitude off the diagonal.
  double off_diagonal_norm() const;
  double distance(const DenseMatrix& other) const;  // max-entry difference
};

DenseMatrix to_dense(const PauliSum& op, int qubits);

/// out = op * in, for a register of in.size() = 2^q amplitudes.
void apply(const PauliSum& op, std::span<const cplx> in, std::span<cplx> out);

/// Parses a label like "XZI" (qubit 0 first) into a string.
PauliString parse(const std::string& label);

}  // namespace planesched::pauli
