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

#include "planesched/pauli.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>

#include "planesched/error.hpp"

namespace planesched::pauli {

namespace {

const cplx kIPow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};

int ones(std::uint64_t v) { return std::popcount(v); }

}  // namespace

PauliString PauliString::single(char op, int qubit) {
  if (qubit < 0 || qubit >= 64) fail(ErrorCode::kInvalidArgument, "qubit index out of range");
  const std::uint64_t bit = std::uint64_t{1} << qubit;
  switch (op) {
    case 'I': return {0, 0};
    case 'X': return {bit, 0};
    case 'Y': return {bit, bit};
    case 'Z': return {0, bit};
    default: fail(ErrorCode::kInvalidArgument, std::string("unknown Pauli '") + op + "'");
  }
}

PauliTerm multiply(const PauliTerm& a, const PauliTerm& b) {
  const PauliString& s = a.string;
  const PauliString& t = b.string;
  const PauliString r{s.x ^ t.x, s.z ^ t.z};
  // Z^z1 X^x2 = (-1)^{|z1 & x2|} X^x2 Z^z1, plus the i-prefactors of Y.
  const int e = ones(s.x & s.z) + ones(t.x & t.z) + 2 * ones(s.z & t.x) - ones(r.x & r.z);
  return {a.coeff * b.coeff * kIPow[((e % 4) + 4) % 4], r};
}

PauliSum multiply(const PauliSum& a, const PauliSum& b) {
  PauliSum out;
  out.reserve(a.size() * b.size());
  for (const auto& x : a)
    for (const auto& y : b) out.push_back(multiply(x, y));
  return simplify(out);
}

PauliSum add(PauliSum a, const PauliSum& b) {
  a.insert(a.end(), b.begin(), b.end());
  return simplify(a);
}

PauliSum scale(PauliSum a, cplx factor) {
  for (auto& t : a) t.coeff *= factor;
  return a;
}

PauliSum adjoint(PauliSum a) {
  for (auto& t : a) t.coeff = std::conj(t.coeff);  // every string is Hermitian
  return a;
}

PauliSum simplify(const PauliSum& a, double eps) {
  std::map<PauliString, cplx> acc;
  for (const auto& t : a) acc[t.string] += t.coeff;
  PauliSum out;
  for (const auto& [s, c] : acc) {
    if (std::abs(c) > eps) out.push_back({c, s});
  }
  return out;
}

cplx basis_phase(const PauliString& s, std::uint64_t basis) {
  const int e = ones(s.x & s.z) + 2 * ones(s.z & basis);
  return kIPow[e % 4];
}

DenseMatrix::DenseMatrix(int q) : qubits(q), data(dim() * dim(), cplx{0, 0}) {}

DenseMatrix DenseMatrix::identity(int q) {
  DenseMatrix m(q);
  for (std::size_t i = 0; i < m.dim(); ++i) m.at(i, i) = 1.0;
  return m;
}

DenseMatrix DenseMatrix::operator*(const DenseMatrix& other) const {
  if (other.qubits != qubits) fail(ErrorCode::kInvalidArgument, "matrix size mismatch");
  DenseMatrix out(qubits);
  const std::size_t d = dim();
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t k = 0; k < d; ++k) {
      const cplx a = at(i, k);
      if (a == cplx{0, 0}) continue;
      for (std::size_t j = 0; j < d; ++j) out.at(i, j) += a * other.at(k, j);
    }
  return out;
}

DenseMatrix DenseMatrix::adjoint() const {
  DenseMatrix out(qubits);
  for (std::size_t i = 0; i < dim(); ++i)
    for (std::size_t j = 0; j < dim(); ++j) out.at(j, i) = std::conj(at(i, j));
  return out;
}

double DenseMatrix::off_diagonal_norm() const {
  double worst = 0.0;
  for (std::size_t i = 0; i < dim(); ++i)
    for (std::size_t j = 0; j < dim(); ++j)
      if (i != j) worst = std::max(worst, std::abs(at(i, j)));
  return worst;
}

double DenseMatrix::distance(const DenseMatrix& other) const {
  if (other.qubits != qubits) fail(ErrorCode::kInvalidArgument, "matrix size mismatch");
  double worst = 0.0;
  for (std::size_t i = 0; i < data.size(); ++i) {
    worst = std::max(worst, std::abs(data[i] - other.data[i]));
  }
  return worst;
}

DenseMatrix to_dense(const PauliSum& op, int qubits) {
  if (qubits > 14) fail(ErrorCode::kSizeLimit, "dense matrices are limited to 14 qubits");
  DenseMatrix m(qubits);
  const std::uint64_t mask = (std::uint64_t{1} << qubits) - 1;
  for (const auto& t : op) {
    if ((t.string.x | t.string.z) & ~mask) {
      fail(ErrorCode::kInvalidArgument, "Pauli string acts outside the register");
    }
    for (std::uint64_t b = 0; b < m.dim(); ++b) {
      m.at(b ^ t.string.x, b) += t.coeff * basis_phase(t.string, b);
    }
  }
  return m;
}

void apply(const PauliSum& op, std::span<const cplx> in, std::span<cplx> out) {
  if (in.size() != out.size()) fail(ErrorCode::kInvalidArgument, "apply: size mismatch");
  std::fill(out.begin(), out.end(), cplx{0, 0});
  const std::uint64_t size = in.size();
  for (const auto& t : op) {
    if (t.string.x >= size || t.string.z >= size) {
      fail(ErrorCode::kInvalidArgument, "Pauli string acts outside the register");
    }
    for (std::uint64_t b = 0; b < size; ++b) {
      if (in[b] == cplx{0, 0}) continue;
      out[b ^ t.string.x] += t.coeff * basis_phase(t.string, b) * in[b];
    }
  }
}

PauliString parse(const std::string& label) {
  PauliString s;
  for (std::size_t k = 0; k < label.size(); ++k) {
    const PauliString f = PauliString::single(label[k], static_cast<int>(k));
    s.x |= f.x;
    s.z |= f.z;
  }
  return s;
}

}  // namespace planesched::pauli
