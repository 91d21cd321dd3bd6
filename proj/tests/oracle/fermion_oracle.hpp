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


// Test-only reference: fermionic operators acting directly on occupation
// patterns. Shares no code with the Pauli or circuit machinery.

#pragma once

#include <bit>
#include <complex>
#include <cstdint>
#include <vector>

#include "planesched/hamiltonian.hpp"

namespace oracle {

using cplx = std::complex<double>;

/// Dense matrix in the occupation basis, row-major.
struct Matrix {
  std::size_t dim = 0;
  std::vector<cplx> a;

  explicit Matrix(std::size_t d = 0) : dim(d), a(d * d) {}
  cplx& operator()(std::size_t r, std::size_t c) { return a[r * dim + c]; }
  cplx operator()(std::size_t r, std::size_t c) const { return a[r * dim + c]; }
};

inline int mode_of(int p, planesched::Spin s, int n) {
  return s == planesched::Spin::kUp ? p : n + p;
}

/// a+_i a_j |occ>, returning the sign (0 when annihilated) and the new pattern.
inline int hop(std::uint64_t occ, int i, int j, std::uint64_t& out) {
  int sign = 1;
  if (!((occ >> j) & 1U)) return 0;
  sign *= (std::popcount(occ & ((std::uint64_t{1} << j) - 1)) % 2) ? -1 : 1;
  occ &= ~(std::uint64_t{1} << j);
  if ((occ >> i) & 1U) return 0;
  sign *= (std::popcount(occ & ((std::uint64_t{1} << i) - 1)) % 2) ? -1 : 1;
  out = occ | (std::uint64_t{1} << i);
  return sign;
}

/// E_ij = a+_i a_j over `modes` spin-orbitals.
inline Matrix excitation(int i, int j, int modes) {
  Matrix m(std::size_t{1} << modes);
  for (std::uint64_t occ = 0; occ < m.dim; ++occ) {
    std::uint64_t out = 0;
    const int s = hop(occ, i, j, out);
    if (s != 0) m(out, occ) += s;
  }
  return m;
}

inline Matrix add(const Matrix& x, const Matrix& y, double cy = 1.0) {
  Matrix m = x;
  for (std::size_t k = 0; k < m.a.size(); ++k) m.a[k] += cy * y.a[k];
  return m;
}

inline Matrix mul(const Matrix& x, const Matrix& y) {
  Matrix m(x.dim);
  for (std::size_t r = 0; r < x.dim; ++r)
    for (std::size_t k = 0; k < x.dim; ++k) {
      const cplx v = x(r, k);
      if (v == cplx{}) continue;
      for (std::size_t c = 0; c < x.dim; ++c) m(r, c) += v * y(k, c);
    }
  return m;
}

/// A_pq = E_pq + E_qp, A_pp = 2 n_p, on 2n modes (up block first).
inline Matrix hopping(const planesched::HoppingOp& op, int n) {
  const int i = mode_of(op.p, op.spin, n);
  const int j = mode_of(op.q, op.spin, n);
  return add(excitation(i, j, 2 * n), excitation(j, i, 2 * n));
}

/// E_n + sum h E + 1/2 sum g E E, built from the tensors directly.
inline Matrix hamiltonian(const planesched::Hamiltonian& ham) {
  using planesched::Spin;
  const int n = ham.n_orbitals();
  const int modes = 2 * n;
  const std::size_t dim = std::size_t{1} << modes;
  Matrix h(dim);
  for (std::size_t k = 0; k < dim; ++k) h(k, k) = ham.e_nuc();
  const Spin spins[] = {Spin::kUp, Spin::kDown};
  for (std::uint64_t occ = 0; occ < dim; ++occ) {
    for (Spin s : spins)
      for (int p = 0; p < n; ++p)
        for (int q = 0; q < n; ++q) {
          std::uint64_t out = 0;
          const int sign = hop(occ, mode_of(p, s, n), mode_of(q, s, n), out);
          if (sign) h(out, occ) += sign * ham.h(s, p, q);
        }
    for (Spin s : spins)
      for (Spin t : spins)
        for (int r = 0; r < n; ++r)
          for (int u = 0; u < n; ++u) {
            std::uint64_t mid = 0;
            const int s1 = hop(occ, mode_of(r, t, n), mode_of(u, t, n), mid);
            if (!s1) continue;
            for (int p = 0; p < n; ++p)
              for (int q = 0; q < n; ++q) {
                const double g = ham.g(s, t, p, q, r, u);
                if (g == 0.0) continue;
                std::uint64_t out = 0;
                const int s2 = hop(mid, mode_of(p, s, n), mode_of(q, s, n), out);
                if (s2) h(out, occ) += 0.5 * g * s1 * s2;
              }
          }
  }
  return h;
}

/// Parity encoding of an occupation pattern: bit j holds the parity of modes 0..j.
inline std::uint64_t parity_index(std::uint64_t occ, int modes) {
  std::uint64_t out = 0, acc = 0;
  for (int j = 0; j < modes; ++j) {
    acc ^= (occ >> j) & 1U;
    out |= acc << j;
  }
  return out;
}

/// Re-expresses an occupation-basis matrix in the parity qubit basis.
inline Matrix to_parity(const Matrix& m, int modes) {
  Matrix out(m.dim);
  for (std::uint64_t r = 0; r < m.dim; ++r)
    for (std::uint64_t c = 0; c < m.dim; ++c)
      out(parity_index(r, modes), parity_index(c, modes)) = m(r, c);
  return out;
}

inline cplx expectation(const Matrix& m, const std::vector<cplx>& psi) {
  cplx acc{};
  for (std::size_t r = 0; r < m.dim; ++r) {
    cplx row{};
    for (std::size_t c = 0; c < m.dim; ++c) row += m(r, c) * psi[c];
    acc += std::conj(psi[r]) * row;
  }
  return acc;
}

}  // namespace oracle
