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

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "planesched/universe.hpp"

namespace planesched {

/// Molecular Hamiltonian in spin-orbital form
///   H = e_nuc + sum h[s][p][q] a+_ps a_qs
///             + 1/2 sum g[s][t][p][q][r][u] a+_ps a_qs a+_rt a_ut
/// with real coefficients satisfying g_pqru = g_qpru = g_pqur and h_pq = h_qp.
class Hamiltonian {
 public:
  static constexpr double kSymmetryTolerance = 1e-12;

  explicit Hamiltonian(int n_orbitals);

  int n_orbitals() const noexcept { return n_; }
  double e_nuc() const noexcept { return e_nuc_; }
  void set_e_nuc(double e) { e_nuc_ = e; }

  double& h(Spin s, int p, int q) { return h_[h_index(s, p, q)]; }
  double h(Spin s, int p, int q) const { return h_[h_index(s, p, q)]; }
  double& g(Spin s, Spin t, int p, int q, int r, int u) { return g_[g_index(s, t, p, q, r, u)]; }
  double g(Spin s, Spin t, int p, int q, int r, int u) const {
    return g_[g_index(s, t, p, q, r, u)];
  }

  /// Row-major storage, spin order [up, down].
  const std::vector<double>& h_data() const noexcept { return h_; }
  const std::vector<double>& g_data() const noexcept { return g_; }

  /// Throws kSymmetryViolation naming the first offending entry.
  void validate() const;

 private:
  std::size_t h_index(Spin s, int p, int q) const;
  std::size_t g_index(Spin s, Spin t, int p, int q, int r, int u) const;

  int n_;
  double e_nuc_ = 0.0;
  std::vector<double> h_;
  std::vector<double> g_;
};

/// Reads {n_orbitals, e_nuc, h, g}. h and g may be flat row-major arrays or
/// nested arrays of shape [2][N][N] and [2][2][N][N][N][N].
Hamiltonian parse_hamiltonian(const std::string& json_text);
Hamiltonian load_hamiltonian(const std::string& path);
/// Flat row-major arrays; round-trips through parse_hamiltonian.
std::string hamiltonian_to_json(const Hamiltonian& ham);

/// Random real Hamiltonian with the full eightfold integral symmetry
/// (including g_pqru,st = g_rupq,ts), so that H is Hermitian.
Hamiltonian random_hamiltonian(int n, std::uint64_t seed);

/// Energy written as a linear functional of measured term expectations:
///   E = constant + sum_k coefficient_k <term_k>
/// Products of hopping operators that share an index are replaced by the real
/// part of their expectation, (AB + BA)/2, which reduces to listed terms.
struct EnergyModel {
  double constant = 0.0;
  std::vector<std::pair<TermKey, double>> terms;  // sorted by key, no duplicates
};

EnergyModel energy_model(const Hamiltonian& ham);

/// Re<A_pq,s A_ru,t> as a combination of canonical terms; indices are those of
/// the hopping operators A (so A_pp = 2 n_p).
std::vector<std::pair<TermKey, double>> expand_product(Spin s, int p, int q, Spin t, int r,
                                                       int u);
std::vector<std::pair<TermKey, double>> expand_single(Spin s, int p, int q);

}  // namespace planesched
