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

#include <array>
#include <cstdint>
#include <map>
#include <vector>

#include "planesched/circuits.hpp"
#include "planesched/hamiltonian.hpp"
#include "planesched/pauli.hpp"
#include "planesched/schedule.hpp"

namespace planesched::sim {

using pauli::cplx;

constexpr int kMaxQubits = 14;

struct StateVector {
  int qubits = 0;
  std::vector<cplx> amps;

  StateVector() = default;
  explicit StateVector(int q);  // |0...0>
  double norm() const;
};

/// Normalised complex Gaussian state.
StateVector random_state(int qubits, std::uint64_t seed);
StateVector basis_state(int qubits, std::uint64_t bits);
/// Amplitudes listed in basis order; renormalised. Throws kInvalidArgument
/// when the length is not a power of two or the vector is zero.
StateVector from_amplitudes(std::vector<cplx> amps);

/// Basis index holding occupation pattern `occ` (bit j = spin-orbital qubit j)
/// under the mapping: identity for JW, prefix parities for parity.
std::uint64_t encode_occupation(std::uint64_t occ, int qubits, circuits::Mapping mapping);
/// Re-encodes a JW-ordered state (amplitude per occupation pattern).
StateVector encode_state(const StateVector& jw, circuits::Mapping mapping);

void apply_gate(StateVector& state, const circuits::Gate& gate);
void apply_gate_adjoint(StateVector& state, const circuits::Gate& gate);
/// Throws kSizeLimit above kMaxQubits.
void apply_circuit(StateVector& state, const circuits::MeasCircuit& circuit);
void apply_circuit_adjoint(StateVector& state, const circuits::MeasCircuit& circuit);
std::vector<double> probabilities(const StateVector& state);

/// Ladder operators of qubit j over `qubits` qubits.
pauli::PauliSum annihilation(int j, int qubits, circuits::Mapping mapping);
pauli::PauliSum creation(int j, int qubits, circuits::Mapping mapping);
/// A_pq (2 n_p on the diagonal) as a Pauli sum.
pauli::PauliSum operator_sum(const HoppingOp& op, int n, circuits::Mapping mapping);
/// Hermitian part of the term: the op itself, or (AB + BA)/2.
pauli::PauliSum operator_sum(const TermKey& term, int n, circuits::Mapping mapping);
pauli::DenseMatrix operator_matrix(const HoppingOp& op, int n, circuits::Mapping mapping);
pauli::DenseMatrix operator_matrix(const TermKey& term, int n, circuits::Mapping mapping);

cplx expectation(const StateVector& state, const pauli::PauliSum& op);

struct ExpectationReport {
  std::map<TermKey, double> values;             // every routed term
  std::map<HoppingOp, double> one_body;         // <A_pq>; <n_p> for number ops
  std::map<TermKey, double> two_body;           // Re <A B>
  double energy = 0.0;
  double constant = 0.0;
  std::array<double, 4> family_energy{};        // per clique family
  double std_error = 0.0;                       // sampled mode only
  std::uint64_t shots = 0;                      // 0 = exact
};

/// Exact outcome distributions per clique, decoded into every routed term.
/// When `model` is given, the energy and per-family split are assembled.
ExpectationReport estimate_all(const StateVector& state, const Schedule& schedule,
                               const EnergyModel* model = nullptr);

/// Same estimate from `shots` samples per clique; seed + clique id per clique.
ExpectationReport estimate_sampled(const StateVector& state, const Schedule& schedule,
                                   const EnergyModel* model, std::uint64_t shots,
                                   std::uint64_t seed);

/// Outcome -> count; multinomial draw from the exact distribution.
std::map<std::uint64_t, std::uint64_t> sample_shots(const StateVector& state,
                                                    const circuits::MeasCircuit& circuit,
                                                    std::uint64_t shots, std::uint64_t seed);

/// <psi|H|psi> straight from the Hamiltonian tensors, without a schedule.
double direct_energy(const StateVector& state, const Hamiltonian& ham,
                     circuits::Mapping mapping);

}  // namespace planesched::sim
