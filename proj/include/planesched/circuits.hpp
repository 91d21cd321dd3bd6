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
#include <optional>
#include <string>
#include <vector>

#include "planesched/pauli.hpp"
#include "planesched/swapnet.hpp"
#include "planesched/universe.hpp"

namespace planesched::circuits {

enum class Mapping : std::uint8_t { kJordanWigner, kParity };

const char* to_string(Mapping m);  // "jw" / "parity"
/// Accepts "jw" and "parity"; anything else is kInvalidArgument.
Mapping parse_mapping(const std::string& text);

/// Qubit of spin-orbital (p, spin) in the up-then-down layout.
constexpr int qubit_of(int p, Spin spin, int n) { return spin == Spin::kUp ? p : n + p; }

enum class GateName : std::uint8_t { kFswap2, kFswap3, kCnot, kH, kCustom };

const char* to_string(GateName g);
GateName parse_gate_name(const std::string& text);

/// Gate on an ordered qubit list. Local matrix index bit k refers to
/// qubits[k]; CNOT lists (control, target). Custom gates carry their matrix.
struct Gate {
  GateName name = GateName::kH;
  std::vector<int> qubits;
  std::optional<pauli::DenseMatrix> matrix;

  friend bool operator==(const Gate& a, const Gate& b);
};

/// Explicit unitary of a gate in its local qubit order.
pauli::DenseMatrix gate_matrix(const Gate& g);

/// Decoding rule for one clique op: the eigenvalue seen for each outcome on
/// the op's support qubits. Hopping ops decode to -1/0/+1, number ops to 0/1.
struct DecodeEntry {
  HoppingOp op;
  std::vector<int> qubits;  // ascending
  std::vector<int> table;   // indexed by sum_k bit(qubits[k]) << k

  int value(std::uint64_t outcome) const;
};

struct MeasCircuit {
  Mapping mapping = Mapping::kJordanWigner;
  int n_orbitals = 0;
  std::vector<Gate> gates;
  int depth = 0;       // parallel layers over all gates
  int swap_depth = 0;  // deepest per-spin swap network
  std::array<swapnet::SwapNetwork, 2> networks;  // [up, down]
  std::vector<DecodeEntry> decode;                // one per clique op, clique order

  const DecodeEntry& decode_for(const HoppingOp& op) const;
};

/// Fermionic swap of modes l and l+1 of one spin block as a local gate:
/// two qubits under JW, three under parity (two at global qubit 0).
Gate map_fswap(int l, Spin spin, Mapping mapping, int n);

/// Rotation taking each sorted pair (j, j+1) to a diagonal observable: a Bell
/// rotation CNOT(j -> j+1), H(j) under JW, and H(j) under parity. Pairs start
/// at the block base and run over 2*m slots.
std::vector<Gate> diag_layer(int m_up, int m_down, Mapping mapping, int n);

/// Layer count when gates are packed as early as their qubits allow.
int circuit_depth(const std::vector<Gate>& gates);

/// Swap networks followed by the diagonalisation layer, with decode tables
/// from exact local conjugation. Throws kInternalConsistency if a conjugated
/// op is not diagonal.
MeasCircuit emit(const MeasurementClique& clique, Mapping mapping, int n);

/// Local Pauli form of a hopping op on sorted slots (j, j+1), and of the
/// number operator on mode j, over the listed support qubits.
pauli::PauliSum sorted_hopping_local(int j, Mapping mapping, std::vector<int>& support);
pauli::PauliSum number_local(int j, Mapping mapping, std::vector<int>& support);

}  // namespace planesched::circuits
