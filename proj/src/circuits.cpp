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

#include "planesched/circuits.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "planesched/error.hpp"

namespace planesched::circuits {

using pauli::cplx;
using pauli::DenseMatrix;
using pauli::PauliString;
using pauli::PauliSum;

namespace {

constexpr double kTripwire = 1e-12;

PauliSum term(double c, const std::string& label) { return {{cplx{c, 0}, pauli::parse(label)}}; }

PauliSum sum(std::initializer_list<PauliSum> parts) {
  PauliSum out;
  for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return pauli::simplify(out);
}

/// Matrix of `g` acting on a register made of `support` (ascending qubits).
DenseMatrix embed(const DenseMatrix& g, const std::vector<int>& gate_qubits,
                  const std::vector<int>& support) {
  std::vector<int> slot;
  for (int q : gate_qubits) {
    const auto it = std::find(support.begin(), support.end(), q);
    slot.push_back(static_cast<int>(it - support.begin()));
  }
  DenseMatrix out(static_cast<int>(support.size()));
  for (std::size_t b = 0; b < out.dim(); ++b) {
    std::size_t local_in = 0;
    for (std::size_t k = 0; k < slot.size(); ++k) local_in |= ((b >> slot[k]) & 1U) << k;
    std::size_t rest = b;
    for (int s : slot) rest &= ~(std::size_t{1} << s);
    for (std::size_t local_out = 0; local_out < g.dim(); ++local_out) {
      const cplx a = g.at(local_out, local_in);
      if (a == cplx{0, 0}) continue;
      std::size_t target = rest;
      for (std::size_t k = 0; k < slot.size(); ++k) target |= ((local_out >> k) & 1U) << slot[k];
      out.at(target, b) += a;
    }
  }
  return out;
}

}  // namespace

const char* to_string(Mapping m) { return m == Mapping::kJordanWigner ? "jw" : "parity"; }

Mapping parse_mapping(const std::string& text) {
  if (text == "jw") return Mapping::kJordanWigner;
  if (text == "parity") return Mapping::kParity;
  fail(ErrorCode::kInvalidArgument, "unknown mapping '" + text + "' (expected jw or parity)");
}

const char* to_string(GateName g) {
  switch (g) {
    case GateName::kFswap2: return "FSWAP2";
    case GateName::kFswap3: return "FSWAP3";
    case GateName::kCnot: return "CNOT";
    case GateName::kH: return "H";
    case GateName::kCustom: return "CUSTOM";
  }
  return "?";
}

GateName parse_gate_name(const std::string& text) {
  for (GateName g : {GateName::kFswap2, GateName::kFswap3, GateName::kCnot, GateName::kH,
                     GateName::kCustom}) {
    if (text == to_string(g)) return g;
  }
  fail(ErrorCode::kParse, "unknown gate '" + text + "'");
}

bool operator==(const Gate& a, const Gate& b) {
  if (a.name != b.name || a.qubits != b.qubits) return false;
  if (a.matrix.has_value() != b.matrix.has_value()) return false;
  if (!a.matrix) return true;
  return a.matrix->qubits == b.matrix->qubits && a.matrix->data == b.matrix->data;
}

namespace {

// Local forms with qubit 0 first; see map_fswap for the qubit lists.
PauliSum fswap_jw() { return sum({term(0.5, "XX"), term(0.5, "YY"), term(0.5, "ZI"), term(0.5, "IZ")}); }
PauliSum fswap_parity() {
  return sum({term(0.5, "IXI"), term(-0.5, "ZXZ"), term(0.5, "ZZI"), term(0.5, "IZZ")});
}
PauliSum fswap_parity_edge() {
  return sum({term(0.5, "XI"), term(-0.5, "XZ"), term(0.5, "ZI"), term(0.5, "ZZ")});
}

}  // namespace

DenseMatrix gate_matrix(const Gate& g) {
  switch (g.name) {
    case GateName::kFswap2: return pauli::to_dense(fswap_jw(), 2);
    case GateName::kFswap3: return pauli::to_dense(fswap_parity(), 3);
    case GateName::kH: {
      DenseMatrix m(1);
      const double s = 1.0 / std::sqrt(2.0);
      m.at(0, 0) = s;
      m.at(0, 1) = s;
      m.at(1, 0) = s;
      m.at(1, 1) = -s;
      return m;
    }
    case GateName::kCnot: {
      DenseMatrix m(2);
      for (std::size_t b = 0; b < 4; ++b) {
        const std::size_t c = b & 1U;
        m.at(b ^ (c << 1), b) = 1.0;
      }
      return m;
    }
    case GateName::kCustom:
      if (!g.matrix) fail(ErrorCode::kInvalidArgument, "custom gate without a matrix");
      return *g.matrix;
  }
  fail(ErrorCode::kInternalConsistency, "gate_matrix: unreachable");
}

int DecodeEntry::value(std::uint64_t outcome) const {
  std::size_t idx = 0;
  for (std::size_t k = 0; k < qubits.size(); ++k) idx |= ((outcome >> qubits[k]) & 1U) << k;
  return table[idx];
}

const DecodeEntry& MeasCircuit::decode_for(const HoppingOp& op) const {
  for (const auto& d : decode) {
    if (d.op == op) return d;
  }
  fail(ErrorCode::kCoverageViolation, "circuit does not measure " + to_string(op));
}

Gate map_fswap(int l, Spin spin, Mapping mapping, int n) {
  if (l < 0 || l + 1 >= n) {
    fail(ErrorCode::kInvalidSwap, "fswap of modes " + std::to_string(l) + "," +
                                      std::to_string(l + 1) + " leaves the spin block");
  }
  const int j = qubit_of(l, spin, n);
  if (mapping == Mapping::kJordanWigner) return {GateName::kFswap2, {j, j + 1}, std::nullopt};
  if (j == 0) {
    return {GateName::kCustom, {0, 1}, pauli::to_dense(fswap_parity_edge(), 2)};
  }
  return {GateName::kFswap3, {j - 1, j, j + 1}, std::nullopt};
}

std::vector<Gate> diag_layer(int m_up, int m_down, Mapping mapping, int n) {
  if (2 * m_up > n || 2 * m_down > n || m_up < 0 || m_down < 0) {
    fail(ErrorCode::kInvalidArgument, "more sorted pairs than modes in a spin block");
  }
  std::vector<Gate> gates;
  for (const auto& [spin, m] : {std::pair{Spin::kUp, m_up}, std::pair{Spin::kDown, m_down}}) {
    for (int l = 0; l < m; ++l) {
      const int j = qubit_of(2 * l, spin, n);
      if (mapping == Mapping::kJordanWigner) {
        gates.push_back({GateName::kCnot, {j, j + 1}, std::nullopt});
      }
      gates.push_back({GateName::kH, {j}, std::nullopt});
    }
  }
  return gates;
}

int circuit_depth(const std::vector<Gate>& gates) {
  std::map<int, int> busy_until;
  int depth = 0;
  for (const auto& g : gates) {
    int layer = 0;
    for (int q : g.qubits) layer = std::max(layer, busy_until[q]);
    ++layer;
    for (int q : g.qubits) busy_until[q] = layer;
    depth = std::max(depth, layer);
  }
  return depth;
}

PauliSum sorted_hopping_local(int j, Mapping mapping, std::vector<int>& support) {
  if (mapping == Mapping::kJordanWigner) {
    support = {j, j + 1};
    return sum({term(0.5, "XX"), term(0.5, "YY")});
  }
  if (j == 0) {
    support = {0, 1};
    return sum({term(0.5, "XI"), term(-0.5, "XZ")});
  }
  support = {j - 1, j, j + 1};
  return sum({term(0.5, "IXI"), term(-0.5, "ZXZ")});
}

PauliSum number_local(int j, Mapping mapping, std::vector<int>& support) {
  if (mapping == Mapping::kJordanWigner || j == 0) {
    support = {j};
    return sum({term(0.5, "I"), term(-0.5, "Z")});
  }
  support = {j - 1, j};
  return sum({term(0.5, "II"), term(-0.5, "ZZ")});
}

MeasCircuit emit(const MeasurementClique& clique, Mapping mapping, int n) {
  MeasCircuit circuit;
  circuit.mapping = mapping;
  circuit.n_orbitals = n;

  const Spin spins[] = {Spin::kUp, Spin::kDown};
  std::array<std::vector<HoppingOp>, 2> by_spin;
  for (const auto& op : clique.ops) by_spin[static_cast<int>(op.spin)].push_back(op);
  std::array<std::vector<int>, 2> targets;
  std::array<int, 2> pairs{};
  for (Spin s : spins) {
    const int k = static_cast<int>(s);
    targets[k] = swapnet::position_vector(by_spin[k], n);
    circuit.networks[k] = swapnet::odd_even_sort(targets[k]);
    for (const auto& op : by_spin[k]) pairs[k] += op.diagonal() ? 0 : 1;
  }

  // Up and down networks act on disjoint modes; interleave them layer by layer.
  const int swap_depth = std::max(circuit.networks[0].depth(), circuit.networks[1].depth());
  for (int t = 0; t < swap_depth; ++t) {
    for (Spin s : spins) {
      const auto& layers = circuit.networks[static_cast<int>(s)].layers;
      if (t >= static_cast<int>(layers.size())) continue;
      for (int l : layers[t].swaps) circuit.gates.push_back(map_fswap(l, s, mapping, n));
    }
  }
  const std::vector<Gate> diag = diag_layer(pairs[0], pairs[1], mapping, n);
  circuit.gates.insert(circuit.gates.end(), diag.begin(), diag.end());
  circuit.depth = circuit_depth(circuit.gates);
  circuit.swap_depth = swap_depth;

  for (const auto& op : clique.ops) {
    const int k = static_cast<int>(op.spin);
    const auto& perm = circuit.networks[k].permutation;
    std::vector<int> support;
    PauliSum local;
    if (op.diagonal()) {
      if (perm[op.p] != targets[k][op.p]) {
        fail(ErrorCode::kInternalConsistency, "swap network misplaced " + to_string(op));
      }
      local = number_local(qubit_of(perm[op.p], op.spin, n), mapping, support);
    } else {
      const int first = perm[op.p];
      if (first % 2 != 0 || perm[op.q] != first + 1 || first != targets[k][op.p]) {
        fail(ErrorCode::kInternalConsistency, "swap network misplaced " + to_string(op));
      }
      local = sorted_hopping_local(qubit_of(first, op.spin, n), mapping, support);
    }

    DenseMatrix rotation = DenseMatrix::identity(static_cast<int>(support.size()));
    for (const auto& g : diag) {
      const auto inside = std::count_if(g.qubits.begin(), g.qubits.end(), [&](int q) {
        return std::find(support.begin(), support.end(), q) != support.end();
      });
      if (inside == 0) continue;
      if (inside != static_cast<std::ptrdiff_t>(g.qubits.size())) {
        fail(ErrorCode::kInternalConsistency,
             "diagonalising gate straddles the support of " + to_string(op));
      }
      rotation = embed(gate_matrix(g), g.qubits, support) * rotation;
    }
    const DenseMatrix observable =
        rotation * pauli::to_dense(local, static_cast<int>(support.size())) * rotation.adjoint();
    if (observable.off_diagonal_norm() > kTripwire) {
      fail(ErrorCode::kInternalConsistency,
           "conjugated " + to_string(op) + " is not diagonal in clique " +
               std::to_string(clique.id));
    }

    DecodeEntry entry{op, support, {}};
    for (std::size_t b = 0; b < observable.dim(); ++b) {
      const cplx v = observable.at(b, b);
      const double rounded = std::round(v.real());
      if (std::abs(v - cplx{rounded, 0}) > kTripwire) {
        fail(ErrorCode::kInternalConsistency, "non-integral eigenvalue for " + to_string(op));
      }
      entry.table.push_back(static_cast<int>(rounded));
    }
    circuit.decode.push_back(std::move(entry));
  }
  return circuit;
}

}  // namespace planesched::circuits
