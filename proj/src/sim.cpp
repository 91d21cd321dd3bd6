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


#include "planesched/sim.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <random>
#include <string>

#include "planesched/error.hpp"
#include "planesched/parallel.hpp"

namespace planesched::sim {

using circuits::Gate;
using circuits::Mapping;
using circuits::MeasCircuit;
using pauli::PauliString;
using pauli::PauliSum;

namespace {

void check_size(int qubits) {
  if (qubits > kMaxQubits) {
    fail(ErrorCode::kSizeLimit, std::to_string(qubits) + " qubits exceed the dense limit of " +
                                    std::to_string(kMaxQubits));
  }
}

void apply_matrix(StateVector& state, const pauli::DenseMatrix& m, const std::vector<int>& qubits) {
  for (int q : qubits) {
    if (q < 0 || q >= state.qubits) fail(ErrorCode::kInvalidArgument, "gate qubit out of range");
  }
  const std::size_t k = qubits.size();
  const std::size_t d = std::size_t{1} << k;
  std::uint64_t mask = 0;
  for (int q : qubits) mask |= std::uint64_t{1} << q;
  std::vector<std::uint64_t> offset(d, 0);
  for (std::size_t local = 0; local < d; ++local)
    for (std::size_t b = 0; b < k; ++b)
      if ((local >> b) & 1U) offset[local] |= std::uint64_t{1} << qubits[b];

  std::vector<cplx> in(d), out(d);
  for (std::uint64_t base = 0; base < state.amps.size(); ++base) {
    if (base & mask) continue;
    for (std::size_t l = 0; l < d; ++l) in[l] = state.amps[base | offset[l]];
    for (std::size_t r = 0; r < d; ++r) {
      cplx acc{0, 0};
      for (std::size_t c = 0; c < d; ++c) acc += m.at(r, c) * in[c];
      out[r] = acc;
    }
    for (std::size_t l = 0; l < d; ++l) state.amps[base | offset[l]] = out[l];
  }
}

PauliSum single(char op, int q, cplx c = {1, 0}) { return {{c, PauliString::single(op, q)}}; }

/// Product of `values` over the op decodes for outcome b.
struct TermDecoder {
  std::vector<const circuits::DecodeEntry*> entries;
  int operator()(std::uint64_t b) const {
    int v = 1;
    for (const auto* e : entries) v *= e->value(b);
    return v;
  }
};

struct CliqueWork {
  std::vector<std::size_t> terms;  // indices into schedule.routing
};

std::vector<CliqueWork> group_terms(const Schedule& schedule) {
  std::vector<CliqueWork> work(schedule.cliques.size());
  for (std::size_t t = 0; t < schedule.routing.size(); ++t) {
    const int c = schedule.routing[t].clique;
    if (c < 0 || c >= static_cast<int>(schedule.cliques.size())) {
      fail(ErrorCode::kCoverageViolation,
           "term " + to_string(schedule.routing[t].term) + " is routed to no clique");
    }
    work[c].terms.push_back(t);
  }
  return work;
}

TermDecoder decoder_for(const MeasCircuit& circ, const TermKey& term) {
  TermDecoder dec;
  for (const auto& op : term.ops()) dec.entries.push_back(&circ.decode_for(op));
  return dec;
}

void assemble(ExpectationReport& report, const Schedule& schedule, const EnergyModel* model) {
  for (const auto& [key, value] : report.values) {
    if (key.b) {
      report.two_body[key] = value;
    } else {
      report.one_body[key.a] = value;
    }
  }
  if (!model) return;
  report.constant = model->constant;
  report.energy = model->constant;
  for (const auto& [key, coeff] : model->terms) {
    const auto it = report.values.find(key);
    if (it == report.values.end()) {
      fail(ErrorCode::kCoverageViolation, "energy term " + to_string(key) + " is not measured");
    }
    const double contribution = coeff * it->second;
    report.energy += contribution;
    const int c = schedule.route(key);
    report.family_energy[static_cast<int>(schedule.cliques[c].family)] += contribution;
  }
}

std::map<TermKey, double> coefficient_map(const EnergyModel* model) {
  std::map<TermKey, double> out;
  if (model) out.insert(model->terms.begin(), model->terms.end());
  return out;
}

}  // namespace

StateVector::StateVector(int q) : qubits(q) {
  if (q < 0 || q > 62) fail(ErrorCode::kInvalidArgument, "bad qubit count");
  check_size(q);
  amps.assign(std::size_t{1} << q, cplx{0, 0});
  amps[0] = 1.0;
}

double StateVector::norm() const {
  double s = 0.0;
  for (const auto& a : amps) s += std::norm(a);
  return std::sqrt(s);
}

StateVector random_state(int qubits, std::uint64_t seed) {
  StateVector st(qubits);
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  for (auto& a : st.amps) {
    const double re = gauss(rng);
    const double im = gauss(rng);
    a = {re, im};
  }
  const double nrm = st.norm();
  for (auto& a : st.amps) a /= nrm;
  return st;
}

StateVector basis_state(int qubits, std::uint64_t bits) {
  StateVector st(qubits);
  if (bits >= st.amps.size()) fail(ErrorCode::kInvalidArgument, "basis index out of range");
  st.amps[0] = 0.0;
  st.amps[bits] = 1.0;
  return st;
}

StateVector from_amplitudes(std::vector<cplx> amps) {
  const std::size_t size = amps.size();
  if (size < 2 || (size & (size - 1)) != 0) {
    fail(ErrorCode::kInvalidArgument, "amplitude count must be a power of two");
  }
  StateVector st;
  st.qubits = std::countr_zero(size);
  check_size(st.qubits);
  st.amps = std::move(amps);
  const double nrm = st.norm();
  if (nrm == 0.0) fail(ErrorCode::kInvalidArgument, "zero state vector");
  for (auto& a : st.amps) a /= nrm;
  return st;
}

std::uint64_t encode_occupation(std::uint64_t occ, int qubits, Mapping mapping) {
  if (mapping == Mapping::kJordanWigner) return occ;
  std::uint64_t out = 0;
  std::uint64_t parity = 0;
  for (int j = 0; j < qubits; ++j) {
    parity ^= (occ >> j) & 1U;
    out |= parity << j;
  }
  return out;
}

StateVector encode_state(const StateVector& jw, Mapping mapping) {
  StateVector out = jw;
  if (mapping == Mapping::kJordanWigner) return out;
  for (std::uint64_t occ = 0; occ < jw.amps.size(); ++occ) {
    out.amps[encode_occupation(occ, jw.qubits, mapping)] = jw.amps[occ];
  }
  return out;
}

void apply_gate(StateVector& state, const Gate& gate) {
  apply_matrix(state, circuits::gate_matrix(gate), gate.qubits);
}

void apply_gate_adjoint(StateVector& state, const Gate& gate) {
  apply_matrix(state, circuits::gate_matrix(gate).adjoint(), gate.qubits);
}

void apply_circuit(StateVector& state, const MeasCircuit& circuit) {
  check_size(state.qubits);
  for (const auto& g : circuit.gates) apply_gate(state, g);
}

void apply_circuit_adjoint(StateVector& state, const MeasCircuit& circuit) {
  check_size(state.qubits);
  for (auto it = circuit.gates.rbegin(); it != circuit.gates.rend(); ++it) {
    apply_gate_adjoint(state, *it);
  }
}

std::vector<double> probabilities(const StateVector& state) {
  std::vector<double> p(state.amps.size());
  for (std::size_t i = 0; i < p.size(); ++i) p[i] = std::norm(state.amps[i]);
  return p;
}

PauliSum annihilation(int j, int qubits, Mapping mapping) {
  if (j < 0 || j >= qubits) fail(ErrorCode::kInvalidArgument, "mode out of range");
  const cplx i{0, 1};
  PauliSum out;
  if (mapping == Mapping::kJordanWigner) {
    out = pauli::add(single('X', j, 0.5), single('Y', j, 0.5 * i));
    for (int k = 0; k < j; ++k) out = pauli::multiply(out, single('Z', k));
  } else {
    PauliSum lead = single('X', j, 0.5);
    if (j > 0) lead = pauli::multiply(single('Z', j - 1), lead);
    out = pauli::add(lead, single('Y', j, 0.5 * i));
    for (int k = j + 1; k < qubits; ++k) out = pauli::multiply(out, single('X', k));
  }
  return out;
}

PauliSum creation(int j, int qubits, Mapping mapping) {
  return pauli::adjoint(annihilation(j, qubits, mapping));
}

PauliSum operator_sum(const HoppingOp& op, int n, Mapping mapping) {
  const int qubits = 2 * n;
  const int jp = circuits::qubit_of(op.p, op.spin, n);
  const int jq = circuits::qubit_of(op.q, op.spin, n);
  const PauliSum hop = pauli::multiply(creation(jp, qubits, mapping), annihilation(jq, qubits, mapping));
  if (op.diagonal()) return pauli::scale(hop, 2.0);
  return pauli::add(hop, pauli::adjoint(hop));
}

PauliSum operator_sum(const TermKey& term, int n, Mapping mapping) {
  const PauliSum a = operator_sum(term.a, n, mapping);
  if (!term.b) return a;
  const PauliSum b = operator_sum(*term.b, n, mapping);
  return pauli::scale(pauli::add(pauli::multiply(a, b), pauli::multiply(b, a)), 0.5);
}

pauli::DenseMatrix operator_matrix(const HoppingOp& op, int n, Mapping mapping) {
  check_size(2 * n);
  return pauli::to_dense(operator_sum(op, n, mapping), 2 * n);
}

pauli::DenseMatrix operator_matrix(const TermKey& term, int n, Mapping mapping) {
  check_size(2 * n);
  return pauli::to_dense(operator_sum(term, n, mapping), 2 * n);
}

cplx expectation(const StateVector& state, const PauliSum& op) {
  std::vector<cplx> out(state.amps.size());
  pauli::apply(op, state.amps, out);
  cplx acc{0, 0};
  for (std::size_t i = 0; i < out.size(); ++i) acc += std::conj(state.amps[i]) * out[i];
  return acc;
}

ExpectationReport estimate_all(const StateVector& state, const Schedule& schedule,
                               const EnergyModel* model) {
  if (state.qubits != schedule.qubits()) {
    fail(ErrorCode::kInvalidArgument, "state and schedule disagree on the qubit count");
  }
  check_size(state.qubits);
  const auto work = group_terms(schedule);
  std::vector<double> values(schedule.routing.size(), 0.0);

  parallel_for(work.size(), [&](std::size_t c) {
    if (work[c].terms.empty()) return;
    const MeasCircuit& circ = schedule.circuits[c];
    StateVector rotated = state;
    apply_circuit(rotated, circ);
    const auto probs = probabilities(rotated);
    for (std::size_t t : work[c].terms) {
      const TermDecoder dec = decoder_for(circ, schedule.routing[t].term);
      double acc = 0.0;
      for (std::uint64_t b = 0; b < probs.size(); ++b) {
        if (probs[b] != 0.0) acc += probs[b] * dec(b);
      }
      values[t] = acc;
    }
  });

  ExpectationReport report;
  for (std::size_t t = 0; t < values.size(); ++t) report.values[schedule.routing[t].term] = values[t];
  assemble(report, schedule, model);
  return report;
}

std::map<std::uint64_t, std::uint64_t> sample_shots(const StateVector& state,
                                                    const MeasCircuit& circuit,
                                                    std::uint64_t shots, std::uint64_t seed) {
  if (shots == 0) fail(ErrorCode::kInvalidArgument, "shots must be at least 1");
  StateVector rotated = state;
  apply_circuit(rotated, circuit);
  const auto probs = probabilities(rotated);
  std::mt19937_64 rng(seed);
  std::discrete_distribution<std::uint64_t> dist(probs.begin(), probs.end());
  std::map<std::uint64_t, std::uint64_t> hist;
  for (std::uint64_t s = 0; s < shots; ++s) ++hist[dist(rng)];
  return hist;
}

ExpectationReport estimate_sampled(const StateVector& state, const Schedule& schedule,
                                   const EnergyModel* model, std::uint64_t shots,
                                   std::uint64_t seed) {
  if (shots == 0) fail(ErrorCode::kInvalidArgument, "shots must be at least 1");
  if (state.qubits != schedule.qubits()) {
    fail(ErrorCode::kInvalidArgument, "state and schedule disagree on the qubit count");
  }
  check_size(state.qubits);
  const auto work = group_terms(schedule);
  const auto coeffs = coefficient_map(model);
  std::vector<double> values(schedule.routing.size(), 0.0);
  std::vector<double> clique_variance(work.size(), 0.0);

  parallel_for(work.size(), [&](std::size_t c) {
    if (work[c].terms.empty()) return;
    const MeasCircuit& circ = schedule.circuits[c];
    const auto hist = sample_shots(state, circ, shots, seed + c);
    std::vector<TermDecoder> decoders;
    std::vector<double> weight;
    for (std::size_t t : work[c].terms) {
      decoders.push_back(decoder_for(circ, schedule.routing[t].term));
      const auto it = coeffs.find(schedule.routing[t].term);
      weight.push_back(it == coeffs.end() ? 0.0 : it->second);
    }
    std::vector<double> sums(decoders.size(), 0.0);
    double e_sum = 0.0;
    double e_sq = 0.0;
    for (const auto& [b, count] : hist) {
      double e = 0.0;
      for (std::size_t k = 0; k < decoders.size(); ++k) {
        const int v = decoders[k](b);
        sums[k] += static_cast<double>(count) * v;
        e += weight[k] * v;
      }
      e_sum += static_cast<double>(count) * e;
      e_sq += static_cast<double>(count) * e * e;
    }
    const double total = static_cast<double>(shots);
    for (std::size_t k = 0; k < decoders.size(); ++k) values[work[c].terms[k]] = sums[k] / total;
    const double mean = e_sum / total;
    const double var = shots > 1 ? std::max(0.0, (e_sq - total * mean * mean) / (total - 1)) : 0.0;
    clique_variance[c] = var / total;
  });

  ExpectationReport report;
  report.shots = shots;
  for (std::size_t t = 0; t < values.size(); ++t) report.values[schedule.routing[t].term] = values[t];
  assemble(report, schedule, model);
  double var = 0.0;
  for (double v : clique_variance) var += v;
  report.std_error = std::sqrt(var);
  return report;
}

double direct_energy(const StateVector& state, const Hamiltonian& ham, Mapping mapping) {
  const int n = ham.n_orbitals();
  const int qubits = 2 * n;
  if (state.qubits != qubits) {
    fail(ErrorCode::kInvalidArgument, "state and Hamiltonian disagree on the qubit count");
  }
  check_size(qubits);
  const Spin spins[] = {Spin::kUp, Spin::kDown};

  // phi[s][p][q] = a+_{p s} a_{q s} |psi>
  const std::size_t dim = state.amps.size();
  auto slot = [n](Spin s, int p, int q) {
    return (static_cast<std::size_t>(s) * n + p) * n + q;
  };
  std::vector<std::vector<cplx>> phi(2 * n * n, std::vector<cplx>(dim));
  parallel_for(phi.size(), [&](std::size_t k) {
    const Spin s = static_cast<Spin>(k / (n * n));
    const int p = static_cast<int>((k / n) % n);
    const int q = static_cast<int>(k % n);
    const PauliSum e = pauli::multiply(creation(circuits::qubit_of(p, s, n), qubits, mapping),
                                       annihilation(circuits::qubit_of(q, s, n), qubits, mapping));
    pauli::apply(e, state.amps, phi[k]);
  });
  auto dot = [dim](const std::vector<cplx>& a, const std::vector<cplx>& b) {
    cplx acc{0, 0};
    for (std::size_t i = 0; i < dim; ++i) acc += std::conj(a[i]) * b[i];
    return acc;
  };

  cplx energy = ham.e_nuc();
  for (Spin s : spins)
    for (int p = 0; p < n; ++p)
      for (int q = 0; q < n; ++q) {
        const double h = ham.h(s, p, q);
        if (h != 0.0) energy += h * dot(state.amps, phi[slot(s, p, q)]);
      }
  // <E_pq E_ru> = <E_qp psi | E_ru psi>
  for (Spin s : spins)
    for (Spin t : spins)
      for (int p = 0; p < n; ++p)
        for (int q = 0; q < n; ++q)
          for (int r = 0; r < n; ++r)
            for (int u = 0; u < n; ++u) {
              const double g = ham.g(s, t, p, q, r, u);
              if (g != 0.0) energy += 0.5 * g * dot(phi[slot(s, q, p)], phi[slot(t, r, u)]);
            }
  return energy.real();
}

}  // namespace planesched::sim
