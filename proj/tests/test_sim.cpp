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


#include <gtest/gtest.h>

#include <cmath>

#include "oracle/fermion_oracle.hpp"
#include "planesched/error.hpp"
#include "planesched/schedule.hpp"
#include "planesched/sim.hpp"

using namespace planesched;
using circuits::Mapping;
using pauli::cplx;

namespace {

double oracle_term(const TermKey& t, int n, const std::vector<cplx>& occ_amps) {
  // number ops are reported as n_p, hopping ops as A_pq
  auto op_matrix = [n](const HoppingOp& op) {
    auto m = oracle::hopping(op, n);
    if (op.diagonal())
      for (auto& v : m.a) v *= 0.5;
    return m;
  };
  const auto a = op_matrix(t.a);
  if (!t.b) return oracle::expectation(a, occ_amps).real();
  const auto b = op_matrix(*t.b);
  const auto sym = oracle::add(oracle::mul(a, b), oracle::mul(b, a));
  return 0.5 * oracle::expectation(sym, occ_amps).real();
}

double distance(const pauli::DenseMatrix& a, const oracle::Matrix& b) {
  double worst = 0;
  for (std::size_t r = 0; r < b.dim; ++r)
    for (std::size_t c = 0; c < b.dim; ++c) worst = std::max(worst, std::abs(a.at(r, c) - b(r, c)));
  return worst;
}

}  // namespace

TEST(Sim, OperatorMatricesMatchFermionAlgebra) {
  const int n = 2;
  for (Mapping m : {Mapping::kJordanWigner, Mapping::kParity})
    for (Spin s : {Spin::kUp, Spin::kDown})
      for (int p = 0; p < n; ++p)
        for (int q = p; q < n; ++q) {
          const HoppingOp op(p, q, s);
          auto expected = oracle::hopping(op, n);
          if (m == Mapping::kParity) expected = oracle::to_parity(expected, 2 * n);
          EXPECT_LT(distance(sim::operator_matrix(op, n, m), expected), 1e-14) << to_string(op);
        }
}

TEST(Sim, NumberOperatorIsHalfOfDiagonalHopping) {
  const auto a = sim::operator_matrix(HoppingOp(1, 1, Spin::kUp), 2, Mapping::kJordanWigner);
  for (std::size_t b = 0; b < a.dim(); ++b) {
    EXPECT_NEAR(a.at(b, b).real(), ((b >> 1) & 1U) ? 2.0 : 0.0, 1e-15);
  }
}

TEST(Sim, DisjointHoppingsCommute) {
  const auto x = sim::operator_matrix(HoppingOp(0, 1, Spin::kUp), 2, Mapping::kJordanWigner);
  const auto y = sim::operator_matrix(HoppingOp(0, 1, Spin::kDown), 2, Mapping::kJordanWigner);
  EXPECT_LT((x * y).distance(y * x), 1e-14);
  const auto z = sim::operator_matrix(HoppingOp(0, 1, Spin::kUp), 3, Mapping::kParity);
  const auto w = sim::operator_matrix(HoppingOp(1, 2, Spin::kUp), 3, Mapping::kParity);
  EXPECT_GT((z * w).distance(w * z), 0.1);
}

TEST(Sim, StateBasics) {
  const auto psi = sim::random_state(4, 9);
  EXPECT_NEAR(psi.norm(), 1.0, 1e-12);
  EXPECT_EQ(psi.amps, sim::random_state(4, 9).amps);
  EXPECT_THROW(sim::StateVector(16), Error);
  EXPECT_EQ(sim::encode_occupation(0b0110, 4, Mapping::kParity), 0b0010u);
  EXPECT_EQ(sim::encode_occupation(0b0110, 4, Mapping::kJordanWigner), 0b0110u);
}

TEST(Sim, BellLayerGivesDefiniteOutcome) {
  // (|01> - |10>)/sqrt2 is the -1 eigenstate of (XX+YY)/2
  sim::StateVector st(2);
  st.amps = {0, 1 / std::sqrt(2.0), -1 / std::sqrt(2.0), 0};
  MeasurementClique c;
  c.ops = {HoppingOp(0, 1, Spin::kUp)};
  const auto circ = circuits::emit(c, Mapping::kJordanWigner, 2);
  sim::StateVector full(4);
  full.amps.assign(16, 0);
  for (std::size_t b = 0; b < 4; ++b) full.amps[b] = st.amps[b];
  sim::apply_circuit(full, circ);
  const auto probs = sim::probabilities(full);
  std::size_t best = 0;
  for (std::size_t b = 0; b < probs.size(); ++b)
    if (probs[b] > probs[best]) best = b;
  EXPECT_NEAR(probs[best], 1.0, 1e-12);
  EXPECT_EQ(circ.decode[0].value(best), -1);
}

TEST(Sim, EstimatesMatchOracleTerms) {
  for (int n : {2, 3}) {
    for (Mapping m : {Mapping::kJordanWigner, Mapping::kParity}) {
      const Schedule s = build_schedule(n, m);
      for (std::uint64_t seed : {1u, 2u}) {
        const auto occ = sim::random_state(2 * n, seed);
        const auto psi = sim::encode_state(occ, m);
        const auto rep = sim::estimate_all(psi, s);
        ASSERT_EQ(rep.values.size(), s.routing.size());
        for (const auto& [term, value] : rep.values) {
          EXPECT_NEAR(value, oracle_term(term, n, occ.amps), 1e-10) << to_string(term);
        }
      }
    }
  }
}

TEST(Sim, MappingsAgree) {
  const int n = 3;
  const auto occ = sim::random_state(2 * n, 5);
  const auto jw = sim::estimate_all(occ, build_schedule(n, Mapping::kJordanWigner));
  const auto par = sim::estimate_all(sim::encode_state(occ, Mapping::kParity),
                                     build_schedule(n, Mapping::kParity));
  for (const auto& [term, value] : jw.values) EXPECT_NEAR(value, par.values.at(term), 1e-10);
}

TEST(Sim, BasisStateExpectations) {
  const int n = 3;
  const Schedule s = build_schedule(n, Mapping::kJordanWigner);
  const auto rep = sim::estimate_all(sim::basis_state(6, 0b001011), s);
  for (const auto& [op, v] : rep.one_body) {
    if (op.diagonal()) {
      const int bit = circuits::qubit_of(op.p, op.spin, n);
      EXPECT_NEAR(v, (0b001011 >> bit) & 1, 1e-12);
    } else {
      EXPECT_NEAR(v, 0.0, 1e-12);
    }
  }
}

TEST(Sim, EnergyMatchesDenseHamiltonian) {
  for (int n : {2, 3}) {
    const auto ham = random_hamiltonian(n, 40 + n);
    const auto model = energy_model(ham);
    const auto dense = oracle::hamiltonian(ham);
    for (Mapping m : {Mapping::kJordanWigner, Mapping::kParity}) {
      const Schedule s = build_schedule(n, m);
      for (std::uint64_t seed = 0; seed < 4; ++seed) {
        const auto occ = sim::random_state(2 * n, seed);
        const double expected = oracle::expectation(dense, occ.amps).real();
        const auto psi = sim::encode_state(occ, m);
        EXPECT_NEAR(sim::estimate_all(psi, s, &model).energy, expected, 1e-9);
        EXPECT_NEAR(sim::direct_energy(psi, ham, m), expected, 1e-9);
      }
    }
  }
}

TEST(Sim, FamilyContributionsSumToEnergy) {
  const auto ham = random_hamiltonian(3, 2);
  const auto model = energy_model(ham);
  const auto rep = sim::estimate_all(sim::random_state(6, 1), build_schedule(3, Mapping::kJordanWigner), &model);
  double sum = rep.constant;
  for (double f : rep.family_energy) sum += f;
  EXPECT_NEAR(sum, rep.energy, 1e-12);
}

TEST(Sim, MissingRouteRaisesCoverage) {
  Schedule s = build_schedule(2, Mapping::kJordanWigner);
  const auto model = energy_model(random_hamiltonian(2, 1));
  s.routing.erase(s.routing.begin());
  try {
    sim::estimate_all(sim::random_state(4, 1), s, &model);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kCoverageViolation);
  }
}

TEST(Sim, SamplingIsSeededAndUnbiased) {
  const Schedule s = build_schedule(2, Mapping::kJordanWigner);
  const auto psi = sim::random_state(4, 3);
  const auto& circ = s.circuits[5];
  EXPECT_THROW(sim::sample_shots(psi, circ, 0, 1), Error);
  const auto h1 = sim::sample_shots(psi, circ, 1000, 7);
  EXPECT_EQ(h1, sim::sample_shots(psi, circ, 1000, 7));

  const std::uint64_t shots = 200000;
  const auto hist = sim::sample_shots(psi, circ, shots, 11);
  auto rotated = psi;
  sim::apply_circuit(rotated, circ);
  const auto probs = sim::probabilities(rotated);
  for (std::size_t b = 0; b < probs.size(); ++b) {
    const double expected = probs[b] * shots;
    const double sigma = std::sqrt(shots * probs[b] * (1 - probs[b])) + 1e-9;
    const double got = hist.count(b) ? static_cast<double>(hist.at(b)) : 0.0;
    EXPECT_LE(std::abs(got - expected), 5 * sigma + 1) << b;
  }
}

TEST(Sim, SampledEnergyWithinErrorBars) {
  const int n = 3;
  const auto ham = random_hamiltonian(n, 8);
  const auto model = energy_model(ham);
  const Schedule s = build_schedule(n, Mapping::kParity);
  const auto psi = sim::random_state(2 * n, 4);
  const double exact = sim::estimate_all(psi, s, &model).energy;
  const auto a = sim::estimate_sampled(psi, s, &model, 20000, 99);
  const auto b = sim::estimate_sampled(psi, s, &model, 20000, 99);
  EXPECT_EQ(a.energy, b.energy);
  EXPECT_GT(a.std_error, 0.0);
  EXPECT_LE(std::abs(a.energy - exact), 5 * a.std_error);
}

TEST(Sim, SizeLimit) {
  const Schedule s = build_schedule(8, Mapping::kJordanWigner);
  sim::StateVector fake;
  fake.qubits = 16;
  try {
    sim::estimate_all(fake, s);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kSizeLimit);
  }
}
