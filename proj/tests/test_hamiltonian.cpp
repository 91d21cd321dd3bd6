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

#include <set>

#include "planesched/error.hpp"
#include "planesched/hamiltonian.hpp"

using namespace planesched;

TEST(Hamiltonian, RandomIsFullySymmetric) {
  const Hamiltonian h = random_hamiltonian(3, 11);
  EXPECT_NO_THROW(h.validate());
  const Spin spins[] = {Spin::kUp, Spin::kDown};
  for (Spin s : spins)
    for (Spin t : spins)
      for (int p = 0; p < 3; ++p)
        for (int q = 0; q < 3; ++q)
          for (int r = 0; r < 3; ++r)
            for (int u = 0; u < 3; ++u) {
              const double v = h.g(s, t, p, q, r, u);
              EXPECT_EQ(v, h.g(s, t, q, p, r, u));
              EXPECT_EQ(v, h.g(s, t, p, q, u, r));
              EXPECT_EQ(v, h.g(t, s, r, u, p, q));
            }
}

TEST(Hamiltonian, RandomIsSeedDeterministic) {
  EXPECT_EQ(random_hamiltonian(2, 5).g_data(), random_hamiltonian(2, 5).g_data());
  EXPECT_NE(random_hamiltonian(2, 5).g_data(), random_hamiltonian(2, 6).g_data());
}

TEST(Hamiltonian, JsonRoundTrip) {
  const Hamiltonian h = random_hamiltonian(2, 3);
  const Hamiltonian back = parse_hamiltonian(hamiltonian_to_json(h));
  EXPECT_EQ(back.n_orbitals(), 2);
  EXPECT_EQ(back.e_nuc(), h.e_nuc());
  EXPECT_EQ(back.h_data(), h.h_data());
  EXPECT_EQ(back.g_data(), h.g_data());
}

TEST(Hamiltonian, AsymmetricInputRejected) {
  Hamiltonian h(2);
  h.h(Spin::kUp, 0, 1) = 1.0;
  try {
    h.validate();
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kSymmetryViolation);
  }
}

TEST(Hamiltonian, ParseErrors) {
  EXPECT_THROW(parse_hamiltonian("{"), Error);
  EXPECT_THROW(parse_hamiltonian(R"({"n_orbitals": 1, "e_nuc": 0, "h": [0, 0]})"), Error);
  try {
    load_hamiltonian("/nonexistent/h.json");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kIo);
  }
}

TEST(Hamiltonian, ModelUsesOnlyMeasuredTerms) {
  for (int n : {2, 3, 4}) {
    const auto terms = classify_terms(n);
    const std::set<TermKey> known(terms.begin(), terms.end());
    const EnergyModel m = energy_model(random_hamiltonian(n, 1));
    for (const auto& [key, c] : m.terms) EXPECT_TRUE(known.count(key)) << to_string(key);
  }
}

TEST(Hamiltonian, ProductReductions) {
  // A_pq^2 = n_p + n_q - 2 n_p n_q
  const auto sq = expand_product(Spin::kUp, 0, 1, Spin::kUp, 1, 0);
  ASSERT_EQ(sq.size(), 3u);
  // A_pp A_rr = 4 n_p n_r
  const auto nn = expand_product(Spin::kUp, 0, 0, Spin::kUp, 2, 2);
  ASSERT_EQ(nn.size(), 1u);
  EXPECT_EQ(nn[0].second, 4.0);
  // Re <A_pq n_p> = <A_pq>/2, with A_pp = 2 n_p
  const auto an = expand_product(Spin::kUp, 0, 1, Spin::kUp, 0, 0);
  ASSERT_EQ(an.size(), 1u);
  EXPECT_EQ(an[0].first, TermKey::one_body({0, 1, Spin::kUp}));
  EXPECT_EQ(an[0].second, 1.0);
  EXPECT_EQ(expand_single(Spin::kDown, 2, 2)[0].second, 2.0);
}
