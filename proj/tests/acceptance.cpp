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


// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "oracle/fermion_oracle.hpp"
#include "planesched/cover.hpp"
#include "planesched/gf.hpp"
#include "planesched/graphcheck.hpp"
#include "planesched/roundrobin.hpp"
#include "planesched/schedule.hpp"
#include "planesched/sim.hpp"
#include "planesched/swapnet.hpp"
#include "planesched/universe.hpp"

using namespace planesched;
using circuits::Mapping;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << " [" << what << "]";
    }
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

int failures = 0;

void run(int id, const char* name, const char* tolerance, const std::function<void(Outcome&)>& body) {
  Outcome out;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(out);
  } catch (const std::exception& e) {
    out.pass = false;
    out.detail << " [exception: " << e.what() << "]";
  }
  const double t = seconds_since(t0);
  if (!out.pass) ++failures;
  std::printf("AC%-2d %s  %-34s tol=%-10s time=%.3fs%s\n", id, out.pass ? "PASS" : "FAIL", name,
              tolerance, t, out.detail.str().c_str());
  std::fflush(stdout);
}

// AC1
void clique_counts(Outcome& out) {
  for (int n : {3, 4, 6, 8, 12, 14}) {
    const auto t0 = std::chrono::steady_clock::now();
    const Universe u = build_universe(n);
    const double t = seconds_since(t0);
    const auto c = u.family_counts();
    const int m = n - 1;
    const std::int64_t total = static_cast<std::int64_t>(u.cliques().size());
    std::ostringstream what;
    what << "N=" << n << ": " << c[0] << "/" << c[1] << "/" << c[2] << "/" << c[3] << " total "
         << total << ", expected 1/" << 2 * m << "/" << m * m << "/" << m * m << " total "
         << formula_clique_count(n);
    const bool ok = c[0] == 1 && c[1] == 2 * m && c[2] == m * m && c[3] == m * m &&
                    total == formula_clique_count(n);
    out.require(ok, what.str());
    out.require(t < 1.0, "N=" + std::to_string(n) + " took " + std::to_string(t) + "s");
  }
}

// AC2
void golden_anchor(Outcome& out) {
  const gf::Prime pi(5);
  const auto s = cover::place_s_points(pi);
  const plane::Point expected_s[] = {plane::Point::gamma(0, 0), plane::Point::gamma(1, 1),
                                     plane::Point::gamma(2, 4), plane::Point::gamma(3, 4),
                                     plane::Point::gamma(4, 1), plane::Point::alpha()};
  for (int k = 0; k < 6; ++k) out.require(s[k] == expected_s[k], "S(" + std::to_string(k) + ") misplaced");
  const auto cliques = cover::restrict_to(cover::build_cover(pi), 6);
  bool found = false;
  for (const auto& c : cliques) {
    if (!(c.anchor == plane::Point::gamma(4, 3))) continue;
    found = true;
    const std::vector<cover::Vertex> expected{{0, 2}, {1, 3}, {4, 5}};
    out.require(c.members == expected, "clique at P_gamma(4,3) differs");
  }
  out.require(found, "no clique anchored at P_gamma(4,3)");
}

// AC3
void cover_validity(Outcome& out) {
  for (int n : {3, 4, 6, 8}) {
    const auto t0 = std::chrono::steady_clock::now();
    const auto cliques = cover::restrict_to(cover::build_cover(plane_order_for(n)), n);
    const auto report = graphcheck::verify_cover(graphcheck::build_graph(n), cliques);
    out.require(report.ok(), "N=" + std::to_string(n) + " cover invalid");
    out.require(seconds_since(t0) < 10.0, "N=" + std::to_string(n) + " too slow");
  }
}

// AC4
void optimality(Outcome& out) {
  double prev_ratio = INFINITY;
  for (int n : {4, 6, 8, 12, 14}) {
    const std::int64_t lb = graphcheck::lower_bound(n);
    const std::int64_t m = n - 1;
    out.require(lb == m * (n - 3), "lower bound formula at N=" + std::to_string(n));
    const auto cliques = cover::restrict_to(cover::build_cover(plane_order_for(n)), n);
    const std::int64_t size = static_cast<std::int64_t>(cliques.size());
    out.require(size == m * m, "construction size at N=" + std::to_string(n));
    out.require(lb <= size, "lower bound exceeds construction at N=" + std::to_string(n));
    if (n <= 6) {
      const auto greedy = graphcheck::brute_force_cover(graphcheck::build_graph(n, false));
      const std::int64_t g = static_cast<std::int64_t>(greedy.size());
      out.require(lb <= g, "greedy cover below lower bound at N=" + std::to_string(n));
      out.detail << " N=" << n << ":lb=" << lb << ",greedy=" << g << ",ours=" << size;
    } else {
      out.detail << " N=" << n << ":lb=" << lb << ",ours=" << size;
    }
    const double ratio = static_cast<double>(size) / static_cast<double>(lb);
    out.require(ratio < prev_ratio && ratio > 1.0, "ratio not decreasing at N=" + std::to_string(n));
    prev_ratio = ratio;
  }
}

// AC5
void lemmas(Outcome& out) {
  int checked = 0;
  for (int p = 2; p <= 47; ++p) {
    if (!gf::is_prime(p)) continue;
    const gf::Prime pi(p);
    out.require(cover::check_no_three_collinear(pi), "no-three-collinear fails at " + std::to_string(p));
    out.require(cover::check_unique_tangent(pi), "unique-tangent fails at " + std::to_string(p));
    // independent scan of the incidence table
    const plane::Plane pl(pi);
    const auto s = cover::place_s_points(pi);
    std::vector<int> hits(pl.size(), 0);
    for (int l = 0; l < pl.size(); ++l)
      for (const auto& pt : s) hits[l] += pl.contains(pl.line_at(l), pt);
    for (int l = 0; l < pl.size(); ++l) out.require(hits[l] <= 2, "three collinear at " + std::to_string(p));
    for (const auto& pt : s) {
      int tangents = 0;
      for (int l = 0; l < pl.size(); ++l) tangents += hits[l] == 1 && pl.contains(pl.line_at(l), pt);
      out.require(tangents == 1, "tangent count at " + std::to_string(p));
    }
    ++checked;
  }
  out.detail << " primes=" << checked;
}

// AC6
void round_robin(Outcome& out) {
  for (int n = 2; n <= 16; ++n) {
    const auto rounds = roundrobin::build_rounds(n);
    out.require(static_cast<int>(rounds.size()) == (n % 2 == 0 ? n - 1 : n),
                "round count at n=" + std::to_string(n));
    std::set<std::pair<int, int>> seen;
    bool disjoint = true;
    for (const auto& r : rounds) {
      std::set<int> used;
      for (const auto& pr : r.pairs) {
        disjoint &= used.insert(pr.first).second && used.insert(pr.second).second;
        disjoint &= seen.insert(pr).second;
      }
    }
    out.require(disjoint, "pair repeated at n=" + std::to_string(n));
    out.require(static_cast<int>(seen.size()) == n * (n - 1) / 2, "pairs missing at n=" + std::to_string(n));
  }
}

// AC7
void swap_bound(Outcome& out) {
  int networks = 0;
  for (int n : {3, 4, 6, 8}) {
    const Universe u = build_universe(n);
    for (const auto& c : u.cliques()) {
      for (Spin s : {Spin::kUp, Spin::kDown}) {
        std::vector<HoppingOp> ops;
        for (const auto& op : c.ops)
          if (op.spin == s) ops.push_back(op);
        const auto net = swapnet::odd_even_sort(swapnet::position_vector(ops, n));
        ++networks;
        const std::string where = "N=" + std::to_string(n) + " clique " + std::to_string(c.id);
        out.require(net.depth() <= n, where + " depth " + std::to_string(net.depth()));
        // replay the swaps on mode labels
        std::vector<int> at(n);
        for (int m = 0; m < n; ++m) at[m] = m;
        for (const auto& layer : net.layers)
          for (int l : layer.swaps) std::swap(at[l], at[l + 1]);
        int slot = 0;
        for (const auto& op : ops) {
          if (op.diagonal()) continue;
          out.require(at[slot] == op.p && at[slot + 1] == op.q, where + " pair not adjacent");
          slot += 2;
        }
        for (const auto& op : ops) {
          if (!op.diagonal()) continue;
          out.require(at[slot] == op.p, where + " number op misplaced");
          ++slot;
        }
        for (int m = 0; m < n; ++m) out.require(net.permutation[at[m]] == m, where + " permutation");
      }
    }
  }
  out.detail << " networks=" << networks;
}

// AC8
void diagonalisation(Outcome& out) {
  double worst = 0.0;
  int ops = 0;
  for (int n : {2, 3}) {
    for (Mapping m : {Mapping::kJordanWigner, Mapping::kParity}) {
      const Schedule s = build_schedule(n, m);
      const int q = 2 * n;
      const std::size_t dim = std::size_t{1} << q;
      for (std::size_t i = 0; i < s.cliques.size(); ++i) {
        // dense U from its action on basis states
        pauli::DenseMatrix u(q);
        for (std::size_t b = 0; b < dim; ++b) {
          auto v = sim::basis_state(q, b);
          sim::apply_circuit(v, s.circuits[i]);
          for (std::size_t r = 0; r < dim; ++r) u.at(r, b) = v.amps[r];
        }
        for (const auto& op : s.cliques[i].ops) {
          const auto o = sim::operator_matrix(op, n, m);
          const auto d = u * o * u.adjoint();
          worst = std::max(worst, d.off_diagonal_norm());
          ++ops;
        }
      }
    }
  }
  out.require(worst <= 1e-12, "off-diagonal " + std::to_string(worst));
  out.detail << " ops=" << ops << " max_offdiag=" << worst;
}

// AC9
void energies(Outcome& out) {
  double worst = 0.0;
  int cases = 0;
  for (int n : {2, 3}) {
    for (Mapping m : {Mapping::kJordanWigner, Mapping::kParity}) {
      const Schedule s = build_schedule(n, m);
      for (std::uint64_t hs = 0; hs < 5; ++hs) {
        const auto ham = random_hamiltonian(n, 1000 + hs);
        const auto model = energy_model(ham);
        const auto dense = oracle::hamiltonian(ham);
        for (std::uint64_t ss = 0; ss < 20; ++ss) {
          const auto occ = sim::random_state(2 * n, 5000 + ss);
          const double expected = oracle::expectation(dense, occ.amps).real();
          const double got = sim::estimate_all(sim::encode_state(occ, m), s, &model).energy;
          worst = std::max(worst, std::abs(got - expected));
          ++cases;
        }
      }
    }
  }
  out.require(worst <= 1e-9, "energy error " + std::to_string(worst));
  out.detail << " cases=" << cases << " max_err=" << worst;
}

// AC10
void gate_scaling(Outcome& out) {
  for (int n : {3, 4, 6, 8}) {
    const auto st = compute_stats(build_schedule(n, Mapping::kJordanWigner));
    out.require(st.max_depth <= 2 * n + 6, "depth " + std::to_string(st.max_depth) + " at N=" + std::to_string(n));
    out.require(st.max_gates <= 3 * n * n, "gates " + std::to_string(st.max_gates) + " at N=" + std::to_string(n));
    out.detail << " N=" << n << ":depth=" << st.max_depth << "/" << 2 * n + 6 << ",gates=" << st.max_gates
               << "/" << 3 * n * n;
  }
}

}  // namespace

int main() {
  const auto t0 = std::chrono::steady_clock::now();
  run(1, "clique-count reproduction", "exact", clique_counts);
  run(2, "golden anchor N=6", "exact", golden_anchor);
  run(3, "edge clique cover validity", "exact", cover_validity);
  run(4, "optimality sandwich", "exact", optimality);
  run(5, "plane lemmas, primes <= 47", "exact", lemmas);
  run(6, "round-robin completeness", "exact", round_robin);
  run(7, "swap-network bound and layout", "exact", swap_bound);
  run(8, "diagonalisation tripwire", "1e-12", diagonalisation);
  run(9, "end-to-end energy", "1e-9", energies);
  run(10, "gate-count scaling (JW)", "2N+6, 3N^2", gate_scaling);
  const double total = seconds_since(t0);
  std::printf("acceptance: %d/10 passed in %.2fs\n", 10 - failures, total);
  return failures == 0 ? 0 : 1;
}
