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


#include "planesched/verify.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "planesched/cover.hpp"
#include "planesched/error.hpp"
#include "planesched/graphcheck.hpp"
#include "planesched/parallel.hpp"
#include "planesched/sim.hpp"

namespace planesched {

using circuits::MeasCircuit;

namespace {

constexpr double kResidualTolerance = 1e-12;

std::string join_ops(const std::vector<HoppingOp>& ops) {
  std::string out;
  for (const auto& op : ops) out += (out.empty() ? "" : " ") + to_string(op);
  return out;
}

/// Post-sort layout: the network carries every requested mode to its slot.
bool layout_ok(const swapnet::SwapNetwork& net, const std::vector<int>& targets) {
  if (net.permutation.size() != targets.size()) return false;
  const std::vector<int> placed = swapnet::apply_network(net, targets);
  for (std::size_t m = 0; m < targets.size(); ++m) {
    if (targets[m] >= 0 && (net.permutation[m] != targets[m] || placed[targets[m]] != targets[m])) {
      return false;
    }
  }
  return true;
}

/// Checks shared by the construction and file verifiers: commutation, swap
/// layout, full conjugation. Violations are appended with the clique id.
void check_cliques(const Schedule& s, int full_check_qubits, VerifyReport& report,
                   int& commute_bad, int& layout_bad, int& depth_bad, double& worst_residual) {
  const int n = s.n_orbitals;
  std::vector<std::vector<std::string>> found(s.cliques.size());
  std::vector<double> residual(s.cliques.size(), 0.0);
  std::vector<std::array<int, 3>> bad(s.cliques.size(), {0, 0, 0});
  const bool full = s.qubits() <= full_check_qubits;

  parallel_for(s.cliques.size(), [&](std::size_t i) {
    const auto& c = s.cliques[i];
    const auto& circ = s.circuits[i];
    const std::string where = "clique " + std::to_string(c.id) + ": ";
    for (std::size_t a = 0; a < c.ops.size(); ++a) {
      if (c.ops[a].p < 0 || c.ops[a].q >= n) {
        found[i].push_back(where + to_string(c.ops[a]) + " is out of range");
        bad[i][0] = 1;
      }
      for (std::size_t b = a + 1; b < c.ops.size(); ++b) {
        if (!ops_commute(c.ops[a], c.ops[b])) {
          found[i].push_back(where + to_string(c.ops[a]) + " and " + to_string(c.ops[b]) +
                             " do not commute");
          bad[i][0] = 1;
        }
      }
    }
    if (bad[i][0]) return;
    for (Spin spin : {Spin::kUp, Spin::kDown}) {
      std::vector<HoppingOp> ops;
      for (const auto& op : c.ops)
        if (op.spin == spin) ops.push_back(op);
      const auto& net = circ.networks[static_cast<int>(spin)];
      try {
        if (!layout_ok(net, swapnet::position_vector(ops, n))) {
          found[i].push_back(where + to_string(spin) + " swap network leaves ops unsorted");
          bad[i][1] = 1;
        }
      } catch (const Error& e) {
        found[i].push_back(where + e.what());
        bad[i][1] = 1;
      }
      if (net.depth() > n) {
        found[i].push_back(where + to_string(spin) + " swap depth " + std::to_string(net.depth()) +
                           " exceeds " + std::to_string(n));
        bad[i][2] = 1;
      }
    }
    if (full) {
      try {
        residual[i] = max_conjugation_residual(circ);
      } catch (const Error& e) {
        residual[i] = INFINITY;
        found[i].push_back(where + e.what());
        return;
      }
      if (!(residual[i] <= kResidualTolerance)) {
        std::ostringstream os;
        os << where << "decode tables disagree with the circuit (residual " << residual[i] << ")";
        found[i].push_back(os.str());
      }
    }
  });

  for (std::size_t i = 0; i < s.cliques.size(); ++i) {
    commute_bad += bad[i][0];
    layout_bad += bad[i][1];
    depth_bad += bad[i][2];
    worst_residual = std::max(worst_residual, residual[i]);
    for (auto& v : found[i]) report.violations.push_back(std::move(v));
  }
}

void check_routing(const Schedule& s, VerifyReport& report) {
  const auto expected = classify_terms(s.n_orbitals);
  const std::set<TermKey> expected_set(expected.begin(), expected.end());
  int missing = 0;
  int wrong = 0;
  for (const auto& t : expected) {
    const int c = s.route(t);
    if (c < 0) {
      report.violations.push_back("term " + to_string(t) + ": not routed");
      ++missing;
      continue;
    }
    if (c >= static_cast<int>(s.cliques.size())) {
      report.violations.push_back("term " + to_string(t) + ": routed to missing clique " +
                                  std::to_string(c));
      ++wrong;
      continue;
    }
    const auto& ops = s.cliques[c].ops;
    for (const auto& op : t.ops()) {
      if (!std::binary_search(ops.begin(), ops.end(), op)) {
        report.violations.push_back("term " + to_string(t) + ": clique " + std::to_string(c) +
                                    " lacks " + to_string(op));
        ++wrong;
      }
    }
  }
  for (const auto& r : s.routing) {
    if (!expected_set.count(r.term)) {
      report.violations.push_back("term " + to_string(r.term) + ": not a Hamiltonian term");
      ++wrong;
    }
  }
  report.add("routing.coverage", missing == 0 && wrong == 0,
             std::to_string(expected.size()) + " terms, " + std::to_string(missing) +
                 " unrouted, " + std::to_string(wrong) + " misrouted");
}

}  // namespace

bool VerifyReport::ok() const {
  return violations.empty() &&
         std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

void VerifyReport::add(std::string name, bool passed, std::string detail) {
  checks.push_back({std::move(name), passed, std::move(detail)});
}

std::string VerifyReport::to_text() const {
  std::ostringstream os;
  for (const auto& c : checks) {
    os << (c.passed ? "PASS " : "FAIL ") << c.name;
    if (!c.detail.empty()) os << ": " << c.detail;
    os << '\n';
  }
  for (const auto& v : violations) os << "violation: " << v << '\n';
  os << "result: " << (ok() ? "pass" : "fail") << '\n';
  return os.str();
}

double max_conjugation_residual(const MeasCircuit& circuit) {
  const int n = circuit.n_orbitals;
  const int qubits = 2 * n;
  if (qubits > sim::kMaxQubits) fail(ErrorCode::kSizeLimit, "full conjugation check is too large");
  std::vector<pauli::PauliSum> ops;
  for (const auto& d : circuit.decode) {
    // number ops decode to n_p, not A_pp = 2 n_p
    const double f = d.op.diagonal() ? 0.5 : 1.0;
    ops.push_back(pauli::scale(sim::operator_sum(d.op, n, circuit.mapping), f));
  }

  double worst = 0.0;
  std::vector<pauli::cplx> w(std::size_t{1} << qubits);
  for (std::uint64_t b = 0; b < w.size(); ++b) {
    sim::StateVector v = sim::basis_state(qubits, b);
    sim::apply_circuit_adjoint(v, circuit);
    for (std::size_t k = 0; k < ops.size(); ++k) {
      pauli::apply(ops[k], v.amps, w);
      const double lambda = circuit.decode[k].value(b);
      for (std::size_t i = 0; i < w.size(); ++i) {
        worst = std::max(worst, std::abs(w[i] - lambda * v.amps[i]));
      }
    }
  }
  return worst;
}

VerifyReport verify_construction(int n, circuits::Mapping mapping, int full_check_qubits) {
  VerifyReport report;
  const gf::Prime pi = plane_order_for(n);

  const auto pair_cliques = cover::restrict_to(cover::build_cover(pi), n);
  const auto graph = graphcheck::build_graph(n);
  const auto cover_report = graphcheck::verify_cover(graph, pair_cliques);
  report.add("cover.cliques_complete", cover_report.not_cliques.empty(),
             std::to_string(cover_report.cliques) + " cliques, " +
                 std::to_string(cover_report.not_cliques.size()) + " with non-adjacent members");
  report.add("cover.edges_covered", cover_report.uncovered.empty(),
             std::to_string(cover_report.edges) + " edges, " +
                 std::to_string(cover_report.uncovered.size()) + " uncovered");
  for (const auto& v : cover_report.not_cliques) {
    std::ostringstream os;
    os << "pair clique " << v.clique << ": " << v.a << " and " << v.b << " " << v.what;
    report.violations.push_back(os.str());
  }
  for (const auto& v : cover_report.uncovered) {
    std::ostringstream os;
    os << "edge " << v.a << " - " << v.b << ": " << v.what;
    report.violations.push_back(os.str());
  }
  report.add("plane.no_three_collinear", cover::check_no_three_collinear(pi),
             "order " + std::to_string(pi.value()));
  report.add("plane.unique_tangent", cover::check_unique_tangent(pi),
             "order " + std::to_string(pi.value()));

  const std::int64_t lb = graphcheck::lower_bound(n);
  const std::int64_t same = pi.value() * pi.value();
  report.add("cover.lower_bound", same >= lb,
             "same-spin cliques " + std::to_string(same) + " >= lower bound " + std::to_string(lb));

  Schedule s;
  try {
    s = build_schedule(n, mapping);
    report.add("circuits.diagonalisation_tripwire", true,
               std::to_string(s.circuits.size()) + " circuits emitted");
  } catch (const Error& e) {
    report.add("circuits.diagonalisation_tripwire", false, e.what());
    return report;
  }
  const std::int64_t m = s.round_count;
  const std::int64_t expected = 1 + 2 * m + m * m + same;
  report.add("universe.clique_count", static_cast<std::int64_t>(s.cliques.size()) == expected,
             std::to_string(s.cliques.size()) + " cliques (formula 2n^2-2n+1 = " +
                 std::to_string(formula_clique_count(n)) + ")");

  check_routing(s, report);
  int commute_bad = 0, layout_bad = 0, depth_bad = 0;
  double residual = 0.0;
  check_cliques(s, full_check_qubits, report, commute_bad, layout_bad, depth_bad, residual);
  report.add("cliques.commuting", commute_bad == 0, std::to_string(commute_bad) + " bad");
  report.add("swapnet.sorted_layout", layout_bad == 0, std::to_string(layout_bad) + " bad");
  report.add("swapnet.depth_bound", depth_bad == 0, "depth <= " + std::to_string(n));
  if (s.qubits() <= full_check_qubits) {
    std::ostringstream os;
    os << "max residual " << residual;
    report.add("circuits.full_conjugation", residual <= kResidualTolerance, os.str());
  }
  return report;
}

VerifyReport verify_schedule(const Schedule& s, int full_check_qubits) {
  VerifyReport report;
  const int n = s.n_orbitals;
  const bool sized = s.circuits.size() == s.cliques.size();
  report.add("file.structure", sized && n >= 2,
             std::to_string(s.cliques.size()) + " cliques, " + std::to_string(s.circuits.size()) +
                 " circuits");
  if (!sized || n < 2) return report;
  const bool prime_ok = s.prime == plane_order_for(n).value();
  report.add("file.plane_order", prime_ok, "order " + std::to_string(s.prime));

  int id_bad = 0;
  for (std::size_t i = 0; i < s.cliques.size(); ++i) {
    if (s.cliques[i].id != static_cast<int>(i)) {
      report.violations.push_back("clique " + std::to_string(i) + ": id field is " +
                                  std::to_string(s.cliques[i].id));
      ++id_bad;
    }
  }
  report.add("file.clique_ids", id_bad == 0);

  check_routing(s, report);
  int commute_bad = 0, layout_bad = 0, depth_bad = 0;
  double residual = 0.0;
  check_cliques(s, full_check_qubits, report, commute_bad, layout_bad, depth_bad, residual);
  report.add("cliques.commuting", commute_bad == 0, std::to_string(commute_bad) + " bad");
  report.add("swapnet.sorted_layout", layout_bad == 0, std::to_string(layout_bad) + " bad");
  report.add("swapnet.depth_bound", depth_bad == 0, "depth <= " + std::to_string(n));
  if (s.qubits() <= full_check_qubits) {
    std::ostringstream os;
    os << "max residual " << residual;
    report.add("circuits.full_conjugation", residual <= kResidualTolerance, os.str());
  }

  // Compare against a fresh emission of each clique.
  std::vector<std::string> diffs(s.cliques.size());
  parallel_for(s.cliques.size(), [&](std::size_t i) {
    const auto& c = s.cliques[i];
    const std::string where = "clique " + std::to_string(c.id) + ": ";
    MeasCircuit fresh;
    try {
      fresh = circuits::emit(c, s.mapping, n);
    } catch (const Error& e) {
      diffs[i] = where + "cannot emit a circuit for " + join_ops(c.ops) + " (" + e.what() + ")";
      return;
    }
    const auto& got = s.circuits[i];
    if (got.gates.size() != fresh.gates.size()) {
      diffs[i] = where + "gate count " + std::to_string(got.gates.size()) + ", expected " +
                 std::to_string(fresh.gates.size());
      return;
    }
    for (std::size_t g = 0; g < got.gates.size(); ++g) {
      if (!(got.gates[g] == fresh.gates[g])) {
        diffs[i] = where + "gate " + std::to_string(g) + " differs from the emitted circuit";
        return;
      }
    }
    if (got.depth != fresh.depth || got.swap_depth != fresh.swap_depth) {
      diffs[i] = where + "recorded depth does not match the gate list";
      return;
    }
    if (got.decode.size() != fresh.decode.size()) {
      diffs[i] = where + "decode table count differs";
      return;
    }
    for (std::size_t d = 0; d < got.decode.size(); ++d) {
      const auto& a = got.decode[d];
      const auto& b = fresh.decode[d];
      if (!(a.op == b.op) || a.qubits != b.qubits || a.table != b.table) {
        diffs[i] = where + "decode table for " + to_string(b.op) + " differs";
        return;
      }
    }
  });
  int emit_bad = 0;
  for (auto& d : diffs) {
    if (d.empty()) continue;
    ++emit_bad;
    report.violations.push_back(std::move(d));
  }
  report.add("circuits.match_emission", emit_bad == 0, std::to_string(emit_bad) + " differ");
  return report;
}

}  // namespace planesched
