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
#include <string>
#include <vector>

#include "planesched/circuits.hpp"
#include "planesched/universe.hpp"

namespace planesched {

/// Term and the clique id that measures it.
struct RoutedTerm {
  TermKey term;
  int clique = -1;
};

/// Everything needed to run the measurement campaign for one orbital count:
/// cliques, one circuit per clique, and the term routing table.
struct Schedule {
  int n_orbitals = 0;
  circuits::Mapping mapping = circuits::Mapping::kJordanWigner;
  int prime = 0;
  int round_count = 0;
  std::vector<MeasurementClique> cliques;
  std::vector<circuits::MeasCircuit> circuits;  // circuits[i] measures cliques[i]
  std::vector<RoutedTerm> routing;              // sorted by term

  int qubits() const noexcept { return 2 * n_orbitals; }
  /// Clique id measuring `term`, -1 if the routing table does not list it.
  int route(const TermKey& term) const;
};

/// Builds the universe for n orbitals and emits every circuit (in parallel).
Schedule build_schedule(int n, circuits::Mapping mapping);

/// Deterministic JSON text; byte-identical for equal (n, mapping).
std::string schedule_to_json(const Schedule& schedule);
/// Structural parse; content is checked by verify_schedule. Throws kParse.
Schedule parse_schedule(const std::string& json_text);
void write_schedule(const Schedule& schedule, const std::string& path);
Schedule load_schedule(const std::string& path);

struct ScheduleStats {
  int n_orbitals = 0;
  std::string mapping;
  int prime = 0;
  int qubits = 0;
  std::array<int, 4> family_counts{};  // part, one_body, diff_spin, same_spin
  int total = 0;
  std::int64_t formula = 0;      // 2n^2 - 2n + 1
  std::int64_t lower_bound = 0;  // (n-1)(n-3)
  int degenerate = 0;
  int terms = 0;
  int max_depth = 0;
  int max_swap_depth = 0;
  int max_gates = 0;
  std::int64_t total_gates = 0;
  std::map<int, int> depth_histogram;           // depth -> cliques
  std::map<std::string, std::int64_t> gate_counts;  // gate name -> count
};

ScheduleStats compute_stats(const Schedule& schedule);
/// Stable "key: value" lines.
std::string stats_text(const ScheduleStats& stats);

}  // namespace planesched
