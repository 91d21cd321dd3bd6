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

#include <string>
#include <vector>

#include "planesched/circuits.hpp"
#include "planesched/schedule.hpp"

namespace planesched {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerifyReport {
  std::vector<CheckResult> checks;
  std::vector<std::string> violations;  // located, e.g. "clique 7: ..."

  bool ok() const;
  void add(std::string name, bool passed, std::string detail = {});
  std::string to_text() const;
};

/// Largest |O v - d(b) v| over basis states b with v = U^dagger |b>, for every
/// decoded op O of the circuit. Zero means the decode tables are exact.
double max_conjugation_residual(const circuits::MeasCircuit& circuit);

/// Rebuilds the construction for n orbitals and checks the cover, the plane
/// lemmas, routing, commutation, swap networks and the diagonalisation
/// tripwires. Full-register conjugation runs when 2n <= full_check_qubits.
VerifyReport verify_construction(int n, circuits::Mapping mapping, int full_check_qubits = 8);

/// Checks a schedule read from disk against its own claims and against a
/// fresh emission.
VerifyReport verify_schedule(const Schedule& schedule, int full_check_qubits = 8);

}  // namespace planesched
