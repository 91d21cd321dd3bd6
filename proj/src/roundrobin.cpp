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

#include "planesched/roundrobin.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "planesched/error.hpp"

namespace planesched::roundrobin {

std::vector<Round> build_rounds(int n) {
  if (n < 2) fail(ErrorCode::kInvalidSize, "round robin needs n >= 2, got " + std::to_string(n));

  const int seats = n + (n % 2);  // phantom seat `n` when n is odd
  std::vector<int> ring(seats);
  std::iota(ring.begin(), ring.end(), 0);

  std::vector<Round> rounds;
  rounds.reserve(seats - 1);
  for (int r = 0; r < seats - 1; ++r) {
    Round round;
    for (int i = 0; i < seats / 2; ++i) {
      const int a = ring[i];
      const int b = ring[seats - 1 - i];
      if (a >= n || b >= n) continue;  // bye
      round.pairs.emplace_back(std::min(a, b), std::max(a, b));
    }
    std::sort(round.pairs.begin(), round.pairs.end());
    rounds.push_back(std::move(round));
    // Seat 0 stays put; everyone else moves one place clockwise.
    std::rotate(ring.begin() + 1, ring.end() - 1, ring.end());
  }
  return rounds;
}

}  // namespace planesched::roundrobin
