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

#include <utility>
#include <vector>

namespace planesched::roundrobin {

/// Disjoint index pairs (p, q), p < q, sorted ascending.
struct Round {
  std::vector<std::pair<int, int>> pairs;
};

/// Circle-method schedule over participants 0..n-1: n-1 rounds for even n,
/// n rounds for odd n (a phantom participant gives one player a bye).
/// Every pair p < q appears in exactly one round.
std::vector<Round> build_rounds(int n);

}  // namespace planesched::roundrobin
