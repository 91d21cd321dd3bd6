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

#include <cstdint>
#include <vector>

#include "planesched/universe.hpp"

namespace planesched::swapnet {

enum class LayerParity : std::uint8_t { kOdd, kEven };

/// Parallel nearest-neighbour swaps inside one spin block. Each entry l
/// exchanges modes l and l+1; entries are disjoint and ascending.
struct SwapLayer {
  std::vector<int> swaps;
  LayerParity parity = LayerParity::kOdd;
};

struct SwapNetwork {
  std::vector<SwapLayer> layers;
  /// permutation[mode] = position the mode occupies after all layers.
  std::vector<int> permutation;

  int depth() const noexcept { return static_cast<int>(layers.size()); }
  int swap_count() const noexcept;
};

/// Target slot of every mode of one spin block, -1 for modes the ops do not
/// touch. The m-th hopping op (p, q) targets slots 2m and 2m+1; number ops
/// follow, one slot each, after all hopping slots.
std::vector<int> position_vector(const std::vector<HoppingOp>& ops, int n);

/// Odd-even transposition sort of a position vector, starting with the odd
/// pairs (1,2), (3,4), ... and alternating with the even pairs (0,1), ...
/// -1 sorts after every slot. Empty phases are not recorded.
SwapNetwork odd_even_sort(const std::vector<int>& positions);

/// Applies the recorded transpositions to `values` (for checking).
std::vector<int> apply_network(const SwapNetwork& net, std::vector<int> values);

}  // namespace planesched::swapnet
