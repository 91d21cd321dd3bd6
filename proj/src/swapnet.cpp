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

#include "planesched/swapnet.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>

#include "planesched/error.hpp"

namespace planesched::swapnet {

int SwapNetwork::swap_count() const noexcept {
  int total = 0;
  for (const auto& layer : layers) total += static_cast<int>(layer.swaps.size());
  return total;
}

std::vector<int> position_vector(const std::vector<HoppingOp>& ops, int n) {
  std::vector<int> pos(n, -1);
  if (ops.empty()) return pos;
  const Spin spin = ops.front().spin;

  int pairs = 0;
  for (const auto& op : ops) pairs += op.diagonal() ? 0 : 1;

  auto claim = [&](int mode, int slot, const HoppingOp& op) {
    if (op.spin != spin) fail(ErrorCode::kInvalidArgument, "position_vector: mixed spins");
    if (mode < 0 || mode >= n) {
      fail(ErrorCode::kInvalidArgument, "position_vector: " + to_string(op) + " out of range");
    }
    if (pos[mode] != -1) {
      fail(ErrorCode::kInvalidArgument,
           "position_vector: mode " + std::to_string(mode) + " used twice");
    }
    pos[mode] = slot;
  };

  int next_pair = 0;
  int next_number = 2 * pairs;
  for (const auto& op : ops) {
    if (op.diagonal()) {
      claim(op.p, next_number++, op);
    } else {
      claim(op.p, 2 * next_pair, op);
      claim(op.q, 2 * next_pair + 1, op);
      ++next_pair;
    }
  }
  return pos;
}

SwapNetwork odd_even_sort(const std::vector<int>& positions) {
  const int n = static_cast<int>(positions.size());
  auto key = [](int v) { return v < 0 ? std::numeric_limits<int>::max() : v; };

  std::vector<int> work = positions;
  std::vector<int> owner(n);  // owner[position] = original mode
  std::iota(owner.begin(), owner.end(), 0);

  SwapNetwork net;
  auto sorted = [&] {
    for (int i = 0; i + 1 < n; ++i) {
      if (key(work[i]) > key(work[i + 1])) return false;
    }
    return true;
  };

  LayerParity parity = LayerParity::kOdd;
  for (int phase = 0; phase < n && !sorted(); ++phase) {
    SwapLayer layer;
    layer.parity = parity;
    for (int l = parity == LayerParity::kOdd ? 1 : 0; l + 1 < n; l += 2) {
      if (key(work[l]) > key(work[l + 1])) {
        std::swap(work[l], work[l + 1]);
        std::swap(owner[l], owner[l + 1]);
        layer.swaps.push_back(l);
      }
    }
    if (!layer.swaps.empty()) net.layers.push_back(std::move(layer));
    parity = parity == LayerParity::kOdd ? LayerParity::kEven : LayerParity::kOdd;
  }
  if (!sorted()) fail(ErrorCode::kInternalConsistency, "odd-even sort exceeded n phases");

  net.permutation.assign(n, -1);
  for (int pos = 0; pos < n; ++pos) net.permutation[owner[pos]] = pos;
  return net;
}

std::vector<int> apply_network(const SwapNetwork& net, std::vector<int> values) {
  for (const auto& layer : net.layers) {
    for (int l : layer.swaps) {
      if (l < 0 || l + 1 >= static_cast<int>(values.size())) {
        fail(ErrorCode::kInvalidSwap, "swap outside the block");
      }
      std::swap(values[l], values[l + 1]);
    }
  }
  return values;
}

}  // namespace planesched::swapnet
