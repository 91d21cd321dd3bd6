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

#include <algorithm>
#include <numeric>
#include <random>

#include "planesched/error.hpp"
#include "planesched/swapnet.hpp"
#include "planesched/universe.hpp"

using namespace planesched;
using swapnet::LayerParity;

namespace {

void expect_valid(const swapnet::SwapNetwork& net, const std::vector<int>& pos) {
  const int n = static_cast<int>(pos.size());
  EXPECT_LE(net.depth(), n);
  for (const auto& layer : net.layers) {
    EXPECT_FALSE(layer.swaps.empty());
    for (std::size_t k = 0; k < layer.swaps.size(); ++k) {
      const int l = layer.swaps[k];
      EXPECT_EQ(l % 2, layer.parity == LayerParity::kOdd ? 1 : 0);
      if (k > 0) EXPECT_GT(l, layer.swaps[k - 1] + 1);
    }
  }
  const auto placed = swapnet::apply_network(net, pos);
  int used = 0;
  for (int v : pos) used += v >= 0;
  for (int slot = 0; slot < used; ++slot) EXPECT_EQ(placed[slot], slot);
  for (int slot = used; slot < n; ++slot) EXPECT_EQ(placed[slot], -1);
  for (int m = 0; m < n; ++m)
    if (pos[m] >= 0) EXPECT_EQ(net.permutation[m], pos[m]);
}

}  // namespace

TEST(SwapNet, PositionVectorLayout) {
  const std::vector<HoppingOp> ops{{0, 2, Spin::kUp}, {1, 3, Spin::kUp}, {4, 5, Spin::kUp}};
  EXPECT_EQ(swapnet::position_vector(ops, 6), (std::vector<int>{0, 2, 1, 3, 4, 5}));
  const std::vector<HoppingOp> mixed{{1, 3, Spin::kUp}, {0, 0, Spin::kUp}};
  EXPECT_EQ(swapnet::position_vector(mixed, 5), (std::vector<int>{2, 0, -1, 1, -1}));
  EXPECT_THROW(swapnet::position_vector({{0, 1, Spin::kUp}, {1, 2, Spin::kUp}}, 4), Error);
  EXPECT_THROW(swapnet::position_vector({{0, 1, Spin::kUp}, {2, 3, Spin::kDown}}, 4), Error);
}

TEST(SwapNet, GoldenCliqueSorts) {
  const std::vector<int> pos{0, 2, 1, 3, 4, 5};
  const auto net = swapnet::odd_even_sort(pos);
  ASSERT_EQ(net.depth(), 1);
  EXPECT_EQ(net.layers[0].swaps, std::vector<int>{1});
  EXPECT_EQ(net.layers[0].parity, LayerParity::kOdd);
  expect_valid(net, pos);
}

TEST(SwapNet, AlreadySortedIsEmpty) {
  const auto net = swapnet::odd_even_sort({0, 1, -1, -1});
  EXPECT_EQ(net.depth(), 0);
  EXPECT_EQ(net.swap_count(), 0);
}

TEST(SwapNet, RandomTargetsWithinDepthBound) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 15);
    std::vector<int> modes(n);
    std::iota(modes.begin(), modes.end(), 0);
    std::shuffle(modes.begin(), modes.end(), rng);
    const int used = static_cast<int>(rng() % (n + 1));
    std::vector<int> pos(n, -1);
    for (int k = 0; k < used; ++k) pos[modes[k]] = k;
    expect_valid(swapnet::odd_even_sort(pos), pos);
  }
}

TEST(SwapNet, ReversalNeedsFullDepth) {
  for (int n = 2; n <= 12; ++n) {
    std::vector<int> pos(n);
    for (int m = 0; m < n; ++m) pos[m] = n - 1 - m;
    const auto net = swapnet::odd_even_sort(pos);
    expect_valid(net, pos);
    EXPECT_EQ(net.swap_count(), n * (n - 1) / 2);
  }
}

TEST(SwapNet, AllUniverseCliquesWithinBound) {
  for (int n : {3, 4, 6, 8}) {
    const Universe u = build_universe(n);
    for (const auto& c : u.cliques())
      for (Spin s : {Spin::kUp, Spin::kDown}) {
        std::vector<HoppingOp> ops;
        for (const auto& op : c.ops)
          if (op.spin == s) ops.push_back(op);
        const auto pos = swapnet::position_vector(ops, n);
        expect_valid(swapnet::odd_even_sort(pos), pos);
      }
  }
}

TEST(SwapNet, ApplyRejectsOutOfBlockSwap) {
  swapnet::SwapNetwork net;
  net.layers.push_back({{3}, LayerParity::kOdd});
  try {
    swapnet::apply_network(net, {0, 1, 2, 3});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInvalidSwap);
  }
}
