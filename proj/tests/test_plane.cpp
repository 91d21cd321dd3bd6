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
#include "planesched/plane.hpp"

using namespace planesched;
using plane::Line;
using plane::Plane;
using plane::Point;

class PlaneAxioms : public ::testing::TestWithParam<int> {};

TEST_P(PlaneAxioms, IncidenceCounts) {
  const Plane pl{gf::Prime(GetParam())};
  const int p = pl.order();
  ASSERT_EQ(pl.size(), p * p + p + 1);
  std::vector<int> point_degree(pl.size(), 0);
  for (int li = 0; li < pl.size(); ++li) {
    int on = 0;
    for (int pi = 0; pi < pl.size(); ++pi) {
      if (pl.contains(pl.line_at(li), pl.point_at(pi))) {
        ++on;
        ++point_degree[pi];
      }
    }
    EXPECT_EQ(on, p + 1);
    EXPECT_EQ(static_cast<int>(pl.points_on(pl.line_at(li)).size()), p + 1);
  }
  for (int d : point_degree) EXPECT_EQ(d, p + 1);
}

TEST_P(PlaneAxioms, TwoPointsOneLineAndTwoLinesOnePoint) {
  const Plane pl{gf::Prime(GetParam())};
  const int size = pl.size();
  for (int a = 0; a < size; ++a)
    for (int b = a + 1; b < size; ++b) {
      int common_lines = 0, common_points = 0;
      for (int k = 0; k < size; ++k) {
        const Line l = pl.line_at(k);
        common_lines += pl.contains(l, pl.point_at(a)) && pl.contains(l, pl.point_at(b));
        const Point q = pl.point_at(k);
        common_points += pl.contains(pl.line_at(a), q) && pl.contains(pl.line_at(b), q);
      }
      ASSERT_EQ(common_lines, 1);
      ASSERT_EQ(common_points, 1);
      // Analytic forms agree with the incidence table.
      const Line l = pl.line_through(pl.point_at(a), pl.point_at(b));
      EXPECT_TRUE(pl.contains(l, pl.point_at(a)) && pl.contains(l, pl.point_at(b)));
      const Point x = pl.intersection(pl.line_at(a), pl.line_at(b));
      EXPECT_TRUE(pl.contains(pl.line_at(a), x) && pl.contains(pl.line_at(b), x));
    }
}

TEST_P(PlaneAxioms, IndexRoundTrip) {
  const Plane pl{gf::Prime(GetParam())};
  for (int k = 0; k < pl.size(); ++k) {
    EXPECT_EQ(pl.index(pl.point_at(k)), k);
    EXPECT_EQ(pl.index(pl.line_at(k)), k);
    EXPECT_EQ(static_cast<int>(pl.lines_through(pl.point_at(k)).size()), pl.order() + 1);
  }
}

INSTANTIATE_TEST_SUITE_P(SmallPrimes, PlaneAxioms, ::testing::Values(2, 3, 5, 7, 11));

TEST(Plane, LineDefinitions) {
  const Plane pl{gf::Prime(5)};
  // L_alpha holds P_alpha and every P_beta
  EXPECT_TRUE(pl.contains(Line::alpha(), Point::alpha()));
  for (int y = 0; y < 5; ++y) EXPECT_TRUE(pl.contains(Line::alpha(), Point::beta(y)));
  // L_beta(i) is the vertical x = i plus P_alpha
  EXPECT_TRUE(pl.contains(Line::beta(4), Point::alpha()));
  for (int y = 0; y < 5; ++y) EXPECT_TRUE(pl.contains(Line::beta(4), Point::gamma(4, y)));
  // L_gamma(i, j) is y = i x + j plus P_beta(i)
  EXPECT_TRUE(pl.contains(Line::gamma(2, 0), Point::beta(2)));
  for (int x = 0; x < 5; ++x) EXPECT_TRUE(pl.contains(Line::gamma(4, 2), Point::gamma(x, (4 * x + 2) % 5)));
  EXPECT_FALSE(pl.contains(Line::gamma(4, 2), Point::alpha()));
}

TEST(Plane, DegenerateInputs) {
  const Plane pl{gf::Prime(3)};
  try {
    pl.line_through(Point::gamma(1, 1), Point::gamma(1, 1));
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDegenerateInput);
  }
  try {
    pl.intersection(Line::beta(0), Line::beta(0));
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDegenerateInput);
  }
  EXPECT_THROW(pl.index(Point::gamma(3, 0)), Error);
}

TEST(Plane, Labels) {
  EXPECT_EQ(plane::to_string(Point::gamma(4, 3)), "P_gamma(4,3)");
  EXPECT_EQ(plane::to_string(Line::gamma(2, 0)), "L_gamma(2,0)");
}
