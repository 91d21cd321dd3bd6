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

#include <functional>

#include "planesched/error.hpp"
#include "planesched/gf.hpp"

using namespace planesched;
using gf::FieldElem;
using gf::Prime;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return static_cast<ErrorCode>(0);
}

}  // namespace

TEST(Gf, ReducesNegativeResidues) {
  const Prime p(5);
  EXPECT_EQ(FieldElem(-1, p).residue(), 4);
  EXPECT_EQ(FieldElem(-10, p).residue(), 0);
  EXPECT_EQ(FieldElem(17, p).residue(), 2);
}

TEST(Gf, RejectsComposites) {
  EXPECT_EQ(code_of([] { Prime(4); }), ErrorCode::kInvalidArgument);
  EXPECT_EQ(code_of([] { Prime(1); }), ErrorCode::kInvalidArgument);
  EXPECT_EQ(code_of([] { Prime(0); }), ErrorCode::kInvalidArgument);
  EXPECT_NO_THROW(Prime(2));
  EXPECT_NO_THROW(Prime(47));
}

TEST(Gf, FieldAxiomsExhaustive) {
  for (int pv : {2, 3, 5, 7, 11, 13}) {
    const Prime p(pv);
    for (int a = 0; a < pv; ++a) {
      const FieldElem x(a, p);
      EXPECT_EQ((x + -x).residue(), 0);
      for (int b = 0; b < pv; ++b) {
        const FieldElem y(b, p);
        EXPECT_EQ((x + y).residue(), (a + b) % pv);
        EXPECT_EQ((x * y).residue(), (a * b) % pv);
        EXPECT_EQ((x - y).residue(), ((a - b) % pv + pv) % pv);
        EXPECT_EQ(x * y, y * x);
        for (int c = 0; c < pv; ++c) {
          const FieldElem z(c, p);
          EXPECT_EQ(x * (y + z), x * y + x * z);
        }
      }
    }
  }
}

TEST(Gf, InverseMatchesBruteForce) {
  for (int pv : {2, 3, 5, 7, 31, 47}) {
    const Prime p(pv);
    for (int a = 1; a < pv; ++a) {
      int expected = -1;
      for (int b = 1; b < pv; ++b)
        if ((a * b) % pv == 1) expected = b;
      EXPECT_EQ(gf::inv(FieldElem(a, p)).residue(), expected);
      EXPECT_EQ((FieldElem(a, p) / FieldElem(a, p)).residue(), 1);
    }
  }
  EXPECT_EQ(gf::inv(FieldElem(3, Prime(7))).residue(), 5);
}

TEST(Gf, Errors) {
  EXPECT_EQ(code_of([] { gf::inv(FieldElem(0, Prime(5))); }), ErrorCode::kDivisionByZero);
  EXPECT_EQ(code_of([] { FieldElem(1, Prime(5)) / FieldElem(0, Prime(5)); }),
            ErrorCode::kDivisionByZero);
  EXPECT_EQ(code_of([] { FieldElem(1, Prime(5)) + FieldElem(1, Prime(7)); }),
            ErrorCode::kModulusMismatch);
  EXPECT_EQ(code_of([] { FieldElem(1, Prime(5)) * FieldElem(1, Prime(3)); }),
            ErrorCode::kModulusMismatch);
}

TEST(Gf, SmallestPrimeAtLeast) {
  EXPECT_EQ(gf::smallest_prime_at_least(2).value(), 2);
  EXPECT_EQ(gf::smallest_prime_at_least(4).value(), 5);
  EXPECT_EQ(gf::smallest_prime_at_least(8).value(), 11);
  EXPECT_EQ(gf::smallest_prime_at_least(13).value(), 13);
  EXPECT_EQ(gf::smallest_prime_at_least(24).value(), 29);
  EXPECT_EQ(code_of([] { gf::smallest_prime_at_least(1); }), ErrorCode::kInvalidArgument);
  for (int n = 2; n < 200; ++n) {
    const auto p = gf::smallest_prime_at_least(n).value();
    EXPECT_TRUE(gf::is_prime(p));
    for (int k = n; k < p; ++k) EXPECT_FALSE(gf::is_prime(k));
  }
}
