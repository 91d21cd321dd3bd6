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
#include <ostream>

namespace planesched::gf {

bool is_prime(std::int64_t n) noexcept;

/// A prime modulus, validated by trial division on construction.
class Prime {
 public:
  explicit Prime(std::int64_t value);

  std::int64_t value() const noexcept { return value_; }

  friend bool operator==(Prime, Prime) = default;

 private:
  std::int64_t value_;
};

/// An element of the prime field Z/pZ. The modulus travels with the value so
/// that mixing elements of different fields is caught at the operation.
class FieldElem {
 public:
  /// Reduces `residue` into [0, p), accepting negative inputs.
  FieldElem(std::int64_t residue, Prime modulus);

  std::int64_t residue() const noexcept { return residue_; }
  Prime modulus() const noexcept { return modulus_; }
  bool is_zero() const noexcept { return residue_ == 0; }

  friend bool operator==(const FieldElem&, const FieldElem&) = default;

 private:
  std::int64_t residue_;
  Prime modulus_;
};

FieldElem add(const FieldElem& a, const FieldElem& b);
FieldElem sub(const FieldElem& a, const FieldElem& b);
FieldElem neg(const FieldElem& a);
FieldElem mul(const FieldElem& a, const FieldElem& b);
/// Multiplicative inverse via the extended Euclidean algorithm.
FieldElem inv(const FieldElem& a);
FieldElem div(const FieldElem& a, const FieldElem& b);

inline FieldElem operator+(const FieldElem& a, const FieldElem& b) { return add(a, b); }
inline FieldElem operator-(const FieldElem& a, const FieldElem& b) { return sub(a, b); }
inline FieldElem operator-(const FieldElem& a) { return neg(a); }
inline FieldElem operator*(const FieldElem& a, const FieldElem& b) { return mul(a, b); }
inline FieldElem operator/(const FieldElem& a, const FieldElem& b) { return div(a, b); }

std::ostream& operator<<(std::ostream& os, const FieldElem& e);

/// Smallest prime >= n. Requires n >= 2.
Prime smallest_prime_at_least(std::int64_t n);

}  // namespace planesched::gf
