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

#include "planesched/gf.hpp"

#include <string>
#include <utility>

#include "planesched/error.hpp"

namespace planesched::gf {

bool is_prime(std::int64_t n) noexcept {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0) return false;
  for (std::int64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

Prime::Prime(std::int64_t value) : value_(value) {
  if (!is_prime(value)) {
    fail(ErrorCode::kInvalidArgument, std::to_string(value) + " is not prime");
  }
}

FieldElem::FieldElem(std::int64_t residue, Prime modulus)
    : residue_(((residue % modulus.value()) + modulus.value()) % modulus.value()),
      modulus_(modulus) {}

namespace {

void require_same_field(const FieldElem& a, const FieldElem& b) {
  if (a.modulus() != b.modulus()) {
    fail(ErrorCode::kModulusMismatch,
         "field elements over Z/" + std::to_string(a.modulus().value()) +
             " and Z/" + std::to_string(b.modulus().value()));
  }
}

}  // namespace

FieldElem add(const FieldElem& a, const FieldElem& b) {
  require_same_field(a, b);
  return FieldElem(a.residue() + b.residue(), a.modulus());
}

FieldElem sub(const FieldElem& a, const FieldElem& b) {
  require_same_field(a, b);
  return FieldElem(a.residue() - b.residue(), a.modulus());
}

FieldElem neg(const FieldElem& a) { return FieldElem(-a.residue(), a.modulus()); }

FieldElem mul(const FieldElem& a, const FieldElem& b) {
  require_same_field(a, b);
  return FieldElem(a.residue() * b.residue(), a.modulus());
}

FieldElem inv(const FieldElem& a) {
  if (a.is_zero()) fail(ErrorCode::kDivisionByZero, "inverse of zero");
  std::int64_t old_r = a.residue(), r = a.modulus().value();
  std::int64_t old_s = 1, s = 0;
  while (r != 0) {
    const std::int64_t q = old_r / r;
    old_r -= q * r;
    std::swap(old_r, r);
    old_s -= q * s;
    std::swap(old_s, s);
  }
  return FieldElem(old_s, a.modulus());
}

FieldElem div(const FieldElem& a, const FieldElem& b) {
  require_same_field(a, b);
  return mul(a, inv(b));
}

std::ostream& operator<<(std::ostream& os, const FieldElem& e) {
  return os << e.residue() << " (mod " << e.modulus().value() << ")";
}

Prime smallest_prime_at_least(std::int64_t n) {
  if (n < 2) fail(ErrorCode::kInvalidArgument, "smallest_prime_at_least requires n >= 2");
  while (!is_prime(n)) ++n;
  return Prime(n);
}

}  // namespace planesched::gf
