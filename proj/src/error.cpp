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

#include "planesched/error.hpp"

namespace planesched {

const char* error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "invalid-argument";
    case ErrorCode::kModulusMismatch: return "modulus-mismatch";
    case ErrorCode::kDivisionByZero: return "division-by-zero";
    case ErrorCode::kDegenerateInput: return "degenerate-input";
    case ErrorCode::kInvalidSize: return "invalid-size";
    case ErrorCode::kSizeLimit: return "size-limit";
    case ErrorCode::kCoverageViolation: return "coverage-violation";
    case ErrorCode::kInternalConsistency: return "internal-consistency";
    case ErrorCode::kInvalidSwap: return "invalid-swap";
    case ErrorCode::kParse: return "parse";
    case ErrorCode::kIo: return "io";
    case ErrorCode::kSymmetryViolation: return "symmetry-violation";
  }
  return "unknown";
}

}  // namespace planesched
