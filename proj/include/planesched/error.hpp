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

#include <stdexcept>
#include <string>

namespace planesched {

// Numeric values are mirrored by the C API status codes in planesched.h.
enum class ErrorCode : int {
  kInvalidArgument = 1,
  kModulusMismatch = 2,
  kDivisionByZero = 3,
  kDegenerateInput = 4,
  kInvalidSize = 5,
  kSizeLimit = 6,
  kCoverageViolation = 7,
  kInternalConsistency = 8,
  kInvalidSwap = 9,
  kParse = 10,
  kIo = 11,
  kSymmetryViolation = 12,
};

const char* error_code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace planesched
