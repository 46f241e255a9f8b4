// Copyright 2026 The unravel Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace unravel {

enum class ErrorCode {
  invalid_argument = 1,
  io,
  parse,
  precondition,
  cap_exceeded,
  not_converged,
  retry_limit,
  internal,
};

const char* to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Raised when a walk enumeration would exceed its node budget. `count` is
// the number of nodes the full structure would need (saturated at 2^64-1).
class CapExceeded : public Error {
 public:
  CapExceeded(const std::string& what, unsigned long long count)
      : Error(ErrorCode::cap_exceeded, what), count_(count) {}

  unsigned long long count() const noexcept { return count_; }

 private:
  unsigned long long count_;
};

}  // namespace unravel
