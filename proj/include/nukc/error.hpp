// Copyright 2026 The nukc Authors
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

#ifndef NUKC_ERROR_HPP_
#define NUKC_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace nukc {

// Error categories. The numeric values are mirrored by nukc_status in the C
// header, so keep them in sync.
enum class ErrorCode {
  kInvalidArgument = 1,
  kMetricViolation = 2,
  kSchema = 3,
  kStalled = 4,
  kIterationLimit = 5,
  kCapExceeded = 6,
  kContractViolation = 7,
  kLaminarViolation = 8,
  kInternal = 9,
  kIo = 10,
};

const char* ErrorCodeName(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] void Fail(ErrorCode code, const std::string& message);

}  // namespace nukc

#endif  // NUKC_ERROR_HPP_
