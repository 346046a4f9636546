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

#include "nukc/error.hpp"

namespace nukc {

const char* ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "invalid_argument";
    case ErrorCode::kMetricViolation: return "metric_violation";
    case ErrorCode::kSchema: return "schema";
    case ErrorCode::kStalled: return "stalled";
    case ErrorCode::kIterationLimit: return "iteration_limit";
    case ErrorCode::kCapExceeded: return "cap_exceeded";
    case ErrorCode::kContractViolation: return "contract_violation";
    case ErrorCode::kLaminarViolation: return "laminar_violation";
    case ErrorCode::kInternal: return "internal";
    case ErrorCode::kIo: return "io";
  }
  return "unknown";
}

void Fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace nukc
