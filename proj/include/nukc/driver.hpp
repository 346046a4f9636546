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

#ifndef NUKC_DRIVER_HPP_
#define NUKC_DRIVER_HPP_

#include <optional>
#include <string>

#include "nukc/instance.hpp"
#include "nukc/solver.hpp"

namespace nukc {

enum class Algorithm {
  kAuto,
  kRobust2,
  kContracted,
  kNukc2,
  kNukc3,
  kKCenter,
  kRobustKCenter,
};

Algorithm ParseAlgorithm(const std::string& name);
const char* AlgorithmName(Algorithm algorithm);

// auto: 3 classes -> nukc3; 2 classes -> nukc2 when m is the total weight,
// else robust2; 1 class -> kcenter or robust-kcenter likewise. Throws
// kInvalidArgument for an explicit algorithm incompatible with the instance.
Algorithm ResolveAlgorithm(Algorithm requested, const Instance& instance);

FeasibilityOutcome RunAlgorithm(Algorithm algorithm, const Instance& instance,
                                const SolveOptions& options);

struct SolveRequest {
  Algorithm algorithm = Algorithm::kAuto;
  // Fixed dilation; ignored with binary_search.
  double dilation = 1.0;
  bool binary_search = false;
  bool linear_scan = false;
  SolveOptions options;
};

struct RunReport {
  Algorithm algorithm = Algorithm::kAuto;
  bool binary_search = false;
  double lambda = 1.0;
  FeasibilityOutcome outcome;
  // Present iff the outcome carries a solution; radii are absolute.
  std::optional<VerificationReport> verification;
  long solver_calls = 0;
  double wall_time_ms = 0.0;
};

RunReport RunSolve(const Instance& instance, const SolveRequest& request);

std::string RunReportToJson(const Instance& instance, const RunReport& report);

}  // namespace nukc

#endif  // NUKC_DRIVER_HPP_
