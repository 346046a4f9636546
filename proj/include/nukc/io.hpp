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

#ifndef NUKC_IO_HPP_
#define NUKC_IO_HPP_

#include <optional>
#include <string>
#include <vector>

#include "nukc/instance.hpp"

namespace nukc {

// Parsed instance document. Exactly one of "points" / "distance_matrix";
// optional "weights" and per-class "allowed_centers"; "classes" as a list of
// {"k", "r"}; "coverage_target". An optional "planted" list records a known
// dilation-1 solution.
struct InstanceFile {
  Instance instance;
  std::optional<std::vector<std::vector<double>>> points;
  std::optional<Solution> planted;
};

// Throws Error(kSchema) with the offending field path.
InstanceFile ParseInstanceJson(const std::string& text);
InstanceFile ReadInstanceFile(const std::string& path);

// Serializes with "points" when given, otherwise "distance_matrix".
std::string InstanceToJson(
    const Instance& instance,
    const std::optional<std::vector<std::vector<double>>>& points,
    const std::optional<Solution>& planted);

// Accepts a bare {"balls": [...]} or a run report carrying "solution".
Solution ParseSolutionJson(const std::string& text);
std::string SolutionToJson(const Solution& solution);

std::string VerificationToJson(const Instance& instance,
                               const VerificationReport& report);

std::string ReadTextFile(const std::string& path);

}  // namespace nukc

#endif  // NUKC_IO_HPP_
