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

#ifndef NUKC_COVERAGE_HPP_
#define NUKC_COVERAGE_HPP_

#include <vector>

namespace nukc {

// Fractional per-point coverage by the large (cov1) and small (cov2) class.
struct CoverageVector {
  std::vector<double> cov1;
  std::vector<double> cov2;

  std::size_t size() const { return cov1.size(); }
  double total(std::size_t v) const { return cov1[v] + cov2[v]; }

  static CoverageVector Zero(std::size_t n) {
    return {std::vector<double>(n, 0.0), std::vector<double>(n, 0.0)};
  }

  friend bool operator==(const CoverageVector&,
                         const CoverageVector&) = default;
};

}  // namespace nukc

#endif  // NUKC_COVERAGE_HPP_
