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

#ifndef NUKC_ORACLE_HPP_
#define NUKC_ORACLE_HPP_

#include <cstddef>
#include <vector>

#include "nukc/coverage.hpp"
#include "nukc/instance.hpp"

namespace nukc {

struct OracleCaps {
  int max_total_budget = 6;
  std::size_t max_points = 14;
};

struct OracleResult {
  bool feasible = false;
  Solution witness;
  double optimum_dilation = 0.0;  // brute_optimum only
};

// Exhaustive search over center tuples at radii alpha * r_i.
OracleResult BruteFeasible(const Instance& instance, double alpha,
                           const OracleCaps& caps = {});

// Smallest candidate dilation at which BruteFeasible succeeds. Throws
// kInvalidArgument when no candidate is feasible.
OracleResult BruteOptimum(const Instance& instance, const OracleCaps& caps = {});

// Largest weight coverable at dilation alpha.
Weight BruteMaxCoverage(const Instance& instance, double alpha,
                        const OracleCaps& caps = {});

// Coverage vectors (cov1 preferred over cov2 for doubly covered points) of
// every budget-respecting center choice of a two-class instance at dilation 1
// that covers at least the target weight. Deduplicated.
std::vector<CoverageVector> EnumerateIntegralCoverages(
    const Instance& instance, const OracleCaps& caps = {});

}  // namespace nukc

#endif  // NUKC_ORACLE_HPP_
