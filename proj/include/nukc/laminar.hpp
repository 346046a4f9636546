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

#ifndef NUKC_LAMINAR_HPP_
#define NUKC_LAMINAR_HPP_

#include <optional>
#include <span>
#include <vector>

#include "nukc/instance.hpp"
#include "nukc/metric.hpp"

namespace nukc {

// One independent block of a laminar structure: a parent candidate and its
// child candidates. A child contributes child_full[j] when the parent is
// closed and child_marginal[j] (its weight outside the parent ball) when open.
struct LaminarSubtree {
  Weight parent_weight = 0;
  bool parent_allowed = true;
  std::vector<Weight> child_full;
  std::vector<Weight> child_marginal;
};

struct SubtreeChoice {
  bool parent = false;
  std::vector<std::size_t> children;
};

struct LaminarOptimum {
  Weight covered = 0;
  int parents_used = 0;
  int children_used = 0;
  std::vector<SubtreeChoice> choices;
};

inline constexpr Weight kUnreachable = -1;

// Max-coverage LOCAL table of one subtree for a fixed parent bit:
// table[j][k] = best weight using exactly k of the first j children plus the
// parent ball when bit is set; kUnreachable when k > j.
std::vector<std::vector<Weight>> LocalCoverageTable(const LaminarSubtree& tree,
                                                    bool bit);

// Boolean LOCAL table with "covers at least m'" semantics:
// table[j][k][m'] for m' in [0, max_target].
std::vector<std::vector<std::vector<bool>>> LocalFeasibilityTable(
    const LaminarSubtree& tree, bool bit, Weight max_target);

// Exact maximum coverage with at most k1 parents and k2 children.
LaminarOptimum MaximizeLaminarCoverage(std::span<const LaminarSubtree> trees,
                                       int k1, int k2);

// Two-level candidate structure over a pseudo-metric: radius-rho1 balls at
// L1 and radius-rho2 balls at L2, with L2 split into disjoint child lists.
struct LaminarInstance {
  MetricSpace space;
  std::vector<Weight> weights;
  std::vector<Point> l1;
  std::vector<std::vector<Point>> children;  // parallel to l1 (or to the
                                             // virtual parent)
  bool virtual_parent = false;               // l1 empty; children[0] holds L2
  int k1 = 0;
  int k2 = 0;
  double rho1 = 0.0;
  double rho2 = 0.0;
  Weight target = 0;
};

// Builds C(v) = {u in L2 : B(v,rho1) meets B(u,rho2)}, checks disjointness of
// same-level balls and of the child lists, and attaches orphans to the first
// L1 vertex. Throws kLaminarViolation naming the witnessing pair.
LaminarInstance BuildLaminar(const MetricSpace& space,
                             std::vector<Weight> weights,
                             std::span<const Point> l1,
                             std::span<const Point> l2, double rho1,
                             double rho2, int k1, int k2, Weight target);

struct DPSolution {
  std::vector<Point> chosen_l1;
  std::vector<Point> chosen_l2;
  Weight covered_weight = 0;
};

std::vector<LaminarSubtree> LaminarSubtrees(const LaminarInstance& inst);

// Optimal selection regardless of the target.
DPSolution MaximizeLaminar(const LaminarInstance& inst);
// nullopt when the optimum is below the target.
std::optional<DPSolution> SolveLaminar(const LaminarInstance& inst);

// Class 0 balls of radius rho1 at chosen_l1, class 1 balls of radius rho2 at
// chosen_l2.
Solution LaminarToSolution(const LaminarInstance& inst, const DPSolution& dp);
// Two-class instance whose class-i centers are restricted to L_i.
Instance LaminarAsInstance(const LaminarInstance& inst);

}  // namespace nukc

#endif  // NUKC_LAMINAR_HPP_
