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

#ifndef NUKC_GREEDY_HPP_
#define NUKC_GREEDY_HPP_

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "nukc/coverage.hpp"
#include "nukc/instance.hpp"
#include "nukc/metric.hpp"
#include "nukc/partition.hpp"

namespace nukc {

// Hochbaum-Shmoys clustering: repeatedly take the highest-priority remaining
// point (lowest index on ties) and claim its closed radius-r ball among the
// remaining points. `priorities` is indexed by global point id.
Partition HsCluster(const MetricSpace& space, const PointSet& within,
                    std::span<const double> priorities, double r);

// HS at radius 2 r_t with lowest-index selection.
Partition RadiiCompression(const Instance& instance);

struct TwoLevelTree {
  std::vector<Point> l1;
  std::vector<PointSet> child1;  // parallel to l1, subsets of l2
  std::vector<Point> l2;
  std::vector<PointSet> child2;  // parallel to l2, subsets of the ground set
  double alpha1 = 0.0;
  double alpha2 = 0.0;
  double r1 = 0.0;
  double r2 = 0.0;
};

// Two HS passes: level 2 over all points by cov1+cov2 at radius alpha2*r2,
// then level 1 over L2 by cov1 at radius alpha1*r1.
TwoLevelTree CgkTree(const MetricSpace& space, const CoverageVector& coverages,
                     double r1, double r2, double alpha1, double alpha2);

// Empty string when every TwoLevelTree invariant holds.
std::string CheckTwoLevelTree(const MetricSpace& space,
                              const TwoLevelTree& tree);

// Picks at most k1 level-1 vertices (ball of radius alpha1*r1 + alpha2*r2,
// class 0) and at most k2 level-2 vertices (radius alpha2*r2, class 1),
// maximizing the tree weight they cover. nullopt when that is below m.
std::optional<Solution> CgkRound(const TwoLevelTree& tree,
                                 std::span<const Weight> weights, int k1,
                                 int k2, Weight m);

// Greedy 3-approximation for k-center with outliers. Opens radius-3r balls
// at the heaviest remaining radius-r ball, k times. Returns nullopt when the
// covered weight stays below m.
std::optional<Solution> RobustKCenterGreedy(const MetricSpace& space,
                                            std::span<const Weight> weights,
                                            int k, double r, Weight m);

}  // namespace nukc

#endif  // NUKC_GREEDY_HPP_
