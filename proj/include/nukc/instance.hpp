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

#ifndef NUKC_INSTANCE_HPP_
#define NUKC_INSTANCE_HPP_

#include <optional>
#include <vector>

#include "nukc/metric.hpp"

namespace nukc {

struct RadiusClass {
  int budget = 0;
  double radius = 0.0;

  friend bool operator==(const RadiusClass&, const RadiusClass&) = default;
};

// A (Robust) t-NUkC instance: k_i balls of radius r_i per class, radii
// nonincreasing, and at least `coverage_target` weight to be covered.
class Instance {
 public:
  Instance() = default;
  // Empty weights mean unit weights. Empty restrictions mean unrestricted;
  // otherwise one optional allowed-center set per class.
  Instance(MetricSpace space, std::vector<Weight> weights,
           std::vector<RadiusClass> classes, Weight coverage_target,
           std::vector<std::optional<PointSet>> center_restriction = {});

  const MetricSpace& space() const { return space_; }
  std::size_t size() const { return space_.size(); }
  const std::vector<Weight>& weights() const { return weights_; }
  Weight weight(Point p) const { return weights_[p]; }
  Weight total_weight() const { return total_weight_; }
  const std::vector<RadiusClass>& classes() const { return classes_; }
  std::size_t class_count() const { return classes_.size(); }
  const RadiusClass& cls(std::size_t i) const { return classes_[i]; }
  Weight coverage_target() const { return coverage_target_; }
  bool has_restrictions() const;
  const std::optional<PointSet>& restriction(std::size_t cls) const {
    return center_restriction_[cls];
  }
  bool IsAllowedCenter(std::size_t cls, Point p) const;
  PointSet AllowedCenters(std::size_t cls) const;

  Weight WeightOf(const PointSet& set) const;

  Instance WithTarget(Weight m) const;

 private:
  MetricSpace space_;
  std::vector<Weight> weights_;
  std::vector<RadiusClass> classes_;
  Weight coverage_target_ = 0;
  Weight total_weight_ = 0;
  std::vector<std::optional<PointSet>> center_restriction_;
};

struct Ball {
  Point center = 0;
  std::size_t class_index = 0;
  double radius = 0.0;

  friend bool operator==(const Ball&, const Ball&) = default;
};

struct Solution {
  std::vector<Ball> balls;
};

struct VerificationReport {
  Weight covered_weight = 0;
  // nullopt = undefined (a class with r_i = 0 opened a positive radius).
  std::optional<double> dilation;
  std::vector<std::optional<double>> per_class_dilation;
  std::vector<int> balls_per_class;
  bool budget_ok = true;
  bool restriction_ok = true;
  bool feasible_for_target = false;
};

VerificationReport Verify(const Instance& instance, const Solution& solution);

// Covered point indicator of the union of the solution's balls.
std::vector<bool> CoveredPoints(const Instance& instance,
                                const Solution& solution);

Instance Scale(const Instance& instance, double alpha);

}  // namespace nukc

#endif  // NUKC_INSTANCE_HPP_
