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

#include "nukc/instance.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "nukc/error.hpp"

namespace nukc {

Instance::Instance(MetricSpace space, std::vector<Weight> weights,
                   std::vector<RadiusClass> classes, Weight coverage_target,
                   std::vector<std::optional<PointSet>> center_restriction)
    : space_(std::move(space)),
      weights_(std::move(weights)),
      classes_(std::move(classes)),
      coverage_target_(coverage_target),
      center_restriction_(std::move(center_restriction)) {
  const std::size_t n = space_.size();
  if (weights_.empty()) weights_.assign(n, 1);
  if (weights_.size() != n) {
    Fail(ErrorCode::kInvalidArgument, "weights must have one entry per point");
  }
  for (std::size_t p = 0; p < n; ++p) {
    if (weights_[p] <= 0) {
      std::ostringstream msg;
      msg << "weight of point " << p << " must be positive";
      Fail(ErrorCode::kInvalidArgument, msg.str());
    }
    total_weight_ += weights_[p];
  }
  if (classes_.empty()) {
    Fail(ErrorCode::kInvalidArgument, "at least one radius class required");
  }
  for (std::size_t i = 0; i < classes_.size(); ++i) {
    const RadiusClass& c = classes_[i];
    if (c.budget < 0) {
      Fail(ErrorCode::kInvalidArgument, "class budgets must be nonnegative");
    }
    if (!std::isfinite(c.radius) || c.radius < 0.0) {
      Fail(ErrorCode::kInvalidArgument,
           "class radii must be finite and nonnegative");
    }
    if (i > 0 && c.radius > classes_[i - 1].radius) {
      std::ostringstream msg;
      msg << "radii must be nonincreasing: r" << i + 1 << " = " << c.radius
          << " > r" << i << " = " << classes_[i - 1].radius;
      Fail(ErrorCode::kInvalidArgument, msg.str());
    }
  }
  if (coverage_target_ < 0 || coverage_target_ > total_weight_) {
    std::ostringstream msg;
    msg << "coverage target " << coverage_target_ << " outside [0, "
        << total_weight_ << "]";
    Fail(ErrorCode::kInvalidArgument, msg.str());
  }
  if (center_restriction_.empty()) {
    center_restriction_.assign(classes_.size(), std::nullopt);
  }
  if (center_restriction_.size() != classes_.size()) {
    Fail(ErrorCode::kInvalidArgument,
         "center restrictions must have one entry per class");
  }
  for (const auto& r : center_restriction_) {
    if (r && !r->empty() && r->points().back() >= n) {
      Fail(ErrorCode::kInvalidArgument, "allowed center out of range");
    }
  }
}

bool Instance::has_restrictions() const {
  return std::any_of(center_restriction_.begin(), center_restriction_.end(),
                     [](const auto& r) { return r.has_value(); });
}

bool Instance::IsAllowedCenter(std::size_t cls, Point p) const {
  const auto& r = center_restriction_[cls];
  return !r || r->contains(p);
}

PointSet Instance::AllowedCenters(std::size_t cls) const {
  const auto& r = center_restriction_[cls];
  return r ? *r : PointSet::Range(size());
}

Weight Instance::WeightOf(const PointSet& set) const {
  return MetricSpace::TotalWeight(set, weights_);
}

Instance Instance::WithTarget(Weight m) const {
  return Instance(space_, weights_, classes_, m, center_restriction_);
}

std::vector<bool> CoveredPoints(const Instance& instance,
                                const Solution& solution) {
  const std::size_t n = instance.size();
  std::vector<bool> covered(n, false);
  for (const Ball& b : solution.balls) {
    if (b.center >= n) {
      std::ostringstream msg;
      msg << "ball center " << b.center << " out of range";
      Fail(ErrorCode::kInvalidArgument, msg.str());
    }
    if (b.class_index >= instance.class_count()) {
      std::ostringstream msg;
      msg << "ball class " << b.class_index << " out of range";
      Fail(ErrorCode::kInvalidArgument, msg.str());
    }
    if (!(b.radius >= 0.0)) {
      Fail(ErrorCode::kInvalidArgument, "ball radius must be nonnegative");
    }
    for (Point u = 0; u < n; ++u) {
      if (instance.space()(u, b.center) <= b.radius) covered[u] = true;
    }
  }
  return covered;
}

VerificationReport Verify(const Instance& instance, const Solution& solution) {
  const std::vector<bool> covered = CoveredPoints(instance, solution);
  VerificationReport report;
  for (Point u = 0; u < instance.size(); ++u) {
    if (covered[u]) report.covered_weight += instance.weight(u);
  }
  const std::size_t t = instance.class_count();
  report.balls_per_class.assign(t, 0);
  std::vector<double> max_radius(t, 0.0);
  for (const Ball& b : solution.balls) {
    ++report.balls_per_class[b.class_index];
    max_radius[b.class_index] = std::max(max_radius[b.class_index], b.radius);
    if (!instance.IsAllowedCenter(b.class_index, b.center)) {
      report.restriction_ok = false;
    }
  }
  report.per_class_dilation.assign(t, 0.0);
  report.dilation = 0.0;
  for (std::size_t i = 0; i < t; ++i) {
    if (report.balls_per_class[i] > instance.cls(i).budget) {
      report.budget_ok = false;
    }
    std::optional<double> d;
    const double r = instance.cls(i).radius;
    if (report.balls_per_class[i] == 0) {
      d = 0.0;
    } else if (r > 0.0) {
      d = max_radius[i] / r;
    } else if (max_radius[i] == 0.0) {
      d = 1.0;
    }
    report.per_class_dilation[i] = d;
    if (!d) {
      report.dilation.reset();
    } else if (report.dilation) {
      report.dilation = std::max(*report.dilation, *d);
    }
  }
  report.feasible_for_target =
      report.covered_weight >= instance.coverage_target() &&
      report.budget_ok && report.restriction_ok;
  return report;
}

Instance Scale(const Instance& instance, double alpha) {
  if (!(alpha >= 0.0) || !std::isfinite(alpha)) {
    Fail(ErrorCode::kInvalidArgument, "scale factor must be finite and >= 0");
  }
  std::vector<RadiusClass> classes = instance.classes();
  for (RadiusClass& c : classes) c.radius *= alpha;
  std::vector<std::optional<PointSet>> restrictions;
  for (std::size_t i = 0; i < instance.class_count(); ++i) {
    restrictions.push_back(instance.restriction(i));
  }
  return Instance(instance.space(), instance.weights(), std::move(classes),
                  instance.coverage_target(), std::move(restrictions));
}

}  // namespace nukc
