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

#include <gtest/gtest.h>

#include "expect_error.hpp"
#include "nukc/instance.hpp"
#include "test_support.hpp"

namespace nukc {
namespace {

using testing::LineInstance;

TEST(Verify, SinglePointAtRadius) {
  const Instance inst = LineInstance({0}, {{1, 2.0}}, 1);
  const VerificationReport r = Verify(inst, {{{0, 0, 2.0}}});
  EXPECT_EQ(r.covered_weight, 1);
  EXPECT_EQ(r.dilation, std::optional<double>(1.0));
  EXPECT_TRUE(r.feasible_for_target);
}

TEST(Verify, DilationIsRadiusRatio) {
  const Instance inst = LineInstance({0, 3}, {{1, 1.0}}, 2);
  const VerificationReport r = Verify(inst, {{{0, 0, 3.0}}});
  EXPECT_EQ(r.covered_weight, 2);
  EXPECT_EQ(r.dilation, std::optional<double>(3.0));
}

TEST(Verify, EmptySolutionMeetsZeroTarget) {
  const Instance inst = LineInstance({0, 3}, {{1, 1.0}}, 0);
  const VerificationReport r = Verify(inst, {});
  EXPECT_EQ(r.covered_weight, 0);
  EXPECT_TRUE(r.feasible_for_target);
}

TEST(Verify, CountsWeightOnceAndFlagsBudget) {
  const Instance inst =
      LineInstance({0, 1, 5}, {{1, 1.0}, {1, 0.5}}, 6, {2, 3, 4});
  const Solution s = {{{0, 0, 1.0}, {1, 1, 0.5}, {2, 1, 0.0}}};
  const VerificationReport r = Verify(inst, s);
  EXPECT_EQ(r.covered_weight, 9);
  EXPECT_FALSE(r.budget_ok);
  EXPECT_FALSE(r.feasible_for_target);
  EXPECT_EQ(r.balls_per_class, (std::vector<int>{1, 2}));
  EXPECT_EQ(r.per_class_dilation[1], std::optional<double>(1.0));
}

TEST(Verify, ZeroRadiusClassDilation) {
  const Instance inst = LineInstance({0, 0, 4}, {{1, 2.0}, {1, 0.0}}, 2);
  const VerificationReport ok = Verify(inst, {{{0, 1, 0.0}}});
  EXPECT_EQ(ok.per_class_dilation[1], std::optional<double>(1.0));
  EXPECT_EQ(ok.covered_weight, 2);
  const VerificationReport bad = Verify(inst, {{{0, 1, 0.5}}});
  EXPECT_FALSE(bad.per_class_dilation[1].has_value());
  EXPECT_FALSE(bad.dilation.has_value());
}

TEST(Verify, RejectsInvalidIndices) {
  const Instance inst = LineInstance({0, 1}, {{1, 1.0}}, 1);
  EXPECT_NUKC_ERROR(Verify(inst, {{{2, 0, 1.0}}}), ErrorCode::kInvalidArgument,
                    "center");
  EXPECT_NUKC_ERROR(Verify(inst, {{{0, 1, 1.0}}}), ErrorCode::kInvalidArgument,
                    "class");
}

TEST(Verify, ChecksCenterRestrictions) {
  const Instance inst(MetricSpace::FromPoints({{0}, {1}}), {}, {{1, 1.0}}, 1,
                      {PointSet{1}});
  EXPECT_FALSE(Verify(inst, {{{0, 0, 1.0}}}).restriction_ok);
  EXPECT_TRUE(Verify(inst, {{{1, 0, 1.0}}}).feasible_for_target);
}

TEST(Scale, MultipliesRadii) {
  const Instance inst = LineInstance({0, 1}, {{1, 4.0}, {2, 1.0}}, 2);
  EXPECT_EQ(Scale(inst, 1.0).classes(), inst.classes());
  const Instance zero = Scale(inst, 0.0);
  EXPECT_EQ(zero.cls(0).radius, 0.0);
  EXPECT_EQ(zero.cls(1).radius, 0.0);
  const Instance twice = Scale(inst, 2.0);
  EXPECT_EQ(twice.cls(0).radius, 8.0);
  EXPECT_EQ(twice.cls(1).radius, 2.0);
  EXPECT_EQ(twice.cls(1).budget, 2);
  EXPECT_EQ(twice.coverage_target(), 2);
  EXPECT_NUKC_ERROR(Scale(inst, -1.0), ErrorCode::kInvalidArgument, "");
}

TEST(InstanceValidation, RejectsMalformedInstances) {
  const MetricSpace s = MetricSpace::FromPoints({{0}, {1}});
  EXPECT_NUKC_ERROR(Instance(s, {}, {}, 0), ErrorCode::kInvalidArgument,
                    "class");
  EXPECT_NUKC_ERROR(Instance(s, {}, {{1, 1.0}, {1, 2.0}}, 0),
                    ErrorCode::kInvalidArgument, "");
  EXPECT_NUKC_ERROR(Instance(s, {}, {{1, 1.0}}, 3), ErrorCode::kInvalidArgument,
                    "");
  EXPECT_NUKC_ERROR(Instance(s, {1, 0}, {{1, 1.0}}, 1),
                    ErrorCode::kInvalidArgument, "");
  EXPECT_NUKC_ERROR(Instance(s, {1}, {{1, 1.0}}, 1),
                    ErrorCode::kInvalidArgument, "weights");
  EXPECT_NUKC_ERROR(Instance(s, {}, {{-1, 1.0}}, 1),
                    ErrorCode::kInvalidArgument, "budget");
  EXPECT_NUKC_ERROR(Instance(s, {}, {{1, 1.0}}, 1, {PointSet{5}}),
                    ErrorCode::kInvalidArgument, "");
}

TEST(InstanceValidation, EqualRadiiAllowed) {
  EXPECT_NO_THROW(LineInstance({0, 1}, {{1, 1.0}, {1, 1.0}}, 2));
}

TEST(InstanceProperties, ScalingCommutesWithVerify) {
  Rng rng(21);
  for (int trial = 0; trial < 200; ++trial) {
    testing::RandomSpec spec;
    spec.n = 2 + rng.Index(8);
    spec.classes = 1 + rng.Index(3);
    spec.max_weight = 3;
    const Instance inst = testing::RandomInstance(rng, spec);
    Solution s;
    for (std::size_t i = 0; i < inst.class_count(); ++i) {
      for (int b = 0; b < inst.cls(i).budget; ++b) {
        s.balls.push_back({rng.Index(inst.size()), i,
                           inst.cls(i).radius * rng.Uniform(0, 2)});
      }
    }
    const double alpha = rng.Uniform(0.1, 4);
    // Same absolute balls: coverage is unchanged and every per-class dilation
    // shrinks by alpha.
    const VerificationReport plain = Verify(inst, s);
    const VerificationReport scaled = Verify(Scale(inst, alpha), s);
    EXPECT_EQ(plain.covered_weight, scaled.covered_weight);
    ASSERT_TRUE(plain.dilation.has_value());
    ASSERT_TRUE(scaled.dilation.has_value());
    EXPECT_NEAR(*scaled.dilation * alpha, *plain.dilation,
                1e-12 * (1 + *plain.dilation))
        << "trial " << trial;
  }
}

TEST(InstanceProperties, CoverageBoundedAndMonotone) {
  Rng rng(22);
  for (int trial = 0; trial < 200; ++trial) {
    testing::RandomSpec spec;
    spec.n = 1 + rng.Index(10);
    spec.max_weight = 4;
    const Instance inst = testing::RandomInstance(rng, spec);
    Solution s;
    Weight last = 0;
    for (int b = 0; b < 5; ++b) {
      s.balls.push_back({rng.Index(inst.size()), rng.Index(inst.class_count()),
                         rng.Uniform(0, 6)});
      const Weight now = Verify(inst, s).covered_weight;
      EXPECT_GE(now, last);
      EXPECT_LE(now, inst.total_weight());
      last = now;
    }
  }
}

}  // namespace
}  // namespace nukc
