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
#include "nukc/greedy.hpp"
#include "nukc/oracle.hpp"
#include "test_support.hpp"

namespace nukc {
namespace {

using testing::LineInstance;

MetricSpace Line(const std::vector<double>& xs) {
  return LineInstance(xs, {{1, 1.0}}, 0).space();
}

TEST(HsCluster, HandTrace) {
  const MetricSpace s = Line({0, 3, 7});
  const std::vector<double> prio = {1, 0, 0};
  const Partition p = HsCluster(s, PointSet::Range(3), prio, 3.0);
  EXPECT_EQ(p.representatives, (std::vector<Point>{0, 2}));
  EXPECT_EQ(p.children[0], (PointSet{0, 1}));
  EXPECT_EQ(p.children[1], (PointSet{2}));
}

TEST(HsCluster, SinglePoint) {
  const MetricSpace s = Line({4});
  const std::vector<double> prio = {0.5};
  const Partition p = HsCluster(s, PointSet{0}, prio, 1.0);
  EXPECT_EQ(p.representatives, (std::vector<Point>{0}));
}

TEST(HsCluster, ZeroRadiusGivesSingletons) {
  const MetricSpace s = Line({0, 1, 2, 3});
  const std::vector<double> prio = {0, 0, 0, 0};
  const Partition p = HsCluster(s, PointSet::Range(4), prio, 0.0);
  EXPECT_EQ(p.size(), 4u);
  for (std::size_t i = 0; i < 4; ++i) EXPECT_EQ(p.children[i].size(), 1u);
}

TEST(HsCluster, TiesGoToLowestIndex) {
  const MetricSpace s = Line({0, 1, 2});
  const std::vector<double> prio = {0.5, 0.7, 0.7};
  const Partition p = HsCluster(s, PointSet::Range(3), prio, 1.0);
  EXPECT_EQ(p.representatives, (std::vector<Point>{1}));
}

TEST(HsCluster, RejectsEmptyGround) {
  const MetricSpace s = Line({0});
  const std::vector<double> prio = {0};
  EXPECT_NUKC_ERROR(HsCluster(s, PointSet{}, prio, 1.0),
                    ErrorCode::kInvalidArgument, "");
}

TEST(RadiiCompression, LineExample) {
  const Instance inst = LineInstance({0, 1, 10}, {{1, 1.0}}, 3);
  const Partition p = RadiiCompression(inst);
  EXPECT_EQ(p.representatives, (std::vector<Point>{0, 2}));
  EXPECT_EQ(p.children[0], (PointSet{0, 1}));
  EXPECT_EQ(p.children[1], (PointSet{2}));
}

TEST(RadiiCompression, ZeroRadiusKeepsEveryPoint) {
  const Instance inst = LineInstance({0, 1, 2, 5}, {{1, 3.0}, {1, 0.0}}, 4);
  EXPECT_EQ(RadiiCompression(inst).size(), 4u);
}

// Two clusters of diameter 2 r_t = 2, ten radii apart. The first pick (index
// 0) claims its whole cluster, the second pick (index 3) the other one.
TEST(RadiiCompression, TwoSeparatedClusters) {
  const Instance inst =
      LineInstance({0, 1, 2, 12, 13, 14}, {{2, 5.0}, {1, 1.0}}, 6);
  const Partition p = RadiiCompression(inst);
  EXPECT_EQ(p.representatives, (std::vector<Point>{0, 3}));
  EXPECT_EQ(p.children[0], (PointSet{0, 1, 2}));
  EXPECT_EQ(p.children[1], (PointSet{3, 4, 5}));
}

TEST(RadiiCompression, SmallBallsMeetAtMostOneRepresentative) {
  Rng rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    testing::RandomSpec spec;
    spec.n = 1 + rng.Index(14);
    spec.classes = 1 + rng.Index(3);
    spec.robust = false;
    const Instance inst = testing::RandomInstance(rng, spec);
    const Partition p = RadiiCompression(inst);
    const PointSet reps = p.RepresentativeSet();
    const double rt = inst.classes().back().radius;
    EXPECT_EQ(CheckPartition(p, PointSet::Range(inst.size())), "");
    for (Point q = 0; q < inst.size(); ++q) {
      EXPECT_LE(inst.space().Ball(q, rt, reps).size(), 1u);
    }
  }
}

TEST(CgkTree, ZeroRadiusLevelTwoIsEverything) {
  const MetricSpace s = Line({0, 1, 2});
  const CoverageVector cov = CoverageVector::Zero(3);
  const TwoLevelTree t = CgkTree(s, cov, 1.0, 0.0, 4, 2);
  EXPECT_EQ(t.l2.size(), 3u);
  for (const PointSet& c : t.child2) EXPECT_EQ(c.size(), 1u);
}

TEST(CgkTree, SinglePoint) {
  const MetricSpace s = Line({0});
  const TwoLevelTree t = CgkTree(s, CoverageVector::Zero(1), 1.0, 0.5, 4, 2);
  EXPECT_EQ(t.l1, (std::vector<Point>{0}));
  EXPECT_EQ(t.l2, (std::vector<Point>{0}));
}

// Level 2 (radius 2 * 0.5 = 1, priority cov1 + cov2 = .5 .9 .1 .9): picks 1
// (tie with 3, lower index) claiming {0, 1}, then 3 claiming {3}, then 2.
// Level 1 over L2 (radius 4 * 1 = 4, priority cov1 = .5 .4 .1 at 1 3 2):
// picks 1 claiming {1, 2}, then 3.
TEST(CgkTree, FourPointHandTrace) {
  const MetricSpace s = Line({0, 1, 3, 6});
  const CoverageVector cov{{0.2, 0.5, 0.1, 0.4}, {0.3, 0.4, 0.0, 0.5}};
  const TwoLevelTree t = CgkTree(s, cov, 1.0, 0.5, 4, 2);
  EXPECT_EQ(t.l2, (std::vector<Point>{1, 3, 2}));
  EXPECT_EQ(t.child2[0], (PointSet{0, 1}));
  EXPECT_EQ(t.child2[1], (PointSet{3}));
  EXPECT_EQ(t.child2[2], (PointSet{2}));
  EXPECT_EQ(t.l1, (std::vector<Point>{1, 3}));
  EXPECT_EQ(t.child1[0], (PointSet{1, 2}));
  EXPECT_EQ(t.child1[1], (PointSet{3}));
  EXPECT_EQ(CheckTwoLevelTree(s, t), "");
}

TEST(CgkTree, RejectsSmallAlpha) {
  const MetricSpace s = Line({0});
  EXPECT_NUKC_ERROR(CgkTree(s, CoverageVector::Zero(1), 1, 1, 1.5, 2),
                    ErrorCode::kInvalidArgument, "alpha");
}

TEST(CgkTree, CheckerCatchesBrokenSeparation) {
  const MetricSpace s = Line({0, 1});
  TwoLevelTree t;
  t.alpha1 = 4;
  t.alpha2 = 2;
  t.r1 = 1;
  t.r2 = 1;
  t.l2 = {0, 1};
  t.child2 = {PointSet{0}, PointSet{1}};
  t.l1 = {0};
  t.child1 = {PointSet{0, 1}};
  EXPECT_NE(CheckTwoLevelTree(s, t), "");
}

TwoLevelTree TwoSubtrees() {
  TwoLevelTree t;
  t.alpha1 = 4;
  t.alpha2 = 2;
  t.r1 = 1;
  t.r2 = 0;
  t.l2 = {0, 1};
  t.child2 = {PointSet{0}, PointSet{1}};
  t.l1 = {0, 1};
  t.child1 = {PointSet{0}, PointSet{1}};
  return t;
}

TEST(CgkRound, OpensEveryParentWhenBudgetAllows) {
  const std::vector<Weight> w = {5, 3};
  const auto s = CgkRound(TwoSubtrees(), w, 2, 0, 8);
  ASSERT_TRUE(s.has_value());
  EXPECT_EQ(s->balls.size(), 2u);
}

TEST(CgkRound, NoBudgetIsInfeasible) {
  const std::vector<Weight> w = {5, 3};
  EXPECT_FALSE(CgkRound(TwoSubtrees(), w, 0, 0, 1).has_value());
}

// With one level-1 ball, the two choices cover 5 or 3; only the first
// reaches m = 5.
TEST(CgkRound, PicksHeavierSubtree) {
  const std::vector<Weight> w = {5, 3};
  const TwoLevelTree t = TwoSubtrees();
  Weight best = 0;
  Point best_center = 0;
  for (std::size_t i = 0; i < t.l1.size(); ++i) {
    Weight covered = 0;
    for (Point u : t.child1[i]) {
      for (Point p : t.child2[u == 0 ? 0 : 1]) covered += w[p];
    }
    if (covered > best) {
      best = covered;
      best_center = t.l1[i];
    }
  }
  ASSERT_EQ(best, 5);
  const auto s = CgkRound(t, w, 1, 0, 5);
  ASSERT_TRUE(s.has_value());
  ASSERT_EQ(s->balls.size(), 1u);
  EXPECT_EQ(s->balls[0].center, best_center);
  EXPECT_EQ(s->balls[0].class_index, 0u);
  EXPECT_EQ(s->balls[0].radius, 4.0);
}

TEST(CgkProperties, TreeInvariantsOnRandomCoverages) {
  Rng rng(32);
  for (int trial = 0; trial < 300; ++trial) {
    testing::RandomSpec spec;
    spec.n = 1 + rng.Index(20);
    const Instance inst = testing::RandomInstance(rng, spec);
    CoverageVector cov = CoverageVector::Zero(inst.size());
    for (std::size_t v = 0; v < inst.size(); ++v) {
      cov.cov1[v] = rng.Uniform();
      cov.cov2[v] = rng.Uniform() * (1.0 - cov.cov1[v]);
    }
    const double r1 = inst.cls(0).radius;
    const double r2 = inst.cls(1).radius;
    const TwoLevelTree t = CgkTree(inst.space(), cov, r1, r2, 4, 2);
    EXPECT_EQ(CheckTwoLevelTree(inst.space(), t), "");
    std::vector<double> total(inst.size());
    for (std::size_t v = 0; v < inst.size(); ++v) total[v] = cov.total(v);
    EXPECT_EQ(testing::CheckHsPartition(inst.space(),
                                        PointSet::Range(inst.size()), total,
                                        2 * r2, t.l2, t.child2),
              "");
    EXPECT_EQ(testing::CheckHsPartition(inst.space(),
                                        PointSet::FromUnsorted(t.l2), cov.cov1,
                                        4 * r1, t.l1, t.child1),
              "");
  }
}

TEST(RobustKCenterGreedy, ZeroTargetIsEmpty) {
  const Instance inst = LineInstance({0, 5}, {{1, 1.0}}, 0);
  const auto s = RobustKCenterGreedy(inst.space(), inst.weights(), 1, 1.0, 0);
  ASSERT_TRUE(s.has_value());
  EXPECT_TRUE(s->balls.empty());
}

TEST(RobustKCenterGreedy, EnoughBallsCoverEverything) {
  const Instance inst = LineInstance({0, 5, 9, 30}, {{4, 0.1}}, 4);
  const auto s = RobustKCenterGreedy(inst.space(), inst.weights(), 4, 0.1, 4);
  ASSERT_TRUE(s.has_value());
  EXPECT_EQ(Verify(inst, *s).covered_weight, 4);
}

TEST(RobustKCenterGreedy, FailsBelowTarget) {
  const Instance inst = LineInstance({0, 50, 100}, {{1, 1.0}}, 2);
  EXPECT_FALSE(
      RobustKCenterGreedy(inst.space(), inst.weights(), 1, 1.0, 2).has_value());
}

TEST(RobustKCenterGreedy, SucceedsAtTripleRadiusWhenFeasible) {
  Rng rng(33);
  int feasible = 0;
  for (int trial = 0; trial < 300; ++trial) {
    testing::RandomSpec spec;
    spec.n = 2 + rng.Index(11);
    spec.classes = 1;
    spec.side = 10;
    spec.max_weight = 3;
    const Instance inst = testing::RandomInstance(rng, spec);
    if (!BruteFeasible(inst, 1.0).feasible) continue;
    ++feasible;
    const auto s = RobustKCenterGreedy(inst.space(), inst.weights(),
                                       inst.cls(0).budget, inst.cls(0).radius,
                                       inst.coverage_target());
    ASSERT_TRUE(s.has_value()) << "trial " << trial;
    const VerificationReport r = Verify(inst, *s);
    EXPECT_TRUE(r.feasible_for_target);
    EXPECT_TRUE(testing::WithinDilation(inst, *s, 3.0));
  }
  EXPECT_GT(feasible, 50);
}

}  // namespace
}  // namespace nukc
