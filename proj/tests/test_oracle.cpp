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

#include <set>

#include "expect_error.hpp"
#include "nukc/oracle.hpp"
#include "test_support.hpp"

namespace nukc {
namespace {

using testing::LineInstance;

TEST(BruteFeasible, ZeroTargetHasEmptyWitness) {
  const Instance inst = LineInstance({0, 10}, {{1, 1.0}}, 0);
  const OracleResult r = BruteFeasible(inst, 1.0);
  EXPECT_TRUE(r.feasible);
  EXPECT_TRUE(r.witness.balls.empty());
}

TEST(BruteFeasible, FarPairNeedsDilationTen) {
  const Instance inst = LineInstance({0, 10}, {{1, 1.0}, {0, 0.5}}, 2);
  EXPECT_FALSE(BruteFeasible(inst, 1.0).feasible);
  const OracleResult r = BruteFeasible(inst, 10.0);
  ASSERT_TRUE(r.feasible);
  EXPECT_EQ(Verify(inst, r.witness).covered_weight, 2);
}

TEST(BruteFeasible, RespectsRestrictions) {
  const Instance inst(MetricSpace::FromPoints({{0}, {1}, {2}}), {},
                      {{1, 1.0}}, 3, {PointSet{0}});
  EXPECT_FALSE(BruteFeasible(inst, 1.0).feasible);
  const OracleResult r = BruteFeasible(inst, 2.0);
  ASSERT_TRUE(r.feasible);
  EXPECT_EQ(r.witness.balls[0].center, 0u);
}

TEST(BruteFeasible, CapsAreEnforced) {
  std::vector<double> xs(15);
  for (std::size_t i = 0; i < xs.size(); ++i) xs[i] = 3.0 * i;
  EXPECT_NUKC_ERROR(BruteFeasible(LineInstance(xs, {{2, 1.0}}, 1), 1.0),
                    ErrorCode::kCapExceeded, "point cap");
  const Instance busy = LineInstance({0, 1, 2, 3, 4, 5, 6, 7, 8},
                                     {{4, 1.0}, {3, 0.5}}, 9);
  EXPECT_NUKC_ERROR(BruteFeasible(busy, 1.0), ErrorCode::kCapExceeded,
                    "budget cap");
  OracleCaps wide;
  wide.max_total_budget = 7;
  EXPECT_NO_THROW(BruteFeasible(busy, 1.0, wide));
}

TEST(BruteFeasible, BudgetCoveringAllCentersIsOneChoice) {
  std::vector<double> xs(10);
  for (std::size_t i = 0; i < xs.size(); ++i) xs[i] = 5.0 * i;
  EXPECT_TRUE(BruteFeasible(LineInstance(xs, {{10, 0.1}}, 10), 1.0).feasible);
}

TEST(BruteOptimum, SinglePointIsZero) {
  const OracleResult r = BruteOptimum(LineInstance({3}, {{1, 2.0}}, 1));
  EXPECT_EQ(r.optimum_dilation, 0.0);
}

// With k = (1, 1) and three points pairwise at distance 2, some ball must
// take two points, so it needs radius 2 = 2 * r.
TEST(BruteOptimum, EquilateralTriangle) {
  const Instance inst(
      MetricSpace::FromMatrix({{0, 2, 2}, {2, 0, 2}, {2, 2, 0}}), {},
      {{1, 1.0}, {1, 1.0}}, 3);
  const OracleResult r = BruteOptimum(inst);
  EXPECT_EQ(r.optimum_dilation, 2.0);
  EXPECT_TRUE(Verify(inst, r.witness).feasible_for_target);
}

TEST(BruteOptimum, NothingFeasibleThrows) {
  EXPECT_NUKC_ERROR(BruteOptimum(LineInstance({0, 1}, {{0, 1.0}}, 1)),
                    ErrorCode::kInvalidArgument, "");
}

TEST(BruteOptimum, PlantedAtMostOne) {
  Rng rng(61);
  for (int trial = 0; trial < 60; ++trial) {
    const auto p = testing::MakePlanted(
        rng.Next(), 2 + rng.Index(11),
        testing::RandomClasses(rng, 1 + rng.Index(3), 4, 0.5, 4.0));
    const OracleResult r = BruteOptimum(p.instance);
    EXPECT_LE(r.optimum_dilation, 1.0) << "trial " << trial;
  }
}

// Every k-tuple with repetition, by plain nested recursion.
Weight NaiveMaxCoverage(const Instance& inst, double alpha) {
  std::vector<std::pair<std::size_t, Point>> balls;
  Weight best = 0;
  auto rec = [&](auto&& self, std::size_t cls, int left) -> void {
    if (cls == inst.class_count()) {
      Weight covered = 0;
      for (Point u = 0; u < inst.size(); ++u) {
        for (const auto& [c, v] : balls) {
          if (inst.space()(u, v) <= alpha * inst.cls(c).radius) {
            covered += inst.weight(u);
            break;
          }
        }
      }
      best = std::max(best, covered);
      return;
    }
    self(self, cls + 1, cls + 1 < inst.class_count()
                            ? inst.cls(cls + 1).budget
                            : 0);
    if (left == 0) return;
    for (Point v = 0; v < inst.size(); ++v) {
      balls.push_back({cls, v});
      self(self, cls, left - 1);
      balls.pop_back();
    }
  };
  rec(rec, 0, inst.cls(0).budget);
  return best;
}

TEST(BruteMaxCoverage, MatchesNaiveEnumeration) {
  Rng rng(62);
  for (int trial = 0; trial < 200; ++trial) {
    testing::RandomSpec spec;
    spec.n = 1 + rng.Index(6);
    spec.classes = 1 + rng.Index(2);
    spec.max_budget = 3;
    spec.side = 6;
    spec.max_weight = 4;
    const Instance inst = testing::RandomInstance(rng, spec);
    const double alpha = rng.Uniform(0, 2);
    EXPECT_EQ(BruteMaxCoverage(inst, alpha), NaiveMaxCoverage(inst, alpha))
        << "trial " << trial;
    EXPECT_EQ(BruteFeasible(inst, alpha).feasible,
              NaiveMaxCoverage(inst, alpha) >= inst.coverage_target());
  }
}

TEST(OracleProperties, MonotoneInDilationWithVerifiedWitness) {
  Rng rng(63);
  for (int trial = 0; trial < 150; ++trial) {
    testing::RandomSpec spec;
    spec.n = 2 + rng.Index(10);
    spec.classes = 1 + rng.Index(3);
    spec.max_weight = 2;
    const Instance inst = testing::RandomInstance(rng, spec);
    bool seen = false;
    for (double alpha : {0.0, 0.5, 1.0, 2.0, 4.0, 8.0, 16.0}) {
      const OracleResult r = BruteFeasible(inst, alpha);
      if (seen) EXPECT_TRUE(r.feasible) << "trial " << trial;
      if (r.feasible) {
        seen = true;
        EXPECT_TRUE(Verify(inst, r.witness).feasible_for_target);
        EXPECT_TRUE(testing::WithinDilation(inst, r.witness, alpha));
      }
    }
  }
}

TEST(EnumerateIntegralCoverages, ZeroBudgets) {
  const Instance inst = LineInstance({0, 4}, {{0, 1.0}, {0, 0.0}}, 0);
  const auto v = EnumerateIntegralCoverages(inst);
  ASSERT_EQ(v.size(), 1u);
  EXPECT_EQ(v[0], CoverageVector::Zero(2));
}

TEST(EnumerateIntegralCoverages, SinglePointOneBall) {
  const Instance inst = LineInstance({0}, {{1, 1.0}, {0, 0.0}}, 0);
  const auto v = EnumerateIntegralCoverages(inst);
  ASSERT_EQ(v.size(), 2u);
  const std::set<std::pair<double, double>> got = {
      {v[0].cov1[0], v[0].cov2[0]}, {v[1].cov1[0], v[1].cov2[0]}};
  EXPECT_EQ(got, (std::set<std::pair<double, double>>{{0, 0}, {1, 0}}));
}

TEST(EnumerateIntegralCoverages, FiltersByTarget) {
  const Instance inst = LineInstance({0}, {{1, 1.0}, {0, 0.0}}, 1);
  const auto v = EnumerateIntegralCoverages(inst);
  ASSERT_EQ(v.size(), 1u);
  EXPECT_EQ(v[0].cov1[0], 1.0);
}

TEST(EnumerateIntegralCoverages, LargeClassTakesPrecedence) {
  const Instance inst = LineInstance({0, 1}, {{1, 1.0}, {1, 0.0}}, 2);
  for (const CoverageVector& cov : EnumerateIntegralCoverages(inst)) {
    for (std::size_t v = 0; v < 2; ++v) {
      EXPECT_LE(cov.total(v), 1.0);
    }
  }
}

TEST(EnumerateIntegralCoverages, VectorsAreDistinctIndicatorsMeetingTarget) {
  Rng rng(64);
  for (int trial = 0; trial < 100; ++trial) {
    testing::RandomSpec spec;
    spec.n = 1 + rng.Index(8);
    spec.max_budget = 4;
    spec.max_weight = 3;
    const Instance inst = testing::RandomInstance(rng, spec);
    const auto vectors = EnumerateIntegralCoverages(inst);
    std::set<std::pair<std::vector<double>, std::vector<double>>> seen;
    for (const CoverageVector& cov : vectors) {
      EXPECT_TRUE(seen.insert({cov.cov1, cov.cov2}).second);
      Weight covered = 0;
      for (Point v = 0; v < inst.size(); ++v) {
        EXPECT_TRUE(cov.cov1[v] == 0.0 || cov.cov1[v] == 1.0);
        EXPECT_TRUE(cov.cov2[v] == 0.0 || cov.cov2[v] == 1.0);
        EXPECT_LE(cov.total(v), 1.0);
        if (cov.total(v) > 0) covered += inst.weight(v);
      }
      EXPECT_GE(covered, inst.coverage_target());
    }
    EXPECT_EQ(vectors.empty(), !BruteFeasible(inst, 1.0).feasible);
  }
}

TEST(EnumerateIntegralCoverages, RequiresTwoClasses) {
  EXPECT_NUKC_ERROR(EnumerateIntegralCoverages(LineInstance({0}, {{1, 1.0}}, 0)),
                    ErrorCode::kInvalidArgument, "");
}

}  // namespace
}  // namespace nukc
