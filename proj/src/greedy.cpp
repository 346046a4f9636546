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

#include "nukc/greedy.hpp"

#include <sstream>

#include "nukc/error.hpp"
#include "nukc/laminar.hpp"

namespace nukc {

Partition HsCluster(const MetricSpace& space, const PointSet& within,
                    std::span<const double> priorities, double r) {
  if (within.empty()) Fail(ErrorCode::kInvalidArgument, "HS over empty set");
  if (priorities.size() != space.size()) {
    Fail(ErrorCode::kInvalidArgument, "one priority per point required");
  }
  if (!(r >= 0.0)) Fail(ErrorCode::kInvalidArgument, "negative HS radius");

  std::vector<bool> remaining(space.size(), false);
  for (Point p : within) remaining[p] = true;
  std::size_t left = within.size();

  Partition out;
  while (left > 0) {
    std::optional<Point> best;
    for (Point p : within) {
      if (remaining[p] && (!best || priorities[p] > priorities[*best])) {
        best = p;
      }
    }
    const Point v = *best;
    std::vector<Point> child;
    for (Point u : within) {
      if (remaining[u] && space(u, v) <= r) {
        child.push_back(u);
        remaining[u] = false;
        --left;
      }
    }
    out.representatives.push_back(v);
    out.children.push_back(PointSet::FromSorted(std::move(child)));
  }
  return out;
}

Partition RadiiCompression(const Instance& instance) {
  const std::vector<double> uniform(instance.size(), 0.0);
  return HsCluster(instance.space(), PointSet::Range(instance.size()), uniform,
                   2.0 * instance.classes().back().radius);
}

TwoLevelTree CgkTree(const MetricSpace& space, const CoverageVector& coverages,
                     double r1, double r2, double alpha1, double alpha2) {
  if (alpha1 < 2.0 || alpha2 < 2.0) {
    Fail(ErrorCode::kInvalidArgument, "CGK requires alpha1, alpha2 >= 2");
  }
  const std::size_t n = space.size();
  if (coverages.size() != n) {
    Fail(ErrorCode::kInvalidArgument, "coverage vector size mismatch");
  }
  std::vector<double> total(n);
  for (std::size_t v = 0; v < n; ++v) total[v] = coverages.total(v);

  TwoLevelTree tree;
  tree.alpha1 = alpha1;
  tree.alpha2 = alpha2;
  tree.r1 = r1;
  tree.r2 = r2;

  Partition level2 =
      HsCluster(space, PointSet::Range(n), total, alpha2 * r2);
  tree.l2 = std::move(level2.representatives);
  tree.child2 = std::move(level2.children);

  Partition level1 = HsCluster(space, PointSet::FromUnsorted(tree.l2),
                               coverages.cov1, alpha1 * r1);
  tree.l1 = std::move(level1.representatives);
  tree.child1 = std::move(level1.children);
  return tree;
}

namespace {

std::string CheckLevel(const MetricSpace& space, const std::vector<Point>& reps,
                       const std::vector<PointSet>& children,
                       const PointSet& ground, double radius, int level) {
  std::ostringstream msg;
  for (std::size_t i = 0; i < reps.size(); ++i) {
    for (std::size_t j = i + 1; j < reps.size(); ++j) {
      if (!(space(reps[i], reps[j]) > radius)) {
        msg << "level " << level << " representatives " << reps[i] << " and "
            << reps[j] << " are within " << radius;
        return msg.str();
      }
    }
    for (Point u : children[i]) {
      if (space(u, reps[i]) > radius) {
        msg << "level " << level << " child " << u << " farther than "
            << radius << " from " << reps[i];
        return msg.str();
      }
    }
  }
  const std::string defect = CheckPartition({reps, children}, ground);
  if (!defect.empty()) {
    msg << "level " << level << ": " << defect;
    return msg.str();
  }
  return {};
}

}  // namespace

std::string CheckTwoLevelTree(const MetricSpace& space,
                              const TwoLevelTree& tree) {
  if (tree.l1.size() != tree.child1.size() ||
      tree.l2.size() != tree.child2.size()) {
    return "representative and child list sizes differ";
  }
  std::string defect =
      CheckLevel(space, tree.l2, tree.child2, PointSet::Range(space.size()),
                 tree.alpha2 * tree.r2, 2);
  if (!defect.empty()) return defect;
  return CheckLevel(space, tree.l1, tree.child1,
                    PointSet::FromUnsorted(tree.l2), tree.alpha1 * tree.r1, 1);
}

std::optional<Solution> CgkRound(const TwoLevelTree& tree,
                                 std::span<const Weight> weights, int k1,
                                 int k2, Weight m) {
  std::vector<std::optional<std::size_t>> l2_index;
  for (std::size_t i = 0; i < tree.l2.size(); ++i) {
    const Point u = tree.l2[i];
    if (u >= l2_index.size()) l2_index.resize(u + 1);
    l2_index[u] = i;
  }
  std::vector<LaminarSubtree> subtrees;
  std::vector<std::vector<Point>> child_points;
  for (std::size_t i = 0; i < tree.l1.size(); ++i) {
    LaminarSubtree st;
    std::vector<Point> kids;
    for (Point u : tree.child1[i]) {
      const Weight w =
          MetricSpace::TotalWeight(tree.child2[*l2_index[u]], weights);
      st.parent_weight += w;
      st.child_full.push_back(w);
      st.child_marginal.push_back(0);
      kids.push_back(u);
    }
    subtrees.push_back(std::move(st));
    child_points.push_back(std::move(kids));
  }
  const LaminarOptimum best = MaximizeLaminarCoverage(subtrees, k1, k2);
  if (best.covered < m) return std::nullopt;

  const double big = tree.alpha1 * tree.r1 + tree.alpha2 * tree.r2;
  const double small = tree.alpha2 * tree.r2;
  Solution s;
  for (std::size_t i = 0; i < best.choices.size(); ++i) {
    if (best.choices[i].parent) s.balls.push_back({tree.l1[i], 0, big});
    for (std::size_t j : best.choices[i].children) {
      s.balls.push_back({child_points[i][j], 1, small});
    }
  }
  return s;
}

std::optional<Solution> RobustKCenterGreedy(const MetricSpace& space,
                                            std::span<const Weight> weights,
                                            int k, double r, Weight m) {
  if (k < 0 || m < 0) Fail(ErrorCode::kInvalidArgument, "negative k or m");
  const std::size_t n = space.size();
  auto weight = [&](Point p) -> Weight {
    return weights.empty() ? 1 : weights[p];
  };
  Solution s;
  if (m <= 0) return s;

  std::vector<bool> covered(n, false);
  Weight total = 0;
  for (int round = 0; round < k && total < m; ++round) {
    std::optional<Point> best;
    Weight best_gain = -1;
    for (Point v = 0; v < n; ++v) {
      Weight gain = 0;
      for (Point u = 0; u < n; ++u) {
        if (!covered[u] && space(u, v) <= r) gain += weight(u);
      }
      if (gain > best_gain) {
        best_gain = gain;
        best = v;
      }
    }
    if (!best || best_gain == 0) break;
    const double expanded = 3.0 * r;
    for (Point u = 0; u < n; ++u) {
      if (!covered[u] && space(u, *best) <= expanded) {
        covered[u] = true;
        total += weight(u);
      }
    }
    s.balls.push_back({*best, 0, expanded});
  }
  if (total < m) return std::nullopt;
  return s;
}

}  // namespace nukc
