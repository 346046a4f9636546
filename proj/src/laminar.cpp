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

#include "nukc/laminar.hpp"

#include <algorithm>
#include <array>
#include <sstream>

#include "nukc/error.hpp"

namespace nukc {

namespace {

Weight ChildGain(const LaminarSubtree& tree, std::size_t j, bool bit) {
  return bit ? tree.child_marginal[j] : tree.child_full[j];
}

}  // namespace

std::vector<std::vector<Weight>> LocalCoverageTable(const LaminarSubtree& tree,
                                                    bool bit) {
  const std::size_t children = tree.child_full.size();
  std::vector<std::vector<Weight>> table(
      children + 1, std::vector<Weight>(children + 1, kUnreachable));
  table[0][0] = bit ? tree.parent_weight : 0;
  for (std::size_t j = 1; j <= children; ++j) {
    const Weight gain = ChildGain(tree, j - 1, bit);
    for (std::size_t k = 0; k <= j; ++k) {
      Weight best = table[j - 1][k];
      if (k > 0 && table[j - 1][k - 1] != kUnreachable) {
        best = std::max(best, table[j - 1][k - 1] + gain);
      }
      table[j][k] = best;
    }
  }
  return table;
}

std::vector<std::vector<std::vector<bool>>> LocalFeasibilityTable(
    const LaminarSubtree& tree, bool bit, Weight max_target) {
  const std::size_t children = tree.child_full.size();
  const auto targets = static_cast<std::size_t>(max_target) + 1;
  std::vector<std::vector<std::vector<bool>>> table(
      children + 1,
      std::vector<std::vector<bool>>(children + 1,
                                     std::vector<bool>(targets, false)));
  const Weight base = bit ? tree.parent_weight : 0;
  for (std::size_t m = 0; m < targets; ++m) {
    table[0][0][m] = static_cast<Weight>(m) <= base;
  }
  for (std::size_t j = 1; j <= children; ++j) {
    const Weight gain = ChildGain(tree, j - 1, bit);
    for (std::size_t k = 0; k <= children; ++k) {
      for (std::size_t m = 0; m < targets; ++m) {
        bool ok = table[j - 1][k][m];
        if (!ok && k > 0) {
          const Weight rest = std::max<Weight>(0, static_cast<Weight>(m) - gain);
          ok = table[j - 1][k - 1][static_cast<std::size_t>(rest)];
        }
        table[j][k][m] = ok;
      }
    }
  }
  return table;
}

LaminarOptimum MaximizeLaminarCoverage(std::span<const LaminarSubtree> trees,
                                       int k1, int k2) {
  if (k1 < 0 || k2 < 0) Fail(ErrorCode::kInvalidArgument, "negative budget");
  std::size_t parent_cap = 0;
  std::size_t child_cap = 0;
  for (const LaminarSubtree& t : trees) {
    if (t.child_full.size() != t.child_marginal.size()) {
      Fail(ErrorCode::kInvalidArgument, "child weight lists differ in size");
    }
    if (t.parent_allowed) ++parent_cap;
    child_cap += t.child_full.size();
  }
  const std::size_t a_max = std::min<std::size_t>(parent_cap, k1);
  const std::size_t b_max = std::min<std::size_t>(child_cap, k2);

  // Per subtree and bit, the full local table (kept for reconstruction).
  std::vector<std::array<std::vector<std::vector<Weight>>, 2>> local(
      trees.size());
  struct Choice {
    bool bit = false;
    std::size_t children = 0;
  };
  using Grid = std::vector<std::vector<Weight>>;
  Grid global(a_max + 1, std::vector<Weight>(b_max + 1, kUnreachable));
  global[0][0] = 0;
  std::vector<std::vector<std::vector<Choice>>> choice(trees.size());

  for (std::size_t i = 0; i < trees.size(); ++i) {
    const LaminarSubtree& tree = trees[i];
    local[i][0] = LocalCoverageTable(tree, false);
    if (tree.parent_allowed) local[i][1] = LocalCoverageTable(tree, true);
    const std::size_t kids = tree.child_full.size();

    Grid next(a_max + 1, std::vector<Weight>(b_max + 1, kUnreachable));
    choice[i].assign(a_max + 1, std::vector<Choice>(b_max + 1));
    for (std::size_t a = 0; a <= a_max; ++a) {
      for (std::size_t b = 0; b <= b_max; ++b) {
        for (int bit = 0; bit <= 1; ++bit) {
          if (bit == 1 && (!tree.parent_allowed || a == 0)) continue;
          const std::vector<Weight>& row = local[i][bit][kids];
          for (std::size_t c = 0; c <= std::min(kids, b); ++c) {
            const Weight prev = global[a - bit][b - c];
            if (prev == kUnreachable || row[c] == kUnreachable) continue;
            const Weight value = prev + row[c];
            if (value > next[a][b]) {
              next[a][b] = value;
              choice[i][a][b] = {bit == 1, c};
            }
          }
        }
      }
    }
    global = std::move(next);
  }

  LaminarOptimum out;
  std::size_t best_a = 0;
  std::size_t best_b = 0;
  for (std::size_t a = 0; a <= a_max; ++a) {
    for (std::size_t b = 0; b <= b_max; ++b) {
      if (global[a][b] > global[best_a][best_b]) {
        best_a = a;
        best_b = b;
      }
    }
  }
  out.covered = global[best_a][best_b];
  out.parents_used = static_cast<int>(best_a);
  out.children_used = static_cast<int>(best_b);
  out.choices.resize(trees.size());

  std::size_t a = best_a;
  std::size_t b = best_b;
  for (std::size_t i = trees.size(); i-- > 0;) {
    const Choice c = choice[i][a][b];
    SubtreeChoice& pick = out.choices[i];
    pick.parent = c.bit;
    const auto& table = local[i][c.bit ? 1 : 0];
    std::size_t k = c.children;
    for (std::size_t j = trees[i].child_full.size(); j > 0 && k > 0; --j) {
      if (table[j][k] != table[j - 1][k]) {
        pick.children.push_back(j - 1);
        --k;
      }
    }
    std::reverse(pick.children.begin(), pick.children.end());
    a -= c.bit ? 1 : 0;
    b -= c.children;
  }
  return out;
}

LaminarInstance BuildLaminar(const MetricSpace& space,
                             std::vector<Weight> weights,
                             std::span<const Point> l1,
                             std::span<const Point> l2, double rho1,
                             double rho2, int k1, int k2, Weight target) {
  if (rho1 < rho2 || rho2 < 0.0) {
    Fail(ErrorCode::kInvalidArgument, "laminar radii need rho1 >= rho2 >= 0");
  }
  if (k1 < 0 || k2 < 0) Fail(ErrorCode::kInvalidArgument, "negative budget");
  if (weights.empty()) weights.assign(space.size(), 1);

  std::vector<PointSet> big;
  for (Point v : l1) big.push_back(space.Ball(v, rho1));
  std::vector<PointSet> small;
  for (Point u : l2) small.push_back(space.Ball(u, rho2));

  auto check_disjoint = [](std::span<const Point> centers,
                           const std::vector<PointSet>& balls, int level) {
    for (std::size_t i = 0; i < centers.size(); ++i) {
      for (std::size_t j = i + 1; j < centers.size(); ++j) {
        if (balls[i].Intersects(balls[j])) {
          std::ostringstream msg;
          msg << "level-" << level << " balls at " << centers[i] << " and "
              << centers[j] << " intersect";
          Fail(ErrorCode::kLaminarViolation, msg.str());
        }
      }
    }
  };
  check_disjoint(l1, big, 1);
  check_disjoint(l2, small, 2);

  LaminarInstance inst;
  inst.space = space;
  inst.weights = std::move(weights);
  inst.l1.assign(l1.begin(), l1.end());
  inst.k1 = k1;
  inst.k2 = k2;
  inst.rho1 = rho1;
  inst.rho2 = rho2;
  inst.target = target;
  if (l1.empty()) {
    inst.virtual_parent = true;
    inst.children.assign(1, std::vector<Point>(l2.begin(), l2.end()));
    return inst;
  }
  inst.children.resize(l1.size());
  for (std::size_t j = 0; j < l2.size(); ++j) {
    std::optional<std::size_t> parent;
    for (std::size_t i = 0; i < l1.size(); ++i) {
      if (!big[i].Intersects(small[j])) continue;
      if (parent) {
        std::ostringstream msg;
        msg << "child " << l2[j] << " meets both parents " << l1[*parent]
            << " and " << l1[i];
        Fail(ErrorCode::kLaminarViolation, msg.str());
      }
      parent = i;
    }
    inst.children[parent.value_or(0)].push_back(l2[j]);
  }
  return inst;
}

std::vector<LaminarSubtree> LaminarSubtrees(const LaminarInstance& inst) {
  std::vector<LaminarSubtree> trees;
  const PointSet all = PointSet::Range(inst.space.size());
  for (std::size_t i = 0; i < inst.children.size(); ++i) {
    LaminarSubtree t;
    PointSet parent_ball;
    if (inst.virtual_parent) {
      t.parent_allowed = false;
    } else {
      parent_ball = inst.space.Ball(inst.l1[i], inst.rho1, all);
      t.parent_weight = MetricSpace::TotalWeight(parent_ball, inst.weights);
    }
    for (Point u : inst.children[i]) {
      const PointSet ball = inst.space.Ball(u, inst.rho2, all);
      t.child_full.push_back(MetricSpace::TotalWeight(ball, inst.weights));
      t.child_marginal.push_back(
          MetricSpace::TotalWeight(ball.Minus(parent_ball), inst.weights));
    }
    trees.push_back(std::move(t));
  }
  return trees;
}

DPSolution MaximizeLaminar(const LaminarInstance& inst) {
  const std::vector<LaminarSubtree> trees = LaminarSubtrees(inst);
  const LaminarOptimum best = MaximizeLaminarCoverage(
      trees, inst.virtual_parent ? 0 : inst.k1, inst.k2);
  DPSolution dp;
  dp.covered_weight = best.covered;
  for (std::size_t i = 0; i < best.choices.size(); ++i) {
    if (best.choices[i].parent) dp.chosen_l1.push_back(inst.l1[i]);
    for (std::size_t j : best.choices[i].children) {
      dp.chosen_l2.push_back(inst.children[i][j]);
    }
  }
  return dp;
}

std::optional<DPSolution> SolveLaminar(const LaminarInstance& inst) {
  DPSolution dp = MaximizeLaminar(inst);
  if (dp.covered_weight < inst.target) return std::nullopt;
  return dp;
}

Solution LaminarToSolution(const LaminarInstance& inst, const DPSolution& dp) {
  Solution s;
  for (Point v : dp.chosen_l1) s.balls.push_back({v, 0, inst.rho1});
  for (Point u : dp.chosen_l2) s.balls.push_back({u, 1, inst.rho2});
  return s;
}

Instance LaminarAsInstance(const LaminarInstance& inst) {
  std::vector<Point> l2;
  for (const auto& kids : inst.children) l2.insert(l2.end(), kids.begin(), kids.end());
  Weight total = 0;
  for (Weight w : inst.weights) total += w;
  std::vector<std::optional<PointSet>> restrictions = {
      PointSet::FromUnsorted(inst.l1), PointSet::FromUnsorted(l2)};
  return Instance(inst.space, inst.weights,
                  {{inst.k1, inst.rho1}, {inst.k2, inst.rho2}},
                  std::min(inst.target, total), std::move(restrictions));
}

}  // namespace nukc
