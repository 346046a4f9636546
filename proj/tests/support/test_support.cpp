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

#include "test_support.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <set>
#include <sstream>

namespace nukc::testing {

Instance LineInstance(const std::vector<double>& xs,
                      std::vector<RadiusClass> classes, Weight target,
                      std::vector<Weight> weights) {
  std::vector<std::vector<double>> pts;
  for (double x : xs) pts.push_back({x});
  return Instance(MetricSpace::FromPoints(pts), std::move(weights),
                  std::move(classes), target);
}

Planted MakePlanted(std::uint64_t seed, std::size_t n,
                    std::vector<RadiusClass> classes,
                    std::optional<Weight> target) {
  GenerateSpec spec;
  spec.seed = seed;
  spec.n = n;
  spec.classes = std::move(classes);
  spec.planted = true;
  spec.target = target;
  GeneratedInstance g = GenerateInstance(spec);
  return {g.ToInstance(), *g.plant};
}

std::vector<RadiusClass> RandomClasses(Rng& rng, std::size_t t, int max_budget,
                                       double lo, double hi) {
  std::vector<RadiusClass> classes(t);
  std::vector<double> radii;
  const int steps = static_cast<int>(std::round((hi - lo) / 0.5));
  for (std::size_t i = 0; i < t; ++i) radii.push_back(lo + 0.5 * rng.Int(0, steps));
  std::sort(radii.rbegin(), radii.rend());
  for (std::size_t i = 0; i < t; ++i) classes[i].radius = radii[i];
  const int balls = rng.Int(1, max_budget);
  for (int b = 0; b < balls; ++b) ++classes[rng.Index(t)].budget;
  return classes;
}

Instance RandomInstance(Rng& rng, const RandomSpec& spec) {
  std::vector<std::vector<double>> pts;
  const int cells = static_cast<int>(2 * spec.side);
  for (std::size_t i = 0; i < spec.n; ++i) {
    pts.push_back({0.5 * rng.Int(0, cells), 0.5 * rng.Int(0, cells)});
  }
  std::vector<RadiusClass> classes = RandomClasses(
      rng, spec.classes, spec.max_budget, spec.radius_lo, spec.radius_hi);
  if (spec.zero_radius_chance > 0.0 && rng.Uniform() < spec.zero_radius_chance) {
    classes.back().radius = 0.0;
  }
  std::vector<Weight> weights;
  Weight total = 0;
  for (std::size_t i = 0; i < spec.n; ++i) {
    weights.push_back(rng.Int(1, spec.max_weight));
    total += weights.back();
  }
  const Weight target =
      spec.robust ? rng.Int(1, static_cast<int>(total)) : total;
  return Instance(MetricSpace::FromPoints(pts), std::move(weights),
                  std::move(classes), target);
}

Instance RandomContracted(Rng& rng, std::size_t n, int max_budget,
                          int max_weight) {
  std::set<std::pair<int, int>> used;
  std::vector<std::vector<double>> pts;
  while (pts.size() < n) {
    const int x = rng.Int(0, 24);
    const int y = rng.Int(0, 24);
    if (!used.insert({x, y}).second) continue;
    pts.push_back({0.5 * x, 0.5 * y});
  }
  std::vector<RadiusClass> classes = {{0, 0.5 * rng.Int(1, 8)}, {0, 0.0}};
  const int balls = rng.Int(1, max_budget);
  for (int b = 0; b < balls; ++b) ++classes[rng.Index(2)].budget;
  std::vector<Weight> weights;
  Weight total = 0;
  for (std::size_t i = 0; i < n; ++i) {
    weights.push_back(rng.Int(1, max_weight));
    total += weights.back();
  }
  return Instance(MetricSpace::FromPoints(pts), std::move(weights),
                  std::move(classes), rng.Int(1, static_cast<int>(total)));
}

LaminarInstance RandomLaminar(Rng& rng, std::size_t max_parents,
                              std::size_t max_children, int max_weight,
                              bool allow_empty_l1) {
  const double rho2 = 0.5 * rng.Int(0, 3);
  const double rho1 = rho2 + 0.5 * rng.Int(0, 6);
  const bool empty = allow_empty_l1 && rng.Int(0, 3) == 0;
  const std::size_t groups =
      empty ? static_cast<std::size_t>(rng.Int(1, 3))
            : static_cast<std::size_t>(rng.Int(1, static_cast<int>(max_parents)));

  std::vector<double> xs;
  std::vector<Point> l1;
  std::vector<Point> l2;
  const double reach = rho1 + rho2;
  const double spacing = 2.0 * rho2 + 0.5;
  for (std::size_t g = 0; g < groups; ++g) {
    const double center = 100.0 * static_cast<double>(g);
    const Point parent = xs.size();
    xs.push_back(center);
    if (!empty) l1.push_back(parent);

    std::vector<int> slots;
    // Children sit inside the parent ball so they meet it as point sets.
    const int span = static_cast<int>(std::floor(rho1 / spacing));
    for (int s = -span; s <= span; ++s) slots.push_back(s);
    for (std::size_t i = slots.size(); i > 1; --i) {
      std::swap(slots[i - 1], slots[rng.Index(i)]);
    }
    const std::size_t want = std::min<std::size_t>(
        slots.size(), static_cast<std::size_t>(
                          rng.Int(0, static_cast<int>(max_children))));
    for (std::size_t c = 0; c < want; ++c) {
      if (slots[c] == 0) {
        l2.push_back(parent);
      } else {
        l2.push_back(xs.size());
        xs.push_back(center + spacing * slots[c]);
      }
    }
    const int fillers = rng.Int(0, 4);
    const int wide = static_cast<int>(4.0 * (reach + 2.0));
    for (int f = 0; f < fillers; ++f) {
      xs.push_back(center + 0.25 * rng.Int(-wide, wide));
    }
  }
  std::sort(l2.begin(), l2.end());
  std::vector<std::vector<double>> pts;
  for (double x : xs) pts.push_back({x});
  std::vector<Weight> weights;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    weights.push_back(rng.Int(1, max_weight));
  }
  const int k1 = rng.Int(0, static_cast<int>(l1.size()));
  const int k2 = rng.Int(0, static_cast<int>(l2.size()));
  return BuildLaminar(MetricSpace::FromPoints(pts), std::move(weights), l1, l2,
                      rho1, rho2, k1, k2, 0);
}

Weight ExhaustiveLaminarOptimum(const LaminarInstance& inst) {
  std::vector<Point> l2;
  for (const auto& c : inst.children) l2.insert(l2.end(), c.begin(), c.end());
  const std::vector<Point>& l1 = inst.l1;
  const std::size_t n = inst.space.size();
  auto weight = [&](Point p) {
    return inst.weights.empty() ? Weight{1} : inst.weights[p];
  };
  Weight best = 0;
  for (unsigned a = 0; a < (1U << l1.size()); ++a) {
    if (std::popcount(a) > inst.k1) continue;
    for (unsigned b = 0; b < (1U << l2.size()); ++b) {
      if (std::popcount(b) > inst.k2) continue;
      Weight covered = 0;
      for (Point u = 0; u < n; ++u) {
        bool in = false;
        for (std::size_t i = 0; i < l1.size() && !in; ++i) {
          in = ((a >> i) & 1U) && inst.space(u, l1[i]) <= inst.rho1;
        }
        for (std::size_t i = 0; i < l2.size() && !in; ++i) {
          in = ((b >> i) & 1U) && inst.space(u, l2[i]) <= inst.rho2;
        }
        if (in) covered += weight(u);
      }
      best = std::max(best, covered);
    }
  }
  return best;
}

std::string CheckHsPartition(const MetricSpace& space, const PointSet& within,
                             const std::vector<double>& priorities, double r,
                             const std::vector<Point>& reps,
                             const std::vector<PointSet>& blocks) {
  std::ostringstream err;
  if (reps.size() != blocks.size()) return "reps/blocks size mismatch";
  std::vector<int> seen(space.size(), 0);
  for (std::size_t i = 0; i < reps.size(); ++i) {
    if (!blocks[i].contains(reps[i])) {
      err << "rep " << reps[i] << " not in its block";
      return err.str();
    }
    for (Point u : blocks[i]) {
      if (!within.contains(u)) {
        err << "point " << u << " outside the ground set";
        return err.str();
      }
      ++seen[u];
      if (!(space(u, reps[i]) <= r)) {
        err << "point " << u << " farther than r from rep " << reps[i];
        return err.str();
      }
      if (priorities[u] > priorities[reps[i]]) {
        err << "point " << u << " outranks rep " << reps[i];
        return err.str();
      }
    }
  }
  for (Point u : within) {
    if (seen[u] != 1) {
      err << "point " << u << " in " << seen[u] << " blocks";
      return err.str();
    }
  }
  for (std::size_t i = 0; i < reps.size(); ++i) {
    for (std::size_t j = i + 1; j < reps.size(); ++j) {
      if (!(space(reps[i], reps[j]) > r)) {
        err << "reps " << reps[i] << ", " << reps[j] << " not > r apart";
        return err.str();
      }
    }
  }
  return "";
}

double WorstDilation(const Instance& instance, const Solution& solution) {
  double worst = 0.0;
  for (const Ball& b : solution.balls) {
    const double r = instance.cls(b.class_index).radius;
    if (r > 0.0) {
      worst = std::max(worst, b.radius / r);
    } else if (b.radius > 0.0) {
      return std::numeric_limits<double>::infinity();
    }
  }
  return worst;
}

bool WithinDilation(const Instance& instance, const Solution& solution,
                    double tag) {
  for (const Ball& b : solution.balls) {
    const double bound = tag * instance.cls(b.class_index).radius;
    if (b.radius > bound * (1.0 + 1e-12)) return false;
  }
  return true;
}

namespace {

struct Row {
  std::vector<double> a;
  Sense sense;
  double b;
};

bool SolveSquare(std::vector<std::vector<double>> m, std::vector<double> rhs,
                 std::vector<double>* x) {
  const std::size_t n = rhs.size();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    for (std::size_t r = c + 1; r < n; ++r) {
      if (std::abs(m[r][c]) > std::abs(m[piv][c])) piv = r;
    }
    if (std::abs(m[piv][c]) < 1e-12) return false;
    std::swap(m[c], m[piv]);
    std::swap(rhs[c], rhs[piv]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c) continue;
      const double f = m[r][c] / m[c][c];
      if (f == 0.0) continue;
      for (std::size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
      rhs[r] -= f * rhs[c];
    }
  }
  x->assign(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) (*x)[i] = rhs[i] / m[i][i];
  return true;
}

bool Satisfies(const std::vector<Row>& rows, const std::vector<double>& x,
               double tol) {
  for (double v : x) {
    if (v < -tol) return false;
  }
  for (const Row& row : rows) {
    double lhs = 0.0;
    for (std::size_t j = 0; j < x.size(); ++j) lhs += row.a[j] * x[j];
    switch (row.sense) {
      case Sense::kLessEqual:
        if (lhs > row.b + tol) return false;
        break;
      case Sense::kGreaterEqual:
        if (lhs < row.b - tol) return false;
        break;
      case Sense::kEqual:
        if (std::abs(lhs - row.b) > tol) return false;
        break;
    }
  }
  return true;
}

}  // namespace

CoverageVector RandomCoverage(Rng& rng, const Instance& instance) {
  const std::size_t n = instance.size();
  CoverageVector cov = CoverageVector::Zero(n);
  // 0: dense, 1: about half the points zeroed, 2: sparse and saturated.
  const int shape = rng.Int(0, 2);
  for (std::size_t v = 0; v < n; ++v) {
    if (shape >= 1 && rng.Index(2) == 1) continue;
    double a = rng.Uniform();
    double b = rng.Uniform() * (1.0 - a);
    if (shape == 2 && a + b > 0.0) {
      const double s = a + b;
      a /= s;
      b /= s;
    }
    const bool swap = rng.Index(2) == 1;
    cov.cov1[v] = swap ? b : a;
    cov.cov2[v] = swap ? a : b;
  }
  for (int cls = 0; cls < 2; ++cls) {
    std::vector<double>& c = cls == 0 ? cov.cov1 : cov.cov2;
    const double budget = instance.cls(cls).budget;
    double sum = 0.0;
    for (double x : c) sum += x;
    if (sum > budget) {
      for (double& x : c) x *= budget / sum;
    }
  }
  return cov;
}

VertexOracleResult VertexEnumerationFeasible(const LinearProgram& lp) {
  const std::size_t n = lp.variable_count();
  std::vector<Row> rows;
  for (const Constraint& c : lp.constraints()) {
    Row row{std::vector<double>(n, 0.0), c.sense, c.rhs};
    for (const Term& t : c.terms) row.a[t.var] += t.coeff;
    rows.push_back(std::move(row));
  }
  VertexOracleResult out;
  // Candidate tight hyperplanes: every row, then every bound x_j = 0.
  const std::size_t total = rows.size() + n;
  std::vector<std::size_t> pick;
  auto try_basis = [&]() {
    std::vector<std::vector<double>> m;
    std::vector<double> rhs;
    for (std::size_t h : pick) {
      if (h < rows.size()) {
        m.push_back(rows[h].a);
        rhs.push_back(rows[h].b);
      } else {
        std::vector<double> e(n, 0.0);
        e[h - rows.size()] = 1.0;
        m.push_back(std::move(e));
        rhs.push_back(0.0);
      }
    }
    std::vector<double> x;
    if (!SolveSquare(m, rhs, &x)) return false;
    if (!Satisfies(rows, x, 1e-9)) return false;
    out.feasible = true;
    out.vertex = x;
    return true;
  };
  auto recurse = [&](auto&& self, std::size_t from) -> bool {
    if (pick.size() == n) return try_basis();
    for (std::size_t h = from; h < total; ++h) {
      if (total - h < n - pick.size()) break;
      pick.push_back(h);
      if (self(self, h + 1)) return true;
      pick.pop_back();
    }
    return false;
  };
  if (n == 0) {
    out.feasible = Satisfies(rows, {}, 1e-9);
    return out;
  }
  recurse(recurse, 0);
  return out;
}

LinearProgram RandomLp(Rng& rng, std::size_t max_vars, std::size_t max_rows) {
  LinearProgram lp;
  const int vars = rng.Int(1, static_cast<int>(max_vars));
  for (int j = 0; j < vars; ++j) lp.AddVariable("x" + std::to_string(j));
  const int rows = rng.Int(0, static_cast<int>(max_rows));
  for (int r = 0; r < rows; ++r) {
    Constraint c;
    for (int j = 0; j < vars; ++j) {
      if (rng.Int(0, 2) == 0) continue;
      const int a = rng.Int(-3, 3);
      if (a != 0) c.terms.push_back({static_cast<std::size_t>(j), double(a)});
    }
    const int s = rng.Int(0, 6);
    c.sense = s < 3 ? Sense::kLessEqual
                    : (s < 6 ? Sense::kGreaterEqual : Sense::kEqual);
    c.rhs = rng.Int(-6, 8);
    c.name = "r" + std::to_string(r);
    lp.AddConstraint(std::move(c));
  }
  return lp;
}

}  // namespace nukc::testing
