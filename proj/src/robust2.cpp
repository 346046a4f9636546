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

#include <numeric>
#include <sstream>

#include "nukc/error.hpp"
#include "nukc/greedy.hpp"
#include "nukc/laminar.hpp"
#include "nukc/solver.hpp"

namespace nukc {

namespace {

// Slack for sums of LP values over up to n points.
constexpr double kSumTolerance = 1e-6;

constexpr double kAlpha1 = 4.0;
constexpr double kAlpha2 = 2.0;

void RequireTwoClassesUnrestricted(const Instance& instance, const char* who) {
  if (instance.class_count() != 2) {
    Fail(ErrorCode::kInvalidArgument,
         std::string(who) + " needs exactly two radius classes");
  }
  if (instance.has_restrictions()) {
    Fail(ErrorCode::kInvalidArgument,
         std::string(who) + " does not support center restrictions");
  }
}

long LpSolveCap(const Instance& instance, const SolveOptions& options) {
  if (options.max_lp_solves > 0) return options.max_lp_solves;
  const long n = static_cast<long>(instance.size());
  return std::max(50L * n * n, 50L);
}

void CountLpSolve(SolveStats& stats, long& solves, long cap,
                  const LpResult& result) {
  ++stats.lp_solves;
  stats.simplex_pivots += result.pivots;
  if (++solves > cap) {
    std::ostringstream msg;
    msg << "round-or-cut exceeded " << cap << " LP solves";
    Fail(ErrorCode::kIterationLimit, msg.str());
  }
}

void Accumulate(SolveStats& into, const SolveStats& from) {
  into.lp_solves += from.lp_solves;
  into.simplex_pivots += from.simplex_pivots;
  into.outer_cuts += from.outer_cuts;
  into.inner_cuts += from.inner_cuts;
  into.laminar_solves += from.laminar_solves;
}

double SumOver(const std::vector<Point>& points, const std::vector<double>& v) {
  double s = 0.0;
  for (Point p : points) s += v[p];
  return s;
}

// Branch 2 of the contracted solver for one guess: drop B(v1, rho1), then
// solve the laminar instance with radius-2rho1 balls at L1 and radius-0 balls
// anywhere.
std::optional<Solution> TryGuess(const Instance& instance,
                                 const std::vector<Point>& l1,
                                 std::optional<Point> guess,
                                 SolveStats& stats) {
  const MetricSpace& space = instance.space();
  const double rho1 = instance.cls(0).radius;
  int k1 = instance.cls(0).budget;
  const int k2 = instance.cls(1).budget;
  Weight target = instance.coverage_target();

  PointSet removed;
  if (guess) {
    if (k1 == 0) return std::nullopt;
    removed = space.Ball(*guess, rho1);
    target -= instance.WeightOf(removed);
    --k1;
  }
  const PointSet remaining = PointSet::Range(instance.size()).Minus(removed);
  Solution s;
  if (guess) s.balls.push_back({*guess, 0, rho1});
  if (remaining.empty()) {
    if (target <= 0) return s;
    return std::nullopt;
  }

  const MetricSpace::Restriction sub = space.Restrict(remaining);
  std::vector<Weight> weights;
  for (Point p : sub.to_old) weights.push_back(instance.weight(p));
  std::vector<Point> sub_l1;
  for (Point v : l1) {
    if (sub.to_new[v]) sub_l1.push_back(*sub.to_new[v]);
  }
  std::vector<Point> sub_l2(sub.to_old.size());
  std::iota(sub_l2.begin(), sub_l2.end(), Point{0});

  const LaminarInstance lam =
      BuildLaminar(sub.space, std::move(weights), sub_l1, sub_l2, 2.0 * rho1,
                   0.0, k1, k2, target);
  ++stats.laminar_solves;
  const std::optional<DPSolution> dp = SolveLaminar(lam);
  if (!dp) return std::nullopt;
  for (Point v : dp->chosen_l1) {
    s.balls.push_back({sub.to_old[v], 0, 2.0 * rho1});
  }
  for (Point u : dp->chosen_l2) s.balls.push_back({sub.to_old[u], 1, 0.0});
  return s;
}

void RequireContracted(const Instance& instance) {
  RequireTwoClassesUnrestricted(instance, "contracted solver");
  if (instance.cls(1).radius != 0.0) {
    Fail(ErrorCode::kInvalidArgument, "contracted instance needs r2 = 0");
  }
  const MetricSpace& space = instance.space();
  for (Point u = 0; u < instance.size(); ++u) {
    for (Point v = u + 1; v < instance.size(); ++v) {
      if (!(space(u, v) > 0.0)) {
        std::ostringstream msg;
        msg << "contracted instance has co-located points " << u << " and "
            << v;
        Fail(ErrorCode::kInvalidArgument, msg.str());
      }
    }
  }
}

void RequireCoverageSize(const Instance& instance, const CoverageVector& cov) {
  if (cov.cov1.size() != instance.size() || cov.cov2.size() != instance.size()) {
    Fail(ErrorCode::kInvalidArgument,
         "coverage vector size does not match the instance");
  }
}

// `from_lp` marks points produced by LP1, for which a broken rounding
// guarantee is an internal error rather than a bad argument.
SeparationResult ContractedStep(const Instance& instance,
                                const CoverageVector& cov,
                                const SolveOptions& options, bool from_lp) {
  const ErrorCode guarantee =
      from_lp ? ErrorCode::kInternal : ErrorCode::kInvalidArgument;
  const std::size_t n = instance.size();
  const int k1 = instance.cls(0).budget;
  const int k2 = instance.cls(1).budget;
  const Weight m = instance.coverage_target();
  SeparationResult out;

  const TwoLevelTree tree = CgkTree(instance.space(), cov,
                                    instance.cls(0).radius, 0.0, kAlpha1,
                                    kAlpha2);
  const double mass1 = SumOver(tree.l1, cov.cov1);
  const double mass2 = SumOver(tree.l2, cov.cov2);
  if (mass1 > k1 + kSumTolerance || mass2 > k2 + kSumTolerance) {
    std::ostringstream msg;
    msg << "coverage puts " << mass1 << " / " << mass2
        << " mass on separated centers, budgets " << k1 << " / " << k2;
    Fail(guarantee, msg.str());
  }

  if (mass1 <= k1 - 2 + kLpEpsilon) {
    std::optional<Solution> rounded =
        CgkRound(tree, instance.weights(), k1, k2, m);
    if (!rounded) {
      Fail(guarantee, "rounding guarantee violated: tree DP below target");
    }
    out.solution = std::move(*rounded);
    out.certificate = "tree rounding";
    return out;
  }

  std::vector<std::optional<Point>> guesses;
  for (Point v = 0; v < n; ++v) guesses.emplace_back(v);
  guesses.emplace_back(std::nullopt);
  for (const auto& guess : guesses) {
    std::optional<Solution> s = TryGuess(instance, tree.l1, guess, out.stats);
    if (s) {
      out.solution = std::move(*s);
      out.certificate = guess ? "laminar DP, guessed ball at " +
                                    std::to_string(*guess)
                              : "laminar DP, no guessed ball";
      return out;
    }
  }

  out.cut = LargeClassCut(tree.l1, k1 - 2.0);
  ++out.stats.inner_cuts;
  if (options.cut_log) options.cut_log->push_back({instance, *out.cut, true});
  return out;
}

SeparationResult Robust2Step(const Instance& instance,
                             const CoverageVector& cov,
                             const SolveOptions& options, bool from_lp) {
  const MetricSpace& space = instance.space();
  const std::size_t n = instance.size();
  const double r1 = instance.cls(0).radius;
  const double r2 = instance.cls(1).radius;
  const Weight m = instance.coverage_target();
  SeparationResult out;

  std::vector<double> total(n);
  for (Point v = 0; v < n; ++v) total[v] = cov.total(v);
  const Partition part = HsCluster(space, PointSet::Range(n), total, 2.0 * r2);
  const MetricSpace::Contraction con = space.Contract(part, instance.weights());

  double mass = 0.0;
  std::vector<Weight> rep_weight(n, 0);
  for (std::size_t i = 0; i < part.size(); ++i) {
    rep_weight[part.representatives[i]] = con.weights[i];
    mass += static_cast<double>(con.weights[i]) * total[part.representatives[i]];
  }
  if (from_lp && mass < static_cast<double>(m) - kSumTolerance) {
    std::ostringstream msg;
    msg << "HS representatives carry coverage mass " << mass
        << " below target " << m;
    Fail(ErrorCode::kInternal, msg.str());
  }

  const Instance contracted(con.space, con.weights,
                            {{instance.cls(0).budget, 2.0 * r1},
                             {instance.cls(1).budget, 0.0}},
                            m);
  const FeasibilityOutcome inner = SolveContracted(contracted, options);
  out.stats = inner.stats;
  if (inner.ok()) {
    out.solution.emplace();
    for (const Ball& b : inner.solution.balls) {
      const Point center = con.representatives[b.center];
      const double radius = b.class_index == 0 ? b.radius + 2.0 * r2 : 2.0 * r2;
      out.solution->balls.push_back({center, b.class_index, radius});
    }
    out.certificate = "contracted instance: " + inner.certificate;
    return out;
  }

  out.cut = CoverageCut(part.representatives, rep_weight,
                        static_cast<double>(m - 1));
  out.certificate = "contracted instance: " + inner.certificate;
  ++out.stats.outer_cuts;
  if (options.cut_log) options.cut_log->push_back({instance, *out.cut, false});
  return out;
}

// Shared round-or-cut driver: solve LP1, hand the coverages to `step`, and
// append the returned cut until LP1 becomes infeasible.
template <typename Step>
FeasibilityOutcome RoundOrCut(const Instance& instance,
                              const SolveOptions& options, int tag,
                              const char* lp_name, const char* cut_name,
                              Step step) {
  FeasibilityOutcome out;
  out.dilation_tag = tag;
  if (instance.coverage_target() <= 0) {
    out.kind = OutcomeKind::kSolution;
    out.certificate = "empty target";
    return out;
  }
  Lp1 lp = BuildLp1(instance);
  CutPool pool;
  const long cap = LpSolveCap(instance, options);
  long solves = 0;
  while (true) {
    const LpResult result = SolveFeasibility(lp.program, options.lp);
    CountLpSolve(out.stats, solves, cap, result);
    if (!result.feasible) {
      out.kind = OutcomeKind::kInfeasibleAtOne;
      std::ostringstream msg;
      msg << lp_name << " infeasible after " << pool.size() << " " << cut_name;
      out.certificate = msg.str();
      return out;
    }
    const CoverageVector cov = ExtractCoverages(lp, result.values);
    SeparationResult sep = step(cov);
    Accumulate(out.stats, sep.stats);
    if (sep.solution) {
      out.kind = OutcomeKind::kSolution;
      out.solution = std::move(*sep.solution);
      out.certificate = std::move(sep.certificate);
      return out;
    }
    pool.Add(*sep.cut, cov);
    AppendCut(lp, *sep.cut);
  }
}

}  // namespace

SeparationResult SeparateContracted(const Instance& instance,
                                    const CoverageVector& coverages,
                                    const SolveOptions& options) {
  RequireContracted(instance);
  RequireCoverageSize(instance, coverages);
  return ContractedStep(instance, coverages, options, false);
}

SeparationResult SeparateRobust2(const Instance& instance,
                                 const CoverageVector& coverages,
                                 const SolveOptions& options) {
  RequireTwoClassesUnrestricted(instance, "robust 2-NUkC solver");
  RequireCoverageSize(instance, coverages);
  return Robust2Step(instance, coverages, options, false);
}

FeasibilityOutcome SolveContracted(const Instance& instance,
                                   const SolveOptions& options) {
  RequireContracted(instance);
  return RoundOrCut(instance, options, 4, "contracted LP1", "inner cuts",
                    [&](const CoverageVector& cov) {
                      return ContractedStep(instance, cov, options, true);
                    });
}

FeasibilityOutcome SolveRobust2(const Instance& instance,
                                const SolveOptions& options) {
  RequireTwoClassesUnrestricted(instance, "robust 2-NUkC solver");
  return RoundOrCut(instance, options, 10, "LP1", "outer cuts",
                    [&](const CoverageVector& cov) {
                      return Robust2Step(instance, cov, options, true);
                    });
}

}  // namespace nukc
