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

#include <sstream>

#include "nukc/error.hpp"
#include "nukc/greedy.hpp"
#include "nukc/oracle.hpp"
#include "nukc/solver.hpp"

namespace nukc {

const char* OutcomeKindName(OutcomeKind kind) {
  switch (kind) {
    case OutcomeKind::kSolution: return "solution";
    case OutcomeKind::kInfeasibleAtOne: return "infeasible";
    case OutcomeKind::kNotFoundUncertified: return "not_found";
  }
  return "unknown";
}

namespace {

void RequireCoverAll(const Instance& instance, const char* who) {
  if (instance.coverage_target() != instance.total_weight()) {
    Fail(ErrorCode::kInvalidArgument,
         std::string(who) + " requires coverage_target = total weight");
  }
  if (instance.has_restrictions()) {
    Fail(ErrorCode::kInvalidArgument,
         std::string(who) + " does not support center restrictions");
  }
}

void RequireClasses(const Instance& instance, std::size_t t, const char* who) {
  if (instance.class_count() != t) {
    std::ostringstream msg;
    msg << who << " needs exactly " << t << " radius classes, got "
        << instance.class_count();
    Fail(ErrorCode::kInvalidArgument, msg.str());
  }
}

FeasibilityOutcome Direct(Solution s, int tag, std::string certificate) {
  FeasibilityOutcome out;
  out.kind = OutcomeKind::kSolution;
  out.solution = std::move(s);
  out.dilation_tag = tag;
  out.certificate = std::move(certificate);
  return out;
}

bool WithinOracleCaps(const Instance& instance, const SolveOptions& options) {
  int budget = 0;
  for (const RadiusClass& c : instance.classes()) budget += c.budget;
  const OracleCaps caps;
  return instance.size() <= options.brute_force_fallback_n &&
         instance.size() <= caps.max_points && budget <= caps.max_total_budget;
}

// Greedy failures are only reported as infeasible when brute force confirms.
FeasibilityOutcome UncertifiedOrBrute(const Instance& instance,
                                      const SolveOptions& options,
                                      const char* what) {
  FeasibilityOutcome out;
  if (WithinOracleCaps(instance, options)) {
    if (BruteFeasible(instance, 1.0).feasible) {
      Fail(ErrorCode::kInternal,
           std::string(what) + " failed on a brute-force feasible instance");
    }
    out.kind = OutcomeKind::kInfeasibleAtOne;
    out.certificate = "brute force";
    return out;
  }
  out.kind = OutcomeKind::kNotFoundUncertified;
  out.certificate = std::string(what) + " failed; instance too large to certify";
  return out;
}

}  // namespace

std::variant<Solution, ReducedInstance> ReduceStep(const Instance& instance) {
  const std::size_t t = instance.class_count();
  if (t < 2) Fail(ErrorCode::kInvalidArgument, "reduction needs t >= 2");
  RequireCoverAll(instance, "reduction");

  Partition part = RadiiCompression(instance);
  const RadiusClass last = instance.cls(t - 1);
  if (part.size() <= static_cast<std::size_t>(last.budget)) {
    Solution s;
    for (Point v : part.representatives) {
      s.balls.push_back({v, t - 1, 2.0 * last.radius});
    }
    return s;
  }

  MetricSpace::Restriction sub = instance.space().Restrict(part.RepresentativeSet());
  std::vector<RadiusClass> classes(instance.classes().begin(),
                                   instance.classes().end() - 1);
  for (RadiusClass& c : classes) c.radius *= 2.0;
  const auto target =
      static_cast<Weight>(part.size()) - static_cast<Weight>(last.budget);
  ReducedInstance reduced{
      Instance(std::move(sub.space), {}, std::move(classes), target),
      std::move(part), std::move(sub.to_old)};
  return reduced;
}

Solution LiftReducedSolution(const Instance& original,
                             const ReducedInstance& reduced,
                             const Solution& reduced_solution) {
  const std::size_t t = original.class_count();
  const RadiusClass last = original.cls(t - 1);
  const std::vector<bool> covered =
      CoveredPoints(reduced.instance, reduced_solution);

  Solution s;
  for (const Ball& b : reduced_solution.balls) {
    s.balls.push_back({reduced.to_original[b.center], b.class_index,
                       b.radius + 2.0 * last.radius});
  }
  int missed = 0;
  for (std::size_t i = 0; i < covered.size(); ++i) {
    if (covered[i]) continue;
    ++missed;
    s.balls.push_back({reduced.to_original[i], t - 1, 2.0 * last.radius});
  }
  if (missed > last.budget) {
    std::ostringstream msg;
    msg << "reduced solution leaves " << missed
        << " representatives uncovered, budget k_t = " << last.budget;
    Fail(ErrorCode::kContractViolation, msg.str());
  }
  return s;
}

FeasibilityOutcome Solve3Nukc(const Instance& instance,
                              const SolveOptions& options) {
  RequireClasses(instance, 3, "3-NUkC solver");
  auto step = ReduceStep(instance);
  if (auto* direct = std::get_if<Solution>(&step)) {
    return Direct(std::move(*direct), 2, "radii compression: |L| <= k_3");
  }
  const ReducedInstance& reduced = std::get<ReducedInstance>(step);
  FeasibilityOutcome inner = SolveRobust2(reduced.instance, options);
  FeasibilityOutcome out;
  out.stats = inner.stats;
  out.dilation_tag = 22;
  if (!inner.ok()) {
    out.kind = inner.kind;
    out.certificate = "reduced robust 2-NUkC instance: " + inner.certificate;
    return out;
  }
  out.kind = OutcomeKind::kSolution;
  out.solution = LiftReducedSolution(instance, reduced, inner.solution);
  out.certificate = "reduced robust 2-NUkC: " + inner.certificate;
  return out;
}

FeasibilityOutcome Solve2Nukc(const Instance& instance,
                              const SolveOptions& options) {
  RequireClasses(instance, 2, "2-NUkC solver");
  RequireCoverAll(instance, "2-NUkC solver");
  if (instance.cls(0).budget + instance.cls(1).budget == 0) {
    FeasibilityOutcome out;
    out.certificate = "no balls available";
    return out;
  }
  auto step = ReduceStep(instance);
  if (auto* direct = std::get_if<Solution>(&step)) {
    return Direct(std::move(*direct), 2, "radii compression: |L| <= k_2");
  }
  const ReducedInstance& reduced = std::get<ReducedInstance>(step);
  const RadiusClass big = reduced.instance.cls(0);
  std::optional<Solution> greedy = RobustKCenterGreedy(
      reduced.instance.space(), {}, big.budget, big.radius,
      reduced.instance.coverage_target());
  if (!greedy) {
    return UncertifiedOrBrute(instance, options, "robust k-center greedy");
  }
  return Direct(LiftReducedSolution(instance, reduced, *greedy), 8,
                "reduced robust k-center via greedy");
}

FeasibilityOutcome SolveKCenter(const Instance& instance,
                                const SolveOptions&) {
  RequireClasses(instance, 1, "k-center solver");
  RequireCoverAll(instance, "k-center solver");
  const Partition part = RadiiCompression(instance);
  const RadiusClass c = instance.cls(0);
  if (part.size() > static_cast<std::size_t>(c.budget)) {
    FeasibilityOutcome out;
    std::ostringstream msg;
    msg << part.size() << " points pairwise farther than 2r exceed k = "
        << c.budget;
    out.certificate = msg.str();
    return out;
  }
  Solution s;
  for (Point v : part.representatives) s.balls.push_back({v, 0, 2.0 * c.radius});
  return Direct(std::move(s), 2, "HS clustering at 2r");
}

FeasibilityOutcome SolveRobustKCenter(const Instance& instance,
                                      const SolveOptions& options) {
  RequireClasses(instance, 1, "robust k-center solver");
  if (instance.has_restrictions()) {
    Fail(ErrorCode::kInvalidArgument,
         "robust k-center solver does not support center restrictions");
  }
  const RadiusClass c = instance.cls(0);
  std::optional<Solution> greedy =
      RobustKCenterGreedy(instance.space(), instance.weights(), c.budget,
                          c.radius, instance.coverage_target());
  if (!greedy) {
    return UncertifiedOrBrute(instance, options, "robust k-center greedy");
  }
  return Direct(std::move(*greedy), 3, "greedy with 3r expansion");
}

}  // namespace nukc
