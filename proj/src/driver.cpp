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

#include "nukc/driver.hpp"

#include <chrono>

#include "json_util.hpp"
#include "nukc/error.hpp"

namespace nukc {

namespace {

struct AlgorithmEntry {
  Algorithm algorithm;
  const char* name;
};

constexpr AlgorithmEntry kAlgorithms[] = {
    {Algorithm::kAuto, "auto"},
    {Algorithm::kRobust2, "robust2"},
    {Algorithm::kContracted, "contracted"},
    {Algorithm::kNukc2, "nukc2"},
    {Algorithm::kNukc3, "nukc3"},
    {Algorithm::kKCenter, "kcenter"},
    {Algorithm::kRobustKCenter, "robust-kcenter"},
};

std::size_t ClassesFor(Algorithm a) {
  switch (a) {
    case Algorithm::kRobust2:
    case Algorithm::kContracted:
    case Algorithm::kNukc2:
      return 2;
    case Algorithm::kNukc3:
      return 3;
    case Algorithm::kKCenter:
    case Algorithm::kRobustKCenter:
      return 1;
    case Algorithm::kAuto:
      break;
  }
  return 0;
}

}  // namespace

Algorithm ParseAlgorithm(const std::string& name) {
  for (const auto& e : kAlgorithms) {
    if (name == e.name) return e.algorithm;
  }
  Fail(ErrorCode::kInvalidArgument, "unknown algorithm \"" + name + "\"");
}

const char* AlgorithmName(Algorithm algorithm) {
  for (const auto& e : kAlgorithms) {
    if (e.algorithm == algorithm) return e.name;
  }
  return "unknown";
}

Algorithm ResolveAlgorithm(Algorithm requested, const Instance& instance) {
  const std::size_t t = instance.class_count();
  if (requested != Algorithm::kAuto) {
    if (ClassesFor(requested) != t) {
      Fail(ErrorCode::kInvalidArgument,
           std::string("algorithm ") + AlgorithmName(requested) +
               " needs " + std::to_string(ClassesFor(requested)) +
               " classes, instance has " + std::to_string(t));
    }
    return requested;
  }
  const bool cover_all = instance.coverage_target() == instance.total_weight() &&
                         !instance.has_restrictions();
  switch (t) {
    case 1:
      return cover_all ? Algorithm::kKCenter : Algorithm::kRobustKCenter;
    case 2:
      return cover_all ? Algorithm::kNukc2 : Algorithm::kRobust2;
    case 3:
      return Algorithm::kNukc3;
    default:
      Fail(ErrorCode::kInvalidArgument,
           "no solver for " + std::to_string(t) + " radius classes");
  }
}

FeasibilityOutcome RunAlgorithm(Algorithm algorithm, const Instance& instance,
                                const SolveOptions& options) {
  switch (ResolveAlgorithm(algorithm, instance)) {
    case Algorithm::kRobust2: return SolveRobust2(instance, options);
    case Algorithm::kContracted: return SolveContracted(instance, options);
    case Algorithm::kNukc2: return Solve2Nukc(instance, options);
    case Algorithm::kNukc3: return Solve3Nukc(instance, options);
    case Algorithm::kKCenter: return SolveKCenter(instance, options);
    case Algorithm::kRobustKCenter: return SolveRobustKCenter(instance, options);
    case Algorithm::kAuto: break;
  }
  Fail(ErrorCode::kInternal, "unresolved algorithm");
}

RunReport RunSolve(const Instance& instance, const SolveRequest& request) {
  const auto start = std::chrono::steady_clock::now();
  RunReport report;
  report.algorithm = ResolveAlgorithm(request.algorithm, instance);
  report.binary_search = request.binary_search;
  auto solver = [&](const Instance& scaled) {
    return RunAlgorithm(report.algorithm, scaled, request.options);
  };
  if (request.binary_search) {
    SearchResult r =
        BinarySearchDilation(instance, solver, request.linear_scan);
    report.outcome = std::move(r.outcome);
    report.lambda = r.lambda;
    report.solver_calls = r.solver_calls;
  } else {
    report.lambda = request.dilation;
    report.outcome = solver(Scale(instance, request.dilation));
    report.solver_calls = 1;
  }
  if (report.outcome.ok()) {
    report.verification = Verify(instance, report.outcome.solution);
  }
  report.wall_time_ms = std::chrono::duration<double, std::milli>(
                            std::chrono::steady_clock::now() - start)
                            .count();
  return report;
}

std::string RunReportToJson(const Instance& instance, const RunReport& report) {
  using internal::Json;
  const FeasibilityOutcome& o = report.outcome;
  Json root;
  root["outcome"] = OutcomeKindName(o.kind);
  root["algorithm"] = AlgorithmName(report.algorithm);
  root["mode"] = report.binary_search ? "binary-search" : "fixed";
  root["lambda"] = report.lambda;
  root["dilation_tag"] = o.ok() ? Json(o.dilation_tag) : Json(nullptr);
  if (o.ok()) {
    root["solution"] = internal::SolutionToJsonValue(o.solution);
    root["verification"] =
        internal::VerificationToJsonValue(instance, *report.verification);
  }
  root["certificate"] = o.certificate;
  Json stats;
  stats["solver_calls"] = report.solver_calls;
  stats["lp_solves"] = o.stats.lp_solves;
  stats["simplex_pivots"] = o.stats.simplex_pivots;
  stats["outer_cuts"] = o.stats.outer_cuts;
  stats["inner_cuts"] = o.stats.inner_cuts;
  stats["laminar_solves"] = o.stats.laminar_solves;
  root["stats"] = std::move(stats);
  root["wall_time_ms"] = report.wall_time_ms;
  return root.dump(2) + "\n";
}

}  // namespace nukc
