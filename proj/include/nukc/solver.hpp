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

#ifndef NUKC_SOLVER_HPP_
#define NUKC_SOLVER_HPP_

#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "nukc/instance.hpp"
#include "nukc/lp.hpp"
#include "nukc/partition.hpp"

namespace nukc {

enum class OutcomeKind {
  kSolution,
  kInfeasibleAtOne,
  // Heuristic failure that could not be certified as infeasibility.
  kNotFoundUncertified,
};

const char* OutcomeKindName(OutcomeKind kind);

struct SolveStats {
  long lp_solves = 0;
  long simplex_pivots = 0;
  long outer_cuts = 0;
  long inner_cuts = 0;
  long laminar_solves = 0;
};

// A cut together with the instance whose integral hull it is valid for.
struct CutRecord {
  Instance instance;
  LinearInequality cut;
  bool inner = false;
};

struct SolveOptions {
  LpOptions lp;
  // Cap on LP solves per round-or-cut loop; 0 selects 50 n^2.
  long max_lp_solves = 0;
  // Instances up to this size may be certified by brute force (2-NUkC).
  std::size_t brute_force_fallback_n = 12;
  // When set, every generated cut is appended here.
  std::vector<CutRecord>* cut_log = nullptr;
};

struct FeasibilityOutcome {
  OutcomeKind kind = OutcomeKind::kInfeasibleAtOne;
  Solution solution;
  // Certified dilation bound of `solution` relative to the instance radii.
  int dilation_tag = 0;
  std::string certificate;
  SolveStats stats;

  bool ok() const { return kind == OutcomeKind::kSolution; }
};

struct ReducedInstance {
  Instance instance;  // Robust (t-1)-NUkC over the representatives
  Partition partition;
  std::vector<Point> to_original;  // reduced index -> original point
};

// RadiiCompression step. Either a direct dilation-2 cover by class-t balls or
// the reduced robust instance with radii doubled and target |L| - k_t.
std::variant<Solution, ReducedInstance> ReduceStep(const Instance& instance);

// Grows each reduced ball by 2 r_t and covers every L point the reduced
// solution misses with a class-t ball of radius 2 r_t. Throws
// kContractViolation when more than k_t points of L are missed.
Solution LiftReducedSolution(const Instance& original,
                             const ReducedInstance& reduced,
                             const Solution& reduced_solution);

// One round-or-cut step: exactly one of `solution` and `cut` is set.
struct SeparationResult {
  std::optional<Solution> solution;
  std::optional<LinearInequality> cut;
  std::string certificate;
  SolveStats stats;
};

// Inner step on a contracted instance for an arbitrary coverage vector.
// Returns a 4-approximate solution or the cut sum_{L1} cov1 <= k1 - 2.
// Throws kInvalidArgument when the vector breaks a rounding precondition.
SeparationResult SeparateContracted(const Instance& instance,
                                    const CoverageVector& coverages,
                                    const SolveOptions& options = {});

// Outer step: contract around HS representatives of the coverages and solve
// the contracted instance; on failure returns the cut
// sum_{reps} w(rep) cov(rep) <= m - 1.
SeparationResult SeparateRobust2(const Instance& instance,
                                 const CoverageVector& coverages,
                                 const SolveOptions& options = {});

// Round-or-cut 10-approximation for Robust 2-NUkC.
FeasibilityOutcome SolveRobust2(const Instance& instance,
                                const SolveOptions& options = {});

// 4-approximation for contracted instances (r_2 = 0, points pairwise at
// positive distance).
FeasibilityOutcome SolveContracted(const Instance& instance,
                                   const SolveOptions& options = {});

// 22-approximation for 3-NUkC (m = total weight).
FeasibilityOutcome Solve3Nukc(const Instance& instance,
                              const SolveOptions& options = {});

// 8-approximation for 2-NUkC (m = total weight) via the greedy robust
// k-center subroutine.
FeasibilityOutcome Solve2Nukc(const Instance& instance,
                              const SolveOptions& options = {});

// Classic k-center (one class, m = total weight): HS at 2r, tag 2.
FeasibilityOutcome SolveKCenter(const Instance& instance,
                                const SolveOptions& options = {});

// Greedy k-center with outliers (one class), tag 3.
FeasibilityOutcome SolveRobustKCenter(const Instance& instance,
                                      const SolveOptions& options = {});

using FeasibilitySolver =
    std::function<FeasibilityOutcome(const Instance& scaled)>;

// Sorted unique {d(u,v)/r_i : r_i > 0} together with 0. Each ratio is nudged
// up to the smallest double lambda with lambda * r_i >= d(u,v).
std::vector<double> DilationCandidates(const Instance& instance);

struct SearchResult {
  FeasibilityOutcome outcome;
  double lambda = 0.0;  // scale at which `outcome` was obtained
  long solver_calls = 0;
};

// Smallest candidate lambda at which `solver` succeeds on Scale(instance,
// lambda). Radii in the returned solution are relative to the unscaled
// instance. linear_scan walks the candidates in order instead of bisecting.
SearchResult BinarySearchDilation(const Instance& instance,
                                  const FeasibilitySolver& solver,
                                  bool linear_scan = false);

}  // namespace nukc

#endif  // NUKC_SOLVER_HPP_
