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

#ifndef NUKC_LP_HPP_
#define NUKC_LP_HPP_

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "nukc/coverage.hpp"
#include "nukc/instance.hpp"

namespace nukc {

// Absolute tolerance for LP feasibility and cut violation.
inline constexpr double kLpEpsilon = 1e-7;

enum class Sense { kLessEqual, kGreaterEqual, kEqual };

struct Term {
  std::size_t var = 0;
  double coeff = 0.0;
};

struct Constraint {
  std::vector<Term> terms;
  Sense sense = Sense::kLessEqual;
  double rhs = 0.0;
  std::string name;
};

// Feasibility system over nonnegative variables.
class LinearProgram {
 public:
  std::size_t AddVariable(std::string name);
  void AddConstraint(Constraint c);

  std::size_t variable_count() const { return names_.size(); }
  const std::vector<std::string>& variable_names() const { return names_; }
  const std::vector<Constraint>& constraints() const { return constraints_; }

  // Largest violation of any row or sign constraint at x.
  double MaxViolation(std::span<const double> x) const;

 private:
  std::vector<std::string> names_;
  std::vector<Constraint> constraints_;
};

struct LpOptions {
  // 0 selects a size-dependent default.
  long max_pivots = 0;
};

struct LpResult {
  bool feasible = false;
  std::vector<double> values;  // set when feasible
  double phase1_objective = 0.0;
  long pivots = 0;
};

// Dense phase-1 simplex. Dantzig pricing, switching to Bland's rule after
// 2*(rows+cols) pivots. Throws kIterationLimit past max_pivots.
LpResult SolveFeasibility(const LinearProgram& lp, const LpOptions& options = {});

// CPLEX LP text format with a zero objective.
void WriteLpFormat(const LinearProgram& lp, std::ostream& out);

struct CovTerm {
  Point point = 0;
  int cls = 0;  // 0 = cov1, 1 = cov2
  double coeff = 0.0;

  friend bool operator==(const CovTerm&, const CovTerm&) = default;
};

// A cut over coverage variables only.
struct LinearInequality {
  std::vector<CovTerm> terms;  // sorted by (point, cls)
  Sense sense = Sense::kLessEqual;
  double rhs = 0.0;

  double Lhs(const CoverageVector& cov) const;
  // Positive amount by which `cov` violates the inequality, else 0.
  double Violation(const CoverageVector& cov) const;
  std::string ToString() const;

  friend bool operator==(const LinearInequality&,
                         const LinearInequality&) = default;
};

// sum_{v in points} w(v) (cov1(v) + cov2(v)) <= rhs
LinearInequality CoverageCut(std::span<const Point> points,
                             std::span<const Weight> weights, double rhs);
// sum_{v in points} cov1(v) <= rhs
LinearInequality LargeClassCut(std::span<const Point> points, double rhs);

// LP1 of a two-class instance together with its variable layout.
struct Lp1 {
  LinearProgram program;
  std::size_t n = 0;
  std::vector<std::optional<std::size_t>> x1;  // absent when not a center
  std::vector<std::optional<std::size_t>> x2;
  std::vector<std::size_t> cov1;
  std::vector<std::size_t> cov2;
};

Lp1 BuildLp1(const Instance& instance);
void AppendCut(Lp1& lp, const LinearInequality& cut);
CoverageVector ExtractCoverages(const Lp1& lp, std::span<const double> values);

class CutPool {
 public:
  // Throws kStalled on a duplicate and kInternal when `current` does not
  // violate the cut by more than kLpEpsilon.
  void Add(const LinearInequality& cut, const CoverageVector& current);

  std::size_t size() const { return cuts_.size(); }
  const std::vector<LinearInequality>& cuts() const { return cuts_; }

 private:
  std::vector<LinearInequality> cuts_;
};

}  // namespace nukc

#endif  // NUKC_LP_HPP_
