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

#include <algorithm>
#include <cmath>
#include <optional>
#include <sstream>

#include "nukc/error.hpp"
#include "nukc/lp.hpp"

namespace nukc {

namespace {

constexpr double kPivotTolerance = 1e-9;
constexpr double kPricingTolerance = 1e-9;

// Row-major dense tableau with a trailing right-hand-side column.
class Tableau {
 public:
  Tableau(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * (cols + 1), 0.0) {}

  double& at(std::size_t r, std::size_t c) { return data_[r * (cols_ + 1) + c]; }
  double at(std::size_t r, std::size_t c) const {
    return data_[r * (cols_ + 1) + c];
  }
  double& rhs(std::size_t r) { return at(r, cols_); }
  double rhs(std::size_t r) const { return at(r, cols_); }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  double* row(std::size_t r) { return &data_[r * (cols_ + 1)]; }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<double> data_;
};

}  // namespace

LpResult SolveFeasibility(const LinearProgram& lp, const LpOptions& options) {
  const std::size_t n = lp.variable_count();
  const auto& constraints = lp.constraints();
  const std::size_t m = constraints.size();

  // Normalized rows (rhs >= 0) and the auxiliary columns each needs.
  std::vector<Sense> sense(m);
  std::vector<double> sign(m, 1.0);
  std::size_t slack_count = 0;
  std::size_t artificial_count = 0;
  for (std::size_t i = 0; i < m; ++i) {
    sense[i] = constraints[i].sense;
    if (constraints[i].rhs < 0.0) {
      sign[i] = -1.0;
      if (sense[i] == Sense::kLessEqual) {
        sense[i] = Sense::kGreaterEqual;
      } else if (sense[i] == Sense::kGreaterEqual) {
        sense[i] = Sense::kLessEqual;
      }
    }
    if (sense[i] != Sense::kEqual) ++slack_count;
    if (sense[i] != Sense::kLessEqual) ++artificial_count;
  }

  const std::size_t first_slack = n;
  const std::size_t first_artificial = n + slack_count;
  const std::size_t cols = n + slack_count + artificial_count;
  Tableau t(m, cols);
  std::vector<std::size_t> basis(m);
  std::vector<double> objective(cols + 1, 0.0);

  std::size_t next_slack = first_slack;
  std::size_t next_artificial = first_artificial;
  for (std::size_t i = 0; i < m; ++i) {
    for (const Term& term : constraints[i].terms) {
      t.at(i, term.var) += sign[i] * term.coeff;
    }
    t.rhs(i) = sign[i] * constraints[i].rhs;
    if (sense[i] == Sense::kLessEqual) {
      t.at(i, next_slack) = 1.0;
      basis[i] = next_slack++;
      continue;
    }
    if (sense[i] == Sense::kGreaterEqual) t.at(i, next_slack++) = -1.0;
    t.at(i, next_artificial) = 1.0;
    basis[i] = next_artificial++;
    // Price out the basic artificial: reduced costs are -sum of its row.
    for (std::size_t c = 0; c < first_artificial; ++c) {
      objective[c] -= t.at(i, c);
    }
    objective[cols] -= t.rhs(i);
  }

  const long bland_after = 2L * static_cast<long>(m + cols);
  const long max_pivots =
      options.max_pivots > 0 ? options.max_pivots
                             : 50L * static_cast<long>(m + cols) + 1000;
  LpResult result;
  while (true) {
    const bool bland = result.pivots >= bland_after;
    std::optional<std::size_t> entering;
    double most_negative = -kPricingTolerance;
    for (std::size_t c = 0; c < cols; ++c) {
      if (objective[c] < most_negative) {
        entering = c;
        if (bland) break;
        most_negative = objective[c];
      }
    }
    if (!entering) break;

    std::optional<std::size_t> leaving;
    double best_ratio = 0.0;
    for (std::size_t r = 0; r < m; ++r) {
      const double a = t.at(r, *entering);
      if (a <= kPivotTolerance) continue;
      const double ratio = std::max(t.rhs(r), 0.0) / a;
      if (!leaving || ratio < best_ratio ||
          (ratio == best_ratio && basis[r] < basis[*leaving])) {
        leaving = r;
        best_ratio = ratio;
      }
    }
    // Phase 1 is bounded below by zero, so an improving column always has a
    // positive entry; this only guards against numerical breakdown.
    if (!leaving) {
      objective[*entering] = 0.0;
      continue;
    }

    if (++result.pivots > max_pivots) {
      std::ostringstream msg;
      msg << "simplex exceeded " << max_pivots << " pivots (" << m
          << " rows, " << cols << " columns)";
      Fail(ErrorCode::kIterationLimit, msg.str());
    }

    const std::size_t pr = *leaving;
    const std::size_t pc = *entering;
    double* prow = t.row(pr);
    const double pivot = prow[pc];
    for (std::size_t c = 0; c <= cols; ++c) prow[c] /= pivot;
    prow[pc] = 1.0;
    for (std::size_t r = 0; r < m; ++r) {
      if (r == pr) continue;
      double* row = t.row(r);
      const double f = row[pc];
      if (f == 0.0) continue;
      for (std::size_t c = 0; c <= cols; ++c) row[c] -= f * prow[c];
      row[pc] = 0.0;
    }
    const double f = objective[pc];
    for (std::size_t c = 0; c <= cols; ++c) objective[c] -= f * prow[c];
    objective[pc] = 0.0;
    basis[pr] = pc;
  }

  result.phase1_objective = -objective[cols];
  result.feasible = result.phase1_objective <= kLpEpsilon;
  if (result.feasible) {
    result.values.assign(n, 0.0);
    for (std::size_t r = 0; r < m; ++r) {
      if (basis[r] < n) result.values[basis[r]] = std::max(t.rhs(r), 0.0);
    }
  }
  return result;
}

}  // namespace nukc
