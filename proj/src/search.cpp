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

#include "nukc/error.hpp"
#include "nukc/solver.hpp"

namespace nukc {

std::vector<double> DilationCandidates(const Instance& instance) {
  std::vector<double> out = {0.0};
  const MetricSpace& d = instance.space();
  for (const RadiusClass& c : instance.classes()) {
    if (!(c.radius > 0.0)) continue;
    for (Point u = 0; u < instance.size(); ++u) {
      for (Point v = u + 1; v < instance.size(); ++v) {
        const double dist = d(u, v);
        double lambda = dist / c.radius;
        while (lambda * c.radius < dist) {
          lambda = std::nextafter(lambda, INFINITY);
        }
        out.push_back(lambda);
      }
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

SearchResult BinarySearchDilation(const Instance& instance,
                                  const FeasibilitySolver& solver,
                                  bool linear_scan) {
  const std::vector<double> candidates = DilationCandidates(instance);
  SearchResult result;
  auto run = [&](std::size_t i) {
    ++result.solver_calls;
    return solver(Scale(instance, candidates[i]));
  };

  if (linear_scan) {
    bool uncertified = false;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      FeasibilityOutcome o = run(i);
      if (o.ok()) {
        result.outcome = std::move(o);
        result.lambda = candidates[i];
        return result;
      }
      uncertified |= o.kind == OutcomeKind::kNotFoundUncertified;
    }
    result.outcome.kind = uncertified ? OutcomeKind::kNotFoundUncertified
                                      : OutcomeKind::kInfeasibleAtOne;
    result.outcome.certificate = "no candidate dilation succeeded";
    result.lambda = candidates.back();
    return result;
  }

  std::size_t hi = candidates.size() - 1;
  FeasibilityOutcome best = run(hi);
  if (!best.ok()) {
    result.outcome = std::move(best);
    result.outcome.certificate =
        "infeasible at the largest candidate dilation (budgets insufficient): " +
        result.outcome.certificate;
    result.lambda = candidates[hi];
    return result;
  }
  std::size_t lo = 0;
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo) / 2;
    FeasibilityOutcome o = run(mid);
    if (o.ok()) {
      hi = mid;
      best = std::move(o);
    } else {
      lo = mid + 1;
    }
  }
  result.outcome = std::move(best);
  result.lambda = candidates[hi];
  return result;
}

}  // namespace nukc
