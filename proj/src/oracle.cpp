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

#include "nukc/oracle.hpp"

#include <cstdint>
#include <functional>
#include <set>
#include <sstream>

#include "nukc/error.hpp"
#include "nukc/solver.hpp"

namespace nukc {

namespace {

using Mask = std::uint64_t;

struct ClassBalls {
  std::vector<Point> centers;
  std::vector<Mask> masks;
  std::size_t pick = 0;  // subset size to enumerate
};

Weight MaskWeight(const Instance& instance, Mask mask) {
  Weight w = 0;
  for (Point p = 0; mask != 0; ++p, mask >>= 1) {
    if (mask & 1U) w += instance.weight(p);
  }
  return w;
}

std::vector<ClassBalls> PrepareBalls(const Instance& instance, double alpha,
                                     const OracleCaps& caps) {
  const std::size_t n = instance.size();
  if (n > caps.max_points || n > 64) {
    std::ostringstream msg;
    msg << "oracle point cap exceeded: n = " << n << " > " << caps.max_points;
    Fail(ErrorCode::kCapExceeded, msg.str());
  }
  std::vector<ClassBalls> classes;
  int effective_budget = 0;
  for (std::size_t i = 0; i < instance.class_count(); ++i) {
    ClassBalls cb;
    const double r = alpha * instance.cls(i).radius;
    for (Point c : instance.AllowedCenters(i)) {
      Mask m = 0;
      for (Point u = 0; u < n; ++u) {
        if (instance.space()(u, c) <= r) m |= Mask{1} << u;
      }
      cb.centers.push_back(c);
      cb.masks.push_back(m);
    }
    const auto k = static_cast<std::size_t>(instance.cls(i).budget);
    cb.pick = std::min(k, cb.centers.size());
    // Taking every allowed center is a single choice.
    if (cb.pick < cb.centers.size()) effective_budget += static_cast<int>(cb.pick);
    classes.push_back(std::move(cb));
  }
  if (effective_budget > caps.max_total_budget) {
    std::ostringstream msg;
    msg << "oracle budget cap exceeded: " << effective_budget << " > "
        << caps.max_total_budget;
    Fail(ErrorCode::kCapExceeded, msg.str());
  }
  return classes;
}

// Calls visit(chosen per class, union mask) for every choice of exactly
// `pick` centers per class (or at most `pick` with all_sizes). visit returns
// true to stop the enumeration.
class Enumerator {
 public:
  using Visit =
      std::function<bool(const std::vector<std::vector<std::size_t>>&, Mask)>;

  Enumerator(const std::vector<ClassBalls>& classes, bool all_sizes,
             std::function<bool(Mask, std::size_t)> prune)
      : classes_(classes),
        all_sizes_(all_sizes),
        prune_(std::move(prune)),
        chosen_(classes.size()) {}

  bool Run(const Visit& visit) {
    visit_ = &visit;
    return Class(0, 0);
  }

 private:
  bool Class(std::size_t cls, Mask covered) {
    if (cls == classes_.size()) return (*visit_)(chosen_, covered);
    if (prune_ && prune_(covered, cls)) return false;
    return Pick(cls, 0, covered);
  }

  bool Pick(std::size_t cls, std::size_t from, Mask covered) {
    const ClassBalls& cb = classes_[cls];
    auto& picked = chosen_[cls];
    const bool full = picked.size() == cb.pick;
    if ((all_sizes_ || full) && Class(cls + 1, covered)) return true;
    if (full) return false;
    for (std::size_t i = from; i < cb.centers.size(); ++i) {
      if (!all_sizes_ && cb.centers.size() - i < cb.pick - picked.size()) break;
      picked.push_back(i);
      const bool stop = Pick(cls, i + 1, covered | cb.masks[i]);
      picked.pop_back();
      if (stop) return true;
    }
    return false;
  }

  const std::vector<ClassBalls>& classes_;
  bool all_sizes_;
  std::function<bool(Mask, std::size_t)> prune_;
  std::vector<std::vector<std::size_t>> chosen_;
  const Visit* visit_ = nullptr;
};

std::vector<Mask> SuffixUnions(const std::vector<ClassBalls>& classes) {
  std::vector<Mask> suffix(classes.size() + 1, 0);
  for (std::size_t i = classes.size(); i-- > 0;) {
    suffix[i] = suffix[i + 1];
    for (Mask m : classes[i].masks) suffix[i] |= m;
  }
  return suffix;
}

}  // namespace

OracleResult BruteFeasible(const Instance& instance, double alpha,
                           const OracleCaps& caps) {
  OracleResult out;
  const Weight m = instance.coverage_target();
  if (m <= 0) {
    out.feasible = true;
    return out;
  }
  const std::vector<ClassBalls> classes = PrepareBalls(instance, alpha, caps);
  const std::vector<Mask> suffix = SuffixUnions(classes);
  Enumerator e(classes, false, [&](Mask covered, std::size_t cls) {
    return MaskWeight(instance, covered | suffix[cls]) < m;
  });
  e.Run([&](const std::vector<std::vector<std::size_t>>& chosen, Mask covered) {
    if (MaskWeight(instance, covered) < m) return false;
    out.feasible = true;
    for (std::size_t cls = 0; cls < chosen.size(); ++cls) {
      for (std::size_t i : chosen[cls]) {
        out.witness.balls.push_back({classes[cls].centers[i], cls,
                                     alpha * instance.cls(cls).radius});
      }
    }
    return true;
  });
  return out;
}

Weight BruteMaxCoverage(const Instance& instance, double alpha,
                        const OracleCaps& caps) {
  const std::vector<ClassBalls> classes = PrepareBalls(instance, alpha, caps);
  Weight best = 0;
  Enumerator e(classes, false, nullptr);
  e.Run([&](const std::vector<std::vector<std::size_t>>&, Mask covered) {
    best = std::max(best, MaskWeight(instance, covered));
    return false;
  });
  return best;
}

OracleResult BruteOptimum(const Instance& instance, const OracleCaps& caps) {
  const std::vector<double> candidates = DilationCandidates(instance);
  std::size_t hi = candidates.size() - 1;
  OracleResult best = BruteFeasible(instance, candidates[hi], caps);
  if (!best.feasible) {
    Fail(ErrorCode::kInvalidArgument, "no candidate dilation is feasible");
  }
  std::size_t lo = 0;
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo) / 2;
    OracleResult r = BruteFeasible(instance, candidates[mid], caps);
    if (r.feasible) {
      hi = mid;
      best = std::move(r);
    } else {
      lo = mid + 1;
    }
  }
  best.optimum_dilation = candidates[hi];
  return best;
}

std::vector<CoverageVector> EnumerateIntegralCoverages(
    const Instance& instance, const OracleCaps& caps) {
  if (instance.class_count() != 2) {
    Fail(ErrorCode::kInvalidArgument, "integral coverages need two classes");
  }
  const std::vector<ClassBalls> classes = PrepareBalls(instance, 1.0, caps);
  const Weight m = instance.coverage_target();
  std::set<std::pair<Mask, Mask>> seen;
  Enumerator e(classes, true, nullptr);
  e.Run([&](const std::vector<std::vector<std::size_t>>& chosen, Mask) {
    Mask big = 0;
    Mask small = 0;
    for (std::size_t i : chosen[0]) big |= classes[0].masks[i];
    for (std::size_t i : chosen[1]) small |= classes[1].masks[i];
    if (MaskWeight(instance, big | small) >= m) seen.insert({big, small & ~big});
    return false;
  });
  std::vector<CoverageVector> out;
  for (const auto& [big, small] : seen) {
    CoverageVector cov = CoverageVector::Zero(instance.size());
    for (Point p = 0; p < instance.size(); ++p) {
      if ((big >> p) & 1U) cov.cov1[p] = 1.0;
      if ((small >> p) & 1U) cov.cov2[p] = 1.0;
    }
    out.push_back(std::move(cov));
  }
  return out;
}

}  // namespace nukc
