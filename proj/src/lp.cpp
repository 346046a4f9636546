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

#include "nukc/lp.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <sstream>

#include "nukc/error.hpp"

namespace nukc {

std::size_t LinearProgram::AddVariable(std::string name) {
  names_.push_back(std::move(name));
  return names_.size() - 1;
}

void LinearProgram::AddConstraint(Constraint c) {
  for (const Term& t : c.terms) {
    if (t.var >= names_.size()) {
      Fail(ErrorCode::kInvalidArgument, "constraint references unknown variable");
    }
  }
  constraints_.push_back(std::move(c));
}

double LinearProgram::MaxViolation(std::span<const double> x) const {
  double worst = 0.0;
  for (double v : x) worst = std::max(worst, -v);
  for (const Constraint& c : constraints_) {
    double lhs = 0.0;
    for (const Term& t : c.terms) lhs += t.coeff * x[t.var];
    switch (c.sense) {
      case Sense::kLessEqual: worst = std::max(worst, lhs - c.rhs); break;
      case Sense::kGreaterEqual: worst = std::max(worst, c.rhs - lhs); break;
      case Sense::kEqual: worst = std::max(worst, std::abs(lhs - c.rhs)); break;
    }
  }
  return worst;
}

void WriteLpFormat(const LinearProgram& lp, std::ostream& out) {
  const auto& names = lp.variable_names();
  const auto precision = out.precision(17);
  out << "\\ feasibility system, zero objective\n";
  out << "Minimize\n obj:";
  if (!names.empty()) out << " 0 " << names.front();
  out << "\nSubject To\n";
  for (std::size_t i = 0; i < lp.constraints().size(); ++i) {
    const Constraint& c = lp.constraints()[i];
    out << " " << (c.name.empty() ? "c" + std::to_string(i) : c.name) << ":";
    if (c.terms.empty() && !names.empty()) out << " 0 " << names.front();
    for (const Term& t : c.terms) {
      out << (t.coeff < 0 ? " - " : " + ") << std::abs(t.coeff) << " "
          << names[t.var];
    }
    switch (c.sense) {
      case Sense::kLessEqual: out << " <= "; break;
      case Sense::kGreaterEqual: out << " >= "; break;
      case Sense::kEqual: out << " = "; break;
    }
    out << c.rhs << "\n";
  }
  out << "End\n";
  out.precision(precision);
}

double LinearInequality::Lhs(const CoverageVector& cov) const {
  double lhs = 0.0;
  for (const CovTerm& t : terms) {
    lhs += t.coeff * (t.cls == 0 ? cov.cov1[t.point] : cov.cov2[t.point]);
  }
  return lhs;
}

double LinearInequality::Violation(const CoverageVector& cov) const {
  const double lhs = Lhs(cov);
  switch (sense) {
    case Sense::kLessEqual: return std::max(0.0, lhs - rhs);
    case Sense::kGreaterEqual: return std::max(0.0, rhs - lhs);
    case Sense::kEqual: return std::abs(lhs - rhs);
  }
  return 0.0;
}

std::string LinearInequality::ToString() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (i > 0) out << " + ";
    out << terms[i].coeff << "*cov" << terms[i].cls + 1 << "(" << terms[i].point
        << ")";
  }
  if (terms.empty()) out << "0";
  out << (sense == Sense::kLessEqual      ? " <= "
          : sense == Sense::kGreaterEqual ? " >= "
                                          : " = ")
      << rhs;
  return out.str();
}

LinearInequality CoverageCut(std::span<const Point> points,
                             std::span<const Weight> weights, double rhs) {
  std::vector<Point> sorted(points.begin(), points.end());
  std::sort(sorted.begin(), sorted.end());
  LinearInequality cut;
  for (Point v : sorted) {
    const double w = weights.empty() ? 1.0 : static_cast<double>(weights[v]);
    cut.terms.push_back({v, 0, w});
    cut.terms.push_back({v, 1, w});
  }
  cut.rhs = rhs;
  return cut;
}

LinearInequality LargeClassCut(std::span<const Point> points, double rhs) {
  std::vector<Point> sorted(points.begin(), points.end());
  std::sort(sorted.begin(), sorted.end());
  LinearInequality cut;
  for (Point v : sorted) cut.terms.push_back({v, 0, 1.0});
  cut.rhs = rhs;
  return cut;
}

Lp1 BuildLp1(const Instance& instance) {
  if (instance.class_count() != 2) {
    Fail(ErrorCode::kInvalidArgument, "LP1 needs exactly two radius classes");
  }
  const std::size_t n = instance.size();
  const MetricSpace& d = instance.space();
  Lp1 lp;
  lp.n = n;
  lp.x1.assign(n, std::nullopt);
  lp.x2.assign(n, std::nullopt);
  for (Point v = 0; v < n; ++v) {
    const std::string id = std::to_string(v);
    if (instance.cls(0).budget > 0 && instance.IsAllowedCenter(0, v)) {
      lp.x1[v] = lp.program.AddVariable("x1_" + id);
    }
    if (instance.cls(1).budget > 0 && instance.IsAllowedCenter(1, v)) {
      lp.x2[v] = lp.program.AddVariable("x2_" + id);
    }
    lp.cov1.push_back(lp.program.AddVariable("cov1_" + id));
    lp.cov2.push_back(lp.program.AddVariable("cov2_" + id));
  }

  for (int cls = 0; cls < 2; ++cls) {
    const double r = instance.cls(cls).radius;
    const auto& x = cls == 0 ? lp.x1 : lp.x2;
    const auto& cov = cls == 0 ? lp.cov1 : lp.cov2;
    for (Point v = 0; v < n; ++v) {
      Constraint c;
      c.name = "link" + std::to_string(cls + 1) + "_" + std::to_string(v);
      c.terms.push_back({cov[v], 1.0});
      for (Point u = 0; u < n; ++u) {
        if (x[u] && d(u, v) <= r) c.terms.push_back({*x[u], -1.0});
      }
      c.rhs = 0.0;
      lp.program.AddConstraint(std::move(c));
    }
  }
  for (Point v = 0; v < n; ++v) {
    lp.program.AddConstraint({{{lp.cov1[v], 1.0}, {lp.cov2[v], 1.0}},
                              Sense::kLessEqual,
                              1.0,
                              "unit_" + std::to_string(v)});
  }
  for (int cls = 0; cls < 2; ++cls) {
    Constraint c;
    c.name = "budget" + std::to_string(cls + 1);
    for (const auto& xv : cls == 0 ? lp.x1 : lp.x2) {
      if (xv) c.terms.push_back({*xv, 1.0});
    }
    c.rhs = instance.cls(cls).budget;
    lp.program.AddConstraint(std::move(c));
  }
  Constraint target;
  target.name = "target";
  target.sense = Sense::kGreaterEqual;
  target.rhs = static_cast<double>(instance.coverage_target());
  for (Point v = 0; v < n; ++v) {
    const double w = static_cast<double>(instance.weight(v));
    target.terms.push_back({lp.cov1[v], w});
    target.terms.push_back({lp.cov2[v], w});
  }
  lp.program.AddConstraint(std::move(target));
  return lp;
}

void AppendCut(Lp1& lp, const LinearInequality& cut) {
  Constraint c;
  c.name = "cut" + std::to_string(lp.program.constraints().size());
  c.sense = cut.sense;
  c.rhs = cut.rhs;
  for (const CovTerm& t : cut.terms) {
    if (t.point >= lp.n) Fail(ErrorCode::kInvalidArgument, "cut point out of range");
    c.terms.push_back({t.cls == 0 ? lp.cov1[t.point] : lp.cov2[t.point], t.coeff});
  }
  lp.program.AddConstraint(std::move(c));
}

CoverageVector ExtractCoverages(const Lp1& lp, std::span<const double> values) {
  CoverageVector cov = CoverageVector::Zero(lp.n);
  for (std::size_t v = 0; v < lp.n; ++v) {
    cov.cov1[v] = std::clamp(values[lp.cov1[v]], 0.0, 1.0);
    cov.cov2[v] = std::clamp(values[lp.cov2[v]], 0.0, 1.0);
  }
  return cov;
}

void CutPool::Add(const LinearInequality& cut, const CoverageVector& current) {
  if (std::find(cuts_.begin(), cuts_.end(), cut) != cuts_.end()) {
    Fail(ErrorCode::kStalled,
         "round-or-cut stalled: cut already in pool: " + cut.ToString());
  }
  const double violation = cut.Violation(current);
  if (!(violation > kLpEpsilon)) {
    std::ostringstream msg;
    msg << "cut not violated by the current point (violation " << violation
        << "): " << cut.ToString();
    Fail(ErrorCode::kInternal, msg.str());
  }
  cuts_.push_back(cut);
}

}  // namespace nukc
