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

#include "nukc/metric.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "nukc/error.hpp"
#include "nukc/partition.hpp"

namespace nukc {

PointSet::PointSet(std::initializer_list<Point> points)
    : PointSet(FromUnsorted(std::vector<Point>(points))) {}

PointSet PointSet::FromUnsorted(std::vector<Point> points) {
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  PointSet s;
  s.points_ = std::move(points);
  return s;
}

PointSet PointSet::FromSorted(std::vector<Point> points) {
  for (std::size_t i = 1; i < points.size(); ++i) {
    if (points[i - 1] >= points[i]) {
      Fail(ErrorCode::kInvalidArgument,
           "point set must be strictly increasing");
    }
  }
  PointSet s;
  s.points_ = std::move(points);
  return s;
}

PointSet PointSet::Range(std::size_t n) {
  PointSet s;
  s.points_.resize(n);
  for (std::size_t i = 0; i < n; ++i) s.points_[i] = i;
  return s;
}

bool PointSet::contains(Point p) const {
  return std::binary_search(points_.begin(), points_.end(), p);
}

PointSet PointSet::Minus(const PointSet& other) const {
  PointSet out;
  std::set_difference(points_.begin(), points_.end(), other.points_.begin(),
                      other.points_.end(), std::back_inserter(out.points_));
  return out;
}

bool PointSet::Intersects(const PointSet& other) const {
  auto a = points_.begin();
  auto b = other.points_.begin();
  while (a != points_.end() && b != other.points_.end()) {
    if (*a == *b) return true;
    if (*a < *b) {
      ++a;
    } else {
      ++b;
    }
  }
  return false;
}

MetricSpace MetricSpace::FromPoints(
    const std::vector<std::vector<double>>& coords) {
  if (coords.empty()) Fail(ErrorCode::kInvalidArgument, "no points given");
  const std::size_t dim = coords.front().size();
  if (dim == 0) Fail(ErrorCode::kInvalidArgument, "points have dimension 0");
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (coords[i].size() != dim) {
      std::ostringstream msg;
      msg << "point " << i << " has dimension " << coords[i].size()
          << ", expected " << dim;
      Fail(ErrorCode::kInvalidArgument, msg.str());
    }
    for (double c : coords[i]) {
      if (!std::isfinite(c)) {
        Fail(ErrorCode::kInvalidArgument, "non-finite coordinate");
      }
    }
  }
  const std::size_t n = coords.size();
  std::vector<double> dist(n * n, 0.0);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      double sq = 0.0;
      for (std::size_t k = 0; k < dim; ++k) {
        const double diff = coords[u][k] - coords[v][k];
        sq += diff * diff;
      }
      const double d = std::sqrt(sq);
      dist[u * n + v] = d;
      dist[v * n + u] = d;
    }
  }
  return MetricSpace(n, std::move(dist));
}

MetricSpace MetricSpace::FromMatrix(
    const std::vector<std::vector<double>>& matrix, bool validate) {
  const std::size_t n = matrix.size();
  if (n == 0) Fail(ErrorCode::kInvalidArgument, "empty distance matrix");
  std::vector<double> dist(n * n);
  for (std::size_t u = 0; u < n; ++u) {
    if (matrix[u].size() != n) {
      std::ostringstream msg;
      msg << "distance matrix row " << u << " has " << matrix[u].size()
          << " entries, expected " << n;
      Fail(ErrorCode::kInvalidArgument, msg.str());
    }
    for (std::size_t v = 0; v < n; ++v) {
      const double d = matrix[u][v];
      if (!std::isfinite(d) || d < 0.0) {
        std::ostringstream msg;
        msg << "distance (" << u << "," << v << ") = " << d
            << " is negative or not finite";
        Fail(ErrorCode::kInvalidArgument, msg.str());
      }
      dist[u * n + v] = d;
    }
  }
  MetricSpace space(n, std::move(dist));
  if (!validate) return space;

  const double eps = space.TriangleTolerance();
  for (std::size_t u = 0; u < n; ++u) {
    if (space(u, u) != 0.0) {
      std::ostringstream msg;
      msg << "nonzero diagonal at " << u << ": " << space(u, u);
      Fail(ErrorCode::kMetricViolation, msg.str());
    }
  }
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      if (std::abs(space(u, v) - space(v, u)) > eps) {
        std::ostringstream msg;
        msg << "asymmetric distances at (" << u << "," << v
            << "): " << space(u, v) << " vs " << space(v, u);
        Fail(ErrorCode::kMetricViolation, msg.str());
      }
    }
  }
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = 0; v < n; ++v) {
      for (std::size_t w = 0; w < n; ++w) {
        if (space(u, w) > space(u, v) + space(v, w) + eps) {
          std::ostringstream msg;
          msg << "triangle inequality violated at (" << u << "," << v << ","
              << w << "): d(" << u << "," << w << ") = " << space(u, w)
              << " > " << space(u, v) << " + " << space(v, w);
          Fail(ErrorCode::kMetricViolation, msg.str());
        }
      }
    }
  }
  return space;
}

double MetricSpace::MaxDistance() const {
  double m = 0.0;
  for (double d : dist_) m = std::max(m, d);
  return m;
}

double MetricSpace::TriangleTolerance() const {
  return 1e-9 * std::max(MaxDistance(), 1.0);
}

std::vector<std::vector<double>> MetricSpace::ToMatrix() const {
  std::vector<std::vector<double>> m(n_, std::vector<double>(n_));
  for (std::size_t u = 0; u < n_; ++u) {
    for (std::size_t v = 0; v < n_; ++v) m[u][v] = (*this)(u, v);
  }
  return m;
}

void MetricSpace::CheckPoint(Point p) const {
  if (p >= n_) {
    std::ostringstream msg;
    msg << "point " << p << " out of range (n = " << n_ << ")";
    Fail(ErrorCode::kInvalidArgument, msg.str());
  }
}

PointSet MetricSpace::Ball(Point v, double r, const PointSet& within) const {
  CheckPoint(v);
  if (!(r >= 0.0)) Fail(ErrorCode::kInvalidArgument, "negative ball radius");
  std::vector<Point> out;
  for (Point u : within) {
    CheckPoint(u);
    if ((*this)(u, v) <= r) out.push_back(u);
  }
  return PointSet::FromSorted(std::move(out));
}

PointSet MetricSpace::Ball(Point v, double r) const {
  return Ball(v, r, PointSet::Range(n_));
}

MetricSpace::Restriction MetricSpace::Restrict(const PointSet& keep) const {
  if (keep.empty()) Fail(ErrorCode::kInvalidArgument, "restrict to empty set");
  const std::size_t m = keep.size();
  Restriction out;
  out.to_old = keep.points();
  out.to_new.assign(n_, std::nullopt);
  std::vector<double> dist(m * m);
  for (std::size_t i = 0; i < m; ++i) {
    CheckPoint(keep[i]);
    out.to_new[keep[i]] = i;
    for (std::size_t j = 0; j < m; ++j) {
      dist[i * m + j] = (*this)(keep[i], keep[j]);
    }
  }
  out.space = MetricSpace(m, std::move(dist));
  return out;
}

Weight MetricSpace::TotalWeight(const PointSet& set,
                                std::span<const Weight> weights) {
  if (weights.empty()) return static_cast<Weight>(set.size());
  Weight total = 0;
  for (Point p : set) total += weights[p];
  return total;
}

MetricSpace::Contraction MetricSpace::Contract(
    const Partition& partition, std::span<const Weight> weights) const {
  const std::string defect = CheckPartition(partition, PointSet::Range(n_));
  if (!defect.empty()) Fail(ErrorCode::kInvalidArgument, defect);
  if (!weights.empty() && weights.size() != n_) {
    Fail(ErrorCode::kInvalidArgument, "weight vector size mismatch");
  }
  Contraction out;
  out.representatives = partition.representatives;
  const std::size_t m = partition.size();
  std::vector<double> dist(m * m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      dist[i * m + j] =
          (*this)(partition.representatives[i], partition.representatives[j]);
    }
    out.weights.push_back(TotalWeight(partition.children[i], weights));
  }
  out.space = MetricSpace(m, std::move(dist));
  return out;
}

const PointSet& Partition::ChildrenOf(Point rep) const {
  for (std::size_t i = 0; i < representatives.size(); ++i) {
    if (representatives[i] == rep) return children[i];
  }
  Fail(ErrorCode::kInvalidArgument, "not a representative");
}

PointSet Partition::RepresentativeSet() const {
  return PointSet::FromUnsorted(representatives);
}

std::string CheckPartition(const Partition& p, const PointSet& ground) {
  if (p.representatives.size() != p.children.size()) {
    return "representative and child list sizes differ";
  }
  std::vector<Point> seen;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const Point rep = p.representatives[i];
    if (!p.children[i].contains(rep)) {
      std::ostringstream msg;
      msg << "representative " << rep << " missing from its own block";
      return msg.str();
    }
    seen.insert(seen.end(), p.children[i].begin(), p.children[i].end());
  }
  std::sort(seen.begin(), seen.end());
  for (std::size_t i = 1; i < seen.size(); ++i) {
    if (seen[i] == seen[i - 1]) {
      std::ostringstream msg;
      msg << "point " << seen[i] << " lies in two blocks";
      return msg.str();
    }
  }
  if (seen != ground.points()) return "blocks do not cover the ground set";
  return {};
}

}  // namespace nukc
