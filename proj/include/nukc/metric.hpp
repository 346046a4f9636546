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

#ifndef NUKC_METRIC_HPP_
#define NUKC_METRIC_HPP_

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

namespace nukc {

using Point = std::size_t;
using Weight = std::int64_t;

// Sorted, duplicate-free list of point indices.
class PointSet {
 public:
  PointSet() = default;
  PointSet(std::initializer_list<Point> points);
  // Sorts and deduplicates.
  static PointSet FromUnsorted(std::vector<Point> points);
  // Rejects unsorted or duplicated input.
  static PointSet FromSorted(std::vector<Point> points);
  static PointSet Range(std::size_t n);

  bool contains(Point p) const;
  std::size_t size() const { return points_.size(); }
  bool empty() const { return points_.empty(); }
  Point operator[](std::size_t i) const { return points_[i]; }
  auto begin() const { return points_.begin(); }
  auto end() const { return points_.end(); }
  const std::vector<Point>& points() const { return points_; }

  PointSet Minus(const PointSet& other) const;
  bool Intersects(const PointSet& other) const;

  friend bool operator==(const PointSet&, const PointSet&) = default;

 private:
  std::vector<Point> points_;
};

struct Partition;

// Finite pseudo-metric over points 0..n-1 backed by a dense symmetric matrix.
// Distinct points at distance zero are allowed: contracted instances co-locate
// whole clusters on their representative.
class MetricSpace {
 public:
  MetricSpace() = default;

  static MetricSpace FromPoints(const std::vector<std::vector<double>>& coords);
  // With validate set, rejects nonzero diagonals, asymmetry and triangle
  // violations beyond TriangleTolerance(); the error names the witness.
  static MetricSpace FromMatrix(const std::vector<std::vector<double>>& matrix,
                                bool validate = true);

  std::size_t size() const { return n_; }
  double operator()(Point u, Point v) const { return dist_[u * n_ + v]; }
  double MaxDistance() const;
  // 1e-9 * max(max entry, 1).
  double TriangleTolerance() const;
  std::vector<std::vector<double>> ToMatrix() const;

  // Closed ball {u in within : d(u, v) <= r}.
  PointSet Ball(Point v, double r, const PointSet& within) const;
  PointSet Ball(Point v, double r) const;

  struct Restriction;
  Restriction Restrict(const PointSet& keep) const;

  struct Contraction;
  Contraction Contract(const Partition& partition,
                       std::span<const Weight> weights) const;

  // Weight of every point; empty `weights` means unit weights.
  static Weight TotalWeight(const PointSet& set,
                            std::span<const Weight> weights);

 private:
  MetricSpace(std::size_t n, std::vector<double> dist)
      : n_(n), dist_(std::move(dist)) {}

  void CheckPoint(Point p) const;

  std::size_t n_ = 0;
  std::vector<double> dist_;
};

struct MetricSpace::Restriction {
  MetricSpace space;
  // new index -> old index
  std::vector<Point> to_old;
  // old index -> new index, nullopt for dropped points
  std::vector<std::optional<Point>> to_new;
};

struct MetricSpace::Contraction {
  MetricSpace space;
  // contracted index -> representative in the original space
  std::vector<Point> representatives;
  // multiplicity (summed weight) of each contracted point
  std::vector<Weight> weights;
};

}  // namespace nukc

#endif  // NUKC_METRIC_HPP_
