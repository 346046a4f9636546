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

#include "nukc/generate.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "nukc/error.hpp"

namespace nukc {

namespace {

constexpr double kScale = 1e6;

double Snap(double x) { return std::round(x * kScale) / kScale; }

double Distance(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += (a[i] - b[i]) * (a[i] - b[i]);
  return std::sqrt(s);
}

std::vector<double> BoxPoint(Rng& rng, std::size_t dim, double side) {
  std::vector<double> p(dim);
  for (double& x : p) x = Snap(rng.Uniform(0.0, side));
  return p;
}

// A snapped point within distance r of c, checked with the same Euclidean
// formula the metric uses.
std::vector<double> PointNear(Rng& rng, const std::vector<double>& c,
                              double r) {
  if (r <= 0.0) return c;
  for (int attempt = 0; attempt < 1000; ++attempt) {
    std::vector<double> p(c.size());
    double s = 0.0;
    for (std::size_t i = 0; i < c.size(); ++i) {
      p[i] = rng.Uniform(-r, r);
      s += p[i] * p[i];
    }
    if (s > r * r) continue;
    for (std::size_t i = 0; i < c.size(); ++i) p[i] = Snap(c[i] + p[i]);
    if (Distance(p, c) <= r) return p;
  }
  return c;
}

}  // namespace

Rng::Rng(std::uint64_t seed) : state_(seed) {}

std::uint64_t Rng::Next() {
  std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

double Rng::Uniform() {
  return static_cast<double>(Next() >> 11) * 0x1.0p-53;
}

double Rng::Uniform(double lo, double hi) { return lo + (hi - lo) * Uniform(); }

std::size_t Rng::Index(std::size_t n) {
  if (n == 0) Fail(ErrorCode::kInvalidArgument, "Rng::Index on empty range");
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
  std::uint64_t x;
  do {
    x = Next();
  } while (x >= limit);
  return static_cast<std::size_t>(x % n);
}

int Rng::Int(int lo, int hi) {
  return lo + static_cast<int>(Index(static_cast<std::size_t>(hi - lo) + 1));
}

Instance GeneratedInstance::ToInstance() const {
  return Instance(MetricSpace::FromPoints(points), {}, classes, target);
}

GeneratedInstance GenerateInstance(const GenerateSpec& spec) {
  if (spec.n == 0) Fail(ErrorCode::kInvalidArgument, "n must be >= 1");
  if (spec.dimension == 0) Fail(ErrorCode::kInvalidArgument, "dimension >= 1");
  if (spec.classes.empty()) {
    Fail(ErrorCode::kInvalidArgument, "at least one class required");
  }
  const std::size_t n = spec.n;
  const Weight target = spec.target.value_or(static_cast<Weight>(n));
  if (target < 0 || target > static_cast<Weight>(n)) {
    Fail(ErrorCode::kInvalidArgument, "target must lie in [0, n]");
  }

  Rng rng(spec.seed);
  GeneratedInstance out;
  out.classes = spec.classes;
  out.target = target;

  int centers = 0;
  for (const RadiusClass& c : spec.classes) centers += c.budget;
  const double r_max = spec.classes.front().radius;
  const double side =
      (r_max > 0.0 ? 3.0 * r_max : 1.0) *
      std::pow(std::max(centers, 1), 1.0 / static_cast<double>(spec.dimension));

  std::vector<std::vector<double>> pts;
  if (!spec.planted) {
    for (std::size_t i = 0; i < n; ++i) {
      pts.push_back(BoxPoint(rng, spec.dimension, side));
    }
    out.points = std::move(pts);
    return out;
  }

  // Plant centers class by class; each planted center is itself a point.
  struct Planted {
    std::size_t cls;
    double radius;
  };
  std::vector<Planted> plant;
  for (std::size_t i = 0; i < spec.classes.size(); ++i) {
    for (int j = 0; j < spec.classes[i].budget && plant.size() < n; ++j) {
      plant.push_back({i, spec.classes[i].radius});
      pts.push_back(BoxPoint(rng, spec.dimension, side));
    }
  }
  const std::size_t inside =
      plant.empty() ? 0
                    : std::max(plant.size(), static_cast<std::size_t>(target));
  while (pts.size() < inside) {
    const std::size_t b = rng.Index(plant.size());
    pts.push_back(PointNear(rng, pts[b], plant[b].radius));
  }
  while (pts.size() < n) pts.push_back(BoxPoint(rng, spec.dimension, side));

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  for (std::size_t i = n; i > 1; --i) std::swap(order[i - 1], order[rng.Index(i)]);
  std::vector<std::size_t> where(n);
  out.points.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    out.points[i] = pts[order[i]];
    where[order[i]] = i;
  }
  Solution s;
  for (std::size_t b = 0; b < plant.size(); ++b) {
    s.balls.push_back({where[b], plant[b].cls, plant[b].radius});
  }
  out.plant = std::move(s);
  return out;
}

std::vector<RadiusClass> ParseClassSpec(const std::string& text) {
  std::vector<RadiusClass> out;
  if (text.empty()) Fail(ErrorCode::kInvalidArgument, "empty class spec");
  std::size_t begin = 0;
  while (begin <= text.size()) {
    const std::size_t end = std::min(text.find(',', begin), text.size());
    const std::string item = text.substr(begin, end - begin);
    begin = end + 1;
    const auto colon = item.find(':');
    if (colon == std::string::npos) {
      Fail(ErrorCode::kInvalidArgument, "class spec entry \"" + item +
                                            "\" is not of the form k:r");
    }
    RadiusClass c;
    try {
      std::size_t used = 0;
      const std::string k = item.substr(0, colon);
      const std::string r = item.substr(colon + 1);
      c.budget = std::stoi(k, &used);
      if (used != k.size()) throw std::invalid_argument(k);
      c.radius = std::stod(r, &used);
      if (used != r.size()) throw std::invalid_argument(r);
    } catch (const std::logic_error&) {
      Fail(ErrorCode::kInvalidArgument,
           "class spec entry \"" + item + "\" is not of the form k:r");
    }
    out.push_back(c);
  }
  return out;
}

}  // namespace nukc
