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

#include "nukc/io.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>

#include "json_util.hpp"
#include "nukc/error.hpp"

namespace nukc {

using internal::Json;

namespace {

[[noreturn]] void SchemaError(const std::string& path, const std::string& what) {
  Fail(ErrorCode::kSchema, path + ": " + what);
}

Json Parse(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    Fail(ErrorCode::kSchema, std::string("malformed JSON: ") + e.what());
  }
}

const Json& Require(const Json& obj, const std::string& path,
                    const char* key) {
  auto it = obj.find(key);
  if (it == obj.end()) SchemaError(path, std::string("missing \"") + key + "\"");
  return *it;
}

double Real(const Json& v, const std::string& path) {
  if (!v.is_number()) SchemaError(path, "expected a number");
  const double x = v.get<double>();
  if (!std::isfinite(x)) SchemaError(path, "expected a finite number");
  return x;
}

std::int64_t Integer(const Json& v, const std::string& path) {
  if (v.is_number_integer()) return v.get<std::int64_t>();
  if (v.is_number_float()) {
    const double x = v.get<double>();
    if (std::isfinite(x) && x == std::floor(x) &&
        std::abs(x) < 9.0e15) {
      return static_cast<std::int64_t>(x);
    }
  }
  SchemaError(path, "expected an integer");
}

std::int64_t NonNegative(const Json& v, const std::string& path) {
  const std::int64_t x = Integer(v, path);
  if (x < 0) SchemaError(path, "expected a nonnegative integer");
  return x;
}

const Json& Array(const Json& v, const std::string& path) {
  if (!v.is_array()) SchemaError(path, "expected an array");
  return v;
}

std::string At(const std::string& path, std::size_t i) {
  return path + "[" + std::to_string(i) + "]";
}

std::vector<std::vector<double>> RealRows(const Json& v,
                                          const std::string& path) {
  Array(v, path);
  std::vector<std::vector<double>> rows;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const std::string rp = At(path, i);
    Array(v[i], rp);
    std::vector<double> row;
    for (std::size_t j = 0; j < v[i].size(); ++j) {
      row.push_back(Real(v[i][j], At(rp, j)));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

Point PointIndex(const Json& v, const std::string& path, std::size_t n) {
  const std::int64_t p = NonNegative(v, path);
  if (static_cast<std::size_t>(p) >= n) {
    SchemaError(path, "point index " + std::to_string(p) + " out of range");
  }
  return static_cast<Point>(p);
}

Ball ParseBall(const Json& v, const std::string& path) {
  if (!v.is_object()) SchemaError(path, "expected an object");
  Ball b;
  b.center = static_cast<Point>(
      NonNegative(Require(v, path, "center"), path + ".center"));
  b.class_index = static_cast<std::size_t>(
      NonNegative(Require(v, path, "class"), path + ".class"));
  b.radius = Real(Require(v, path, "radius"), path + ".radius");
  if (b.radius < 0) SchemaError(path + ".radius", "expected >= 0");
  return b;
}

Solution ParseBalls(const Json& v, const std::string& path) {
  Array(v, path);
  Solution s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    s.balls.push_back(ParseBall(v[i], At(path, i)));
  }
  return s;
}

Json Rows(const std::vector<std::vector<double>>& rows) {
  Json out = Json::array();
  for (const auto& row : rows) out.push_back(row);
  return out;
}

Json OptionalReal(const std::optional<double>& x) {
  return x ? Json(*x) : Json(nullptr);
}

}  // namespace

namespace internal {

Json SolutionToJsonValue(const Solution& solution) {
  Json balls = Json::array();
  for (const Ball& b : solution.balls) {
    Json ball;
    ball["center"] = b.center;
    ball["class"] = b.class_index;
    ball["radius"] = b.radius;
    balls.push_back(std::move(ball));
  }
  Json out;
  out["balls"] = std::move(balls);
  return out;
}

Json VerificationToJsonValue(const Instance& instance,
                             const VerificationReport& report) {
  Json out;
  out["feasible"] = report.feasible_for_target;
  out["covered_weight"] = report.covered_weight;
  out["coverage_target"] = instance.coverage_target();
  out["total_weight"] = instance.total_weight();
  out["dilation"] = OptionalReal(report.dilation);
  Json per_class = Json::array();
  for (const auto& d : report.per_class_dilation) {
    per_class.push_back(OptionalReal(d));
  }
  out["per_class_dilation"] = std::move(per_class);
  out["balls_per_class"] = report.balls_per_class;
  out["budget_ok"] = report.budget_ok;
  out["restriction_ok"] = report.restriction_ok;
  Json violations = Json::array();
  for (std::size_t i = 0; i < report.balls_per_class.size(); ++i) {
    if (i < instance.class_count() &&
        report.balls_per_class[i] > instance.cls(i).budget) {
      violations.push_back("class " + std::to_string(i) + " uses " +
                           std::to_string(report.balls_per_class[i]) +
                           " balls, budget " +
                           std::to_string(instance.cls(i).budget));
    }
  }
  if (!report.restriction_ok) {
    violations.push_back("a center is not an allowed center of its class");
  }
  if (report.covered_weight < instance.coverage_target()) {
    violations.push_back("covered weight " +
                         std::to_string(report.covered_weight) +
                         " below target " +
                         std::to_string(instance.coverage_target()));
  }
  out["violations"] = std::move(violations);
  return out;
}

}  // namespace internal

InstanceFile ParseInstanceJson(const std::string& text) {
  const Json root = Parse(text);
  if (!root.is_object()) SchemaError("$", "expected an object");
  static const std::set<std::string> kKnown = {
      "points",  "distance_matrix", "weights", "classes", "coverage_target",
      "allowed_centers", "planted", "description"};
  for (const auto& [key, _] : root.items()) {
    if (!kKnown.contains(key)) SchemaError("$." + key, "unknown field");
  }

  const bool has_points = root.contains("points");
  const bool has_matrix = root.contains("distance_matrix");
  if (has_points == has_matrix) {
    SchemaError("$", "exactly one of \"points\" and \"distance_matrix\" required");
  }
  InstanceFile file;
  MetricSpace space;
  if (has_points) {
    auto pts = RealRows(root["points"], "$.points");
    if (pts.empty()) SchemaError("$.points", "at least one point required");
    for (std::size_t i = 0; i < pts.size(); ++i) {
      if (pts[i].empty() || pts[i].size() != pts[0].size()) {
        SchemaError(At("$.points", i), "dimension mismatch");
      }
    }
    space = MetricSpace::FromPoints(pts);
    file.points = std::move(pts);
  } else {
    auto rows = RealRows(root["distance_matrix"], "$.distance_matrix");
    if (rows.empty()) SchemaError("$.distance_matrix", "empty matrix");
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != rows.size()) {
        SchemaError(At("$.distance_matrix", i), "matrix is not square");
      }
    }
    try {
      space = MetricSpace::FromMatrix(rows, true);
    } catch (const Error& e) {
      Fail(e.code(), std::string("$.distance_matrix: ") + e.what());
    }
  }
  const std::size_t n = space.size();

  std::vector<Weight> weights;
  if (root.contains("weights")) {
    const Json& w = Array(root["weights"], "$.weights");
    if (w.size() != n) SchemaError("$.weights", "expected one weight per point");
    for (std::size_t i = 0; i < w.size(); ++i) {
      const std::int64_t x = Integer(w[i], At("$.weights", i));
      if (x <= 0) SchemaError(At("$.weights", i), "weights must be positive");
      weights.push_back(x);
    }
  }

  const Json& cls = Array(Require(root, "$", "classes"), "$.classes");
  if (cls.empty()) SchemaError("$.classes", "at least one class required");
  std::vector<RadiusClass> classes;
  for (std::size_t i = 0; i < cls.size(); ++i) {
    const std::string p = At("$.classes", i);
    if (!cls[i].is_object()) SchemaError(p, "expected an object {\"k\", \"r\"}");
    RadiusClass c;
    const std::int64_t k = NonNegative(Require(cls[i], p, "k"), p + ".k");
    if (k > std::numeric_limits<int>::max()) SchemaError(p + ".k", "too large");
    c.budget = static_cast<int>(k);
    c.radius = Real(Require(cls[i], p, "r"), p + ".r");
    if (c.radius < 0) SchemaError(p + ".r", "expected >= 0");
    if (!classes.empty() && c.radius > classes.back().radius) {
      SchemaError(p + ".r", "radii must be nonincreasing across classes");
    }
    classes.push_back(c);
  }

  Weight total = 0;
  for (Point p = 0; p < n; ++p) total += weights.empty() ? 1 : weights[p];
  Weight target = total;
  if (root.contains("coverage_target")) {
    target = NonNegative(root["coverage_target"], "$.coverage_target");
    if (target > total) {
      SchemaError("$.coverage_target",
                  "exceeds total weight " + std::to_string(total));
    }
  }

  std::vector<std::optional<PointSet>> restriction;
  if (root.contains("allowed_centers")) {
    const Json& ac = Array(root["allowed_centers"], "$.allowed_centers");
    if (ac.size() != classes.size()) {
      SchemaError("$.allowed_centers", "expected one entry per class");
    }
    for (std::size_t i = 0; i < ac.size(); ++i) {
      const std::string p = At("$.allowed_centers", i);
      if (ac[i].is_null()) {
        restriction.emplace_back();
        continue;
      }
      Array(ac[i], p);
      std::vector<Point> pts;
      for (std::size_t j = 0; j < ac[i].size(); ++j) {
        pts.push_back(PointIndex(ac[i][j], At(p, j), n));
      }
      restriction.emplace_back(PointSet::FromUnsorted(std::move(pts)));
    }
  }

  file.instance = Instance(std::move(space), std::move(weights),
                           std::move(classes), target, std::move(restriction));
  if (root.contains("planted")) {
    file.planted = ParseBalls(root["planted"], "$.planted");
  }
  return file;
}

InstanceFile ReadInstanceFile(const std::string& path) {
  return ParseInstanceJson(ReadTextFile(path));
}

std::string InstanceToJson(
    const Instance& instance,
    const std::optional<std::vector<std::vector<double>>>& points,
    const std::optional<Solution>& planted) {
  Json root;
  if (points) {
    root["points"] = Rows(*points);
  } else {
    root["distance_matrix"] = Rows(instance.space().ToMatrix());
  }
  bool unit = true;
  for (Weight w : instance.weights()) unit &= w == 1;
  if (!unit) root["weights"] = instance.weights();
  Json classes = Json::array();
  for (const RadiusClass& c : instance.classes()) {
    Json entry;
    entry["k"] = c.budget;
    entry["r"] = c.radius;
    classes.push_back(std::move(entry));
  }
  root["classes"] = std::move(classes);
  root["coverage_target"] = instance.coverage_target();
  if (instance.has_restrictions()) {
    Json ac = Json::array();
    for (std::size_t i = 0; i < instance.class_count(); ++i) {
      const auto& r = instance.restriction(i);
      ac.push_back(r ? Json(r->points()) : Json(nullptr));
    }
    root["allowed_centers"] = std::move(ac);
  }
  if (planted) {
    root["planted"] = internal::SolutionToJsonValue(*planted)["balls"];
  }
  return root.dump(2) + "\n";
}

Solution ParseSolutionJson(const std::string& text) {
  const Json root = Parse(text);
  if (!root.is_object()) SchemaError("$", "expected an object");
  if (root.contains("balls")) return ParseBalls(root["balls"], "$.balls");
  if (root.contains("solution")) {
    const Json& s = root["solution"];
    if (!s.is_object()) SchemaError("$.solution", "expected an object");
    return ParseBalls(Require(s, "$.solution", "balls"), "$.solution.balls");
  }
  SchemaError("$", "missing \"balls\" or \"solution\"");
}

std::string SolutionToJson(const Solution& solution) {
  return internal::SolutionToJsonValue(solution).dump(2) + "\n";
}

std::string VerificationToJson(const Instance& instance,
                               const VerificationReport& report) {
  return internal::VerificationToJsonValue(instance, report).dump(2) + "\n";
}

std::string ReadTextFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) Fail(ErrorCode::kIo, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) Fail(ErrorCode::kIo, "cannot read " + path);
  return buf.str();
}

}  // namespace nukc
