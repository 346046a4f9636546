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

#ifndef NUKC_GENERATE_HPP_
#define NUKC_GENERATE_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nukc/instance.hpp"

namespace nukc {

struct GenerateSpec {
  std::uint64_t seed = 1;
  std::size_t n = 10;
  std::vector<RadiusClass> classes;
  bool planted = false;
  // Defaults to all points.
  std::optional<Weight> target;
  std::size_t dimension = 2;
};

struct GeneratedInstance {
  std::vector<std::vector<double>> points;
  std::vector<RadiusClass> classes;
  Weight target = 0;
  // With planted set: one ball per class center, radius r_i, covering at
  // least `target` points by construction.
  std::optional<Solution> plant;

  Instance ToInstance() const;
};

// Deterministic in the seed. Planted instances put sum k_i centers in a box,
// scatter `target` points inside the planted balls and the rest uniformly in
// the box.
GeneratedInstance GenerateInstance(const GenerateSpec& spec);

// "k1:r1,k2:r2,..."
std::vector<RadiusClass> ParseClassSpec(const std::string& text);

// Seeded 64-bit generator with platform-independent real draws.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);
  std::uint64_t Next();
  double Uniform();  // [0, 1)
  double Uniform(double lo, double hi);
  std::size_t Index(std::size_t n);  // [0, n)
  int Int(int lo, int hi);           // [lo, hi]

 private:
  std::uint64_t state_;
};

}  // namespace nukc

#endif  // NUKC_GENERATE_HPP_
