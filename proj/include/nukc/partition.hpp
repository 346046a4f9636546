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

#ifndef NUKC_PARTITION_HPP_
#define NUKC_PARTITION_HPP_

#include <string>
#include <vector>

#include "nukc/metric.hpp"

namespace nukc {

// Representatives in selection order, each heading one block. Blocks are
// pairwise disjoint, cover the ground set, and contain their representative.
struct Partition {
  std::vector<Point> representatives;
  std::vector<PointSet> children;

  std::size_t size() const { return representatives.size(); }
  const PointSet& ChildrenOf(Point rep) const;
  PointSet RepresentativeSet() const;
};

// Returns an empty string when `p` partitions `ground`, otherwise a
// description of the first defect found.
std::string CheckPartition(const Partition& p, const PointSet& ground);

}  // namespace nukc

#endif  // NUKC_PARTITION_HPP_
