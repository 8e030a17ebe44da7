/*
 Copyright 2026 The zoned Authors
 Licensed under the Apache License, Version 2.0 (the "License");
 you may not use this file except in compliance with the License.
 You may obtain a copy of the License at

      http://www.apache.org/licenses/LICENSE-2.0

 Unless required by applicable law or agreed to in writing, software
 distributed under the License is distributed on an "AS IS" BASIS,
 WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 See the License for the specific language governing permissions and
 limitations under the License.
*/

#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "zoned/mspace.hpp"
#include "zoned/point_set.hpp"

namespace zoned {

/// A K-indexed tuple of point sets over one space (sites, regions, iterates).
/// Always has at least two components, all over the same universe.
class RegionTuple {
 public:
  RegionTuple() = default;
  explicit RegionTuple(std::vector<PointSet> parts);

  /// (X, X, ..., X) with k components.
  static RegionTuple top(std::size_t k, std::size_t universe);

  std::size_t k_count() const { return parts_.size(); }
  std::size_t universe() const { return parts_.empty() ? 0 : parts_.front().universe(); }

  const PointSet& operator[](std::size_t k) const { return parts_[k]; }
  PointSet& operator[](std::size_t k) { return parts_[k]; }
  auto begin() const { return parts_.begin(); }
  auto end() const { return parts_.end(); }

  /// Union of every component except k.
  PointSet others_union(std::size_t k) const;
  /// Sum of component cardinalities.
  std::size_t total_count() const;

  friend bool operator==(const RegionTuple&, const RegionTuple&) = default;
  friend std::strong_ordering operator<=>(const RegionTuple& a, const RegionTuple& b) {
    return std::lexicographical_compare_three_way(a.parts_.begin(), a.parts_.end(),
                                                  b.parts_.begin(), b.parts_.end());
  }

  /// "({0},{1,2})"
  std::string to_string() const;

 private:
  std::vector<PointSet> parts_;
};

/// d(x, A) = min over y in A of d(x, y). Throws on empty A.
ExtScalar dist_point_set(const MSpace& space, std::size_t x, const PointSet& A);

/// dom(P, A) = { x : d(x,P) <= d(x,A) }, ties included. P and A must be nonempty.
PointSet dom(const MSpace& space, const PointSet& P, const PointSet& A);

/// Dom(R)_k = dom(P_k, union of R_j for j != k).
RegionTuple dom_map(const MSpace& space, const RegionTuple& sites, const RegionTuple& R);
/// Dom applied twice.
RegionTuple dom_map2(const MSpace& space, const RegionTuple& sites, const RegionTuple& R);

bool tuple_leq(const RegionTuple& a, const RegionTuple& b);
RegionTuple tuple_union(const RegionTuple& a, const RegionTuple& b);
RegionTuple tuple_intersection(const RegionTuple& a, const RegionTuple& b);

/// R belongs to the lattice Y = { R : sites <= R <= (X)_k }.
bool in_lattice(const RegionTuple& sites, const RegionTuple& R);

/// Throws unless sites has >= 2 nonempty components over a space of this size.
void check_sites(const MSpace& space, const RegionTuple& sites);

}  // namespace zoned
