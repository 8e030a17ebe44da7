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

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "zoned/dom.hpp"

namespace zoned {

enum class Direction { ascending, descending };
enum class ZoneKind { zone, double_zone };
enum class Extremal { minimal, maximal, unknown };

/// Order-2 constructions. R and S iterate g1 = T1 o T2 from P1 and from X;
/// Z and W iterate g2 = T2 o T1 from P2 and from X, with T_k(A) = dom(P_k, A).
enum class Order2Variant { R, S, Z, W };

struct IterationTrace {
  std::vector<RegionTuple> states;  // states[t] after t applications
  std::size_t steps = 0;            // applications until the first fixed state
  std::size_t bound = 0;            // a-priori bound on steps
  Direction direction = Direction::ascending;
};

struct ZoneResult {
  RegionTuple tuple;
  ZoneKind kind = ZoneKind::zone;
  Extremal extremal = Extremal::unknown;
  IterationTrace trace;
};

/// Iterates Dom^2 from the sites (ascending, least double zone diagram m) or
/// from (X)_k (descending, greatest double zone diagram M) until it stops
/// changing. Throws bound_exceeded if that takes more than
/// sum_k (|X| - |P_k|) steps.
ZoneResult iterate_double_zone(const MSpace& space, const RegionTuple& sites, Direction direction);

/// Zone diagram of order 2 by iterating g1 or g2 to a fixed point and
/// completing the pair with the partner operator. At most |X| - |P_1|
/// (resp. |X| - |P_2|) steps.
ZoneResult zone_order2(const MSpace& space, const RegionTuple& sites, Order2Variant variant);

/// (S_1, dom(P_2, S_1)) for a double zone diagram S of order 2.
ZoneResult zone_from_double(const MSpace& space, const RegionTuple& sites, const RegionTuple& S);

struct VerifyReport {
  bool passed = false;
  /// Per component: symmetric difference between R_k and the image's k-th part.
  std::vector<PointSet> diffs;
};

/// Dom(R) == R, with a per-component diff.
VerifyReport verify_zone(const MSpace& space, const RegionTuple& sites, const RegionTuple& R);
/// Dom^2(R) == R, with a per-component diff.
VerifyReport verify_double_zone(const MSpace& space, const RegionTuple& sites,
                                const RegionTuple& R);

enum class FixedPointOperator { dom, dom2 };

inline constexpr std::uint64_t kDefaultEnumerationCap = std::uint64_t{1} << 24;

/// Number of elements of Y = { R : sites <= R <= (X)_k }, saturating at
/// UINT64_MAX.
std::uint64_t lattice_size(const RegionTuple& sites);

/// Calls visit on every element of Y (Gray-code order over the non-site
/// memberships, starting at the sites). Throws cap_exceeded when |Y| > cap.
void for_each_lattice_element(const RegionTuple& sites, std::uint64_t cap,
                              const std::function<void(const RegionTuple&)>& visit);

/// Every fixed point of Dom or Dom^2 inside Y, sorted.
std::vector<RegionTuple> brute_force_fixed_points(const MSpace& space, const RegionTuple& sites,
                                                  FixedPointOperator op,
                                                  std::uint64_t cap = kDefaultEnumerationCap);

}  // namespace zoned
