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
#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "zoned/dom.hpp"
#include "zoned/engine.hpp"

namespace zoned {

enum class Effort { bracketing_only, with_brute_force };

/// The six equivalent uniqueness conditions for T = Dom on the lattice Y:
///   a  m == M
///   b  Dom^2 has exactly one fixed point
///   c  every Dom^2-fixed tuple is Dom-fixed
///   d  the fixed-point sets of Dom and Dom^2 coincide
///   e  m and M are both Dom-fixed
///   f  A <= B whenever A <= Dom^2(A) and Dom^2(B) <= B
/// Conditions b, c, d and f need enumeration and stay empty otherwise.
struct UniquenessReport {
  std::optional<bool> cond_a, cond_b, cond_c, cond_d, cond_e, cond_f;
  std::optional<std::size_t> zone_count;         // Dom-fixed tuples in Y
  std::optional<std::size_t> double_zone_count;  // Dom^2-fixed tuples in Y
  RegionTuple m;
  RegionTuple M;

  /// True when every evaluated condition has the same value.
  bool consistent() const;
};

UniquenessReport uniqueness_check(const MSpace& space, const RegionTuple& sites, Effort effort,
                                  std::uint64_t cap = kDefaultEnumerationCap);

using Rational = boost::multiprecision::cpp_rational;

/// Upper end of [-3, a_t] and lower end of [b_t, 3] for Dom^t of the sites
/// ({-3}, {3}) on the segment [-3, 3].
struct IntervalTerm {
  Rational a;
  Rational b;
};

/// a_0 = -3, b_0 = 3, a_{t+1} = (b_t - 3)/2, b_{t+1} = (a_t + 3)/2, exactly.
std::vector<IntervalTerm> interval_recurrence(std::size_t t_max);

struct GridDeviation {
  std::size_t t = 0;
  IntervalTerm expected;
  std::size_t cells = 0;  // Hausdorff distance in grid cells, worst component
};

/// Compares Dom^t P on the segment grid of the given step with the exact
/// intervals [-3, a_t] and [b_t, 3], for t = 0..t_max. The step must divide 6.
std::vector<GridDeviation> recurrence_vs_grid(double step, std::size_t t_max);

}  // namespace zoned
