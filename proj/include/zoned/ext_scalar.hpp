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
#include <cstdint>
#include <string>

namespace zoned {

/// Which finite representation a space's distances use.
enum class ScalarKind { exact_integer, binary_float };

/// A point of the extended line [-inf, +inf] with either an exact integer or
/// a binary float as its finite value. Totally ordered; NaN is unrepresentable.
class ExtScalar {
 public:
  constexpr ExtScalar() = default;

  static constexpr ExtScalar integer(std::int64_t v) { return ExtScalar(Tag::integer, v, 0.0); }
  /// Infinite doubles map onto the infinities; NaN throws.
  static ExtScalar real(double v);
  static constexpr ExtScalar pos_inf() { return ExtScalar(Tag::pos_inf, 0, 0.0); }
  static constexpr ExtScalar neg_inf() { return ExtScalar(Tag::neg_inf, 0, 0.0); }

  constexpr bool is_finite() const { return tag_ == Tag::integer || tag_ == Tag::real; }
  constexpr bool is_pos_inf() const { return tag_ == Tag::pos_inf; }
  constexpr bool is_neg_inf() const { return tag_ == Tag::neg_inf; }
  constexpr bool is_integer() const { return tag_ == Tag::integer; }

  std::int64_t as_integer() const;
  /// Finite values convert exactly where possible; infinities become +-HUGE_VAL.
  double as_double() const;

  friend std::weak_ordering operator<=>(const ExtScalar& lhs, const ExtScalar& rhs);
  friend bool operator==(const ExtScalar& lhs, const ExtScalar& rhs) {
    return (lhs <=> rhs) == 0;
  }

  /// "inf", "-inf", or the finite value.
  std::string to_string() const;

 private:
  enum class Tag : std::uint8_t { neg_inf, integer, real, pos_inf };
  constexpr ExtScalar(Tag tag, std::int64_t i, double d) : tag_(tag), int_(i), real_(d) {}

  Tag tag_ = Tag::integer;
  std::int64_t int_ = 0;
  double real_ = 0.0;
};

/// lhs <= rhs + tolerance. A zero tolerance is the plain order; infinities
/// absorb the tolerance.
bool leq_within(const ExtScalar& lhs, const ExtScalar& rhs, double tolerance);

}  // namespace zoned
