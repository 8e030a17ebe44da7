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

#include "zoned/ext_scalar.hpp"

#include <cmath>
#include <sstream>

#include "zoned/error.hpp"

namespace zoned {

ExtScalar ExtScalar::real(double v) {
  if (std::isnan(v)) throw Error(Errc::invalid_argument, "NaN is not an extended scalar");
  if (std::isinf(v)) return v > 0 ? pos_inf() : neg_inf();
  return ExtScalar(Tag::real, 0, v);
}

std::int64_t ExtScalar::as_integer() const {
  if (tag_ == Tag::integer) return int_;
  if (tag_ == Tag::real && std::trunc(real_) == real_) return static_cast<std::int64_t>(real_);
  throw Error(Errc::invalid_argument, "scalar " + to_string() + " is not an integer");
}

double ExtScalar::as_double() const {
  switch (tag_) {
    case Tag::neg_inf: return -HUGE_VAL;
    case Tag::pos_inf: return HUGE_VAL;
    case Tag::integer: return static_cast<double>(int_);
    case Tag::real: return real_;
  }
  return 0.0;
}

namespace {

int rank(bool neg, bool pos) { return neg ? 0 : (pos ? 2 : 1); }

template <class T>
std::weak_ordering order(T a, T b) {
  if (a < b) return std::weak_ordering::less;
  if (b < a) return std::weak_ordering::greater;
  return std::weak_ordering::equivalent;
}

}  // namespace

std::weak_ordering operator<=>(const ExtScalar& lhs, const ExtScalar& rhs) {
  const int lr = rank(lhs.is_neg_inf(), lhs.is_pos_inf());
  const int rr = rank(rhs.is_neg_inf(), rhs.is_pos_inf());
  if (lr != rr || lr != 1) return order(lr, rr);
  if (lhs.is_integer() && rhs.is_integer()) return order(lhs.int_, rhs.int_);
  if (!lhs.is_integer() && !rhs.is_integer()) return order(lhs.real_, rhs.real_);
  // Mixed backends: long double holds every int64 exactly on the targets we build for.
  const long double a = lhs.is_integer() ? static_cast<long double>(lhs.int_) : lhs.real_;
  const long double b = rhs.is_integer() ? static_cast<long double>(rhs.int_) : rhs.real_;
  return order(a, b);
}

std::string ExtScalar::to_string() const {
  switch (tag_) {
    case Tag::neg_inf: return "-inf";
    case Tag::pos_inf: return "inf";
    case Tag::integer: return std::to_string(int_);
    case Tag::real: {
      std::ostringstream os;
      os.precision(17);
      os << real_;
      return os.str();
    }
  }
  return {};
}

bool leq_within(const ExtScalar& lhs, const ExtScalar& rhs, double tolerance) {
  if (tolerance == 0.0 || !lhs.is_finite() || !rhs.is_finite()) return lhs <= rhs;
  return lhs.as_double() <= rhs.as_double() + tolerance;
}

}  // namespace zoned
