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

#include "zoned/mspace.hpp"

#include <cmath>
#include <string>

#include "zoned/error.hpp"

namespace zoned {

namespace {

class DenseSource final : public DistanceSource {
 public:
  DenseSource(std::size_t n, std::vector<ExtScalar> cells) : n_(n), cells_(std::move(cells)) {}
  ExtScalar operator()(std::size_t x, std::size_t y) const override { return cells_[x * n_ + y]; }

 private:
  std::size_t n_;
  std::vector<ExtScalar> cells_;
};

class FunctionSource final : public DistanceSource {
 public:
  explicit FunctionSource(std::function<ExtScalar(std::size_t, std::size_t)> fn)
      : fn_(std::move(fn)) {}
  ExtScalar operator()(std::size_t x, std::size_t y) const override { return fn_(x, y); }

 private:
  std::function<ExtScalar(std::size_t, std::size_t)> fn_;
};

}  // namespace

MSpace::MSpace(std::size_t size, ScalarKind kind, std::shared_ptr<const DistanceSource> source)
    : size_(size), kind_(kind), source_(std::move(source)) {
  if (size_ == 0) throw Error(Errc::invalid_space, "an m-space needs at least one point");
  if (!source_) throw Error(Errc::invalid_space, "missing distance function");
}

MSpace MSpace::from_matrix(const std::vector<std::vector<ExtScalar>>& rows, ScalarKind kind) {
  const std::size_t n = rows.size();
  std::vector<ExtScalar> cells;
  cells.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n)
      throw Error(Errc::invalid_space, "distance matrix row " + std::to_string(i) + " has " +
                                           std::to_string(rows[i].size()) + " entries, expected " +
                                           std::to_string(n));
    cells.insert(cells.end(), rows[i].begin(), rows[i].end());
  }
  return MSpace(n, kind, std::make_shared<DenseSource>(n, std::move(cells)));
}

MSpace MSpace::from_function(std::size_t size, ScalarKind kind,
                             std::function<ExtScalar(std::size_t, std::size_t)> fn) {
  return MSpace(size, kind, std::make_shared<FunctionSource>(std::move(fn)));
}

MSpace MSpace::with_tolerance(double tolerance) const {
  if (!(tolerance >= 0.0) || std::isinf(tolerance))
    throw Error(Errc::invalid_argument, "tolerance must be a finite nonnegative number");
  if (tolerance != 0.0 && kind_ != ScalarKind::binary_float)
    throw Error(Errc::invalid_argument, "a dominance tolerance applies to float spaces only");
  MSpace out(*this);
  out.tolerance_ = tolerance;
  return out;
}

MSpace MSpace::materialized() const {
  std::vector<ExtScalar> cells;
  cells.reserve(size_ * size_);
  for (std::size_t x = 0; x < size_; ++x)
    for (std::size_t y = 0; y < size_; ++y) cells.push_back(dist(x, y));
  MSpace out(size_, kind_, std::make_shared<DenseSource>(size_, std::move(cells)));
  out.tolerance_ = tolerance_;
  return out;
}

ValidationReport validate_mspace(const MSpace& space) {
  ValidationReport report;
  for (std::size_t x = 0; x < space.size(); ++x) {
    const ExtScalar self = space.dist(x, x);
    for (std::size_t y = 0; y < space.size(); ++y) {
      if (!(self <= space.dist(x, y))) report.violations.push_back({x, y});
    }
  }
  report.valid = report.violations.empty();
  return report;
}

}  // namespace zoned
