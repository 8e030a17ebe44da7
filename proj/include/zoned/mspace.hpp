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
#include <functional>
#include <memory>
#include <vector>

#include "zoned/ext_scalar.hpp"

namespace zoned {

/// Opaque distance oracle. Implementations must be pure and thread safe.
class DistanceSource {
 public:
  virtual ~DistanceSource() = default;
  virtual ExtScalar operator()(std::size_t x, std::size_t y) const = 0;
};

/// A finite m-space: points 0..size-1 and a distance into [-inf, inf]. Nothing
/// beyond d(x,x) <= d(x,y) is assumed, and even that is only checked by
/// validate_mspace. Immutable after construction; cheap to copy.
class MSpace {
 public:
  MSpace(std::size_t size, ScalarKind kind, std::shared_ptr<const DistanceSource> source);

  /// Dense row-major matrix; rows.size() is the space size.
  static MSpace from_matrix(const std::vector<std::vector<ExtScalar>>& rows, ScalarKind kind);
  static MSpace from_function(std::size_t size, ScalarKind kind,
                              std::function<ExtScalar(std::size_t, std::size_t)> fn);

  std::size_t size() const { return size_; }
  ScalarKind kind() const { return kind_; }
  ExtScalar dist(std::size_t x, std::size_t y) const { return (*source_)(x, y); }

  /// Slack used by the dominance predicate d(x,P) <= d(x,A) + tolerance.
  /// Only float spaces accept a nonzero value.
  double tolerance() const { return tolerance_; }
  MSpace with_tolerance(double tolerance) const;

  /// The dominance predicate with this space's tolerance applied.
  bool dominates(const ExtScalar& to_sites, const ExtScalar& to_other) const {
    return leq_within(to_sites, to_other, tolerance_);
  }

  /// Copy whose distances are read from a precomputed dense matrix.
  MSpace materialized() const;

 private:
  std::size_t size_;
  ScalarKind kind_;
  std::shared_ptr<const DistanceSource> source_;
  double tolerance_ = 0.0;
};

struct AxiomViolation {
  std::size_t x;
  std::size_t y;
  friend bool operator==(const AxiomViolation&, const AxiomViolation&) = default;
};

struct ValidationReport {
  bool valid = true;
  std::vector<AxiomViolation> violations;
};

/// Exhaustive check of d(x,x) <= d(x,y) over all ordered pairs.
ValidationReport validate_mspace(const MSpace& space);

}  // namespace zoned
