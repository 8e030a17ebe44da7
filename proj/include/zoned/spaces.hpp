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

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "zoned/dom.hpp"
#include "zoned/mspace.hpp"

namespace zoned {

enum class Norm { l1, l2, linf };

/// Explicit distance matrix. Integer entries give an exact-integer space.
struct FiniteMatrixSpec {
  std::vector<std::vector<ExtScalar>> matrix;
};

/// Points on a line with d(x,y) = |x - y|. All-integer coordinates give an
/// exact space; origin and step only decode coordinates for display.
struct LinePointsSpec {
  std::vector<double> coords;
  double origin = 0.0;
  double step = 1.0;
};

/// Cell-center grid over [xmin,xmax] x [ymin,ymax]. Point (col, row) sits at
/// (xmin + col*step, ymin + row*step) and has index row*cols + col.
/// Distances are in cell units and exact; l2 is stored squared.
struct Grid2dSpec {
  double xmin = 0, xmax = 0, ymin = 0, ymax = 0, step = 1;
  Norm norm = Norm::l2;

  std::size_t cols() const;
  std::size_t rows() const;
  std::size_t size() const { return cols() * rows(); }
  std::size_t index(std::size_t col, std::size_t row) const { return row * cols() + col; }
  std::array<double, 2> coordinate(std::size_t index) const;
  /// Cell nearest to (x, y), if it lies within half a step.
  std::optional<std::size_t> cell_at(double x, double y) const;
};

struct Arc {
  std::size_t from = 0;
  std::size_t to = 0;
  double length = 1.0;
};

/// Directed shortest-path lengths, +inf when unreachable, 0 on the diagonal.
struct DigraphSpec {
  std::size_t vertices = 0;
  std::vector<Arc> arcs;
};

/// Union of planar point sets. Two points are at their (squared) Euclidean
/// distance when some component holds both, and at +inf otherwise. Equal
/// coordinates in different components name the same point.
struct IsolatedUnionSpec {
  std::vector<std::vector<std::array<double, 2>>> components;
};

/// d(x,x) = a and d(x,y) = b for x != y, with a < b.
struct TwoValueSpec {
  std::size_t points = 0;
  double a = 0.0;
  double b = 1.0;
};

struct SpaceSpec {
  std::variant<FiniteMatrixSpec, LinePointsSpec, Grid2dSpec, DigraphSpec, IsolatedUnionSpec,
               TwoValueSpec>
      kind;
  double epsilon = 0.0;  // dominance tolerance, float spaces only
};

std::string_view kind_name(const SpaceSpec& spec);

/// Builds and validates the space. Throws invalid_space on malformed specs or
/// when the result breaks d(x,x) <= d(x,y).
MSpace build_space(const SpaceSpec& spec);

/// Distinct points of an isolated union, in first-appearance order.
std::vector<std::array<double, 2>> isolated_union_points(const IsolatedUnionSpec& spec);

/// Grid cells within half a step of the sphere |p - center| = radius in the
/// grid's norm.
PointSet cells_near_sphere(const Grid2dSpec& grid, std::array<double, 2> center, double radius);

/// A worked example: the space, its sites and the closed-form answer.
struct Fixture {
  std::string name;
  SpaceSpec spec;
  MSpace space;
  RegionTuple sites;
  /// Known zone diagrams, exact on the discretization (may be empty).
  std::vector<RegionTuple> expected;
  /// Closed-form membership of point in region k (grid fixtures).
  std::function<bool(std::size_t k, std::size_t point)> expected_member;
  /// Points where the closed form is compared; empty means everywhere.
  std::function<bool(std::size_t point)> window;
  /// Points within this many cells of p (p itself excluded).
  std::function<std::vector<std::size_t>(std::size_t point)> neighbors;
  std::size_t tolerance_cells = 0;
};

/// Names: three-point, a-point (parameter a, default 0.5), interval
/// (parameter step, default 0.01), maxnorm, rings, isolated, digraph.
/// A parameter of 0 selects the default.
Fixture fixture(std::string_view name, double parameter = 0.0);

struct Mismatch {
  std::size_t k;
  std::size_t point;
};

/// Window points where computed membership disagrees with the closed form and
/// no neighbor within the fixture's tolerance has the opposite closed-form
/// membership, i.e. disagreements outside the boundary band.
std::vector<Mismatch> band_mismatches(const Fixture& fx, const RegionTuple& computed);

/// Samples random pairwise-disjoint covering tuples with P_k <= R_k and checks
/// each is Dom-fixed. Requires a two-value space and pairwise-disjoint sites.
bool two_value_zone_family_check(const MSpace& space, const RegionTuple& sites,
                                 std::size_t trial_count, std::uint64_t seed);

}  // namespace zoned
