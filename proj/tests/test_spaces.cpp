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

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "oracle.hpp"
#include "zoned/engine.hpp"
#include "zoned/error.hpp"
#include "zoned/spaces.hpp"

using namespace zoned;

namespace {

Errc code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no zoned::Error thrown";
  return Errc::invalid_argument;
}

// Dom(R) == R restricted to the window points.
bool fixed_on_window(const Fixture& fx, const RegionTuple& R) {
  const auto image = dom_map(fx.space, fx.sites, R);
  for (std::size_t k = 0; k < R.k_count(); ++k)
    for (std::size_t p = 0; p < R.universe(); ++p)
      if ((!fx.window || fx.window(p)) && R[k].contains(p) != image[k].contains(p)) return false;
  return true;
}

RegionTuple expected_tuple(const Fixture& fx) {
  std::vector<PointSet> parts;
  for (std::size_t k = 0; k < fx.sites.k_count(); ++k) {
    PointSet s(fx.space.size());
    for (std::size_t p = 0; p < fx.space.size(); ++p)
      if (fx.expected_member(k, p)) s.insert(p);
    parts.push_back(std::move(s));
  }
  return RegionTuple(std::move(parts));
}

}  // namespace

TEST(Spaces, TwoValue) {
  const auto s = build_space(SpaceSpec{TwoValueSpec{5, 1, 2}});
  EXPECT_EQ(s.size(), 5u);
  EXPECT_EQ(s.kind(), ScalarKind::exact_integer);
  EXPECT_EQ(s.dist(3, 3), ExtScalar::integer(1));
  EXPECT_EQ(s.dist(3, 4), ExtScalar::integer(2));
  EXPECT_TRUE(validate_mspace(s).valid);
  EXPECT_EQ(code_of([] { (void)build_space(SpaceSpec{TwoValueSpec{5, 2, 2}}); }), Errc::invalid_space);
  EXPECT_EQ(build_space(SpaceSpec{TwoValueSpec{3, 0.5, 2}}).kind(), ScalarKind::binary_float);
}

TEST(Spaces, GridNorms) {
  for (auto norm : {Norm::l1, Norm::l2, Norm::linf}) {
    const Grid2dSpec g{-5, 5, -5, 5, 1, norm};
    const auto s = build_space(SpaceSpec{g});
    EXPECT_EQ(s.size(), 121u);
    EXPECT_EQ(s.kind(), ScalarKind::exact_integer);
    const auto a = *g.cell_at(-2, 1);
    const auto b = *g.cell_at(1, -3);
    const std::int64_t want = norm == Norm::l1 ? 7 : norm == Norm::linf ? 4 : 25;
    EXPECT_EQ(s.dist(a, b), ExtScalar::integer(want));
    EXPECT_EQ(g.coordinate(a), (std::array<double, 2>{-2, 1}));
  }
}

TEST(Spaces, GridCellLookup) {
  const Grid2dSpec g{0, 2, 0, 1, 0.5, Norm::l1};
  EXPECT_EQ(g.cols(), 5u);
  EXPECT_EQ(g.rows(), 3u);
  EXPECT_EQ(g.cell_at(0.5, 0.5), g.index(1, 1));
  EXPECT_EQ(g.cell_at(0.6, 0.5), g.index(1, 1));
  EXPECT_FALSE(g.cell_at(3, 0).has_value());
  EXPECT_EQ(code_of([] { (void)build_space(SpaceSpec{Grid2dSpec{0, 1, 0, 1, 0.3, Norm::l1}}); }), Errc::invalid_space);
  EXPECT_EQ(code_of([] { (void)build_space(SpaceSpec{Grid2dSpec{0, 1, 0, 1, -1, Norm::l1}}); }), Errc::invalid_space);
  EXPECT_EQ(code_of([] { (void)build_space(SpaceSpec{Grid2dSpec{0, 1e4, 0, 1e4, 1, Norm::l1}}); }), Errc::invalid_space);
}

TEST(Spaces, SquaredEuclideanPreservesOrder) {
  std::mt19937_64 rng(41);
  const Grid2dSpec g{-30, 30, -30, 30, 1, Norm::l2};
  const auto s = build_space(SpaceSpec{g});
  for (int i = 0; i < 1000; ++i) {
    const std::size_t x = rng() % s.size(), y = rng() % s.size(), z = rng() % s.size();
    auto euclid = [&](std::size_t a, std::size_t b) {
      const auto p = g.coordinate(a), q = g.coordinate(b);
      return std::hypot(p[0] - q[0], p[1] - q[1]);
    };
    EXPECT_EQ(s.dist(x, y) <= s.dist(x, z), euclid(x, y) <= euclid(x, z));
    EXPECT_EQ(s.dist(x, y) == s.dist(x, z), euclid(x, y) == euclid(x, z));
  }
}

TEST(Spaces, DigraphShortestPaths) {
  const auto s = build_space(SpaceSpec{DigraphSpec{4, {{0, 1, 2}, {1, 2, 3}, {0, 2, 10}, {2, 0, 1}}}});
  EXPECT_EQ(s.dist(0, 2), ExtScalar::integer(5));
  EXPECT_EQ(s.dist(1, 0), ExtScalar::integer(4));
  EXPECT_TRUE(s.dist(0, 3).is_pos_inf());
  EXPECT_TRUE(s.dist(3, 0).is_pos_inf());
  for (std::size_t x = 0; x < 4; ++x) EXPECT_EQ(s.dist(x, x), ExtScalar::integer(0));
  EXPECT_TRUE(validate_mspace(s).valid);
  EXPECT_EQ(code_of([] { (void)build_space(SpaceSpec{DigraphSpec{2, {{0, 2, 1}}}}); }), Errc::invalid_space);
  EXPECT_EQ(code_of([] { (void)build_space(SpaceSpec{DigraphSpec{2, {{0, 1, -1}}}}); }), Errc::invalid_space);
}

TEST(Spaces, IsolatedUnion) {
  IsolatedUnionSpec iso{{{{0, 0}, {1, 0}, {2, 0}}, {{0, 0}, {0, 1}}, {{5, 5}}}};
  const auto pts = isolated_union_points(iso);
  EXPECT_EQ(pts.size(), 5u);
  const auto s = build_space(SpaceSpec{iso});
  EXPECT_EQ(s.dist(1, 3), ExtScalar::pos_inf());  // (1,0) and (0,1) share no component
  EXPECT_EQ(s.dist(0, 3), ExtScalar::integer(1));
  EXPECT_EQ(s.dist(2, 0), ExtScalar::integer(4));
  EXPECT_TRUE(s.dist(4, 0).is_pos_inf());
  EXPECT_TRUE(validate_mspace(s).valid);
}

TEST(Spaces, FiniteMatrixKinds) {
  FiniteMatrixSpec exact{{{ExtScalar::integer(0), ExtScalar::pos_inf()}, {ExtScalar::neg_inf(), ExtScalar::neg_inf()}}};
  EXPECT_EQ(build_space(SpaceSpec{exact}).kind(), ScalarKind::exact_integer);
  FiniteMatrixSpec real{{{ExtScalar::real(0.5), ExtScalar::integer(1)}, {ExtScalar::integer(1), ExtScalar::integer(0)}}};
  EXPECT_EQ(build_space(SpaceSpec{real}).kind(), ScalarKind::binary_float);
  FiniteMatrixSpec broken{{{ExtScalar::integer(5), ExtScalar::integer(1)}, {ExtScalar::integer(1), ExtScalar::integer(0)}}};
  EXPECT_EQ(code_of([&] { (void)build_space(SpaceSpec{broken}); }), Errc::invalid_space);
  FiniteMatrixSpec ragged{{{ExtScalar::integer(0)}, {ExtScalar::integer(1), ExtScalar::integer(0)}}};
  EXPECT_THROW((void)build_space(SpaceSpec{ragged}), Error);
}

TEST(Spaces, EpsilonOnlyForFloatSpaces) {
  SpaceSpec exact{LinePointsSpec{{0, 1, 2}}, 0.1};
  EXPECT_EQ(code_of([&] { (void)build_space(exact); }), Errc::invalid_space);
  SpaceSpec real{LinePointsSpec{{0, 0.5, 2}}, 0.1};
  EXPECT_DOUBLE_EQ(build_space(real).tolerance(), 0.1);
}

TEST(Spaces, ToleranceWidensDominance) {
  SpaceSpec spec{LinePointsSpec{{0, 1.05, 2}}};
  const auto strict = build_space(spec);
  spec.epsilon = 0.2;
  const auto loose = build_space(spec);
  const PointSet P(3, {0}), A(3, {2});
  EXPECT_EQ(dom(strict, P, A), PointSet(3, {0}));
  EXPECT_EQ(dom(loose, P, A), PointSet(3, {0, 1}));
}

TEST(Spaces, SpheresOnGrid) {
  const Grid2dSpec g{-5, 5, -5, 5, 1, Norm::linf};
  const auto ring = cells_near_sphere(g, {0, 0}, 2);
  EXPECT_EQ(ring.count(), 16u);
  EXPECT_TRUE(ring.contains(*g.cell_at(2, -1)));
  EXPECT_FALSE(ring.contains(*g.cell_at(1, 1)));
}

TEST(Fixtures, UnknownName) {
  EXPECT_EQ(code_of([] { (void)fixture("nope"); }), Errc::unknown_fixture);
  EXPECT_EQ(code_of([] { (void)fixture("interval", 0.7); }), Errc::invalid_space);
}

TEST(Fixtures, EveryFixtureSpaceIsValid) {
  for (const char* name : {"three-point", "a-point", "interval", "maxnorm", "rings", "isolated", "digraph"}) {
    const auto fx = fixture(name);
    EXPECT_EQ(fx.name, name);
    EXPECT_TRUE(validate_mspace(fx.space).valid) << name;
    EXPECT_NO_THROW(check_sites(fx.space, fx.sites)) << name;
    for (const auto& e : fx.expected) EXPECT_TRUE(verify_zone(fx.space, fx.sites, e).passed) << name;
  }
}

TEST(Fixtures, APointExpectations) {
  EXPECT_EQ(fixture("a-point", 0.5).expected.size(), 1u);
  EXPECT_EQ(fixture("a-point", -0.25).expected.front(),
            RegionTuple({PointSet(3, {0, 1}), PointSet(3, {2})}));
  for (double a : {-0.75, -0.1, 0.3, 0.9}) {
    const auto fx = fixture("a-point", a);
    EXPECT_EQ(brute_force_fixed_points(fx.space, fx.sites, FixedPointOperator::dom), fx.expected) << a;
  }
}

TEST(Fixtures, IsolatedExpectedLiesBetweenExtremes) {
  const auto fx = fixture("isolated");
  const auto& R = fx.expected.front();
  EXPECT_TRUE(verify_zone(fx.space, fx.sites, R).passed);
  const auto m = iterate_double_zone(fx.space, fx.sites, Direction::ascending);
  const auto M = iterate_double_zone(fx.space, fx.sites, Direction::descending);
  EXPECT_TRUE(tuple_leq(m.tuple, R));
  EXPECT_TRUE(tuple_leq(R, M.tuple));
  const auto pts = isolated_union_points(std::get<IsolatedUnionSpec>(fx.spec.kind));
  const auto far_left = std::find(pts.begin(), pts.end(), std::array<double, 2>{-8, 0}) - pts.begin();
  EXPECT_TRUE(R[0].contains(static_cast<std::size_t>(far_left)));
}

TEST(Fixtures, DigraphZonesMatchEnumeration) {
  const auto fx = fixture("digraph");
  EXPECT_EQ(brute_force_fixed_points(fx.space, fx.sites, FixedPointOperator::dom), fx.expected);
  EXPECT_EQ(brute_force_fixed_points(fx.space, fx.sites, FixedPointOperator::dom2).size(), 16u);
}

TEST(Fixtures, MaxnormClosedFormIsFixedOnWindow) {
  const auto fx = fixture("maxnorm");
  EXPECT_TRUE(fixed_on_window(fx, expected_tuple(fx)));
}

TEST(Fixtures, MaxnormComputedWithinOneCell) {
  const auto fx = fixture("maxnorm");
  const auto m = iterate_double_zone(fx.space, fx.sites, Direction::ascending);
  const auto M = iterate_double_zone(fx.space, fx.sites, Direction::descending);
  EXPECT_TRUE(band_mismatches(fx, m.tuple).empty());
  EXPECT_TRUE(band_mismatches(fx, M.tuple).empty());
}

TEST(Fixtures, RingsComputedWithinOneCell) {
  const auto fx = fixture("rings");
  const auto m = iterate_double_zone(fx.space, fx.sites, Direction::ascending);
  const auto M = iterate_double_zone(fx.space, fx.sites, Direction::descending);
  EXPECT_EQ(m.tuple, M.tuple);
  const auto bad = band_mismatches(fx, m.tuple);
  EXPECT_TRUE(bad.empty()) << bad.size() << " cells outside the band";
}

TEST(Fixtures, TwoValueFamily) {
  for (std::size_t k : {2u, 3u}) {
    const auto s = build_space(SpaceSpec{TwoValueSpec{9, 1, 2}});
    std::vector<PointSet> parts;
    for (std::size_t i = 0; i < k; ++i) parts.push_back(PointSet(9, {i}));
    EXPECT_TRUE(two_value_zone_family_check(s, RegionTuple(parts), 100, k));
  }
  const auto line = build_space(SpaceSpec{LinePointsSpec{{0, 1, 2}}});
  EXPECT_THROW((void)two_value_zone_family_check(line, RegionTuple({PointSet(3, {0}), PointSet(3, {2})}), 1, 0), Error);
}
