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

#include <algorithm>
#include <random>

#include "oracle.hpp"
#include "zoned/engine.hpp"
#include "zoned/error.hpp"
#include "zoned/parallel.hpp"
#include "zoned/spaces.hpp"

using namespace zoned;

namespace {

MSpace line(std::vector<double> coords) { return build_space(SpaceSpec{LinePointsSpec{std::move(coords)}}); }

RegionTuple tup(std::size_t n, std::initializer_list<std::initializer_list<std::size_t>> parts) {
  std::vector<PointSet> v;
  for (auto p : parts) v.emplace_back(n, p);
  return RegionTuple(std::move(v));
}

Errc code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no zoned::Error thrown";
  return Errc::invalid_argument;
}

void expect_monotone_trace(const IterationTrace& t) {
  ASSERT_EQ(t.states.size(), t.steps + 1);
  EXPECT_LE(t.steps, t.bound);
  for (std::size_t i = 0; i + 1 < t.states.size(); ++i) {
    if (t.direction == Direction::ascending)
      EXPECT_TRUE(tuple_leq(t.states[i], t.states[i + 1]));
    else
      EXPECT_TRUE(tuple_leq(t.states[i + 1], t.states[i]));
  }
}

}  // namespace

TEST(DoubleZone, ThreePointAscendingIsTheSites) {
  const auto s = line({-1, 0, 1});
  const auto P = tup(3, {{0}, {2}});
  const auto r = iterate_double_zone(s, P, Direction::ascending);
  EXPECT_EQ(r.tuple, P);
  EXPECT_EQ(r.trace.steps, 0u);
  EXPECT_EQ(r.trace.bound, 4u);
  EXPECT_EQ(r.kind, ZoneKind::double_zone);
  EXPECT_EQ(r.extremal, Extremal::minimal);
}

TEST(DoubleZone, ThreePointDescending) {
  const auto s = line({-1, 0, 1});
  const auto r = iterate_double_zone(s, tup(3, {{0}, {2}}), Direction::descending);
  EXPECT_EQ(r.tuple, tup(3, {{0, 1}, {1, 2}}));
  EXPECT_EQ(r.extremal, Extremal::maximal);
  expect_monotone_trace(r.trace);
}

TEST(DoubleZone, IntervalMatchesClosedForm) {
  const auto fx = fixture("interval", 0.01);
  ASSERT_EQ(fx.space.size(), 601u);
  const auto m = iterate_double_zone(fx.space, fx.sites, Direction::ascending);
  const auto M = iterate_double_zone(fx.space, fx.sites, Direction::descending);
  EXPECT_EQ(m.tuple, M.tuple);
  EXPECT_LE(m.trace.steps, 1200u);
  EXPECT_LE(M.trace.steps, 1200u);
  expect_monotone_trace(m.trace);
  expect_monotone_trace(M.trace);
  EXPECT_TRUE(band_mismatches(fx, m.tuple).empty());
  // Index 200 is -1 and 400 is 1.
  EXPECT_EQ(m.tuple[0], [] {
    PointSet s(601);
    for (std::size_t i = 0; i <= 200; ++i) s.insert(i);
    return s;
  }());
  EXPECT_EQ(m.tuple[1].members().front(), 400u);
}

TEST(DoubleZone, RejectsBadSites) {
  const auto s = line({-1, 0, 1});
  EXPECT_EQ(code_of([&] { (void)iterate_double_zone(s, RegionTuple({PointSet(3, {0}), PointSet(3)}), Direction::ascending); }),
            Errc::invalid_argument);
}

TEST(Order2, ThreePointVariants) {
  const auto s = line({-1, 0, 1});
  const auto P = tup(3, {{0}, {2}});
  const auto R = zone_order2(s, P, Order2Variant::R);
  const auto S = zone_order2(s, P, Order2Variant::S);
  EXPECT_EQ(R.tuple, tup(3, {{0}, {1, 2}}));
  EXPECT_EQ(S.tuple, tup(3, {{0, 1}, {2}}));
  for (auto v : {Order2Variant::R, Order2Variant::S, Order2Variant::Z, Order2Variant::W}) {
    const auto r = zone_order2(s, P, v);
    EXPECT_TRUE(verify_zone(s, P, r.tuple).passed);
    EXPECT_LE(r.trace.steps, 2u);
    EXPECT_EQ(r.kind, ZoneKind::zone);
  }
}

TEST(Order2, TwoPointSpace) {
  const auto s = line({0, 1});
  const auto P = tup(2, {{0}, {1}});
  for (auto v : {Order2Variant::R, Order2Variant::S, Order2Variant::Z, Order2Variant::W})
    EXPECT_EQ(zone_order2(s, P, v).tuple, P);
}

TEST(Order2, RefusesOtherOrders) {
  const auto s = line({-1, 0, 1, 2});
  EXPECT_EQ(code_of([&] { (void)zone_order2(s, tup(4, {{0}, {2}, {3}}), Order2Variant::R); }),
            Errc::order_not_2);
}

TEST(FromDouble, ThreePoint) {
  const auto s = line({-1, 0, 1});
  const auto P = tup(3, {{0}, {2}});
  EXPECT_EQ(zone_from_double(s, P, P).tuple, tup(3, {{0}, {1, 2}}));
  EXPECT_EQ(zone_from_double(s, P, tup(3, {{0, 1}, {1, 2}})).tuple, tup(3, {{0, 1}, {2}}));
  const auto z = tup(3, {{0, 1}, {2}});
  EXPECT_EQ(zone_from_double(s, P, z).tuple, z);
}

TEST(FromDouble, Errors) {
  const auto s = line({-1, 0, 1});
  const auto P = tup(3, {{0}, {2}});
  EXPECT_EQ(code_of([&] { (void)zone_from_double(s, P, tup(3, {{0, 1, 2}, {2}})); }),
            Errc::not_double_zone);
  const auto s4 = line({-1, 0, 1, 2});
  const auto P3 = tup(4, {{0}, {2}, {3}});
  EXPECT_EQ(code_of([&] { (void)zone_from_double(s4, P3, P3); }), Errc::order_not_2);
}

TEST(Verify, ThreePointReports) {
  const auto s = line({-1, 0, 1});
  const auto P = tup(3, {{0}, {2}});
  EXPECT_TRUE(verify_zone(s, P, tup(3, {{0}, {1, 2}})).passed);
  const auto bad = verify_zone(s, P, P);
  EXPECT_FALSE(bad.passed);
  ASSERT_EQ(bad.diffs.size(), 2u);
  EXPECT_EQ(bad.diffs[0], PointSet(3, {1}));
  EXPECT_EQ(bad.diffs[1], PointSet(3, {1}));
  EXPECT_TRUE(verify_double_zone(s, P, P).passed);
  EXPECT_TRUE(verify_double_zone(s, P, tup(3, {{0, 1}, {1, 2}})).passed);
  EXPECT_TRUE(verify_double_zone(s, P, tup(3, {{0}, {1, 2}})).passed);
  EXPECT_FALSE(verify_zone(s, P, tup(3, {{0, 1}, {1, 2}})).passed);
}

TEST(Verify, EmptyComponentIsAnError) {
  const auto s = line({-1, 0, 1});
  EXPECT_THROW((void)verify_zone(s, tup(3, {{0}, {2}}), RegionTuple({PointSet(3, {0}), PointSet(3)})), Error);
}

TEST(BruteForce, ThreePoint) {
  const auto s = line({-1, 0, 1});
  const auto P = tup(3, {{0}, {2}});
  EXPECT_EQ(lattice_size(P), 16u);
  const auto zones = brute_force_fixed_points(s, P, FixedPointOperator::dom);
  EXPECT_EQ(zones, (std::vector<RegionTuple>{tup(3, {{0}, {1, 2}}), tup(3, {{0, 1}, {2}})}));
  auto doubles = brute_force_fixed_points(s, P, FixedPointOperator::dom2);
  auto expected = std::vector<RegionTuple>{tup(3, {{0}, {1, 2}}), tup(3, {{0, 1}, {2}}), P,
                                           tup(3, {{0, 1}, {1, 2}})};
  std::sort(expected.begin(), expected.end());
  EXPECT_EQ(doubles, expected);
}

TEST(BruteForce, PerturbedThreePointIsUnique) {
  const auto s = line({-1, 0.5, 1});
  const auto zones = brute_force_fixed_points(s, tup(3, {{0}, {2}}), FixedPointOperator::dom);
  EXPECT_EQ(zones, (std::vector<RegionTuple>{tup(3, {{0}, {1, 2}})}));
}

TEST(BruteForce, CapExceeded) {
  const auto fx = fixture("interval", 0.5);
  EXPECT_EQ(code_of([&] { (void)brute_force_fixed_points(fx.space, fx.sites, FixedPointOperator::dom, 1000); }),
            Errc::cap_exceeded);
  EXPECT_EQ(lattice_size(fx.sites), std::uint64_t{1} << 24);
}

TEST(BruteForce, LatticeEnumerationVisitsEachElementOnce) {
  const auto P = tup(4, {{0}, {3}, {1}});
  std::set<RegionTuple> seen;
  std::size_t calls = 0;
  for_each_lattice_element(P, 1u << 20, [&](const RegionTuple& r) {
    ++calls;
    EXPECT_TRUE(in_lattice(P, r));
    seen.insert(r);
  });
  EXPECT_EQ(calls, lattice_size(P));
  EXPECT_EQ(seen.size(), calls);
  EXPECT_EQ(calls, 512u);
}

TEST(BruteForce, MatchesOracle) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 80; ++trial) {
    const std::size_t n = 2 + rng() % 5;
    const auto d = oracle::random_mspace(rng, n);
    const auto sites = oracle::random_sites(rng, n, 2 + rng() % 2);
    const auto space = oracle::to_space(d);
    const auto P = oracle::to_tuple(n, sites);
    const auto fp = oracle::fixed_points(d, sites);
    auto convert = [&](const std::vector<oracle::Tuple>& ts) {
      std::vector<RegionTuple> out;
      for (const auto& t : ts) out.push_back(oracle::to_tuple(n, t));
      std::sort(out.begin(), out.end());
      return out;
    };
    EXPECT_EQ(brute_force_fixed_points(space, P, FixedPointOperator::dom), convert(fp.zones));
    EXPECT_EQ(brute_force_fixed_points(space, P, FixedPointOperator::dom2), convert(fp.double_zones));
  }
}

TEST(BruteForce, ThreadCountDoesNotChangeResult) {
  std::mt19937_64 rng(99);
  const std::size_t n = 8;
  const auto d = oracle::random_metric(rng, n);
  const auto space = oracle::to_space(d);
  const auto P = oracle::to_tuple(n, oracle::disjoint_sites(rng, n, 2));
  set_max_threads(1);
  const auto one = brute_force_fixed_points(space, P, FixedPointOperator::dom2);
  set_max_threads(4);
  EXPECT_EQ(brute_force_fixed_points(space, P, FixedPointOperator::dom2), one);
  set_max_threads(0);
}
