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

#include <random>

#include "oracle.hpp"
#include "zoned/error.hpp"
#include "zoned/spaces.hpp"
#include "zoned/uniqueness.hpp"

using namespace zoned;

namespace {

RegionTuple tup(std::size_t n, std::initializer_list<std::initializer_list<std::size_t>> parts) {
  std::vector<PointSet> v;
  for (auto p : parts) v.emplace_back(n, p);
  return RegionTuple(std::move(v));
}

struct OracleConditions {
  bool a, b, c, d, e, f;
  std::size_t zones;
};

// Straight from the definitions, pairwise for f.
OracleConditions oracle_conditions(const oracle::Matrix& dm, const oracle::Tuple& sites) {
  std::vector<oracle::Tuple> zones, doubles, post, pre;
  oracle::for_each_in_lattice(dm.size(), sites, [&](const oracle::Tuple& t) {
    const auto once = oracle::Dom(dm, sites, t);
    const auto twice = oracle::Dom(dm, sites, once);
    if (once == t) zones.push_back(t);
    if (twice == t) doubles.push_back(t);
    if (oracle::leq(t, twice)) post.push_back(t);
    if (oracle::leq(twice, t)) pre.push_back(t);
  });
  // m and M: the doubles below/above every other double.
  auto least = [&](bool lower) {
    for (const auto& c : doubles) {
      bool ok = true;
      for (const auto& o : doubles) ok = ok && (lower ? oracle::leq(c, o) : oracle::leq(o, c));
      if (ok) return c;
    }
    ADD_FAILURE() << "no extremal double zone diagram";
    return oracle::Tuple{};
  };
  const auto m = least(true);
  const auto M = least(false);
  OracleConditions out{};
  out.a = m == M;
  out.b = doubles.size() == 1;
  out.c = true;
  for (const auto& t : doubles) out.c = out.c && oracle::Dom(dm, sites, t) == t;
  out.d = zones == doubles;
  out.e = oracle::Dom(dm, sites, m) == m && oracle::Dom(dm, sites, M) == M;
  out.f = true;
  for (const auto& A : post)
    for (const auto& B : pre) out.f = out.f && oracle::leq(A, B);
  out.zones = zones.size();
  return out;
}

}  // namespace

TEST(Uniqueness, ThreePointIsNotUnique) {
  const auto fx = fixture("three-point");
  const auto r = uniqueness_check(fx.space, fx.sites, Effort::with_brute_force);
  EXPECT_EQ(r.cond_a, false);
  EXPECT_EQ(r.m, tup(3, {{0}, {2}}));
  EXPECT_EQ(r.M, tup(3, {{0, 1}, {1, 2}}));
  EXPECT_EQ(r.zone_count, 2u);
  EXPECT_EQ(r.double_zone_count, 4u);
  for (const auto& c : {r.cond_a, r.cond_b, r.cond_c, r.cond_d, r.cond_e, r.cond_f}) EXPECT_EQ(c, false);
  EXPECT_TRUE(r.consistent());
}

TEST(Uniqueness, PerturbedThreePointIsUnique) {
  const auto fx = fixture("a-point", 0.5);
  const auto r = uniqueness_check(fx.space, fx.sites, Effort::with_brute_force);
  for (const auto& c : {r.cond_a, r.cond_b, r.cond_c, r.cond_d, r.cond_e, r.cond_f}) EXPECT_EQ(c, true);
  EXPECT_EQ(r.zone_count, 1u);
  EXPECT_EQ(r.m, tup(3, {{0}, {1, 2}}));
}

TEST(Uniqueness, BracketingOnlyLeavesEnumeratedFieldsEmpty) {
  const auto fx = fixture("interval", 0.01);
  const auto r = uniqueness_check(fx.space, fx.sites, Effort::bracketing_only);
  EXPECT_EQ(r.cond_a, true);
  EXPECT_EQ(r.cond_e, true);
  EXPECT_FALSE(r.cond_b.has_value());
  EXPECT_FALSE(r.cond_f.has_value());
  EXPECT_FALSE(r.zone_count.has_value());
  EXPECT_THROW((void)uniqueness_check(fx.space, fx.sites, Effort::with_brute_force), Error);
}

TEST(Uniqueness, AgreesWithDefinitionsOnRandomSpaces) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t n = 2 + rng() % 4;
    const auto dm = oracle::random_mspace(rng, n);
    const auto sites = oracle::random_sites(rng, n, 2);
    const auto o = oracle_conditions(dm, sites);
    const auto r = uniqueness_check(oracle::to_space(dm), oracle::to_tuple(n, sites), Effort::with_brute_force);
    EXPECT_EQ(r.cond_a, o.a);
    EXPECT_EQ(r.cond_b, o.b);
    EXPECT_EQ(r.cond_c, o.c);
    EXPECT_EQ(r.cond_d, o.d);
    EXPECT_EQ(r.cond_e, o.e);
    EXPECT_EQ(r.cond_f, o.f);
    EXPECT_EQ(r.zone_count, o.zones);
    EXPECT_TRUE(r.consistent());
  }
}

TEST(Recurrence, FirstTermsAndSymmetry) {
  const auto terms = interval_recurrence(40);
  ASSERT_EQ(terms.size(), 41u);
  EXPECT_EQ(terms[1].a, 0);
  EXPECT_EQ(terms[1].b, 0);
  EXPECT_EQ(terms[2].a, Rational(-3, 2));
  for (const auto& t : terms) EXPECT_EQ(t.b, -t.a);
  for (std::size_t t = 2; t + 3 <= 40; t += 2) {
    EXPECT_LT(terms[t].a, terms[t + 2].a);
    EXPECT_LT(terms[t].a, -1);
    EXPECT_GT(terms[t + 1].a, terms[t + 3].a);
    EXPECT_GT(terms[t + 1].a, -1);
  }
  const Rational gap = abs(terms[40].a + 1);
  EXPECT_LT(gap, Rational(1, 1000000000));
}

TEST(Recurrence, GridAgreement) {
  const auto half = recurrence_vs_grid(0.5, 1);
  EXPECT_EQ(half[0].cells, 0u);
  EXPECT_EQ(half[1].cells, 0u);
  for (const auto& d : recurrence_vs_grid(1.0, 2)) EXPECT_LE(d.cells, 1u);
  const auto fine = recurrence_vs_grid(0.01, 20);
  ASSERT_EQ(fine.size(), 21u);
  for (const auto& d : fine) EXPECT_LE(d.cells, 1u) << "t=" << d.t;
}
