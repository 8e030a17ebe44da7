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

#include "zoned/uniqueness.hpp"

#include <algorithm>

#include "zoned/spaces.hpp"

namespace zoned {

bool UniquenessReport::consistent() const {
  std::optional<bool> seen;
  for (const auto& c : {cond_a, cond_b, cond_c, cond_d, cond_e, cond_f}) {
    if (!c) continue;
    if (seen && *seen != *c) return false;
    seen = c;
  }
  return true;
}

UniquenessReport uniqueness_check(const MSpace& space, const RegionTuple& sites, Effort effort,
                                  std::uint64_t cap) {
  UniquenessReport report;
  report.m = iterate_double_zone(space, sites, Direction::ascending).tuple;
  report.M = iterate_double_zone(space, sites, Direction::descending).tuple;
  report.cond_a = report.m == report.M;
  report.cond_e = dom_map(space, sites, report.m) == report.m &&
                  dom_map(space, sites, report.M) == report.M;
  if (effort == Effort::bracketing_only) return report;

  // One pass over Y collects both fixed-point sets, the join of all
  // post-fixed points A <= Dom^2(A) and the meet of all pre-fixed points
  // Dom^2(B) <= B. Condition f holds iff that join lies below that meet.
  std::vector<RegionTuple> zone, double_zone;
  RegionTuple post_join = sites;
  RegionTuple pre_meet = RegionTuple::top(sites.k_count(), space.size());
  for_each_lattice_element(sites, cap, [&](const RegionTuple& t) {
    const RegionTuple once = dom_map(space, sites, t);
    const RegionTuple twice = dom_map(space, sites, once);
    if (once == t) zone.push_back(t);
    if (twice == t) double_zone.push_back(t);
    if (tuple_leq(t, twice)) post_join = tuple_union(post_join, t);
    if (tuple_leq(twice, t)) pre_meet = tuple_intersection(pre_meet, t);
  });
  std::sort(zone.begin(), zone.end());
  std::sort(double_zone.begin(), double_zone.end());

  report.zone_count = zone.size();
  report.double_zone_count = double_zone.size();
  report.cond_b = double_zone.size() == 1;
  report.cond_c = std::all_of(double_zone.begin(), double_zone.end(), [&](const RegionTuple& t) {
    return std::binary_search(zone.begin(), zone.end(), t);
  });
  report.cond_d = zone == double_zone;
  report.cond_f = tuple_leq(post_join, pre_meet);
  return report;
}

std::vector<IntervalTerm> interval_recurrence(std::size_t t_max) {
  std::vector<IntervalTerm> out;
  out.reserve(t_max + 1);
  out.push_back({Rational(-3), Rational(3)});
  for (std::size_t t = 0; t < t_max; ++t) {
    const auto& prev = out.back();
    out.push_back({(prev.b - 3) / 2, (prev.a + 3) / 2});
  }
  return out;
}

namespace {

std::size_t directed_hausdorff(const std::vector<std::size_t>& from,
                               const std::vector<std::size_t>& to) {
  std::size_t worst = 0;
  for (std::size_t x : from) {
    const auto it = std::lower_bound(to.begin(), to.end(), x);
    std::size_t best = SIZE_MAX;
    if (it != to.end()) best = *it - x;
    if (it != to.begin()) best = std::min(best, x - *std::prev(it));
    worst = std::max(worst, best);
  }
  return worst;
}

std::size_t hausdorff(const PointSet& a, const PointSet& b) {
  const auto am = a.members();
  const auto bm = b.members();
  return std::max(directed_hausdorff(am, bm), directed_hausdorff(bm, am));
}

}  // namespace

std::vector<GridDeviation> recurrence_vs_grid(double step, std::size_t t_max) {
  const Fixture fx = fixture("interval", step);
  const std::size_t n = fx.space.size();
  const auto segments = static_cast<std::int64_t>(n - 1);
  const auto terms = interval_recurrence(t_max);

  std::vector<GridDeviation> out;
  RegionTuple state = fx.sites;
  for (std::size_t t = 0; t <= t_max; ++t) {
    // Point i sits at -3 + 6i/segments.
    PointSet left(n), right(n);
    for (std::size_t i = 0; i < n; ++i) {
      const Rational scaled(static_cast<std::int64_t>(6 * i));
      if (scaled <= (terms[t].a + 3) * segments) left.insert(i);
      if (scaled >= (terms[t].b + 3) * segments) right.insert(i);
    }
    out.push_back({t, terms[t], std::max(hausdorff(state[0], left), hausdorff(state[1], right))});
    if (t < t_max) state = dom_map(fx.space, fx.sites, state);
  }
  return out;
}

}  // namespace zoned
