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

#include "zoned/engine.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <stdexcept>
#include <utility>

#include "zoned/error.hpp"
#include "zoned/parallel.hpp"

namespace zoned {

namespace {

void bound_failure(std::size_t steps, std::size_t bound) {
  throw Error(Errc::bound_exceeded, "iteration needed more than " + std::to_string(bound) +
                                        " steps (reached " + std::to_string(steps) + ")");
}

}  // namespace

ZoneResult iterate_double_zone(const MSpace& space, const RegionTuple& sites, Direction direction) {
  check_sites(space, sites);
  const std::size_t n = space.size();

  IterationTrace trace;
  trace.direction = direction;
  for (const auto& p : sites) trace.bound += n - p.count();

  RegionTuple state =
      direction == Direction::ascending ? sites : RegionTuple::top(sites.k_count(), n);
  trace.states.push_back(state);
  for (;;) {
    RegionTuple next = dom_map2(space, sites, state);
    if (next == state) break;
    const bool monotone = direction == Direction::ascending ? tuple_leq(state, next)
                                                            : tuple_leq(next, state);
    if (!monotone) throw std::logic_error("Dom^2 iterate left its monotone chain");
    if (++trace.steps > trace.bound) bound_failure(trace.steps, trace.bound);
    trace.states.push_back(next);
    state = std::move(next);
  }

  ZoneResult result;
  result.tuple = std::move(state);
  result.kind = ZoneKind::double_zone;
  result.extremal = direction == Direction::ascending ? Extremal::minimal : Extremal::maximal;
  result.trace = std::move(trace);
  return result;
}

ZoneResult zone_order2(const MSpace& space, const RegionTuple& sites, Order2Variant variant) {
  check_sites(space, sites);
  if (sites.k_count() != 2)
    throw Error(Errc::order_not_2, "order-2 construction needs exactly 2 site sets, got " +
                                       std::to_string(sites.k_count()));
  const std::size_t n = space.size();
  const bool first = variant == Order2Variant::R || variant == Order2Variant::S;
  const bool from_sites = variant == Order2Variant::R || variant == Order2Variant::Z;
  const PointSet& own = first ? sites[0] : sites[1];
  const PointSet& partner = first ? sites[1] : sites[0];

  // g = T_own o T_partner, iterated on the own component.
  auto partner_of = [&](const PointSet& a) { return dom(space, partner, a); };
  auto g = [&](const PointSet& a) { return dom(space, own, partner_of(a)); };
  auto as_tuple = [&](const PointSet& a) {
    PointSet b = partner_of(a);
    return first ? RegionTuple({a, std::move(b)}) : RegionTuple({std::move(b), a});
  };

  IterationTrace trace;
  trace.direction = from_sites ? Direction::ascending : Direction::descending;
  trace.bound = n - own.count();

  PointSet a = from_sites ? own : PointSet::full(n);
  // Distance of |a| from its terminal value moves strictly until the fixed point.
  std::size_t remaining = from_sites ? n - a.count() : a.count() - own.count();
  trace.states.push_back(as_tuple(a));
  for (;;) {
    PointSet next = g(a);
    if (next == a) break;
    const bool monotone = from_sites ? a.subset_of(next) : next.subset_of(a);
    const std::size_t next_remaining = from_sites ? n - next.count() : next.count() - own.count();
    if (!monotone || next_remaining >= remaining)
      throw std::logic_error("order-2 iterate is not strictly monotone");
    remaining = next_remaining;
    if (++trace.steps > trace.bound) bound_failure(trace.steps, trace.bound);
    trace.states.push_back(as_tuple(next));
    a = std::move(next);
  }

  ZoneResult result;
  result.tuple = trace.states.back();
  result.kind = ZoneKind::zone;
  result.extremal = Extremal::unknown;
  result.trace = std::move(trace);
  if (!verify_zone(space, sites, result.tuple).passed)
    throw std::logic_error("order-2 construction produced a non-fixed tuple");
  return result;
}

ZoneResult zone_from_double(const MSpace& space, const RegionTuple& sites, const RegionTuple& S) {
  check_sites(space, sites);
  if (sites.k_count() != 2 || S.k_count() != 2)
    throw Error(Errc::order_not_2, "zone extraction from a double zone diagram needs order 2");
  if (!verify_double_zone(space, sites, S).passed)
    throw Error(Errc::not_double_zone, "candidate " + S.to_string() + " is not Dom^2-fixed");

  ZoneResult result;
  result.tuple = RegionTuple({S[0], dom(space, sites[1], S[0])});
  result.kind = ZoneKind::zone;
  result.extremal = Extremal::unknown;
  result.trace.states = {S, result.tuple};
  return result;
}

namespace {

VerifyReport diff_against(const RegionTuple& R, const RegionTuple& image) {
  VerifyReport report;
  report.passed = true;
  for (std::size_t k = 0; k < R.k_count(); ++k) {
    report.diffs.push_back(R[k].symmetric_difference(image[k]));
    if (!report.diffs.back().empty()) report.passed = false;
  }
  return report;
}

void require_candidate(const MSpace& space, const RegionTuple& sites, const RegionTuple& R) {
  check_sites(space, sites);
  if (R.k_count() != sites.k_count() || R.universe() != sites.universe())
    throw Error(Errc::invalid_argument, "candidate does not match the site tuple's shape");
  for (std::size_t k = 0; k < R.k_count(); ++k)
    if (R[k].empty())
      throw Error(Errc::invalid_argument, "candidate component " + std::to_string(k) + " is empty");
}

}  // namespace

VerifyReport verify_zone(const MSpace& space, const RegionTuple& sites, const RegionTuple& R) {
  require_candidate(space, sites, R);
  return diff_against(R, dom_map(space, sites, R));
}

VerifyReport verify_double_zone(const MSpace& space, const RegionTuple& sites,
                                const RegionTuple& R) {
  require_candidate(space, sites, R);
  return diff_against(R, dom_map2(space, sites, R));
}

namespace {

struct FreeBit {
  std::size_t k;
  std::size_t point;
};

std::vector<FreeBit> free_bits(const RegionTuple& sites) {
  std::vector<FreeBit> out;
  for (std::size_t k = 0; k < sites.k_count(); ++k)
    for (std::size_t x = 0; x < sites.universe(); ++x)
      if (!sites[k].contains(x)) out.push_back({k, x});
  return out;
}

void toggle(RegionTuple& t, const FreeBit& b) {
  if (t[b.k].contains(b.point))
    t[b.k].erase(b.point);
  else
    t[b.k].insert(b.point);
}

// Visits the 2^low_bits tuples sharing the given high-bit prefix.
template <class Fn>
void enumerate_block(const RegionTuple& sites, const std::vector<FreeBit>& bits,
                     std::size_t low_bits, std::uint64_t prefix, Fn&& fn) {
  RegionTuple t = sites;
  for (std::size_t i = low_bits; i < bits.size(); ++i)
    if (((prefix >> (i - low_bits)) & 1U) != 0) toggle(t, bits[i]);
  fn(t);
  const std::uint64_t count = std::uint64_t{1} << low_bits;
  for (std::uint64_t i = 1; i < count; ++i) {
    toggle(t, bits[static_cast<std::size_t>(std::countr_zero(i))]);
    fn(t);
  }
}

void check_cap(const RegionTuple& sites, std::uint64_t cap) {
  const std::uint64_t size = lattice_size(sites);
  if (size > cap)
    throw Error(Errc::cap_exceeded, "search space of " +
                                        (size == std::numeric_limits<std::uint64_t>::max()
                                             ? std::string(">= 2^64")
                                             : std::to_string(size)) +
                                        " tuples exceeds the cap of " + std::to_string(cap));
}

}  // namespace

std::uint64_t lattice_size(const RegionTuple& sites) {
  std::size_t bits = 0;
  for (const auto& p : sites) bits += p.universe() - p.count();
  if (bits >= 64) return std::numeric_limits<std::uint64_t>::max();
  return std::uint64_t{1} << bits;
}

void for_each_lattice_element(const RegionTuple& sites, std::uint64_t cap,
                              const std::function<void(const RegionTuple&)>& visit) {
  check_cap(sites, cap);
  const auto bits = free_bits(sites);
  enumerate_block(sites, bits, bits.size(), 0, visit);
}

std::vector<RegionTuple> brute_force_fixed_points(const MSpace& space, const RegionTuple& sites,
                                                  FixedPointOperator op, std::uint64_t cap) {
  check_sites(space, sites);
  check_cap(sites, cap);
  const auto bits = free_bits(sites);

  // Split on the top bits so workers own disjoint blocks of Y.
  const std::size_t split = std::min<std::size_t>(bits.size() / 2, 6);
  const std::size_t low = bits.size() - split;
  const std::size_t blocks = std::size_t{1} << split;
  std::vector<std::vector<RegionTuple>> found(blocks);

  parallel_chunks(blocks, 1, [&](std::size_t begin, std::size_t end) {
    for (std::size_t b = begin; b < end; ++b) {
      enumerate_block(sites, bits, low, b, [&](const RegionTuple& t) {
        RegionTuple image = dom_map(space, sites, t);
        const bool fixed = op == FixedPointOperator::dom
                               ? image == t
                               : (image == t || dom_map(space, sites, image) == t);
        if (fixed) found[b].push_back(t);
      });
    }
  });

  std::vector<RegionTuple> out;
  for (auto& v : found)
    for (auto& t : v) out.push_back(std::move(t));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace zoned
