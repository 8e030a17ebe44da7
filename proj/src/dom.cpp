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

#include "zoned/dom.hpp"

#include <algorithm>

#include "zoned/error.hpp"
#include "zoned/parallel.hpp"

namespace zoned {

RegionTuple::RegionTuple(std::vector<PointSet> parts) : parts_(std::move(parts)) {
  if (parts_.size() < 2)
    throw Error(Errc::invalid_argument, "a region tuple needs at least 2 components");
  for (const auto& p : parts_)
    if (p.universe() != parts_.front().universe())
      throw Error(Errc::invalid_argument, "region tuple components over different spaces");
}

RegionTuple RegionTuple::top(std::size_t k, std::size_t universe) {
  return RegionTuple(std::vector<PointSet>(k, PointSet::full(universe)));
}

PointSet RegionTuple::others_union(std::size_t k) const {
  PointSet out(universe());
  for (std::size_t j = 0; j < parts_.size(); ++j)
    if (j != k) out |= parts_[j];
  return out;
}

std::size_t RegionTuple::total_count() const {
  std::size_t n = 0;
  for (const auto& p : parts_) n += p.count();
  return n;
}

std::string RegionTuple::to_string() const {
  std::string out = "(";
  for (std::size_t k = 0; k < parts_.size(); ++k) {
    if (k != 0) out += ',';
    out += parts_[k].to_string();
  }
  return out + ")";
}

namespace {

void require_nonempty(const PointSet& s, const char* role) {
  if (s.empty()) throw Error(Errc::invalid_argument, std::string(role) + " must be nonempty");
}

void require_same_shape(const RegionTuple& a, const RegionTuple& b) {
  if (a.k_count() != b.k_count())
    throw Error(Errc::invalid_argument, "tuples have different k (" + std::to_string(a.k_count()) +
                                            " vs " + std::to_string(b.k_count()) + ")");
  if (a.universe() != b.universe())
    throw Error(Errc::invalid_argument, "tuples over different spaces");
}

}  // namespace

ExtScalar dist_point_set(const MSpace& space, std::size_t x, const PointSet& A) {
  require_nonempty(A, "distance target set");
  ExtScalar best = ExtScalar::pos_inf();
  bool first = true;
  A.for_each([&](std::size_t y) {
    const ExtScalar d = space.dist(x, y);
    if (first || d < best) best = d;
    first = false;
  });
  return best;
}

PointSet dom(const MSpace& space, const PointSet& P, const PointSet& A) {
  require_nonempty(P, "dom sites argument");
  require_nonempty(A, "dom opponent argument");
  if (P.universe() != space.size() || A.universe() != space.size())
    throw Error(Errc::invalid_argument, "dom arguments do not belong to this space");

  const std::size_t n = space.size();
  PointSet out(n);
  auto words = out.words();
  const std::size_t work = n * (P.count() + A.count());
  const std::size_t min_words = work < (std::size_t{1} << 18) ? words.size() + 1 : 4;

  // Each chunk owns a disjoint range of output words.
  parallel_chunks(words.size(), min_words, [&](std::size_t wb, std::size_t we) {
    for (std::size_t w = wb; w < we; ++w) {
      PointSet::Word bits = 0;
      const std::size_t lo = w * PointSet::kWordBits;
      const std::size_t hi = std::min(n, lo + PointSet::kWordBits);
      for (std::size_t x = lo; x < hi; ++x) {
        const ExtScalar to_sites = dist_point_set(space, x, P);
        // d(x,P) <= min_A d(x,.) + eps  iff  it holds against every member of A.
        const bool inside =
            A.all_of([&](std::size_t y) { return space.dominates(to_sites, space.dist(x, y)); });
        if (inside) bits |= PointSet::Word{1} << (x - lo);
      }
      words[w] = bits;
    }
  });
  return out;
}

void check_sites(const MSpace& space, const RegionTuple& sites) {
  if (sites.k_count() < 2) throw Error(Errc::invalid_argument, "need at least 2 site sets");
  if (sites.universe() != space.size())
    throw Error(Errc::invalid_argument, "sites do not belong to this space");
  for (std::size_t k = 0; k < sites.k_count(); ++k)
    if (sites[k].empty())
      throw Error(Errc::invalid_argument, "site set " + std::to_string(k) + " is empty");
}

RegionTuple dom_map(const MSpace& space, const RegionTuple& sites, const RegionTuple& R) {
  require_same_shape(sites, R);
  std::vector<PointSet> out;
  out.reserve(R.k_count());
  for (std::size_t k = 0; k < R.k_count(); ++k) {
    const PointSet others = R.others_union(k);
    if (others.empty())
      throw Error(Errc::invalid_argument,
                  "union of the regions other than " + std::to_string(k) + " is empty");
    out.push_back(dom(space, sites[k], others));
  }
  return RegionTuple(std::move(out));
}

RegionTuple dom_map2(const MSpace& space, const RegionTuple& sites, const RegionTuple& R) {
  return dom_map(space, sites, dom_map(space, sites, R));
}

bool tuple_leq(const RegionTuple& a, const RegionTuple& b) {
  require_same_shape(a, b);
  for (std::size_t k = 0; k < a.k_count(); ++k)
    if (!a[k].subset_of(b[k])) return false;
  return true;
}

RegionTuple tuple_union(const RegionTuple& a, const RegionTuple& b) {
  require_same_shape(a, b);
  RegionTuple out(a);
  for (std::size_t k = 0; k < a.k_count(); ++k) out[k] |= b[k];
  return out;
}

RegionTuple tuple_intersection(const RegionTuple& a, const RegionTuple& b) {
  require_same_shape(a, b);
  RegionTuple out(a);
  for (std::size_t k = 0; k < a.k_count(); ++k) out[k] &= b[k];
  return out;
}

bool in_lattice(const RegionTuple& sites, const RegionTuple& R) { return tuple_leq(sites, R); }

}  // namespace zoned
