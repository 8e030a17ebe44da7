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

#include "zoned/point_set.hpp"

#include <bit>

#include "zoned/error.hpp"

namespace zoned {

PointSet::PointSet(std::size_t universe)
    : universe_(universe), words_((universe + kWordBits - 1) / kWordBits, 0) {}

PointSet::PointSet(std::size_t universe, std::initializer_list<std::size_t> members)
    : PointSet(universe) {
  for (std::size_t x : members) insert(x);
}

PointSet::PointSet(std::size_t universe, std::span<const std::size_t> members)
    : PointSet(universe) {
  for (std::size_t x : members) insert(x);
}

PointSet PointSet::full(std::size_t universe) {
  PointSet s(universe);
  for (auto& w : s.words_) w = ~Word{0};
  s.trim();
  return s;
}

std::size_t PointSet::count() const {
  std::size_t n = 0;
  for (Word w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

bool PointSet::empty() const {
  for (Word w : words_)
    if (w != 0) return false;
  return true;
}

void PointSet::insert(std::size_t x) {
  if (x >= universe_)
    throw Error(Errc::invalid_argument,
                "point " + std::to_string(x) + " outside space of size " + std::to_string(universe_));
  words_[x / kWordBits] |= Word{1} << (x % kWordBits);
}

void PointSet::erase(std::size_t x) {
  if (x >= universe_) return;
  words_[x / kWordBits] &= ~(Word{1} << (x % kWordBits));
}

std::vector<std::size_t> PointSet::members() const {
  std::vector<std::size_t> out;
  out.reserve(count());
  for_each([&](std::size_t x) { out.push_back(x); });
  return out;
}

bool PointSet::subset_of(const PointSet& other) const {
  check_same_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i)
    if ((words_[i] & ~other.words_[i]) != 0) return false;
  return true;
}

PointSet& PointSet::operator|=(const PointSet& other) {
  check_same_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

PointSet& PointSet::operator&=(const PointSet& other) {
  check_same_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

PointSet& PointSet::operator-=(const PointSet& other) {
  check_same_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
  return *this;
}

PointSet PointSet::symmetric_difference(const PointSet& other) const {
  check_same_universe(other);
  PointSet out(*this);
  for (std::size_t i = 0; i < words_.size(); ++i) out.words_[i] ^= other.words_[i];
  return out;
}

PointSet PointSet::complement() const {
  PointSet out(*this);
  for (auto& w : out.words_) w = ~w;
  out.trim();
  return out;
}

std::strong_ordering operator<=>(const PointSet& a, const PointSet& b) {
  if (a.universe_ != b.universe_) return a.universe_ <=> b.universe_;
  for (std::size_t i = 0; i < a.words_.size(); ++i) {
    const PointSet::Word diff = a.words_[i] ^ b.words_[i];
    if (diff == 0) continue;
    // The lowest differing index decides; the set lacking it sorts first.
    const int bit = std::countr_zero(diff);
    return ((a.words_[i] >> bit) & 1U) != 0 ? std::strong_ordering::greater
                                            : std::strong_ordering::less;
  }
  return std::strong_ordering::equal;
}

std::string PointSet::to_string() const {
  std::string out = "{";
  bool first = true;
  for_each([&](std::size_t x) {
    if (!first) out += ',';
    out += std::to_string(x);
    first = false;
  });
  return out + "}";
}

void PointSet::check_same_universe(const PointSet& other) const {
  if (universe_ != other.universe_)
    throw Error(Errc::invalid_argument, "point sets over different spaces (" +
                                            std::to_string(universe_) + " vs " +
                                            std::to_string(other.universe_) + ")");
}

void PointSet::trim() {
  const std::size_t tail = universe_ % kWordBits;
  if (tail != 0 && !words_.empty()) words_.back() &= (Word{1} << tail) - 1;
}

}  // namespace zoned
