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

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace zoned {

/// Subset of the point indices {0, ..., universe-1} of one space, stored as a
/// bit vector. The empty set is representable; operations that need a
/// nonempty argument check for it themselves.
class PointSet {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  PointSet() = default;
  explicit PointSet(std::size_t universe);
  PointSet(std::size_t universe, std::initializer_list<std::size_t> members);
  PointSet(std::size_t universe, std::span<const std::size_t> members);

  static PointSet full(std::size_t universe);

  std::size_t universe() const { return universe_; }
  std::size_t count() const;
  bool empty() const;

  bool contains(std::size_t x) const {
    return x < universe_ && ((words_[x / kWordBits] >> (x % kWordBits)) & 1U) != 0;
  }
  void insert(std::size_t x);
  void erase(std::size_t x);

  /// Sorted member indices.
  std::vector<std::size_t> members() const;

  template <class Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      Word bits = words_[w];
      while (bits != 0) {
        const int bit = std::countr_zero(bits);
        fn(w * kWordBits + static_cast<std::size_t>(bit));
        bits &= bits - 1;
      }
    }
  }

  /// Short-circuiting test of pred over the members, in index order.
  template <class Pred>
  bool all_of(Pred&& pred) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      Word bits = words_[w];
      while (bits != 0) {
        const int bit = std::countr_zero(bits);
        if (!pred(w * kWordBits + static_cast<std::size_t>(bit))) return false;
        bits &= bits - 1;
      }
    }
    return true;
  }

  bool subset_of(const PointSet& other) const;

  PointSet& operator|=(const PointSet& other);
  PointSet& operator&=(const PointSet& other);
  PointSet& operator-=(const PointSet& other);
  friend PointSet operator|(PointSet a, const PointSet& b) { return a |= b; }
  friend PointSet operator&(PointSet a, const PointSet& b) { return a &= b; }
  friend PointSet operator-(PointSet a, const PointSet& b) { return a -= b; }
  PointSet symmetric_difference(const PointSet& other) const;
  PointSet complement() const;

  std::span<const Word> words() const { return words_; }
  std::span<Word> words() { return words_; }

  friend bool operator==(const PointSet&, const PointSet&) = default;
  /// Lexicographic on the bit string read from index 0 upward.
  friend std::strong_ordering operator<=>(const PointSet& a, const PointSet& b);

  /// "{0,2,5}"
  std::string to_string() const;

 private:
  void check_same_universe(const PointSet& other) const;
  void trim();

  std::size_t universe_ = 0;
  std::vector<Word> words_;
};

}  // namespace zoned
