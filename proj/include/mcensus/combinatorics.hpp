// Copyright 2026 The Matroid Census Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Exact combinatorial primitives over a 0-indexed ground set {0, ..., n-1}.
//
// r-subsets are indexed in colexicographic order: a sorted subset
// s_1 < s_2 < ... < s_r has rank sum_i C(s_i, i). Colex order coincides with
// the numeric order of the subsets' bit masks, and the rank does not depend on
// n, which is what lets contraction move between (n, r) and (n-t, r-t) index
// spaces without reshuffling.

#ifndef MCENSUS_COMBINATORICS_HPP_
#define MCENSUS_COMBINATORICS_HPP_

#include <bit>
#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace mcensus {

using BigInt = boost::multiprecision::cpp_int;

// Largest supported ground set; element sets are 64-bit masks.
inline constexpr int kMaxGroundSet = 64;

// A set of ground-set elements, stored as a bit mask (bit e <=> element e).
class ElementSet {
 public:
  constexpr ElementSet() = default;
  constexpr explicit ElementSet(std::uint64_t mask) : mask_(mask) {}
  ElementSet(std::initializer_list<int> elements);
  // Throws std::out_of_range for elements outside [0, 64).
  static ElementSet from_elements(std::span<const int> elements);
  // {0, ..., n-1}.
  static ElementSet range(int n);

  constexpr std::uint64_t mask() const { return mask_; }
  constexpr int size() const { return std::popcount(mask_); }
  constexpr bool empty() const { return mask_ == 0; }
  constexpr bool contains(int e) const {
    return e >= 0 && e < kMaxGroundSet && ((mask_ >> e) & 1u) != 0;
  }
  constexpr bool is_subset_of(ElementSet other) const {
    return (mask_ & ~other.mask_) == 0;
  }
  // Largest element + 1, or 0 for the empty set.
  constexpr int bound() const { return 64 - std::countl_zero(mask_); }
  std::vector<int> elements() const;

  constexpr ElementSet operator|(ElementSet o) const { return ElementSet(mask_ | o.mask_); }
  constexpr ElementSet operator&(ElementSet o) const { return ElementSet(mask_ & o.mask_); }
  constexpr ElementSet operator-(ElementSet o) const { return ElementSet(mask_ & ~o.mask_); }
  constexpr auto operator<=>(const ElementSet&) const = default;

 private:
  std::uint64_t mask_ = 0;
};

// C(n, k) exactly; 0 when k > n.
BigInt binomial(int n, int k);

// C(n, k) for n <= 64 as a machine integer (every such value fits).
// Throws std::out_of_range for n outside [0, 64].
std::uint64_t binomial_u64(int n, int k);

// Position of an r-subset of {0, ..., n-1} in colex order.
struct SubsetCode {
  int n = 0;
  int r = 0;
  std::uint64_t rank = 0;
  auto operator<=>(const SubsetCode&) const = default;
};

// subset must be strictly increasing with elements in [0, n).
SubsetCode colex_rank(std::span<const int> subset, int n);
std::vector<int> colex_unrank(const SubsetCode& code);

// Mask-level variants used on hot paths. The rank of a mask is independent of
// the ground set size.
std::uint64_t colex_rank_mask(std::uint64_t subset_mask);
std::uint64_t colex_unrank_mask(int r, std::uint64_t rank);

// All r-subsets of {0, ..., n-1} as masks, in colex order.
std::vector<std::uint64_t> colex_subsets(int n, int r);

// Bell number B_n via the Bell triangle.
BigInt bell_number(int n);

// A partition of `universe` into non-empty disjoint blocks. Blocks are kept
// sorted by their smallest element so equal partitions compare equal.
struct SetPartition {
  ElementSet universe;
  std::vector<ElementSet> blocks;

  // Checks disjointness, non-emptiness and coverage.
  bool is_valid() const;
  bool operator==(const SetPartition&) const = default;
};

// Calls visit once for every partition of universe (restricted growth
// strings). The empty universe has exactly one partition, with no blocks.
void for_each_partition(ElementSet universe,
                        const std::function<void(const SetPartition&)>& visit);
std::vector<SetPartition> enumerate_partitions(ElementSet universe);

}  // namespace mcensus

#endif  // MCENSUS_COMBINATORICS_HPP_
