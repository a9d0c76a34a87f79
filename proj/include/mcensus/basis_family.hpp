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

// Basis families and the operations the counting argument uses on them: the
// base exchange axiom, contraction, and the rank-2 structure theorem.

#ifndef MCENSUS_BASIS_FAMILY_HPP_
#define MCENSUS_BASIS_FAMILY_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mcensus/combinatorics.hpp"

namespace mcensus {

// A set of r-subsets of {0, ..., n-1}, stored as its indicator vector over
// the C(n, r) colex-ordered coordinates. Bit i of the vector is bit (i % 64)
// of words()[i / 64]; unused high bits of the last word are always zero.
//
// The empty family is a valid value (it is the extra element of M_{E,r}).
class BasisFamily {
 public:
  // The empty family on (n, r).
  BasisFamily(int n, int r);

  static BasisFamily from_members(int n, int r, std::span<const ElementSet> members);
  static BasisFamily from_ranks(int n, int r, std::span<const std::uint64_t> ranks);
  // Throws std::invalid_argument on a length mismatch or stray high bits.
  static BasisFamily from_words(int n, int r, std::vector<std::uint64_t> words);
  // Big-endian lowercase hex of the indicator integer, exactly
  // hex_digits(n, r) digits. Throws std::invalid_argument when malformed.
  static BasisFamily from_hex(int n, int r, std::string_view hex);
  static std::size_t hex_digits(int n, int r);

  int n() const { return n_; }
  int r() const { return r_; }
  std::uint64_t coordinate_count() const { return coords_; }
  std::span<const std::uint64_t> words() const { return words_; }

  bool contains_rank(std::uint64_t rank) const {
    return rank < coords_ && ((words_[rank >> 6] >> (rank & 63)) & 1u) != 0;
  }
  bool contains(ElementSet subset) const;
  std::size_t member_count() const;
  bool empty() const { return member_count() == 0; }
  // Members in colex order.
  std::vector<ElementSet> members() const;
  std::string to_hex() const;

  bool operator==(const BasisFamily&) const = default;

 private:
  BasisFamily(int n, int r, std::vector<std::uint64_t> words);
  void set_rank(std::uint64_t rank) { words_[rank >> 6] |= std::uint64_t{1} << (rank & 63); }

  int n_;
  int r_;
  std::uint64_t coords_;
  std::vector<std::uint64_t> words_;
};

// Total order by the indicator vector read as an unsigned integer. Only
// meaningful between families with the same (n, r).
bool value_less(const BasisFamily& a, const BasisFamily& b);

// A failure of the exchange axiom: no f in other \ base makes
// base - {element} + {f} a member.
struct ExchangeViolation {
  ElementSet base;
  ElementSet other;
  int element = 0;
  bool operator==(const ExchangeViolation&) const = default;
};

bool is_base_exchange(const BasisFamily& family);

// First violation in the order (colex rank of base, colex rank of other,
// element); nullopt exactly when is_base_exchange holds.
std::optional<ExchangeViolation> exchange_witness(const BasisFamily& family);

// {B - T : T subset of B in family}, on the ground set with T removed and the
// survivors renumbered 0..n-|T|-1 in their original order. Throws
// std::invalid_argument when |T| > r, std::out_of_range when T leaves [0, n).
BasisFamily contract(const BasisFamily& family, ElementSet t_set);

// Rank-2 structure: loops (elements in no basis) and a partition of the
// remaining elements whose cross pairs are exactly the bases.
struct Rank2Decomposition {
  ElementSet loops;
  std::vector<ElementSet> blocks;  // sorted by smallest element
  bool operator==(const Rank2Decomposition&) const = default;
};

// Throws std::invalid_argument for r != 2 and NotAMatroidError when the
// family fails the exchange axiom.
Rank2Decomposition decompose_rank2(const BasisFamily& family);

// All pairs {e, f} with e, f in distinct blocks. Throws std::invalid_argument
// unless loops and blocks partition {0, ..., n-1}.
BasisFamily compose_rank2(const Rank2Decomposition& decomposition, int n);

}  // namespace mcensus

#endif  // MCENSUS_BASIS_FAMILY_HPP_
