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

#include "mcensus/basis_family.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

#include "mcensus/errors.hpp"

namespace mcensus {
namespace {

// Indicator vectors beyond this many coordinates are not desk-scale.
constexpr std::uint64_t kMaxCoordinates = std::uint64_t{1} << 26;

std::uint64_t checked_coordinates(int n, int r) {
  if (n < 0 || n >= kMaxGroundSet || r < 0) {
    throw std::out_of_range("basis family needs 0 <= n < 64 and r >= 0");
  }
  const std::uint64_t coords = binomial_u64(n, r);
  if (coords > kMaxCoordinates) throw std::out_of_range("C(n, r) too large for an indicator vector");
  return coords;
}

std::size_t word_count(std::uint64_t coords) { return static_cast<std::size_t>((coords + 63) / 64); }

// Drops the bit positions in `removed` and packs the survivors downwards.
std::uint64_t squeeze(std::uint64_t mask, std::uint64_t removed) {
  std::uint64_t out = 0;
  int pos = 0;
  for (int e = 0; e < kMaxGroundSet; ++e) {
    const std::uint64_t bit = std::uint64_t{1} << e;
    if (removed & bit) continue;
    if (mask & bit) out |= std::uint64_t{1} << pos;
    ++pos;
  }
  return out;
}

int hex_value(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  return -1;
}

}  // namespace

BasisFamily::BasisFamily(int n, int r)
    : n_(n), r_(r), coords_(checked_coordinates(n, r)), words_(word_count(coords_), 0) {}

BasisFamily::BasisFamily(int n, int r, std::vector<std::uint64_t> words)
    : n_(n), r_(r), coords_(checked_coordinates(n, r)), words_(std::move(words)) {}

BasisFamily BasisFamily::from_members(int n, int r, std::span<const ElementSet> members) {
  BasisFamily f(n, r);
  const ElementSet ground = ElementSet::range(n);
  for (ElementSet m : members) {
    if (!m.is_subset_of(ground)) throw std::out_of_range("member outside the ground set");
    if (m.size() != r) throw std::invalid_argument("member has the wrong size");
    f.set_rank(colex_rank_mask(m.mask()));
  }
  return f;
}

BasisFamily BasisFamily::from_ranks(int n, int r, std::span<const std::uint64_t> ranks) {
  BasisFamily f(n, r);
  for (std::uint64_t rank : ranks) {
    if (rank >= f.coords_) throw std::out_of_range("coordinate rank out of range");
    f.set_rank(rank);
  }
  return f;
}

BasisFamily BasisFamily::from_words(int n, int r, std::vector<std::uint64_t> words) {
  const std::uint64_t coords = checked_coordinates(n, r);
  if (words.size() != word_count(coords)) throw std::invalid_argument("indicator word count mismatch");
  if (coords % 64 != 0 && !words.empty() && (words.back() >> (coords % 64)) != 0) {
    throw std::invalid_argument("indicator has bits beyond C(n, r)");
  }
  return BasisFamily(n, r, std::move(words));
}

std::size_t BasisFamily::hex_digits(int n, int r) {
  return static_cast<std::size_t>((checked_coordinates(n, r) + 3) / 4);
}

BasisFamily BasisFamily::from_hex(int n, int r, std::string_view hex) {
  const std::size_t digits = hex_digits(n, r);
  if (hex.size() != digits) {
    throw std::invalid_argument("expected " + std::to_string(digits) + " hex digits, got " +
                                std::to_string(hex.size()));
  }
  std::vector<std::uint64_t> words(word_count(checked_coordinates(n, r)), 0);
  for (std::size_t k = 0; k < digits; ++k) {
    const int v = hex_value(hex[digits - 1 - k]);
    if (v < 0) throw std::invalid_argument("invalid hex digit '" + std::string(1, hex[digits - 1 - k]) + "'");
    const std::size_t bit = 4 * k;
    // A nibble never straddles a word boundary since 64 % 4 == 0.
    if (v != 0 && bit / 64 >= words.size()) throw std::invalid_argument("indicator has bits beyond C(n, r)");
    if (v != 0) words[bit / 64] |= static_cast<std::uint64_t>(v) << (bit % 64);
  }
  return from_words(n, r, std::move(words));
}

std::string BasisFamily::to_hex() const {
  const std::size_t digits = static_cast<std::size_t>((coords_ + 3) / 4);
  std::string out(digits, '0');
  static constexpr char kDigits[] = "0123456789abcdef";
  for (std::size_t k = 0; k < digits; ++k) {
    const std::size_t bit = 4 * k;
    out[digits - 1 - k] = kDigits[(words_[bit / 64] >> (bit % 64)) & 0xf];
  }
  return out;
}

bool BasisFamily::contains(ElementSet subset) const {
  if (subset.size() != r_ || !subset.is_subset_of(ElementSet::range(n_))) return false;
  return contains_rank(colex_rank_mask(subset.mask()));
}

std::size_t BasisFamily::member_count() const {
  std::size_t count = 0;
  for (std::uint64_t w : words_) count += static_cast<std::size_t>(std::popcount(w));
  return count;
}

std::vector<ElementSet> BasisFamily::members() const {
  std::vector<ElementSet> out;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    for (std::uint64_t bits = words_[w]; bits != 0; bits &= bits - 1) {
      const std::uint64_t rank = w * 64 + static_cast<std::uint64_t>(std::countr_zero(bits));
      out.emplace_back(colex_unrank_mask(r_, rank));
    }
  }
  return out;
}

bool value_less(const BasisFamily& a, const BasisFamily& b) {
  const auto wa = a.words();
  const auto wb = b.words();
  if (wa.size() != wb.size()) return wa.size() < wb.size();
  for (std::size_t i = wa.size(); i-- > 0;) {
    if (wa[i] != wb[i]) return wa[i] < wb[i];
  }
  return false;
}

std::optional<ExchangeViolation> exchange_witness(const BasisFamily& family) {
  const std::vector<ElementSet> members = family.members();
  for (ElementSet base : members) {
    for (ElementSet other : members) {
      const ElementSet gains = other - base;
      for (int e : (base - other).elements()) {
        const std::uint64_t without_e = base.mask() & ~(std::uint64_t{1} << e);
        bool repaired = false;
        for (std::uint64_t g = gains.mask(); g != 0 && !repaired; g &= g - 1) {
          repaired = family.contains_rank(colex_rank_mask(without_e | (g & -g)));
        }
        if (!repaired) return ExchangeViolation{base, other, e};
      }
    }
  }
  return std::nullopt;
}

bool is_base_exchange(const BasisFamily& family) { return !exchange_witness(family).has_value(); }

BasisFamily contract(const BasisFamily& family, ElementSet t_set) {
  if (!t_set.is_subset_of(ElementSet::range(family.n()))) {
    throw std::out_of_range("contraction set leaves the ground set");
  }
  const int t = t_set.size();
  if (t > family.r()) throw std::invalid_argument("contraction set larger than the rank");
  std::vector<std::uint64_t> ranks;
  for (ElementSet b : family.members()) {
    if (t_set.is_subset_of(b)) ranks.push_back(colex_rank_mask(squeeze(b.mask(), t_set.mask())));
  }
  return BasisFamily::from_ranks(family.n() - t, family.r() - t, ranks);
}

}  // namespace mcensus
