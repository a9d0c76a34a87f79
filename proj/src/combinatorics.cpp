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

#include "mcensus/combinatorics.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <string>

namespace mcensus {
namespace {

using PascalTable = std::array<std::array<std::uint64_t, 65>, 65>;

constexpr PascalTable make_pascal() {
  PascalTable t{};
  for (int n = 0; n <= 64; ++n) {
    t[n][0] = 1;
    for (int k = 1; k <= n; ++k) t[n][k] = t[n - 1][k - 1] + (k < n ? t[n - 1][k] : 0);
  }
  return t;
}

constexpr PascalTable kPascal = make_pascal();

void require_element(int e) {
  if (e < 0 || e >= kMaxGroundSet) {
    throw std::out_of_range("element " + std::to_string(e) + " outside [0, 64)");
  }
}

}  // namespace

ElementSet::ElementSet(std::initializer_list<int> elements)
    : ElementSet(from_elements(std::span<const int>(elements.begin(), elements.size()))) {}

ElementSet ElementSet::from_elements(std::span<const int> elements) {
  std::uint64_t mask = 0;
  for (int e : elements) {
    require_element(e);
    mask |= std::uint64_t{1} << e;
  }
  return ElementSet(mask);
}

ElementSet ElementSet::range(int n) {
  if (n < 0 || n > kMaxGroundSet) throw std::out_of_range("ground set size out of range");
  return ElementSet(n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
}

std::vector<int> ElementSet::elements() const {
  std::vector<int> out;
  out.reserve(size());
  for (std::uint64_t m = mask_; m != 0; m &= m - 1) out.push_back(std::countr_zero(m));
  return out;
}

BigInt binomial(int n, int k) {
  if (n < 0 || k < 0) throw std::invalid_argument("binomial: negative argument");
  if (k > n) return 0;
  k = std::min(k, n - k);
  BigInt result = 1;
  // Each prefix product is itself a binomial coefficient, so the division is exact.
  for (int i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

std::uint64_t binomial_u64(int n, int k) {
  if (n < 0 || n > 64 || k < 0) throw std::out_of_range("binomial_u64: argument out of range");
  return k > n ? 0 : kPascal[n][k];
}

std::uint64_t colex_rank_mask(std::uint64_t subset_mask) {
  std::uint64_t rank = 0;
  int i = 1;
  for (std::uint64_t m = subset_mask; m != 0; m &= m - 1, ++i) {
    rank += kPascal[std::countr_zero(m)][i];
  }
  return rank;
}

std::uint64_t colex_unrank_mask(int r, std::uint64_t rank) {
  std::uint64_t mask = 0;
  int c = 63;
  for (int i = r; i >= 1; --i) {
    while (c >= i && kPascal[c][i] > rank) --c;
    rank -= kPascal[c][i];
    mask |= std::uint64_t{1} << c;
    --c;
  }
  return mask;
}

SubsetCode colex_rank(std::span<const int> subset, int n) {
  if (n < 0 || n > kMaxGroundSet) throw std::out_of_range("ground set size out of range");
  for (std::size_t i = 0; i < subset.size(); ++i) {
    if (subset[i] < 0 || subset[i] >= n) {
      throw std::out_of_range("element " + std::to_string(subset[i]) + " outside [0, " +
                              std::to_string(n) + ")");
    }
    if (i > 0 && subset[i] == subset[i - 1]) {
      throw std::invalid_argument("duplicate element " + std::to_string(subset[i]));
    }
    if (i > 0 && subset[i] < subset[i - 1]) {
      throw std::invalid_argument("subset is not sorted");
    }
  }
  std::uint64_t rank = 0;
  for (std::size_t i = 0; i < subset.size(); ++i) {
    rank += kPascal[subset[i]][i + 1];
  }
  return SubsetCode{n, static_cast<int>(subset.size()), rank};
}

std::vector<int> colex_unrank(const SubsetCode& code) {
  if (code.n < 0 || code.n > kMaxGroundSet || code.r < 0 || code.r > code.n) {
    throw std::out_of_range("subset code has invalid (n, r)");
  }
  if (code.rank >= kPascal[code.n][code.r]) {
    throw std::out_of_range("rank " + std::to_string(code.rank) + " >= C(" +
                            std::to_string(code.n) + "," + std::to_string(code.r) + ")");
  }
  return ElementSet(colex_unrank_mask(code.r, code.rank)).elements();
}

std::vector<std::uint64_t> colex_subsets(int n, int r) {
  if (n < 0 || n >= kMaxGroundSet || r < 0) throw std::out_of_range("colex_subsets: bad (n, r)");
  std::vector<std::uint64_t> out;
  if (r > n) return out;
  out.reserve(kPascal[n][r]);
  if (r == 0) {
    out.push_back(0);
    return out;
  }
  const std::uint64_t limit = std::uint64_t{1} << n;
  // Gosper's hack walks masks of fixed popcount in increasing numeric order.
  for (std::uint64_t m = (std::uint64_t{1} << r) - 1; m < limit;) {
    out.push_back(m);
    const std::uint64_t low = m & -m;
    const std::uint64_t ripple = m + low;
    m = ripple | (((m ^ ripple) >> 2) / low);
  }
  return out;
}

BigInt bell_number(int n) {
  if (n < 0) throw std::invalid_argument("bell_number: negative argument");
  std::vector<BigInt> row{1};
  for (int i = 0; i < n; ++i) {
    std::vector<BigInt> next;
    next.reserve(row.size() + 1);
    next.push_back(row.back());
    for (const BigInt& v : row) next.push_back(next.back() + v);
    row = std::move(next);
  }
  return row.front();
}

bool SetPartition::is_valid() const {
  std::uint64_t seen = 0;
  for (ElementSet b : blocks) {
    if (b.empty() || (b.mask() & seen) != 0) return false;
    seen |= b.mask();
  }
  return seen == universe.mask();
}

void for_each_partition(ElementSet universe,
                        const std::function<void(const SetPartition&)>& visit) {
  const std::vector<int> elems = universe.elements();
  SetPartition current{universe, {}};
  // Restricted growth: element i joins an existing block or opens the next one.
  // Blocks open in order of their smallest element, so output is canonical.
  std::function<void(std::size_t)> place = [&](std::size_t i) {
    if (i == elems.size()) {
      visit(current);
      return;
    }
    const std::uint64_t bit = std::uint64_t{1} << elems[i];
    for (std::size_t b = 0; b < current.blocks.size(); ++b) {
      current.blocks[b] = ElementSet(current.blocks[b].mask() | bit);
      place(i + 1);
      current.blocks[b] = ElementSet(current.blocks[b].mask() & ~bit);
    }
    current.blocks.push_back(ElementSet(bit));
    place(i + 1);
    current.blocks.pop_back();
  };
  place(0);
}

std::vector<SetPartition> enumerate_partitions(ElementSet universe) {
  std::vector<SetPartition> out;
  for_each_partition(universe, [&](const SetPartition& p) { out.push_back(p); });
  return out;
}

}  // namespace mcensus
