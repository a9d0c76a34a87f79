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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <bit>
#include <random>
#include <set>
#include <vector>

#include "mcensus/basis_family.hpp"
#include "mcensus/enumeration.hpp"
#include "mcensus/errors.hpp"

using mcensus::BasisFamily;
using mcensus::ElementSet;

namespace {

BasisFamily family(int n, int r, std::initializer_list<ElementSet> members) {
  const std::vector<ElementSet> v(members);
  return BasisFamily::from_members(n, r, v);
}

BasisFamily u23() { return family(3, 2, {{0, 1}, {0, 2}, {1, 2}}); }

// Set-of-sets oracle for the exchange axiom; no colex arithmetic involved.
bool exchange_oracle(const std::vector<ElementSet>& members) {
  const std::set<ElementSet> fam(members.begin(), members.end());
  for (ElementSet b : fam) {
    for (ElementSet b2 : fam) {
      for (int e : (b - b2).elements()) {
        bool ok = false;
        for (int f : (b2 - b).elements()) {
          ok = ok || fam.contains((b - ElementSet{e}) | ElementSet{f});
        }
        if (!ok) return false;
      }
    }
  }
  return true;
}

// Maps element e of the contracted ground set back to the original ground set.
std::uint64_t expand(std::uint64_t mask, std::uint64_t removed) {
  std::uint64_t out = 0;
  int pos = 0;
  for (int e = 0; e < 64 && (mask >> pos) != 0; ++e) {
    if ((removed >> e) & 1u) continue;
    if ((mask >> pos) & 1u) out |= std::uint64_t{1} << e;
    ++pos;
  }
  return out;
}

}  // namespace

TEST_CASE("exchange axiom examples") {
  CHECK(mcensus::is_base_exchange(u23()));
  CHECK_FALSE(mcensus::is_base_exchange(family(4, 2, {{0, 3}, {1, 2}})));
  CHECK(mcensus::is_base_exchange(BasisFamily(5, 2)));
  for (std::uint64_t rank = 0; rank < 4; ++rank) {
    const std::vector<std::uint64_t> one{rank};
    CHECK(mcensus::is_base_exchange(BasisFamily::from_ranks(4, 3, one)));
  }
}

TEST_CASE("exchange witness") {
  CHECK_FALSE(mcensus::exchange_witness(u23()).has_value());
  CHECK_FALSE(mcensus::exchange_witness(BasisFamily(4, 2)).has_value());
  // {1,2} has colex rank 2 and {0,3} rank 3, so B = {1,2} is scanned first.
  const auto w = mcensus::exchange_witness(family(4, 2, {{0, 3}, {1, 2}}));
  REQUIRE(w.has_value());
  CHECK(w->base == ElementSet{1, 2});
  CHECK(w->other == ElementSet{0, 3});
  CHECK(w->element == 1);
}

TEST_CASE("exchange checker agrees with the set oracle on random families") {
  std::mt19937_64 rng(20260415);
  for (int trial = 0; trial < 4000; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 4);
    const int r = 1 + static_cast<int>(rng() % (n - 1));
    const auto subsets = mcensus::colex_subsets(n, r);
    std::vector<ElementSet> members;
    // Sparse and dense families both occur.
    const unsigned density = 1 + rng() % 4;
    for (std::uint64_t m : subsets) {
      if (rng() % 4 < density) members.emplace_back(m);
    }
    const BasisFamily f = BasisFamily::from_members(n, r, members);
    REQUIRE(f.members() == members);
    REQUIRE(mcensus::is_base_exchange(f) == exchange_oracle(members));
  }
}

TEST_CASE("hex encoding") {
  const BasisFamily bad = family(4, 2, {{0, 3}, {1, 2}});
  CHECK(bad.to_hex() == "0c");
  CHECK(BasisFamily::from_hex(4, 2, "0c") == bad);
  CHECK(BasisFamily::hex_digits(7, 3) == 9);
  CHECK(BasisFamily::hex_digits(1, 2) == 0);
  CHECK_THROWS_AS(BasisFamily::from_hex(4, 2, "c"), std::invalid_argument);
  CHECK_THROWS_AS(BasisFamily::from_hex(4, 2, "0C"), std::invalid_argument);
  CHECK_THROWS_AS(BasisFamily::from_hex(4, 2, "40"), std::invalid_argument);  // bit 6 of 6
  CHECK_THROWS_AS(BasisFamily::from_hex(4, 2, "zz"), std::invalid_argument);
  // 70 coordinates: two words, nibble boundaries at 64.
  std::string wide(18, '0');
  wide[0] = '3';
  const BasisFamily f = BasisFamily::from_hex(8, 4, wide);
  CHECK(f.contains_rank(68));
  CHECK(f.contains_rank(69));
  CHECK(f.member_count() == 2);
  CHECK(f.to_hex() == wide);
}

TEST_CASE("contraction examples") {
  const BasisFamily c1 = mcensus::contract(u23(), ElementSet{0});
  CHECK(c1.n() == 2);
  CHECK(c1.r() == 1);
  CHECK(c1 == family(2, 1, {{0}, {1}}));

  const BasisFamily c2 = mcensus::contract(u23(), ElementSet{0, 1});
  CHECK(c2.n() == 1);
  CHECK(c2.r() == 0);
  CHECK(c2.coordinate_count() == 1);
  CHECK(c2.contains_rank(0));

  const BasisFamily c3 = mcensus::contract(family(4, 2, {{0, 3}, {1, 2}}), ElementSet{3});
  CHECK(c3 == family(3, 1, {{0}}));

  CHECK(mcensus::contract(u23(), ElementSet{}) == u23());
  // T in no member gives the empty family.
  CHECK(mcensus::contract(family(3, 2, {{0, 1}}), ElementSet{2}).empty());
}

TEST_CASE("contraction errors") {
  CHECK_THROWS_AS(mcensus::contract(u23(), ElementSet{0, 1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(mcensus::contract(u23(), ElementSet{3}), std::out_of_range);
}

TEST_CASE("contraction preserves the axiom and equals coordinate projection (n <= 5)") {
  for (int n = 0; n <= 5; ++n) {
    for (int r = 0; r <= n; ++r) {
      const mcensus::Census census = mcensus::enumerate_naive(n, r);
      const auto subsets = mcensus::colex_subsets(n, r);
      for (std::uint64_t t_mask = 0; t_mask < (std::uint64_t{1} << n); ++t_mask) {
        const ElementSet t(t_mask);
        if (t.size() > r) continue;
        // Coordinates containing T, ascending.
        std::vector<std::uint64_t> coords;
        for (std::size_t i = 0; i < subsets.size(); ++i) {
          if (t.is_subset_of(ElementSet(subsets[i]))) coords.push_back(i);
        }
        for (const BasisFamily& f : census.families()) {
          const BasisFamily c = mcensus::contract(f, t);
          REQUIRE(mcensus::is_base_exchange(c));
          REQUIRE(c.coordinate_count() == coords.size());
          for (std::size_t k = 0; k < coords.size(); ++k) {
            REQUIRE(c.contains_rank(k) == f.contains_rank(coords[k]));
          }
        }
      }
    }
  }
}

TEST_CASE("contraction composes") {
  for (int n = 2; n <= 5; ++n) {
    for (int r = 2; r <= n; ++r) {
      const mcensus::Census census = mcensus::enumerate_naive(n, r);
      for (std::uint64_t t1 = 0; t1 < (std::uint64_t{1} << n); ++t1) {
        if (std::popcount(t1) != 1) continue;
        const int t1_elem = std::countr_zero(t1);
        for (int e2 = 0; e2 < n - 1; ++e2) {
          // e2 lives on the contracted ground set; map it back.
          const std::uint64_t t2_orig = expand(std::uint64_t{1} << e2, t1);
          for (std::size_t i = 0; i < census.size(); i += 3) {
            const BasisFamily& f = census.families()[i];
            const BasisFamily twice = mcensus::contract(mcensus::contract(f, ElementSet{t1_elem}),
                                                        ElementSet{e2});
            const BasisFamily once = mcensus::contract(f, ElementSet(t1 | t2_orig));
            REQUIRE(twice == once);
          }
        }
      }
    }
  }
}

TEST_CASE("rank-2 decomposition examples") {
  const auto d1 = mcensus::decompose_rank2(u23());
  CHECK(d1.loops.empty());
  CHECK(d1.blocks == std::vector<ElementSet>{ElementSet{0}, ElementSet{1}, ElementSet{2}});

  const auto d2 = mcensus::decompose_rank2(BasisFamily(3, 2));
  CHECK(d2.loops == ElementSet{0, 1, 2});
  CHECK(d2.blocks.empty());

  const auto d3 = mcensus::decompose_rank2(family(3, 2, {{0, 1}, {0, 2}}));
  CHECK(d3.loops.empty());
  CHECK(d3.blocks == std::vector<ElementSet>{ElementSet{0}, ElementSet{1, 2}});
}

TEST_CASE("rank-2 decomposition errors") {
  CHECK_THROWS_AS(mcensus::decompose_rank2(BasisFamily(4, 3)), std::invalid_argument);
  CHECK_THROWS_AS(mcensus::decompose_rank2(family(4, 2, {{0, 3}, {1, 2}})), mcensus::NotAMatroidError);
}

TEST_CASE("rank-2 composition examples and errors") {
  CHECK(mcensus::compose_rank2({ElementSet{}, {ElementSet{0}, ElementSet{1}, ElementSet{2}}}, 3) == u23());
  CHECK(mcensus::compose_rank2({ElementSet{0, 1, 2}, {}}, 3) == BasisFamily(3, 2));
  CHECK(mcensus::compose_rank2({ElementSet{}, {ElementSet{0}, ElementSet{1, 2}}}, 3) ==
        family(3, 2, {{0, 1}, {0, 2}}));

  using D = mcensus::Rank2Decomposition;
  CHECK_THROWS_AS(mcensus::compose_rank2(D{ElementSet{}, {ElementSet{0}, ElementSet{1}}}, 3), std::invalid_argument);
  CHECK_THROWS_AS(mcensus::compose_rank2(D{ElementSet{0}, {ElementSet{0, 1}, ElementSet{2}}}, 3), std::invalid_argument);
  CHECK_THROWS_AS(mcensus::compose_rank2(D{ElementSet{}, {ElementSet{0, 1, 2}, ElementSet{}}}, 3), std::invalid_argument);
  CHECK_THROWS_AS(mcensus::compose_rank2(D{ElementSet{3}, {ElementSet{0, 1, 2}}}, 3), std::invalid_argument);
}

TEST_CASE("rank-2 round trip over every census(n, 2), n <= 7") {
  for (int n = 0; n <= 7; ++n) {
    const mcensus::Census census = mcensus::enumerate_dfs(n, 2);
    for (const BasisFamily& f : census.families()) {
      const auto d = mcensus::decompose_rank2(f);
      REQUIRE((d.loops | [&] {
                ElementSet u;
                for (ElementSet b : d.blocks) u = u | b;
                return u;
              }()) == ElementSet::range(n));
      REQUIRE(mcensus::compose_rank2(d, n) == f);
    }
  }
}

TEST_CASE("random rank-2 compositions satisfy the axiom (n <= 10)") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 10);
    mcensus::Rank2Decomposition d;
    std::vector<std::uint64_t> blocks(n, 0);
    for (int e = 0; e < n; ++e) {
      const unsigned slot = rng() % (n + 1);  // slot n: loop
      if (slot == static_cast<unsigned>(n)) {
        d.loops = d.loops | ElementSet{e};
      } else {
        blocks[slot] |= std::uint64_t{1} << e;
      }
    }
    for (std::uint64_t b : blocks) {
      if (b != 0) d.blocks.emplace_back(b);
    }
    const BasisFamily f = mcensus::compose_rank2(d, n);
    REQUIRE(mcensus::is_base_exchange(f));
    REQUIRE(exchange_oracle(f.members()));
  }
}
