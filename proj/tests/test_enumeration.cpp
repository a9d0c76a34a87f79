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

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "mcensus/bounds.hpp"
#include "mcensus/enumeration.hpp"
#include "mcensus/errors.hpp"

using mcensus::BasisFamily;
using mcensus::BigInt;
using mcensus::Census;
using mcensus::ElementSet;

namespace {

void check_census_invariants(const Census& c) {
  REQUIRE(c.size() >= 1);
  CHECK(c.families().front().empty());
  for (std::size_t i = 0; i < c.size(); ++i) {
    REQUIRE(mcensus::is_base_exchange(c.families()[i]));
    if (i > 0) REQUIRE(mcensus::value_less(c.families()[i - 1], c.families()[i]));
  }
}

BasisFamily relabel(const BasisFamily& f, const std::vector<int>& perm) {
  std::vector<ElementSet> out;
  for (ElementSet m : f.members()) {
    std::uint64_t image = 0;
    for (int e : m.elements()) image |= std::uint64_t{1} << perm[e];
    out.emplace_back(image);
  }
  return BasisFamily::from_members(f.n(), f.r(), out);
}

std::string census_text(int n, int r) { return mcensus::census_to_string(mcensus::enumerate_dfs(n, r)); }

}  // namespace

TEST_CASE("naive enumeration examples") {
  const Census c32 = mcensus::enumerate_naive(3, 2);
  CHECK(c32.size() == 8);
  CHECK(c32.matroid_count() == 7);
  CHECK(c32.method() == mcensus::Method::kNaive);
  check_census_invariants(c32);

  for (int n = 0; n <= 6; ++n) {
    const Census c = mcensus::enumerate_naive(n, 0);
    REQUIRE(c.size() == 2);
    CHECK(c.families()[0].empty());
    CHECK(c.families()[1].contains(ElementSet{}));
  }

  const Census c42 = mcensus::enumerate_naive(4, 2);
  CHECK(c42.size() == 37);
  check_census_invariants(c42);
  // The independent count via rank-2 structure: 14 + 16 + 6 + 1.
  CHECK(mcensus::rank2_partition_count(4) == 37);
}

TEST_CASE("naive enumeration refuses infeasible scans") {
  CHECK_THROWS_AS(mcensus::enumerate_naive(7, 3), mcensus::BudgetError);
  CHECK_NOTHROW(mcensus::enumerate_naive(6, 1));
}

TEST_CASE("rank exceeding n leaves only the empty family") {
  for (auto method : {0, 1}) {
    const Census c = method == 0 ? mcensus::enumerate_naive(1, 2) : mcensus::enumerate_dfs(1, 2);
    REQUIRE(c.size() == 1);
    CHECK(c.matroid_count() == 0);
    CHECK(c.families()[0].coordinate_count() == 0);
  }
}

TEST_CASE("dfs equals naive wherever the naive scan runs") {
  for (int n = 0; n <= 6; ++n) {
    for (int r = 0; r <= n; ++r) {
      if (mcensus::binomial_u64(n, r) > 20) continue;
      CAPTURE(n);
      CAPTURE(r);
      const Census naive = mcensus::enumerate_naive(n, r);
      const Census dfs = mcensus::enumerate_dfs(n, r);
      REQUIRE(dfs == naive);
      CHECK(dfs.method() == mcensus::Method::kDfs);
    }
  }
}

TEST_CASE("rank 1: every indicator vector is a census member") {
  for (int n = 1; n <= 7; ++n) {
    CHECK(mcensus::enumerate_dfs(n, 1).size() == (std::size_t{1} << n));
  }
}

TEST_CASE("dfs output does not depend on the worker count") {
  for (auto [n, r] : {std::pair{3, 2}, {5, 2}, {6, 3}, {6, 4}, {7, 2}}) {
    const Census serial = mcensus::enumerate_dfs(n, r);
    for (unsigned w : {2u, 3u, 8u}) {
      mcensus::DfsStats stats;
      const Census parallel = mcensus::enumerate_dfs(n, r, {w}, &stats);
      REQUIRE(parallel == serial);
      CHECK(stats.leaves == serial.size());
      CHECK(stats.nodes >= stats.leaves);
    }
  }
}

TEST_CASE("census is invariant under relabeling the ground set") {
  std::mt19937 rng(11);
  for (int n = 1; n <= 5; ++n) {
    for (int r = 0; r <= n; ++r) {
      const Census c = mcensus::enumerate_dfs(n, r);
      const std::set<std::vector<std::uint64_t>> before = [&] {
        std::set<std::vector<std::uint64_t>> s;
        for (const auto& f : c.families()) s.emplace(f.words().begin(), f.words().end());
        return s;
      }();
      std::vector<int> perm(n);
      std::iota(perm.begin(), perm.end(), 0);
      const bool exhaustive = n <= 4;
      for (int k = 0; k < (exhaustive ? 1 : 20); ++k) {
        do {
          if (!exhaustive) std::shuffle(perm.begin(), perm.end(), rng);
          std::set<std::vector<std::uint64_t>> after;
          for (const auto& f : c.families()) {
            const BasisFamily g = relabel(f, perm);
            after.emplace(g.words().begin(), g.words().end());
          }
          REQUIRE(after == before);
        } while (exhaustive && std::next_permutation(perm.begin(), perm.end()));
      }
    }
  }
}

TEST_CASE("rank-2 census size matches the partition count") {
  for (int n = 0; n <= 7; ++n) {
    CHECK(BigInt(mcensus::enumerate_dfs(n, 2).size()) == mcensus::rank2_partition_count(n));
  }
}

TEST_CASE("count table") {
  const mcensus::CountTable t = mcensus::count_all(5);
  CHECK(t.total(3) == 16);
  CHECK(t.total(4) == 68);
  CHECK(t.entry(5, 1) == 31);
  CHECK(t.entry(3, 2) == 7);
  CHECK(t.entry(1, 2) == 0);
  for (int n = 0; n <= 5; ++n) {
    CHECK(t.entry(n, 0) == 1);
    CHECK(t.entry(n, n) == 1);
    if (n >= 1) CHECK(t.entry(n, 1) == (BigInt(1) << n) - 1);
    BigInt sum = 0;
    for (int r = 0; r <= n; ++r) sum += t.entry(n, r);
    CHECK(t.total(n) == sum);
  }
  CHECK_THROWS_AS(t.entry(6, 1), std::out_of_range);
  CHECK_THROWS_AS(mcensus::count_all(8), mcensus::BudgetError);
}

TEST_CASE("census file format") {
  const Census c = mcensus::enumerate_naive(3, 2);
  const std::string text = mcensus::census_to_string(c);
  CHECK(text.rfind("matroid-census v1 n=3 r=2 order=colex count=8\n", 0) == 0);
  CHECK(text == "matroid-census v1 n=3 r=2 order=colex count=8\n0\n1\n2\n3\n4\n5\n6\n7\n");

  std::istringstream in(text);
  const Census back = mcensus::read_census(in);
  CHECK(back == c);
  CHECK_FALSE(back.method().has_value());
  CHECK(mcensus::census_to_string(back) == text);
  CHECK(census_text(3, 2) == text);
}

TEST_CASE("census round trip for every produced census, n <= 6") {
  for (int n = 0; n <= 6; ++n) {
    for (int r = 0; r <= n + 1; ++r) {
      const Census c = mcensus::enumerate_dfs(n, r);
      std::istringstream in(mcensus::census_to_string(c));
      REQUIRE(mcensus::read_census(in) == c);
    }
  }
}

TEST_CASE("census reader rejects malformed input") {
  auto read = [](const std::string& s) {
    std::istringstream in(s);
    return mcensus::read_census(in);
  };
  const std::string h42 = "matroid-census v1 n=4 r=2 order=colex count=";
  CHECK_NOTHROW(read(h42 + "1\n00\n"));
  CHECK_THROWS_AS(read(""), mcensus::ParseError);
  CHECK_THROWS_AS(read("matroid-census v2 n=4 r=2 order=colex count=1\n00\n"), mcensus::ParseError);
  CHECK_THROWS_AS(read("matroid-census v1 n=4 r=2 order=lex count=1\n00\n"), mcensus::ParseError);
  CHECK_THROWS_AS(read("matroid-census v1 n=04 r=2 order=colex count=1\n00\n"), mcensus::ParseError);
  CHECK_THROWS_AS(read(h42 + "1\n000\n"), mcensus::ParseError);           // digit count
  CHECK_THROWS_AS(read(h42 + "1\n0\n"), mcensus::ParseError);             // digit count
  CHECK_THROWS_AS(read(h42 + "2\n00\n"), mcensus::ParseError);            // short
  CHECK_THROWS_AS(read(h42 + "1\n00\n01\n"), mcensus::ParseError);        // extra
  CHECK_THROWS_AS(read(h42 + "2\n01\n00\n"), mcensus::ParseError);        // unsorted
  CHECK_THROWS_AS(read(h42 + "2\n00\n00\n"), mcensus::ParseError);        // duplicate
  CHECK_THROWS_AS(read(h42 + "1\n01\n"), mcensus::ParseError);            // no empty family
  CHECK_THROWS_AS(read(h42 + "2\n00\n0C\n"), mcensus::ParseError);        // uppercase
  CHECK_THROWS_AS(read(h42 + "2\n00\n40\n"), mcensus::ParseError);        // bit past C(4,2)
  CHECK_THROWS_AS(read(h42 + "2\n00\n0c\n"), mcensus::NotAMatroidError);  // {03,12}

  try {
    read(h42 + "3\n00\n01\n01\n");
    FAIL("expected a parse error");
  } catch (const mcensus::ParseError& e) {
    CHECK(e.line() == 4);
  }
}

TEST_CASE("tampering one digit of a real census is caught") {
  std::string text = census_text(4, 2);
  // 0b = {01,02,03} is a matroid; 0c = {12,03} is not and still sorts between
  // 0b's neighbours, so the failure is the axiom rather than the order check.
  const auto pos = text.find("\n0b\n");
  REQUIRE(pos != std::string::npos);
  REQUIRE(text.find("\n0c\n") == std::string::npos);
  text[pos + 2] = 'c';
  std::istringstream in(text);
  CHECK_THROWS_AS(mcensus::read_census(in), mcensus::NotAMatroidError);
}
