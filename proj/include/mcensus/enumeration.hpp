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

// Exhaustive generation of M_{[n],r}: every basis family on r-subsets of
// {0, ..., n-1} that satisfies the exchange axiom, the empty family included.

#ifndef MCENSUS_ENUMERATION_HPP_
#define MCENSUS_ENUMERATION_HPP_

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mcensus/basis_family.hpp"
#include "mcensus/combinatorics.hpp"

namespace mcensus {

enum class Method { kNaive, kDfs };

const char* method_name(Method m);
std::optional<Method> parse_method(std::string_view name);

// A complete, canonically ordered M_{[n],r}. Families are strictly ascending
// by indicator value, so the empty family is always first.
class Census {
 public:
  // Throws std::invalid_argument if families are not strictly ascending or
  // carry a different (n, r).
  Census(int n, int r, std::optional<Method> method, std::vector<BasisFamily> families);

  int n() const { return n_; }
  int r() const { return r_; }
  // Provenance; nullopt for a census read back from a file.
  std::optional<Method> method() const { return method_; }
  const std::vector<BasisFamily>& families() const { return families_; }
  std::size_t size() const { return families_.size(); }
  // m_{n,r}: the number of matroids, i.e. size() minus the empty family.
  std::size_t matroid_count() const { return families_.size() - 1; }

  // Content equality; provenance is ignored.
  bool operator==(const Census& other) const {
    return n_ == other.n_ && r_ == other.r_ && families_ == other.families_;
  }

 private:
  int n_;
  int r_;
  std::optional<Method> method_;
  std::vector<BasisFamily> families_;
};

// Largest coordinate count the 2^C(n,r) scan accepts.
inline constexpr std::uint64_t kNaiveMaxCoordinates = 24;

// Tests every indicator vector with is_base_exchange. Throws BudgetError when
// C(n, r) > kNaiveMaxCoordinates.
Census enumerate_naive(int n, int r);

struct DfsOptions {
  unsigned workers = 1;
};

struct DfsStats {
  std::uint64_t nodes = 0;   // include/exclude decisions that survived pruning
  std::uint64_t leaves = 0;  // complete assignments emitted
};

// Depth-first include/exclude search over the colex-ordered coordinates. A
// branch is cut as soon as it contains included B, B' and e in B \ B' whose
// every exchange candidate B - e + f (f in B' \ B) is already excluded.
// Output is identical for every worker count.
Census enumerate_dfs(int n, int r, const DfsOptions& options = {}, DfsStats* stats = nullptr);

// m_{n,r} for 0 <= r <= n <= max_n, and m_n = sum_r m_{n,r}.
class CountTable {
 public:
  explicit CountTable(int max_n) : max_n_(max_n) {}

  int max_n() const { return max_n_; }
  void set(int n, int r, BigInt count);
  // m_{n,r}; 0 for r > n (only the empty family exists). Throws
  // std::out_of_range when (n, r) was never filled.
  BigInt entry(int n, int r) const;
  BigInt total(int n) const;
  bool has(int n) const;
  const std::map<std::pair<int, int>, BigInt>& entries() const { return entries_; }

 private:
  int max_n_;
  std::map<std::pair<int, int>, BigInt> entries_;
};

inline constexpr int kDefaultCountBudget = 7;

// Fills a CountTable from enumerate_dfs. Throws BudgetError when
// max_n > budget_n.
CountTable count_all(int max_n, const DfsOptions& options = {},
                     int budget_n = kDefaultCountBudget);

// Census text format:
//   matroid-census v1 n=<n> r=<r> order=colex count=<k>
// followed by k lines of lowercase hex indicator values, zero-padded to
// ceil(C(n,r)/4) digits, strictly ascending.
void write_census(const Census& census, std::ostream& out);
std::string census_to_string(const Census& census);

// Strict load: format, ordering, presence of the empty family and the
// exchange axiom are all validated. Throws ParseError (format) or
// NotAMatroidError.
Census read_census(std::istream& in);

// Format-level view of a census file used by diagnostics; rows are not
// checked against the axiom.
struct CensusFileRow {
  std::size_t line = 0;
  BasisFamily family;
};
struct CensusFile {
  int n = 0;
  int r = 0;
  std::vector<CensusFileRow> rows;
};
CensusFile parse_census_file(std::istream& in);

}  // namespace mcensus

#endif  // MCENSUS_ENUMERATION_HPP_
