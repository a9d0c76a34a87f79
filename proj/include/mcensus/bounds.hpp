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

// Exact verification of the counting inequalities behind the matroid bound.
//
// Every inequality of the form a*log2(x) <= b*log2(y) with integer a, b and
// positive integers x, y is checked as x^a <= y^b in big-integer arithmetic,
// so none of these rows involve floating point.

#ifndef MCENSUS_BOUNDS_HPP_
#define MCENSUS_BOUNDS_HPP_

#include <string>
#include <vector>

#include "mcensus/combinatorics.hpp"
#include "mcensus/enumeration.hpp"

namespace mcensus {

enum class Relation { kLessEqual, kEqual };

struct BoundRow {
  std::string name;
  int n = -1;  // -1: not applicable
  int r = -1;
  int t = -1;
  BigInt lhs;
  BigInt rhs;
  Relation relation = Relation::kLessEqual;
  bool holds = false;
  std::string slack;
};

// Recomputes the verdict from lhs/rhs alone.
bool reproduce_holds(const BoundRow& row);

// Canonical report order: (name, n, r, t).
bool row_less(const BoundRow& a, const BoundRow& b);

struct BoundReport {
  std::vector<BoundRow> rows;
  bool all_hold() const;
};

// (m_{n,r}+1)^C(n-t,r-t) <= (m_{n-t,r-t}+1)^C(n,r).
BoundRow verify_lemma2(const CountTable& counts, int n, int r, int t);

// m_{n,2}+1 <= B_{n+1} ("lemma4.bell") and m_{n,2}+1 <= (n+1)^(n+1)
// ("lemma4.power").
std::vector<BoundRow> verify_lemma4(const CountTable& counts, int n);

// m_{n,r}^(n+2) <= (n+1)^(2*C(n+2,r)) for 2 <= r <= n.
BoundRow verify_theorem_bound(const CountTable& counts, int n, int r);

// 2^C(n, floor(n/2)) <= m_n^n for n >= 1. Odd n is flagged in the slack as
// a floor interpretation of C(n, n/2).
BoundRow verify_knuth_lower(const CountTable& counts, int n);

// "final.sum": m_n == sum_r m_{n,r};
// "final.max": m_n <= (n+1) * max_r m_{n,r};
// "final.log": m_n^(n+2) <= (n+1)^(n+2 + 2*C(n+2, floor((n+2)/2))).
std::vector<BoundRow> verify_final_count(const CountTable& counts, int n);

// |M_{[n],2}| counted through the rank-2 structure: 1 (the empty family) plus,
// for every loop set E0, the partitions of the complement into >= 2 blocks.
// Uses partition enumeration only, never the enumerator.
BigInt rank2_partition_count(int n);

BoundReport full_report(const CountTable& counts);
BoundReport full_report(int max_n, const DfsOptions& options = {});

// Rows full_report emits for a given max_n.
std::size_t expected_report_rows(int max_n);

// Descriptive comparison of log2 log2 m_n against the asymptotic upper form
// n - 1.5 log2 n + log2 log2 n (no O(1) term) and Knuth's lower form
// log2(C(n, n/2) / n). Carries no verdict.
struct AsymptoticRow {
  int n = 0;
  BigInt m_n;
  double loglog_m = 0.0;
  double upper_form = 0.0;
  double knuth_form = 0.0;
};
std::vector<AsymptoticRow> asymptotic_table(const CountTable& counts);

// log2 of a positive big integer, accurate to double precision.
double log2_big(const BigInt& x);

}  // namespace mcensus

#endif  // MCENSUS_BOUNDS_HPP_
