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

#include "mcensus/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace mcensus {
namespace {

BigInt power(const BigInt& base, const BigInt& exponent) {
  // Exponents here are binomials of tiny arguments.
  return boost::multiprecision::pow(base, exponent.convert_to<unsigned>());
}

std::string margin(const BigInt& lhs, const BigInt& rhs) {
  if (lhs == rhs) return "equal";
  std::ostringstream out;
  out << std::fixed << std::setprecision(6);
  if (lhs <= 0 || rhs <= 0) {
    out << (lhs < rhs ? "holds" : "violated");
  } else if (lhs < rhs) {
    out << "log2 margin " << log2_big(rhs) - log2_big(lhs);
  } else {
    out << "violated by log2 " << log2_big(lhs) - log2_big(rhs);
  }
  return out.str();
}

BoundRow make_row(std::string name, int n, int r, int t, BigInt lhs, BigInt rhs,
                  Relation rel = Relation::kLessEqual) {
  BoundRow row;
  row.name = std::move(name);
  row.n = n;
  row.r = r;
  row.t = t;
  row.lhs = std::move(lhs);
  row.rhs = std::move(rhs);
  row.relation = rel;
  row.holds = reproduce_holds(row);
  row.slack = rel == Relation::kEqual ? (row.holds ? "equal" : "differ") : margin(row.lhs, row.rhs);
  return row;
}

void require_counted(const CountTable& counts, int n) {
  if (!counts.has(n)) throw std::out_of_range("counts for n=" + std::to_string(n) + " missing");
}

}  // namespace

double log2_big(const BigInt& x) {
  if (x <= 0) throw std::domain_error("log2 of a non-positive integer");
  const unsigned msb = boost::multiprecision::msb(x);
  if (msb < 63) return std::log2(x.convert_to<double>());
  const unsigned shift = msb - 62;
  const BigInt top = x >> shift;
  return std::log2(top.convert_to<double>()) + static_cast<double>(shift);
}

bool reproduce_holds(const BoundRow& row) {
  return row.relation == Relation::kEqual ? row.lhs == row.rhs : row.lhs <= row.rhs;
}

bool row_less(const BoundRow& a, const BoundRow& b) {
  return std::tie(a.name, a.n, a.r, a.t) < std::tie(b.name, b.n, b.r, b.t);
}

bool BoundReport::all_hold() const {
  return std::all_of(rows.begin(), rows.end(), [](const BoundRow& r) { return r.holds; });
}

BoundRow verify_lemma2(const CountTable& counts, int n, int r, int t) {
  if (t < 0 || t > r || r > n) throw std::out_of_range("lemma2 needs 0 <= t <= r <= n");
  const BigInt big = counts.entry(n, r) + 1;
  const BigInt small = counts.entry(n - t, r - t) + 1;
  return make_row("lemma2", n, r, t, power(big, binomial(n - t, r - t)),
                  power(small, binomial(n, r)));
}

std::vector<BoundRow> verify_lemma4(const CountTable& counts, int n) {
  if (n < 0) throw std::out_of_range("lemma4 needs n >= 0");
  const BigInt families = counts.entry(n, 2) + 1;
  return {make_row("lemma4.bell", n, 2, -1, families, bell_number(n + 1)),
          make_row("lemma4.power", n, 2, -1, families, power(BigInt(n + 1), BigInt(n + 1)))};
}

BoundRow verify_theorem_bound(const CountTable& counts, int n, int r) {
  if (r < 2) throw std::invalid_argument("theorem bound applies for r >= 2");
  if (r > n) throw std::out_of_range("theorem bound needs r <= n");
  const BigInt m = counts.entry(n, r);
  if (m < 1) throw std::invalid_argument("theorem bound needs m_{n,r} >= 1");
  return make_row("theorem", n, r, -1, power(m, BigInt(n + 2)),
                  power(BigInt(n + 1), 2 * binomial(n + 2, r)));
}

BoundRow verify_knuth_lower(const CountTable& counts, int n) {
  if (n < 1) throw std::invalid_argument("knuth bound needs n >= 1");
  require_counted(counts, n);
  BoundRow row = make_row("knuth", n, -1, -1, power(BigInt(2), binomial(n, n / 2)),
                          power(counts.total(n), BigInt(n)));
  if (n % 2 == 1) row.slack = "interpretation: floor; " + row.slack;
  return row;
}

std::vector<BoundRow> verify_final_count(const CountTable& counts, int n) {
  require_counted(counts, n);
  BigInt sum = 0;
  BigInt best = 0;
  for (int r = 0; r <= n; ++r) {
    const BigInt m = counts.entry(n, r);
    sum += m;
    best = std::max(best, m);
  }
  const BigInt total = counts.total(n);
  const BigInt exponent = n + 2 + 2 * binomial(n + 2, (n + 2) / 2);
  return {make_row("final.sum", n, -1, -1, total, sum, Relation::kEqual),
          make_row("final.max", n, -1, -1, total, (n + 1) * best),
          make_row("final.log", n, -1, -1, power(total, BigInt(n + 2)),
                   power(BigInt(n + 1), exponent))};
}

BigInt rank2_partition_count(int n) {
  if (n < 0 || n > 16) throw std::out_of_range("rank2_partition_count needs 0 <= n <= 16");
  const ElementSet ground = ElementSet::range(n);
  BigInt count = 1;
  // Walk every subset E0 of the ground set as a mask.
  for (std::uint64_t loops = 0; loops < (std::uint64_t{1} << n); ++loops) {
    for_each_partition(ground - ElementSet(loops), [&](const SetPartition& p) {
      if (p.blocks.size() >= 2) ++count;
    });
  }
  return count;
}

BoundReport full_report(const CountTable& counts) {
  BoundReport report;
  auto& rows = report.rows;
  for (int n = 0; n <= counts.max_n(); ++n) {
    for (int r = 0; r <= n; ++r) {
      for (int t = 0; t <= r; ++t) rows.push_back(verify_lemma2(counts, n, r, t));
      if (r >= 2) rows.push_back(verify_theorem_bound(counts, n, r));
    }
    for (BoundRow& row : verify_lemma4(counts, n)) rows.push_back(std::move(row));
    if (n >= 1) rows.push_back(verify_knuth_lower(counts, n));
    for (BoundRow& row : verify_final_count(counts, n)) rows.push_back(std::move(row));
  }
  std::sort(rows.begin(), rows.end(), row_less);
  return report;
}

BoundReport full_report(int max_n, const DfsOptions& options) {
  return full_report(count_all(max_n, options));
}

std::size_t expected_report_rows(int max_n) {
  if (max_n < 0) return 0;
  const std::size_t N = static_cast<std::size_t>(max_n);
  const std::size_t lemma2 = (N + 1) * (N + 2) * (N + 3) / 6;
  const std::size_t lemma4 = 2 * (N + 1);
  const std::size_t theorem = N * (N - (N > 0 ? 1 : 0)) / 2;
  const std::size_t knuth = N;
  const std::size_t final_rows = 3 * (N + 1);
  return lemma2 + lemma4 + theorem + knuth + final_rows;
}

std::vector<AsymptoticRow> asymptotic_table(const CountTable& counts) {
  std::vector<AsymptoticRow> out;
  for (int n = 2; n <= counts.max_n(); ++n) {
    AsymptoticRow row;
    row.n = n;
    row.m_n = counts.total(n);
    const double ln = std::log2(static_cast<double>(n));
    row.loglog_m = std::log2(log2_big(row.m_n));
    row.upper_form = n - 1.5 * ln + std::log2(ln);
    row.knuth_form = std::log2(binomial(n, n / 2).convert_to<double>() / n);
    out.push_back(row);
  }
  return out;
}

}  // namespace mcensus
