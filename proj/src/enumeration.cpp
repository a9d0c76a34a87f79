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

#include "mcensus/enumeration.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "mcensus/errors.hpp"

namespace mcensus {

const char* method_name(Method m) {
  switch (m) {
    case Method::kNaive:
      return "naive";
    case Method::kDfs:
      return "dfs";
  }
  return "?";
}

std::optional<Method> parse_method(std::string_view name) {
  if (name == "naive") return Method::kNaive;
  if (name == "dfs") return Method::kDfs;
  return std::nullopt;
}

Census::Census(int n, int r, std::optional<Method> method, std::vector<BasisFamily> families)
    : n_(n), r_(r), method_(method), families_(std::move(families)) {
  for (std::size_t i = 0; i < families_.size(); ++i) {
    if (families_[i].n() != n || families_[i].r() != r) {
      throw std::invalid_argument("census family has a different (n, r)");
    }
    if (i > 0 && !value_less(families_[i - 1], families_[i])) {
      throw std::invalid_argument("census families are not strictly ascending");
    }
  }
  if (families_.empty() || !families_.front().empty()) {
    throw std::invalid_argument("census must contain the empty family");
  }
}

Census enumerate_naive(int n, int r) {
  if (n < 0 || r < 0 || n >= kMaxGroundSet) throw std::out_of_range("enumerate_naive: bad (n, r)");
  const std::uint64_t coords = binomial_u64(n, r);
  if (coords > kNaiveMaxCoordinates) {
    throw BudgetError("naive scan of 2^" + std::to_string(coords) + " vectors refused (C(n,r) > " +
                      std::to_string(kNaiveMaxCoordinates) + ")");
  }
  std::vector<BasisFamily> out;
  if (coords == 0) {
    out.emplace_back(n, r);
    return Census(n, r, Method::kNaive, std::move(out));
  }
  const std::uint64_t limit = std::uint64_t{1} << coords;
  for (std::uint64_t v = 0; v < limit; ++v) {
    BasisFamily f = BasisFamily::from_words(n, r, {v});
    if (is_base_exchange(f)) out.push_back(std::move(f));
  }
  return Census(n, r, Method::kNaive, std::move(out));
}

void CountTable::set(int n, int r, BigInt count) {
  if (n < 0 || n > max_n_ || r < 0 || r > n) throw std::out_of_range("count table index out of range");
  entries_[{n, r}] = std::move(count);
}

BigInt CountTable::entry(int n, int r) const {
  if (n < 0 || n > max_n_ || r < 0) throw std::out_of_range("count table index out of range");
  if (r > n) return 0;
  auto it = entries_.find({n, r});
  if (it == entries_.end()) {
    throw std::out_of_range("m(" + std::to_string(n) + "," + std::to_string(r) + ") not counted");
  }
  return it->second;
}

bool CountTable::has(int n) const {
  if (n < 0 || n > max_n_) return false;
  for (int r = 0; r <= n; ++r) {
    if (!entries_.contains({n, r})) return false;
  }
  return true;
}

BigInt CountTable::total(int n) const {
  BigInt sum = 0;
  for (int r = 0; r <= n; ++r) sum += entry(n, r);
  return sum;
}

CountTable count_all(int max_n, const DfsOptions& options, int budget_n) {
  if (max_n < 0) throw std::out_of_range("count_all: negative max_n");
  if (max_n > budget_n) {
    throw BudgetError("count_all(" + std::to_string(max_n) + ") exceeds the budget n <= " +
                      std::to_string(budget_n));
  }
  CountTable table(max_n);
  for (int n = 0; n <= max_n; ++n) {
    for (int r = 0; r <= n; ++r) {
      table.set(n, r, BigInt(enumerate_dfs(n, r, options).matroid_count()));
    }
  }
  return table;
}

}  // namespace mcensus
