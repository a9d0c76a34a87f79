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

// Pruned depth-first enumerator.
//
// Coordinates (r-subsets in colex order) are decided one at a time. For every
// ordered pair of coordinates (B, B') and e in B \ B' we precompute the
// candidate mask: the coordinates B - e + f for f in B' \ B. A partial
// assignment is dead once some included pair has a candidate mask lying
// entirely inside the excluded set. Such a violation first becomes visible at
// the largest coordinate among B, B' and the candidates, so each decision
// only needs to look at:
//   include i: pairs (i, j) and (j, i) for already included j;
//   exclude i: the pairs whose candidate mask contains i ("watch list").
// Every surviving leaf therefore satisfies the axiom.

#include <algorithm>
#include <array>
#include <atomic>
#include <stdexcept>
#include <thread>

#include "mcensus/enumeration.hpp"
#include "mcensus/errors.hpp"

namespace mcensus {
namespace {

// Coordinates decided serially before the remaining subtrees are handed out.
constexpr int kFrontierDepth = 12;

template <std::size_t W>
using Bits = std::array<std::uint64_t, W>;

template <std::size_t W>
inline void set_bit(Bits<W>& b, int i) {
  b[i >> 6] |= std::uint64_t{1} << (i & 63);
}

template <std::size_t W>
inline void clear_bit(Bits<W>& b, int i) {
  b[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
}

template <std::size_t W>
inline bool test_bit(const Bits<W>& b, int i) {
  return ((b[i >> 6] >> (i & 63)) & 1u) != 0;
}

// True when every bit of mask lies in excluded.
template <std::size_t W>
inline bool covered_by(const Bits<W>& mask, const Bits<W>& excluded) {
  for (std::size_t w = 0; w < W; ++w) {
    if ((mask[w] & ~excluded[w]) != 0) return false;
  }
  return true;
}

struct WatchEntry {
  int base;
  int other;
  std::uint32_t mask;
};

template <std::size_t W>
class DfsSearch {
 public:
  struct State {
    Bits<W> included{};
    Bits<W> excluded{};
    std::vector<int> members;
  };

  DfsSearch(int n, int r) : n_(n), r_(r) {
    subsets_ = colex_subsets(n, r);
    p_ = static_cast<int>(subsets_.size());
    pair_begin_.assign(static_cast<std::size_t>(p_) * p_ + 1, 0);
    watch_.resize(p_);
    for (int b = 0; b < p_; ++b) {
      for (int o = 0; o < p_; ++o) {
        pair_begin_[b * p_ + o] = static_cast<std::uint32_t>(masks_.size());
        if (b == o) continue;
        const std::uint64_t base = subsets_[b];
        const std::uint64_t other = subsets_[o];
        for (std::uint64_t es = base & ~other; es != 0; es &= es - 1) {
          const std::uint64_t without_e = base & ~(es & -es);
          Bits<W> mask{};
          for (std::uint64_t fs = other & ~base; fs != 0; fs &= fs - 1) {
            set_bit(mask, static_cast<int>(colex_rank_mask(without_e | (fs & -fs))));
          }
          const auto id = static_cast<std::uint32_t>(masks_.size());
          masks_.push_back(mask);
          for (int c = 0; c < p_; ++c) {
            if (test_bit(mask, c)) watch_[c].push_back(WatchEntry{b, o, id});
          }
        }
      }
    }
    pair_begin_[static_cast<std::size_t>(p_) * p_] = static_cast<std::uint32_t>(masks_.size());
  }

  int coordinates() const { return p_; }

  // Expands the tree to `depth` decided coordinates; returns the surviving
  // partial assignments in DFS order.
  std::vector<State> frontier(int depth, DfsStats& stats) const {
    std::vector<State> out;
    State s;
    collect(0, depth, s, out, stats);
    return out;
  }

  void run(int from, State& s, std::vector<BasisFamily>& out, DfsStats& stats) const {
    if (from == p_) {
      ++stats.leaves;
      out.push_back(to_family(s.included));
      return;
    }
    if (can_exclude(from, s)) {
      ++stats.nodes;
      set_bit(s.excluded, from);
      run(from + 1, s, out, stats);
      clear_bit(s.excluded, from);
    }
    if (can_include(from, s)) {
      ++stats.nodes;
      set_bit(s.included, from);
      s.members.push_back(from);
      run(from + 1, s, out, stats);
      s.members.pop_back();
      clear_bit(s.included, from);
    }
  }

 private:
  void collect(int i, int depth, State& s, std::vector<State>& out, DfsStats& stats) const {
    if (i == depth) {
      out.push_back(s);
      return;
    }
    if (can_exclude(i, s)) {
      ++stats.nodes;
      set_bit(s.excluded, i);
      collect(i + 1, depth, s, out, stats);
      clear_bit(s.excluded, i);
    }
    if (can_include(i, s)) {
      ++stats.nodes;
      set_bit(s.included, i);
      s.members.push_back(i);
      collect(i + 1, depth, s, out, stats);
      s.members.pop_back();
      clear_bit(s.included, i);
    }
  }

  bool pair_dead(int base, int other, const Bits<W>& excluded) const {
    const std::size_t k = static_cast<std::size_t>(base) * p_ + other;
    for (std::uint32_t m = pair_begin_[k]; m < pair_begin_[k + 1]; ++m) {
      if (covered_by(masks_[m], excluded)) return true;
    }
    return false;
  }

  bool can_include(int i, const State& s) const {
    for (int j : s.members) {
      if (pair_dead(i, j, s.excluded) || pair_dead(j, i, s.excluded)) return false;
    }
    return true;
  }

  bool can_exclude(int i, const State& s) const {
    Bits<W> excluded = s.excluded;
    set_bit(excluded, i);
    for (const WatchEntry& w : watch_[i]) {
      if (test_bit(s.included, w.base) && test_bit(s.included, w.other) &&
          covered_by(masks_[w.mask], excluded)) {
        return false;
      }
    }
    return true;
  }

  BasisFamily to_family(const Bits<W>& included) const {
    const std::size_t words = static_cast<std::size_t>((p_ + 63) / 64);
    return BasisFamily::from_words(n_, r_, std::vector<std::uint64_t>(included.begin(),
                                                                     included.begin() + words));
  }

  int n_;
  int r_;
  int p_ = 0;
  std::vector<std::uint64_t> subsets_;
  std::vector<Bits<W>> masks_;
  std::vector<std::uint32_t> pair_begin_;
  std::vector<std::vector<WatchEntry>> watch_;
};

template <std::size_t W>
std::vector<BasisFamily> search(int n, int r, unsigned workers, DfsStats& stats) {
  const DfsSearch<W> dfs(n, r);
  std::vector<BasisFamily> out;
  if (workers <= 1) {
    typename DfsSearch<W>::State root;
    dfs.run(0, root, out, stats);
    return out;
  }

  const int depth = std::min(dfs.coordinates(), kFrontierDepth);
  std::vector<typename DfsSearch<W>::State> frontier = dfs.frontier(depth, stats);
  std::vector<std::vector<BasisFamily>> results(frontier.size());
  std::vector<DfsStats> worker_stats(workers);
  std::atomic<std::size_t> next{0};
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (std::size_t k = next++; k < frontier.size(); k = next++) {
          dfs.run(depth, frontier[k], results[k], worker_stats[w]);
        }
      });
    }
  }
  for (const DfsStats& s : worker_stats) {
    stats.nodes += s.nodes;
    stats.leaves += s.leaves;
  }
  // Concatenate in frontier order so the pre-sort sequence is already
  // independent of scheduling.
  for (auto& part : results) {
    std::move(part.begin(), part.end(), std::back_inserter(out));
  }
  return out;
}

}  // namespace

Census enumerate_dfs(int n, int r, const DfsOptions& options, DfsStats* stats) {
  if (n < 0 || r < 0 || n >= kMaxGroundSet) throw std::out_of_range("enumerate_dfs: bad (n, r)");
  const std::uint64_t coords = binomial_u64(n, r);
  DfsStats local;
  std::vector<BasisFamily> families;
  if (coords == 0) {
    families.emplace_back(n, r);
    local.leaves = 1;
  } else if (coords <= 64) {
    families = search<1>(n, r, options.workers, local);
  } else if (coords <= 128) {
    families = search<2>(n, r, options.workers, local);
  } else {
    throw BudgetError("enumerate_dfs supports at most 128 coordinates");
  }
  std::sort(families.begin(), families.end(), value_less);
  if (stats != nullptr) *stats = local;
  return Census(n, r, Method::kDfs, std::move(families));
}

}  // namespace mcensus
