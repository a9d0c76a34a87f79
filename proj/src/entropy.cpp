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

#include "mcensus/entropy.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace mcensus {

FiniteDistribution FiniteDistribution::from_weights(const std::vector<double>& weights) {
  FiniteDistribution d;
  double sum = 0.0;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (!(weights[i] >= 0.0)) throw std::invalid_argument("negative or NaN probability");
    sum += weights[i];
    d.outcomes_.push_back({Key{i}, weights[i], 0});
  }
  if (std::fabs(sum - 1.0) > 1e-12) {
    throw std::invalid_argument("probabilities sum to " + std::to_string(sum));
  }
  return d;
}

FiniteDistribution FiniteDistribution::from_counts(const std::map<Key, std::uint64_t>& counts) {
  FiniteDistribution d;
  for (const auto& [key, c] : counts) d.total_ += c;
  if (d.total_ == 0) throw std::invalid_argument("distribution has no mass");
  for (const auto& [key, c] : counts) {
    d.outcomes_.push_back({key, static_cast<double>(c) / static_cast<double>(d.total_), c});
  }
  return d;
}

std::size_t FiniteDistribution::support_size() const {
  std::size_t s = 0;
  for (const Outcome& o : outcomes_) s += o.probability > 0.0 ? 1 : 0;
  return s;
}

double entropy(const FiniteDistribution& dist) {
  double h = 0.0;
  const double total = static_cast<double>(dist.total_count());
  for (const auto& o : dist.outcomes()) {
    const double p = dist.total_count() > 0 ? static_cast<double>(o.count) / total : o.probability;
    if (p > 0.0) h -= p * std::log2(p);
  }
  return h;
}

FiniteDistribution uniform_census_variable(const Census& census) {
  std::map<FiniteDistribution::Key, std::uint64_t> counts;
  for (const BasisFamily& f : census.families()) {
    counts.emplace(FiniteDistribution::Key(f.words().begin(), f.words().end()), 1);
  }
  return FiniteDistribution::from_counts(counts);
}

namespace {

// Coordinates of r-subsets of {0..n-1} containing t_set, ascending. Removing
// t_set and renumbering is order preserving on these, so position k here is
// coordinate k of the contracted (n - t, r - t) space.
std::vector<std::uint64_t> superset_coordinates(int n, int r, ElementSet t_set) {
  std::vector<std::uint64_t> coords;
  const std::vector<std::uint64_t> subsets = colex_subsets(n, r);
  for (std::size_t i = 0; i < subsets.size(); ++i) {
    if (t_set.is_subset_of(ElementSet(subsets[i]))) coords.push_back(i);
  }
  return coords;
}

}  // namespace

FiniteDistribution project_distribution(const Census& census, ElementSet t_set) {
  if (!t_set.is_subset_of(ElementSet::range(census.n()))) {
    throw std::out_of_range("projection set leaves the ground set");
  }
  if (t_set.size() > census.r()) throw std::invalid_argument("projection set larger than the rank");
  const std::vector<std::uint64_t> coords = superset_coordinates(census.n(), census.r(), t_set);
  const std::size_t words = (coords.size() + 63) / 64;
  std::map<FiniteDistribution::Key, std::uint64_t> counts;
  for (const BasisFamily& f : census.families()) {
    FiniteDistribution::Key pattern(words, 0);
    for (std::size_t k = 0; k < coords.size(); ++k) {
      if (f.contains_rank(coords[k])) pattern[k / 64] |= std::uint64_t{1} << (k % 64);
    }
    ++counts[pattern];
  }
  return FiniteDistribution::from_counts(counts);
}

CoverFamily contraction_cover(int n, int r, int t) {
  if (t < 0 || t > r) throw std::out_of_range("cover needs 0 <= t <= r");
  CoverFamily cover;
  cover.universe_size = binomial_u64(n, r);
  cover.multiplicity = binomial_u64(r, t);
  for (std::uint64_t t_mask : colex_subsets(n, t)) {
    cover.members.push_back(superset_coordinates(n, r, ElementSet(t_mask)));
  }
  return cover;
}

std::vector<std::uint64_t> cover_counts(const CoverFamily& cover) {
  std::vector<std::uint64_t> counts(cover.universe_size, 0);
  for (const auto& member : cover.members) {
    for (std::uint64_t c : member) ++counts.at(c);
  }
  return counts;
}

ShearerRecord shearer_check(const Census& census, int t) {
  if (t < 0 || t > census.r()) {
    throw std::out_of_range("shearer_check needs 0 <= t <= r, got t=" + std::to_string(t));
  }
  const CoverFamily cover = contraction_cover(census.n(), census.r(), t);
  for (std::uint64_t c : cover_counts(cover)) {
    if (c != cover.multiplicity) throw std::logic_error("cover multiplicity claim fails");
  }
  ShearerRecord rec;
  rec.multiplicity = cover.multiplicity;
  rec.cover_size = cover.members.size();
  rec.lhs = entropy(uniform_census_variable(census));
  double sum = 0.0;
  for (std::uint64_t t_mask : colex_subsets(census.n(), t)) {
    sum += entropy(project_distribution(census, ElementSet(t_mask)));
  }
  rec.rhs = sum / static_cast<double>(cover.multiplicity);
  rec.holds = rec.lhs <= rec.rhs + kEntropyTolerance;
  return rec;
}

}  // namespace mcensus
