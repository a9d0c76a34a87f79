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

// Entropy of finite distributions and the Shearer inequality for the uniform
// variable over a census, using the contraction cover A(T) = {S : T subset of S}.
// All logarithms are base 2.

#ifndef MCENSUS_ENTROPY_HPP_
#define MCENSUS_ENTROPY_HPP_

#include <cstdint>
#include <map>
#include <vector>

#include "mcensus/combinatorics.hpp"
#include "mcensus/enumeration.hpp"

namespace mcensus {

inline constexpr double kEntropyTolerance = 1e-9;

class FiniteDistribution {
 public:
  // Outcome keys are indicator words (projected bit patterns); for
  // from_weights they are just the outcome index.
  using Key = std::vector<std::uint64_t>;

  struct Outcome {
    Key key;
    double probability = 0.0;
    std::uint64_t count = 0;  // 0 when built from weights
  };

  // Throws std::invalid_argument on negative weights or a sum off 1 by more
  // than 1e-12.
  static FiniteDistribution from_weights(const std::vector<double>& weights);
  // Exact multiplicities; probabilities are count / total.
  static FiniteDistribution from_counts(const std::map<Key, std::uint64_t>& counts);

  const std::vector<Outcome>& outcomes() const { return outcomes_; }
  // Number of outcomes with non-zero probability.
  std::size_t support_size() const;
  std::uint64_t total_count() const { return total_; }

 private:
  std::vector<Outcome> outcomes_;
  std::uint64_t total_ = 0;
};

// Shannon entropy in bits; zero-probability outcomes contribute nothing.
double entropy(const FiniteDistribution& dist);

// Uniform over the census's families (log2 |census| bits of entropy).
FiniteDistribution uniform_census_variable(const Census& census);

// Law of a uniformly drawn census member restricted to the coordinates whose
// r-subsets contain t_set. Keys are the restricted indicator vectors in the
// contracted colex coordinates of (n - t, r - t).
FiniteDistribution project_distribution(const Census& census, ElementSet t_set);

// The cover A(T), one member per t-subset T (colex order), each listing the
// coordinates of the r-subsets containing T.
struct CoverFamily {
  std::uint64_t universe_size = 0;
  std::vector<std::vector<std::uint64_t>> members;
  std::uint64_t multiplicity = 0;  // claimed: every coordinate is covered this often
};

CoverFamily contraction_cover(int n, int r, int t);
// How many members cover each coordinate.
std::vector<std::uint64_t> cover_counts(const CoverFamily& cover);

struct ShearerRecord {
  double lhs = 0.0;  // H(X)
  double rhs = 0.0;  // (1/k) sum over T of H(X/T)
  bool holds = false;
  std::uint64_t multiplicity = 0;
  std::size_t cover_size = 0;
};

// Throws std::out_of_range unless 0 <= t <= r, and std::logic_error if the
// cover fails its multiplicity claim.
ShearerRecord shearer_check(const Census& census, int t);

}  // namespace mcensus

#endif  // MCENSUS_ENTROPY_HPP_
