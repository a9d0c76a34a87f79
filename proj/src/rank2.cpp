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

#include <stdexcept>

#include "mcensus/basis_family.hpp"
#include "mcensus/errors.hpp"

namespace mcensus {

Rank2Decomposition decompose_rank2(const BasisFamily& family) {
  if (family.r() != 2) throw std::invalid_argument("decompose_rank2 needs a rank-2 family");
  if (auto v = exchange_witness(family)) {
    throw NotAMatroidError("family violates the exchange axiom at element " +
                           std::to_string(v->element));
  }
  const int n = family.n();
  ElementSet covered;
  for (ElementSet b : family.members()) covered = covered | b;

  Rank2Decomposition out;
  out.loops = ElementSet::range(n) - covered;
  // e ~ f iff {e, f} is not a basis; transitive because the axiom holds.
  ElementSet assigned;
  for (int e : covered.elements()) {
    if (assigned.contains(e)) continue;
    std::uint64_t block = std::uint64_t{1} << e;
    for (int f : (covered - assigned).elements()) {
      if (f != e && !family.contains(ElementSet{e, f})) block |= std::uint64_t{1} << f;
    }
    out.blocks.emplace_back(block);
    assigned = assigned | ElementSet(block);
  }
  return out;
}

BasisFamily compose_rank2(const Rank2Decomposition& decomposition, int n) {
  const ElementSet ground = ElementSet::range(n);
  if (!decomposition.loops.is_subset_of(ground)) throw std::invalid_argument("loops leave the ground set");
  ElementSet seen = decomposition.loops;
  for (ElementSet b : decomposition.blocks) {
    if (b.empty()) throw std::invalid_argument("decomposition has an empty block");
    if (!b.is_subset_of(ground)) throw std::invalid_argument("block leaves the ground set");
    if (!(b & seen).empty()) throw std::invalid_argument("decomposition blocks overlap");
    seen = seen | b;
  }
  if (seen != ground) throw std::invalid_argument("decomposition does not cover the ground set");

  std::vector<ElementSet> pairs;
  const auto& blocks = decomposition.blocks;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    for (std::size_t j = i + 1; j < blocks.size(); ++j) {
      for (int e : blocks[i].elements()) {
        for (int f : blocks[j].elements()) pairs.push_back(ElementSet{e, f});
      }
    }
  }
  return BasisFamily::from_members(n, 2, pairs);
}

}  // namespace mcensus
