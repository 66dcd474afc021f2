// Copyright 2026 The semicayley Authors
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

#pragma once

#include <cstddef>
#include <vector>

#include "semicayley/cyclo.hpp"
#include "semicayley/group.hpp"

namespace semicayley {

/// Index (j_1, ..., j_k) of the irreducible character
///   chi(g_1^{i_1}, ..., g_k^{i_k}) = prod_l exp(2 pi i j_l i_l / n_l).
/// Characters are enumerated in the same lexicographic order as group
/// elements; position 0 is the trivial character.
class CharacterIndex {
 public:
  CharacterIndex() = default;
  explicit CharacterIndex(std::vector<int> indices)
      : indices_(std::move(indices)) {}

  const std::vector<int>& indices() const { return indices_; }
  int operator[](std::size_t l) const { return indices_[l]; }
  bool operator==(const CharacterIndex&) const = default;

 private:
  std::vector<int> indices_;
};

CharacterIndex character(const AbelianGroup& group, std::size_t position);
std::size_t character_position(const AbelianGroup& group,
                               const CharacterIndex& chi);
/// The complex conjugate character, chi(g^{-1}).
CharacterIndex conjugate_character(const AbelianGroup& group,
                                   const CharacterIndex& chi);

/// chi(g) as exp(2 pi i r / N) with N the group exponent and
/// r = sum_l j_l i_l (N / n_l) mod N.
RootOfUnity eval_character(const AbelianGroup& group, const CharacterIndex& chi,
                           const GroupElement& g);

/// chi(X) = sum_{x in X} chi(x); zero for the empty set.
CycloValue char_sum(const AbelianGroup& group, const CharacterIndex& chi,
                    const GroupSubset& x);

}  // namespace semicayley
