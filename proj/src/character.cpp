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

#include "semicayley/character.hpp"

#include "semicayley/error.hpp"

namespace semicayley {

namespace {

void check_character(const AbelianGroup& group, const CharacterIndex& chi) {
  const auto& idx = chi.indices();
  bool ok = idx.size() == group.rank();
  for (std::size_t l = 0; ok && l < idx.size(); ++l) {
    ok = idx[l] >= 0 && idx[l] < group.factors()[l];
  }
  if (!ok) throw ValidationError("character index does not match the group");
}

}  // namespace

CharacterIndex character(const AbelianGroup& group, std::size_t position) {
  return CharacterIndex(group.element(position).exponents());
}

std::size_t character_position(const AbelianGroup& group,
                               const CharacterIndex& chi) {
  check_character(group, chi);
  return group.index(GroupElement(chi.indices()));
}

CharacterIndex conjugate_character(const AbelianGroup& group,
                                   const CharacterIndex& chi) {
  check_character(group, chi);
  return CharacterIndex(group.inverse(GroupElement(chi.indices())).exponents());
}

RootOfUnity eval_character(const AbelianGroup& group, const CharacterIndex& chi,
                           const GroupElement& g) {
  check_character(group, chi);
  group.check(g);
  const long long big_n = group.exponent();
  long long r = 0;
  for (std::size_t l = 0; l < group.rank(); ++l) {
    const long long n_l = group.factors()[l];
    r = (r + static_cast<long long>(chi[l]) * g[l] % n_l * (big_n / n_l)) %
        big_n;
  }
  return RootOfUnity{static_cast<int>(r), static_cast<int>(big_n)};
}

CycloValue char_sum(const AbelianGroup& group, const CharacterIndex& chi,
                    const GroupSubset& x) {
  std::vector<std::int64_t> coeffs(group.exponent(), 0);
  for (const auto& g : x) coeffs[eval_character(group, chi, g).numerator] += 1;
  return CycloValue(group.exponent(), std::move(coeffs));
}

}  // namespace semicayley
