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

#include "semicayley/group.hpp"

#include <algorithm>
#include <numeric>

#include "semicayley/error.hpp"

namespace semicayley {

std::string GroupElement::str() const {
  std::string out = "[";
  for (std::size_t l = 0; l < exponents_.size(); ++l) {
    if (l > 0) out += ",";
    out += std::to_string(exponents_[l]);
  }
  return out + "]";
}

AbelianGroup::AbelianGroup(std::vector<int> factors)
    : factors_(std::move(factors)) {
  if (factors_.empty()) {
    throw ValidationError("group needs at least one cyclic factor");
  }
  for (int n : factors_) {
    if (n < 1) {
      throw ValidationError("cyclic factor sizes must be >= 1, got " +
                            std::to_string(n));
    }
    order_ *= n;
    exponent_ = std::lcm(exponent_, n);
  }
}

GroupElement AbelianGroup::identity() const {
  return GroupElement(std::vector<int>(rank(), 0));
}

GroupElement AbelianGroup::make(std::vector<int> exponents) const {
  if (exponents.size() != rank()) {
    throw ValidationError("element has " + std::to_string(exponents.size()) +
                          " components, group has rank " +
                          std::to_string(rank()));
  }
  for (std::size_t l = 0; l < rank(); ++l) {
    const int n = factors_[l];
    exponents[l] = ((exponents[l] % n) + n) % n;
  }
  return GroupElement(std::move(exponents));
}

GroupElement AbelianGroup::element(std::size_t index) const {
  if (index >= static_cast<std::size_t>(order_)) {
    throw ValidationError("element index out of range");
  }
  std::vector<int> e(rank());
  for (std::size_t l = rank(); l-- > 0;) {
    e[l] = static_cast<int>(index % factors_[l]);
    index /= factors_[l];
  }
  return GroupElement(std::move(e));
}

std::size_t AbelianGroup::index(const GroupElement& g) const {
  check(g);
  std::size_t idx = 0;
  for (std::size_t l = 0; l < rank(); ++l) {
    idx = idx * factors_[l] + g[l];
  }
  return idx;
}

std::vector<GroupElement> AbelianGroup::elements() const {
  std::vector<GroupElement> out;
  out.reserve(order_);
  for (int i = 0; i < order_; ++i) out.push_back(element(i));
  return out;
}

bool AbelianGroup::contains(const GroupElement& g) const {
  if (g.rank() != rank()) return false;
  for (std::size_t l = 0; l < rank(); ++l) {
    if (g[l] < 0 || g[l] >= factors_[l]) return false;
  }
  return true;
}

void AbelianGroup::check(const GroupElement& g) const {
  if (!contains(g)) {
    throw ValidationError("element " + g.str() + " is not in the group");
  }
}

GroupElement AbelianGroup::mul(const GroupElement& a,
                               const GroupElement& b) const {
  check(a);
  check(b);
  std::vector<int> e(rank());
  for (std::size_t l = 0; l < rank(); ++l) {
    e[l] = (a[l] + b[l]) % factors_[l];
  }
  return GroupElement(std::move(e));
}

GroupElement AbelianGroup::inverse(const GroupElement& a) const {
  check(a);
  std::vector<int> e(rank());
  for (std::size_t l = 0; l < rank(); ++l) {
    e[l] = (factors_[l] - a[l]) % factors_[l];
  }
  return GroupElement(std::move(e));
}

GroupElement AbelianGroup::power(const GroupElement& a, long long k) const {
  check(a);
  std::vector<int> e(rank());
  for (std::size_t l = 0; l < rank(); ++l) {
    const long long n = factors_[l];
    e[l] = static_cast<int>((((a[l] * (k % n)) % n) + n) % n);
  }
  return GroupElement(std::move(e));
}

int AbelianGroup::order(const GroupElement& a) const {
  check(a);
  int m = 1;
  for (std::size_t l = 0; l < rank(); ++l) {
    const int n = factors_[l];
    m = std::lcm(m, n / std::gcd(n, a[l]));
  }
  return m;
}

GroupSubset::GroupSubset(const AbelianGroup& group,
                         std::vector<GroupElement> elements)
    : elements_(std::move(elements)) {
  for (const auto& g : elements_) group.check(g);
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()),
                  elements_.end());
}

GroupSubset GroupSubset::whole(const AbelianGroup& group) {
  return GroupSubset(group, group.elements());
}

bool GroupSubset::contains(const GroupElement& g) const {
  return std::binary_search(elements_.begin(), elements_.end(), g);
}

GroupSubset subset_inverse(const AbelianGroup& group, const GroupSubset& x) {
  std::vector<GroupElement> inv;
  inv.reserve(x.size());
  for (const auto& g : x) inv.push_back(group.inverse(g));
  return GroupSubset(group, std::move(inv));
}

bool is_inverse_closed(const AbelianGroup& group, const GroupSubset& x) {
  return subset_inverse(group, x) == x;
}

}  // namespace semicayley
