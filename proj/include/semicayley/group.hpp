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

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

namespace semicayley {

/// An element of a product of cyclic groups, stored as its exponent vector
/// (i_1, ..., i_k) with 0 <= i_l < n_l. Comparison is lexicographic, which is
/// also the enumeration order of the parent group.
class GroupElement {
 public:
  GroupElement() = default;
  explicit GroupElement(std::vector<int> exponents)
      : exponents_(std::move(exponents)) {}

  const std::vector<int>& exponents() const { return exponents_; }
  std::size_t rank() const { return exponents_.size(); }
  int operator[](std::size_t l) const { return exponents_[l]; }

  auto operator<=>(const GroupElement&) const = default;
  bool operator==(const GroupElement&) const = default;

  std::string str() const;

 private:
  std::vector<int> exponents_;
};

/// Finite abelian group Z_{n_1} x ... x Z_{n_k}. The presentation is kept as
/// given: factors need not be prime powers or invariant factors, and trivial
/// factors are allowed.
class AbelianGroup {
 public:
  explicit AbelianGroup(std::vector<int> factors);
  static AbelianGroup cyclic(int n) { return AbelianGroup({n}); }

  const std::vector<int>& factors() const { return factors_; }
  std::size_t rank() const { return factors_.size(); }
  /// n = n_1 * ... * n_k
  int order() const { return order_; }
  /// N = lcm(n_1, ..., n_k)
  int exponent() const { return exponent_; }

  GroupElement identity() const;
  /// Reduces each component modulo its factor. Throws on rank mismatch.
  GroupElement make(std::vector<int> exponents) const;
  /// Element at position `index` of the lexicographic enumeration.
  GroupElement element(std::size_t index) const;
  std::size_t index(const GroupElement& g) const;
  std::vector<GroupElement> elements() const;

  /// True iff g has the right rank and reduced components.
  bool contains(const GroupElement& g) const;
  /// Throws ValidationError unless contains(g).
  void check(const GroupElement& g) const;

  GroupElement mul(const GroupElement& a, const GroupElement& b) const;
  GroupElement inverse(const GroupElement& a) const;
  GroupElement power(const GroupElement& a, long long k) const;
  /// Least m >= 1 with a^m = e.
  int order(const GroupElement& a) const;

  bool operator==(const AbelianGroup& other) const {
    return factors_ == other.factors_;
  }

 private:
  std::vector<int> factors_;
  int order_ = 1;
  int exponent_ = 1;
};

/// A deduplicated subset of a group, kept sorted in enumeration order.
class GroupSubset {
 public:
  GroupSubset() = default;
  GroupSubset(const AbelianGroup& group, std::vector<GroupElement> elements);

  static GroupSubset whole(const AbelianGroup& group);

  const std::vector<GroupElement>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  bool empty() const { return elements_.empty(); }
  bool contains(const GroupElement& g) const;

  auto begin() const { return elements_.begin(); }
  auto end() const { return elements_.end(); }

  bool operator==(const GroupSubset&) const = default;

 private:
  std::vector<GroupElement> elements_;
};

GroupSubset subset_inverse(const AbelianGroup& group, const GroupSubset& x);
bool is_inverse_closed(const AbelianGroup& group, const GroupSubset& x);

}  // namespace semicayley
