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

#include <Eigen/Dense>
#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <random>
#include <string>
#include <vector>

#include "semicayley/graph.hpp"

namespace semicayley::testing {

/// PST_SEED overrides the default seed of the randomized suites.
inline std::uint64_t seed() {
  if (const char* s = std::getenv("PST_SEED")) return std::stoull(s);
  return 20261018;
}

inline std::mt19937_64 make_rng(std::uint64_t salt = 0) {
  return std::mt19937_64(seed() ^ (salt * 0x9e3779b97f4a7c15ULL));
}

inline AbelianGroup random_group(std::mt19937_64& rng, int max_order) {
  std::uniform_int_distribution<int> rank(1, 3);
  std::uniform_int_distribution<int> factor(1, max_order);
  while (true) {
    std::vector<int> f(rank(rng));
    long long order = 1;
    for (auto& x : f) {
      x = factor(rng);
      order *= x;
    }
    if (order <= max_order) return AbelianGroup(f);
  }
}

inline GroupSubset random_subset(std::mt19937_64& rng, const AbelianGroup& g,
                                 bool inverse_closed, bool allow_identity,
                                 double density = 0.35) {
  std::bernoulli_distribution pick(density);
  std::vector<GroupElement> out;
  for (const auto& x : g.elements()) {
    if (!allow_identity && x == g.identity()) continue;
    if (!pick(rng)) continue;
    out.push_back(x);
    if (inverse_closed) out.push_back(g.inverse(x));
  }
  return GroupSubset(g, std::move(out));
}

inline SemiCayleySpec random_spec(std::mt19937_64& rng, int max_order,
                                  bool right_equals_left = false) {
  const AbelianGroup g = random_group(rng, max_order);
  const GroupSubset r = random_subset(rng, g, true, false);
  const GroupSubset l =
      right_equals_left ? r : random_subset(rng, g, true, false);
  std::bernoulli_distribution symmetric(0.5);
  const GroupSubset s = random_subset(rng, g, symmetric(rng), true);
  return SemiCayleySpec(g, r, l, s);
}

inline std::vector<double> numeric_eigenvalues(const Eigen::MatrixXd& a) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(a, Eigen::EigenvaluesOnly);
  const Eigen::VectorXd v = eig.eigenvalues();
  std::vector<double> out(v.data(), v.data() + v.size());
  std::sort(out.begin(), out.end());
  return out;
}

inline GroupSubset subset(const AbelianGroup& g,
                          std::vector<std::vector<int>> elems) {
  std::vector<GroupElement> out;
  for (auto& e : elems) out.push_back(g.make(std::move(e)));
  return GroupSubset(g, std::move(out));
}

}  // namespace semicayley::testing
