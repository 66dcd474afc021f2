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

#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "semicayley/character.hpp"
#include "semicayley/cyclo.hpp"
#include "semicayley/error.hpp"
#include "support.hpp"

using namespace semicayley;
using semicayley::testing::subset;

namespace {

CycloValue roots(int n, std::initializer_list<int> exps) {
  CycloValue v(n);
  for (int r : exps) v.add_root(r);
  return v;
}

}  // namespace

TEST_SUITE("character_engine") {

TEST_CASE("eval_character") {
  const AbelianGroup z4 = AbelianGroup::cyclic(4);
  const auto r = eval_character(z4, CharacterIndex({2}), GroupElement({1}));
  CHECK(r.numerator == 2);
  CHECK(std::abs(r.value() - std::complex<double>(-1, 0)) < 1e-12);

  const AbelianGroup g({2, 3});
  for (const auto& x : g.elements()) {
    CHECK(eval_character(g, CharacterIndex({0, 0}), x).numerator == 0);
  }
  // exp(pi i) exp(2 pi i / 3) computed directly
  const std::complex<double> direct =
      std::exp(std::complex<double>(0, std::numbers::pi)) *
      std::exp(std::complex<double>(0, 2 * std::numbers::pi / 3));
  const auto v = eval_character(g, CharacterIndex({1, 1}), GroupElement({1, 1}));
  CHECK(v.numerator == 5);
  CHECK(std::abs(v.value() - direct) < 1e-12);
}

TEST_CASE("char_sum") {
  const AbelianGroup z4 = AbelianGroup::cyclic(4);
  const CycloValue s = char_sum(z4, CharacterIndex({2}), subset(z4, {{1}, {3}}));
  CHECK(as_integer(s) == -2);
  CHECK(std::abs(s.approx() - std::complex<double>(-2, 0)) < 1e-12);

  const AbelianGroup g({2, 4});
  const GroupSubset whole = GroupSubset::whole(g);
  for (std::size_t i = 1; i < static_cast<std::size_t>(g.order()); ++i) {
    CHECK(is_zero(char_sum(g, character(g, i), whole)));
  }
  const GroupSubset x = subset(g, {{0, 1}, {1, 3}, {1, 0}});
  CHECK(as_integer(char_sum(g, character(g, 0), x)) == 3);
  CHECK(as_integer(char_sum(g, character(g, 3), GroupSubset(g, {}))) == 0);
}

TEST_CASE("conjugation and moduli") {
  const CycloValue z = roots(4, {1});
  CHECK(conj(z) == roots(4, {3}));
  CHECK(as_integer(abs_squared(z)) == 1);
  CHECK(as_integer(abs_squared(CycloValue(4))) == 0);

  const AbelianGroup z4 = AbelianGroup::cyclic(4);
  const CycloValue s = char_sum(z4, CharacterIndex({1}), subset(z4, {{1}}));
  CHECK(as_integer(abs_squared(s)) == 1);
  CHECK_THROWS(CycloValue(4) + CycloValue(6));
}

TEST_CASE("as_integer") {
  const CycloValue golden = roots(5, {1, 4});
  CHECK_FALSE(as_integer(golden).has_value());
  CHECK(std::abs(golden.approx().real() - 2 * std::cos(2 * std::numbers::pi / 5)) <
        1e-12);
  CHECK(as_integer(roots(4, {1, 3})) == 0);
  CHECK(as_integer(roots(6, {0, 1, 2, 3, 4, 5})) == 0);
  CHECK(as_integer(roots(12, {0, 4, 8, 0})) == 1);
  CHECK(as_integer(roots(8, {1, 7})) == std::nullopt);  // sqrt(2)
}

TEST_CASE("abs_as_integer") {
  const AbelianGroup z2 = AbelianGroup::cyclic(2);
  CHECK(abs_as_integer(char_sum(z2, CharacterIndex({1}), subset(z2, {{0}}))) == 1);
  CHECK_FALSE(abs_as_integer(roots(4, {0, 1})).has_value());  // |1 + i|^2 = 2
  CHECK(abs_as_integer(CycloValue(3)) == 0);
  CHECK(abs_as_integer(roots(12, {0, 0, 3, 3})) == std::nullopt);  // |2+2i|
  CHECK(abs_as_integer(roots(4, {0, 0, 0, 1, 1, 1, 1})) == 5);     // 3 + 4i
}

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic_polynomial(1) == std::vector<std::int64_t>{-1, 1});
  CHECK(cyclotomic_polynomial(4) == std::vector<std::int64_t>{1, 0, 1});
  CHECK(cyclotomic_polynomial(6) == std::vector<std::int64_t>{1, -1, 1});
  CHECK(cyclotomic_polynomial(12) == std::vector<std::int64_t>{1, 0, -1, 0, 1});
  // Phi_105 is the first with a coefficient outside {-1, 0, 1}
  const auto& p = cyclotomic_polynomial(105);
  CHECK(p.size() == 49);
  CHECK(std::count(p.begin(), p.end(), -2) == 2);
}

TEST_CASE("column orthogonality, exactly") {
  for (const auto& f : std::vector<std::vector<int>>{{6}, {2, 2}, {2, 4}, {3, 3}, {12}}) {
    const AbelianGroup g(f);
    auto rng = semicayley::testing::make_rng(f.size() * 31 + f[0]);
    const GroupSubset x = semicayley::testing::random_subset(rng, g, false, true, 0.5);
    for (const auto& h : g.elements()) {
      CycloValue total(g.exponent());
      for (std::size_t i = 0; i < static_cast<std::size_t>(g.order()); ++i) {
        const CharacterIndex chi = character(g, i);
        total += CycloValue::root(eval_character(g, chi, g.inverse(h))) *
                 char_sum(g, chi, x);
      }
      CHECK(as_integer(total) == (x.contains(h) ? g.order() : 0));
    }
  }
}

TEST_CASE("character properties on random subsets") {
  auto rng = semicayley::testing::make_rng(2);
  for (int it = 0; it < 60; ++it) {
    const AbelianGroup g = semicayley::testing::random_group(rng, 12);
    const GroupSubset x = semicayley::testing::random_subset(rng, g, false, true);
    const GroupSubset sym = semicayley::testing::random_subset(rng, g, true, false);
    for (std::size_t i = 0; i < static_cast<std::size_t>(g.order()); ++i) {
      const CharacterIndex chi = character(g, i);
      CHECK(character_position(g, chi) == i);
      CHECK(conj(char_sum(g, chi, x)) == char_sum(g, chi, subset_inverse(g, x)));
      CHECK(char_sum(g, conjugate_character(g, chi), x) ==
            conj(char_sum(g, chi, x)));
      const CycloValue s = char_sum(g, chi, sym);
      CHECK(s == conj(s));
      const double re = s.approx().real();
      if (const auto k = as_integer(s)) {
        CHECK(std::abs(re - static_cast<double>(*k)) < 1e-9);
      } else {
        CHECK(std::abs(re - std::round(re)) > 1e-6);
      }
      for (const auto& h : g.elements()) {
        CHECK(std::abs(std::abs(eval_character(g, chi, h).value()) - 1.0) < 1e-12);
      }
    }
  }
}

}
