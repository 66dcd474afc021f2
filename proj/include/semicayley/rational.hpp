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

#include <boost/rational.hpp>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>

namespace semicayley {

using Rational = boost::rational<std::int64_t>;

/// 2-adic valuation: the exponent of 2 in a rational, +infinity for 0.
class TwoAdicVal {
 public:
  TwoAdicVal() = default;  // infinity
  explicit TwoAdicVal(int exponent) : exponent_(exponent) {}
  static TwoAdicVal infinity() { return TwoAdicVal(); }

  bool is_infinite() const { return !exponent_.has_value(); }
  /// Requires !is_infinite().
  int exponent() const { return *exponent_; }

  friend TwoAdicVal operator+(const TwoAdicVal& a, const TwoAdicVal& b) {
    if (a.is_infinite() || b.is_infinite()) return infinity();
    return TwoAdicVal(*a.exponent_ + *b.exponent_);
  }
  friend bool operator==(const TwoAdicVal&, const TwoAdicVal&) = default;
  friend std::strong_ordering operator<=>(const TwoAdicVal& a,
                                          const TwoAdicVal& b) {
    if (a.is_infinite() || b.is_infinite()) {
      return static_cast<int>(a.is_infinite()) <=>
             static_cast<int>(b.is_infinite());
    }
    return *a.exponent_ <=> *b.exponent_;
  }

  std::string str() const {
    return is_infinite() ? "inf" : std::to_string(*exponent_);
  }

 private:
  std::optional<int> exponent_;
};

TwoAdicVal nu2(const Rational& q);
TwoAdicVal nu2(std::int64_t k);

/// coeff * pi / sqrt(radicand), radicand square-free and >= 1.
struct PiMultiple {
  Rational coeff{0};
  std::int64_t radicand = 1;

  double value() const;
  /// "pi/2", "3pi/4", "2pi", "pi/sqrt(2)", "3pi/(4 sqrt(5))".
  std::string str() const;
  bool operator==(const PiMultiple&) const = default;
};

/// Parses "p/q pi", "pi/q", "3pi/4", "p*pi/q", "pi", "2 pi" (rational
/// multiples of pi) or a plain decimal float.
std::variant<PiMultiple, double> parse_time(const std::string& text);
double time_value(const std::variant<PiMultiple, double>& t);

/// (d, b) with m = b^2 d and d square-free; m >= 1.
std::pair<std::int64_t, std::int64_t> squarefree_decomposition(std::int64_t m);

}  // namespace semicayley
