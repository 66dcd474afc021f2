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

#include "semicayley/rational.hpp"

#include <cmath>
#include <numbers>
#include <regex>

#include "semicayley/error.hpp"

namespace semicayley {

TwoAdicVal nu2(std::int64_t k) {
  if (k == 0) return TwoAdicVal::infinity();
  int e = 0;
  while (k % 2 == 0) {
    k /= 2;
    ++e;
  }
  return TwoAdicVal(e);
}

TwoAdicVal nu2(const Rational& q) {
  if (q.numerator() == 0) return TwoAdicVal::infinity();
  return TwoAdicVal(nu2(q.numerator()).exponent() -
                    nu2(q.denominator()).exponent());
}

double PiMultiple::value() const {
  return boost::rational_cast<double>(coeff) * std::numbers::pi /
         std::sqrt(static_cast<double>(radicand));
}

std::string PiMultiple::str() const {
  const auto p = coeff.numerator();
  const auto q = coeff.denominator();
  if (p == 0) return "0";
  std::string out;
  if (p == -1) {
    out = "-pi";
  } else if (p == 1) {
    out = "pi";
  } else {
    out = std::to_string(p) + "pi";
  }
  if (radicand == 1) {
    if (q != 1) out += "/" + std::to_string(q);
  } else if (q == 1) {
    out += "/sqrt(" + std::to_string(radicand) + ")";
  } else {
    out += "/(" + std::to_string(q) + " sqrt(" + std::to_string(radicand) +
           "))";
  }
  return out;
}

std::variant<PiMultiple, double> parse_time(const std::string& text) {
  static const std::regex pi_form(
      R"(^\s*([+-]?\d+)?\s*(?:/\s*(\d+))?\s*\*?\s*pi\s*(?:/\s*(\d+))?\s*$)");
  std::smatch m;
  if (std::regex_match(text, m, pi_form)) {
    const std::int64_t p = m[1].matched ? std::stoll(m[1].str()) : 1;
    std::int64_t q = 1;
    if (m[2].matched) q *= std::stoll(m[2].str());
    if (m[3].matched) q *= std::stoll(m[3].str());
    if (q == 0) throw ValidationError("zero denominator in time '" + text + "'");
    if (m[2].matched && !m[1].matched) {
      throw ValidationError("malformed time expression '" + text + "'");
    }
    return PiMultiple{Rational(p, q), 1};
  }
  try {
    std::size_t used = 0;
    const double t = std::stod(text, &used);
    while (used < text.size() && std::isspace(static_cast<unsigned char>(text[used]))) ++used;
    if (used != text.size() || !std::isfinite(t)) throw std::invalid_argument("");
    return t;
  } catch (const std::exception&) {
    throw ValidationError("malformed time expression '" + text + "'");
  }
}

double time_value(const std::variant<PiMultiple, double>& t) {
  if (const auto* pm = std::get_if<PiMultiple>(&t)) return pm->value();
  return std::get<double>(t);
}

std::pair<std::int64_t, std::int64_t> squarefree_decomposition(std::int64_t m) {
  if (m < 1) throw ValidationError("squarefree decomposition needs m >= 1");
  std::int64_t d = 1;
  std::int64_t b = 1;
  for (std::int64_t p = 2; p * p <= m; ++p) {
    int e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    for (int j = 0; j < e / 2; ++j) b *= p;
    if (e % 2 == 1) d *= p;
  }
  return {d * m, b};
}

}  // namespace semicayley
