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

#include <complex>
#include <cstdint>
#include <optional>
#include <vector>

namespace semicayley {

/// exp(2 pi i r / N) with 0 <= r < N.
struct RootOfUnity {
  int numerator = 0;
  int order = 1;

  std::complex<double> value() const;
  /// True iff the root is +1 or -1.
  bool is_real() const { return numerator == 0 || 2 * numerator == order; }
  bool operator==(const RootOfUnity&) const = default;
};

/// Element of Z[zeta_N] written as sum_j coeffs[j] * zeta_N^j, j < N.
///
/// Arithmetic is exact (polynomials modulo x^N - 1). The representation is
/// not unique; value equality, zero tests and integrality go through the
/// remainder modulo the N-th cyclotomic polynomial. A complex approximation
/// is cached for the floating point side of the library.
class CycloValue {
 public:
  explicit CycloValue(int order = 1);
  CycloValue(int order, std::vector<std::int64_t> coeffs);

  static CycloValue integer(int order, std::int64_t k);
  static CycloValue root(const RootOfUnity& r);

  int order() const { return order_; }
  const std::vector<std::int64_t>& coeffs() const { return coeffs_; }
  std::complex<double> approx() const { return approx_; }

  /// Adds one copy of zeta_N^r.
  void add_root(int r, std::int64_t times = 1);

  CycloValue& operator+=(const CycloValue& other);
  CycloValue& operator-=(const CycloValue& other);
  CycloValue& operator*=(std::int64_t k);

  friend CycloValue operator+(CycloValue a, const CycloValue& b) {
    return a += b;
  }
  friend CycloValue operator-(CycloValue a, const CycloValue& b) {
    return a -= b;
  }
  friend CycloValue operator*(CycloValue a, std::int64_t k) { return a *= k; }
  friend CycloValue operator*(std::int64_t k, CycloValue a) { return a *= k; }
  friend CycloValue operator*(const CycloValue& a, const CycloValue& b);
  CycloValue operator-() const { return *this * -1; }

  /// Exact equality of the represented numbers.
  friend bool operator==(const CycloValue& a, const CycloValue& b);

 private:
  void check_same_order(const CycloValue& other) const;
  void refresh();

  int order_;
  std::vector<std::int64_t> coeffs_;
  std::complex<double> approx_;
};

/// coeffs[j] -> coeffs[-j mod N]
CycloValue conj(const CycloValue& v);
/// v * conj(v), exactly.
CycloValue abs_squared(const CycloValue& v);

/// Coefficients of Phi_n, lowest degree first. Memoized; thread-safe.
const std::vector<std::int64_t>& cyclotomic_polynomial(int n);

/// Remainder of the coefficient polynomial of v modulo Phi_N; the canonical
/// coordinates of v in the basis 1, zeta, ..., zeta^(phi(N)-1).
std::vector<std::int64_t> canonical_coordinates(const CycloValue& v);

bool is_zero(const CycloValue& v);

/// The integer v, or nullopt when v is not rational. An algebraic integer
/// that is rational is a rational integer.
std::optional<std::int64_t> as_integer(const CycloValue& v);

/// |v| when it is an integer, else nullopt.
std::optional<std::int64_t> abs_as_integer(const CycloValue& v);

/// floor(sqrt(m)) for m >= 0, exact.
std::int64_t isqrt(std::int64_t m);
std::optional<std::int64_t> exact_sqrt(std::int64_t m);

}  // namespace semicayley
