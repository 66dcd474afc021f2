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

#include "semicayley/cyclo.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <string>

#include "semicayley/error.hpp"

namespace semicayley {

namespace {

using Poly = std::vector<std::int64_t>;

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Exact quotient of a by a monic divisor b; the remainder must be zero.
Poly divide_exact(const Poly& a, const Poly& b) {
  Poly rem = a;
  const std::size_t db = b.size() - 1;
  if (rem.size() < b.size()) return {};
  Poly quot(rem.size() - db, 0);
  for (std::size_t k = rem.size(); k-- > db;) {
    const std::int64_t c = rem[k];
    if (c == 0) continue;
    quot[k - db] = c;
    for (std::size_t j = 0; j <= db; ++j) rem[k - db + j] -= c * b[j];
  }
  trim(rem);
  if (!rem.empty()) {
    throw ConsistencyError("cyclotomic division left a remainder");
  }
  return quot;
}

// Remainder of a modulo the monic polynomial b.
Poly remainder_monic(Poly a, const Poly& b) {
  const std::size_t db = b.size() - 1;
  for (std::size_t k = a.size(); k-- > db;) {
    const std::int64_t c = a[k];
    if (c == 0) continue;
    for (std::size_t j = 0; j <= db; ++j) a[k - db + j] -= c * b[j];
  }
  a.resize(std::min(a.size(), db));
  trim(a);
  return a;
}

}  // namespace

std::complex<double> RootOfUnity::value() const {
  const double angle = 2.0 * std::numbers::pi * numerator / order;
  return {std::cos(angle), std::sin(angle)};
}

CycloValue::CycloValue(int order) : order_(order), coeffs_(order, 0) {
  if (order < 1) throw ValidationError("root-of-unity order must be >= 1");
}

CycloValue::CycloValue(int order, std::vector<std::int64_t> coeffs)
    : order_(order), coeffs_(std::move(coeffs)) {
  if (order < 1) throw ValidationError("root-of-unity order must be >= 1");
  if (coeffs_.size() != static_cast<std::size_t>(order)) {
    throw ValidationError("CycloValue needs exactly N coefficients");
  }
  refresh();
}

CycloValue CycloValue::integer(int order, std::int64_t k) {
  CycloValue v(order);
  v.add_root(0, k);
  return v;
}

CycloValue CycloValue::root(const RootOfUnity& r) {
  CycloValue v(r.order);
  v.add_root(r.numerator);
  return v;
}

void CycloValue::add_root(int r, std::int64_t times) {
  const int j = ((r % order_) + order_) % order_;
  coeffs_[j] += times;
  refresh();
}

void CycloValue::check_same_order(const CycloValue& other) const {
  if (order_ != other.order_) {
    throw ValidationError("CycloValue order mismatch: " +
                          std::to_string(order_) + " vs " +
                          std::to_string(other.order_));
  }
}

void CycloValue::refresh() {
  // Summation in long double keeps the cached value well inside 1e-12.
  long double re = 0.0L;
  long double im = 0.0L;
  for (int j = 0; j < order_; ++j) {
    if (coeffs_[j] == 0) continue;
    const long double angle =
        2.0L * std::numbers::pi_v<long double> * j / order_;
    re += coeffs_[j] * std::cos(angle);
    im += coeffs_[j] * std::sin(angle);
  }
  approx_ = {static_cast<double>(re), static_cast<double>(im)};
}

CycloValue& CycloValue::operator+=(const CycloValue& other) {
  check_same_order(other);
  for (int j = 0; j < order_; ++j) coeffs_[j] += other.coeffs_[j];
  refresh();
  return *this;
}

CycloValue& CycloValue::operator-=(const CycloValue& other) {
  check_same_order(other);
  for (int j = 0; j < order_; ++j) coeffs_[j] -= other.coeffs_[j];
  refresh();
  return *this;
}

CycloValue& CycloValue::operator*=(std::int64_t k) {
  for (auto& c : coeffs_) c *= k;
  refresh();
  return *this;
}

CycloValue operator*(const CycloValue& a, const CycloValue& b) {
  a.check_same_order(b);
  const int n = a.order_;
  std::vector<std::int64_t> out(n, 0);
  for (int i = 0; i < n; ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (int j = 0; j < n; ++j) {
      if (b.coeffs_[j] == 0) continue;
      out[(i + j) % n] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return CycloValue(n, std::move(out));
}

bool operator==(const CycloValue& a, const CycloValue& b) {
  return is_zero(a - b);
}

CycloValue conj(const CycloValue& v) {
  const int n = v.order();
  std::vector<std::int64_t> out(n, 0);
  for (int j = 0; j < n; ++j) out[(n - j) % n] = v.coeffs()[j];
  return CycloValue(n, std::move(out));
}

CycloValue abs_squared(const CycloValue& v) { return v * conj(v); }

const std::vector<std::int64_t>& cyclotomic_polynomial(int n) {
  static std::mutex mutex;
  static std::map<int, Poly> cache;
  if (n < 1) throw ValidationError("cyclotomic index must be >= 1");
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(n); it != cache.end()) return it->second;
  }
  // x^n - 1 = prod_{d | n} Phi_d
  Poly p(n + 1, 0);
  p[0] = -1;
  p[n] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d == 0) p = divide_exact(p, cyclotomic_polynomial(d));
  }
  std::lock_guard lock(mutex);
  // std::map never invalidates references on insert.
  return cache.emplace(n, std::move(p)).first->second;
}

std::vector<std::int64_t> canonical_coordinates(const CycloValue& v) {
  Poly p = v.coeffs();
  trim(p);
  return remainder_monic(std::move(p), cyclotomic_polynomial(v.order()));
}

bool is_zero(const CycloValue& v) { return canonical_coordinates(v).empty(); }

std::optional<std::int64_t> as_integer(const CycloValue& v) {
  const Poly r = canonical_coordinates(v);
  if (r.empty()) return 0;
  if (r.size() == 1) return r[0];
  return std::nullopt;
}

std::optional<std::int64_t> abs_as_integer(const CycloValue& v) {
  const auto m = as_integer(abs_squared(v));
  if (!m) return std::nullopt;
  return exact_sqrt(*m);
}

std::int64_t isqrt(std::int64_t m) {
  if (m < 0) throw ValidationError("isqrt of a negative number");
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<long double>(m)));
  while (r > 0 && r * r > m) --r;
  while ((r + 1) * (r + 1) <= m) ++r;
  return r;
}

std::optional<std::int64_t> exact_sqrt(std::int64_t m) {
  if (m < 0) return std::nullopt;
  const std::int64_t r = isqrt(m);
  if (r * r != m) return std::nullopt;
  return r;
}

}  // namespace semicayley
