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

#include "semicayley/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "semicayley/error.hpp"

namespace semicayley {

std::optional<std::int64_t> ExactEigenvalue::integer_value() const {
  const auto p = as_integer(twice_base);
  if (!p) return std::nullopt;
  std::int64_t twice = *p;
  if (root_sign != 0) {
    const auto d = as_integer(radicand);
    if (!d) return std::nullopt;
    const auto r = exact_sqrt(*d);
    if (!r) return std::nullopt;
    twice += root_sign * *r;
  }
  if (twice % 2 != 0) return std::nullopt;
  return twice / 2;
}

namespace {

EigenPair make_pair(const SemiCayleySpec& spec, std::size_t position) {
  const auto& g = spec.group();
  EigenPair p;
  p.character = character(g, position);
  p.chi_right = char_sum(g, p.character, spec.right());
  p.chi_left = char_sum(g, p.character, spec.left());
  p.chi_spoke = char_sum(g, p.character, spec.spoke());
  p.spoke_vanishes = is_zero(p.chi_spoke);

  const CycloValue x = p.chi_right - p.chi_left;
  const CycloValue base = p.chi_right + p.chi_left;
  const CycloValue radicand = x * x + 4 * abs_squared(p.chi_spoke);
  p.x = x.approx().real();

  if (p.spoke_vanishes) {
    // lambda^+ = chi(R), lambda^- = chi(L), deliberately unsorted.
    p.plus = {2 * p.chi_right, 0, radicand, p.chi_right.approx().real()};
    p.minus = {2 * p.chi_left, 0, radicand, p.chi_left.approx().real()};
    return p;
  }

  const std::complex<double> sigma = p.chi_spoke.approx();
  const double sigma_abs = std::abs(sigma);
  const double root = std::sqrt(p.x * p.x + 4.0 * sigma_abs * sigma_abs);
  const double b0 = base.approx().real();
  p.plus = {base, 1, radicand, 0.5 * (b0 + root)};
  p.minus = {base, -1, radicand, 0.5 * (b0 - root)};

  // Two proportional solutions of each eigenvector relation; pick the one
  // without cancellation. a_plus stays real and positive.
  const std::complex<double> phase = std::conj(sigma) / sigma_abs;
  std::complex<double> ap, bp, am, bm;
  if (p.x >= 0.0) {
    ap = p.x + root;
    bp = 2.0 * std::conj(sigma);
    am = 2.0 * sigma_abs;
    bm = -(p.x + root) * phase;
  } else {
    ap = 2.0 * sigma_abs;
    bp = (root - p.x) * phase;
    am = p.x - root;
    bm = 2.0 * std::conj(sigma);
  }
  const double np = std::sqrt(std::norm(ap) + std::norm(bp));
  const double nm = std::sqrt(std::norm(am) + std::norm(bm));
  p.a_plus = ap / np;
  p.b_plus = bp / np;
  p.a_minus = am / nm;
  p.b_minus = bm / nm;

  auto& c = p.coeffs;
  c.c_plus = std::norm(p.a_plus);
  c.d_plus = std::norm(p.b_plus);
  c.c_minus = std::norm(p.a_minus);
  c.d_minus = std::norm(p.b_minus);
  c.e_plus = p.a_plus * std::conj(p.b_plus);
  c.e_minus = -c.e_plus;
  return p;
}

}  // namespace

std::vector<double> Spectrum::sorted_values() const {
  std::vector<double> out;
  out.reserve(2 * pairs.size());
  for (const auto& p : pairs) {
    out.push_back(p.plus.value);
    out.push_back(p.minus.value);
  }
  std::sort(out.begin(), out.end());
  return out;
}

Spectrum compute_spectrum(const SemiCayleySpec& spec) {
  Spectrum s{spec.group(), {}, {}};
  s.pairs.reserve(spec.n());
  for (std::size_t i = 0; i < spec.n(); ++i) {
    s.pairs.push_back(make_pair(spec, i));
    if (s.pairs.back().spoke_vanishes) s.vanishing_spoke.push_back(i);
  }
  return s;
}

ProjectorCoefficients projector_coefficients(const SemiCayleySpec& spec,
                                             std::size_t position) {
  if (position >= spec.n()) throw ValidationError("character out of range");
  return make_pair(spec, position).coeffs;
}

Eigen::MatrixXcd eigenvectors(const Spectrum& spectrum) {
  const auto n = static_cast<Eigen::Index>(spectrum.n());
  const auto& g = spectrum.group;
  const double scale = 1.0 / std::sqrt(static_cast<double>(n));
  const auto elems = g.elements();
  Eigen::MatrixXcd v(2 * n, 2 * n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const auto& p = spectrum.pairs[i];
    for (Eigen::Index k = 0; k < n; ++k) {
      const auto chi = eval_character(g, p.character, elems[k]).value() * scale;
      v(k, 2 * i) = p.a_plus * chi;
      v(n + k, 2 * i) = p.b_plus * chi;
      v(k, 2 * i + 1) = p.a_minus * chi;
      v(n + k, 2 * i + 1) = p.b_minus * chi;
    }
  }
  return v;
}

Eigen::VectorXd eigenvector_values(const Spectrum& spectrum) {
  const auto n = static_cast<Eigen::Index>(spectrum.n());
  Eigen::VectorXd values(2 * n);
  for (Eigen::Index i = 0; i < n; ++i) {
    values(2 * i) = spectrum.pairs[i].plus.value;
    values(2 * i + 1) = spectrum.pairs[i].minus.value;
  }
  return values;
}

std::vector<Projector> projectors(const Spectrum& spectrum) {
  const Eigen::MatrixXcd v = eigenvectors(spectrum);
  const Eigen::VectorXd values = eigenvector_values(spectrum);
  std::vector<Projector> out;
  out.reserve(v.cols());
  for (Eigen::Index j = 0; j < v.cols(); ++j) {
    out.push_back({values(j), v.col(j) * v.col(j).adjoint()});
  }
  return out;
}

bool is_integral(const Spectrum& spectrum) {
  return std::all_of(spectrum.pairs.begin(), spectrum.pairs.end(),
                     [](const EigenPair& p) {
                       return p.plus.integer_value() && p.minus.integer_value();
                     });
}

std::int64_t eigen_gcd(const Spectrum& spectrum) {
  std::vector<std::int64_t> values;
  for (const auto& p : spectrum.pairs) {
    const auto lp = p.plus.integer_value();
    const auto lm = p.minus.integer_value();
    if (!lp || !lm) throw ValidationError("spectrum not integral");
    values.push_back(*lp);
    values.push_back(*lm);
  }
  const std::int64_t top = values.front();
  std::int64_t m = 0;
  for (auto v : values) m = std::gcd(m, v - top);
  return m;
}

}  // namespace semicayley
