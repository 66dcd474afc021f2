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

// Acceptance suite: one PASS/FAIL line per criterion.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>

#include "semicayley/character.hpp"
#include "semicayley/cyclo.hpp"
#include "semicayley/pst.hpp"
#include "semicayley/transfer.hpp"
#include "support.hpp"

using namespace semicayley;
using semicayley::testing::subset;
using std::numbers::pi;

namespace {

struct Result {
  bool pass = true;
  std::string detail;
};

double max_gap(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

double unitarity_gap(const Eigen::MatrixXcd& h) {
  return max_gap(h * h.adjoint(), Eigen::MatrixXcd::Identity(h.rows(), h.cols()));
}

std::vector<AbelianGroup> groups_up_to(int max_order) {
  // every presentation with non-decreasing factors >= 2, plus Z_1
  std::vector<AbelianGroup> out{AbelianGroup({1})};
  std::function<void(std::vector<int>, int)> grow = [&](std::vector<int> f, int order) {
    const int lo = f.empty() ? 2 : f.back();
    for (int k = lo; order * k <= max_order; ++k) {
      f.push_back(k);
      out.emplace_back(f);
      grow(f, order * k);
      f.pop_back();
    }
  };
  grow({}, 1);
  return out;
}

Result spectral_correctness() {
  auto rng = semicayley::testing::make_rng(101);
  double worst = 0;
  for (int it = 0; it < 200; ++it) {
    const SemiCayleySpec spec = semicayley::testing::random_spec(rng, 12);
    const auto closed = compute_spectrum(spec).sorted_values();
    const auto numeric = semicayley::testing::numeric_eigenvalues(build(spec));
    for (std::size_t i = 0; i < closed.size(); ++i) {
      worst = std::max(worst, std::abs(closed[i] - numeric[i]));
    }
  }
  std::ostringstream d;
  d << "200 specs, max |closed - numeric| = " << worst;
  return {worst <= 1e-9, d.str()};
}

Result transfer_equivalence() {
  auto rng = semicayley::testing::make_rng(102);
  std::uniform_real_distribution<double> time(0.0, 20.0);
  double worst = 0;
  double worst_unitary = 0;
  int block_checks = 0;
  for (int it = 0; it < 50; ++it) {
    const SemiCayleySpec spec = semicayley::testing::random_spec(rng, 12, it % 2 == 0);
    const Spectrum s = compute_spectrum(spec);
    const Eigen::MatrixXd a = build(spec);
    for (int k = 0; k < 5; ++k) {
      const double t = time(rng);
      const auto h = transfer_matrix(s, t).entries;
      const auto o = oracle_expm(a, t).entries;
      worst = std::max(worst, max_gap(h, o));
      worst_unitary = std::max({worst_unitary, unitarity_gap(h), unitarity_gap(o)});
      if (spec.right_equals_left()) {
        const auto b = block_transfer_rl(spec, t).entries;
        worst = std::max({worst, max_gap(b, h), max_gap(b, o)});
        worst_unitary = std::max(worst_unitary, unitarity_gap(b));
        ++block_checks;
      }
    }
  }
  std::ostringstream d;
  d << "250 (spec, t), " << block_checks << " with the block path; max path gap "
    << worst << ", max unitarity gap " << worst_unitary;
  return {worst <= 1e-9 && worst_unitary <= 1e-9, d.str()};
}

Result sunlet_example() {
  Result r;
  std::ostringstream d;
  for (int n = 3; n <= 12; ++n) {
    const SemiCayleySpec spec = sunlet(n);
    const bool no_pst = find_pst(spec).empty();
    const bool periodic = periodicity(spec).periodic;
    if (!no_pst || periodic) {
      r.pass = false;
      d << "sunlet(" << n << ") pst=" << !no_pst << " periodic=" << periodic << "; ";
    }
  }
  r.detail = r.pass ? "n = 3..12: no PST, not periodic" : d.str();
  return r;
}

Result cone_example() {
  Result r;
  double worst = 0;
  std::ostringstream d;
  for (int n = 3; n <= 12; ++n) {
    const SemiCayleySpec spec = cone(n);
    const Spectrum s = compute_spectrum(spec);
    const double root = std::sqrt(1.0 + n * n);
    worst = std::max({worst, std::abs(s.pairs[0].plus.value - (1 + root)),
                      std::abs(s.pairs[0].minus.value - (1 - root))});
    for (std::size_t i = 1; i < s.n(); ++i) {
      worst = std::max(worst, std::abs(s.pairs[i].minus.value));
    }
    if (n % 2 == 1 && !find_pst(spec).empty()) {
      r.pass = false;
      d << "cone(" << n << ") has PST; ";
    }
  }
  r.pass = r.pass && worst <= 1e-9;
  d << "n = 3..12, max eigenvalue error " << worst << ", no PST for odd n";
  r.detail = d.str();
  return r;
}

Result dihedral_example() {
  Result r;
  std::ostringstream d;
  for (int m : {2, 3, 4, 6}) {
    const SemiCayleySpec spec = dihedral_full_coset(AbelianGroup::cyclic(m));
    const PeriodReport p = periodicity(spec);
    const auto found = find_pst(spec);
    const bool period_ok =
        p.periodic && p.min_period && *p.min_period == PiMultiple{Rational(2, m), 1};
    d << "|A|=" << m << ": period " << (p.min_period ? p.min_period->str() : "-")
      << (period_ok ? "" : " (expected 2pi/" + std::to_string(m) + ")");
    if (!found.empty()) {
      d << ", PST " << found.front().from.str() << " -> " << found.front().to.str()
        << " at " << found.front().time->str();
    }
    d << "; ";
    r.pass = r.pass && period_ok && found.empty();
  }
  r.detail = d.str();
  return r;
}

Result known_pst() {
  Result r;
  std::ostringstream d;
  const AbelianGroup one({1});
  const AbelianGroup z2 = AbelianGroup::cyclic(2);
  const AbelianGroup v4({2, 2});
  struct Case {
    std::string name;
    SemiCayleySpec spec;
    Vertex from, to;
  };
  const std::vector<Case> cases = {
      {"K2", SemiCayleySpec(one, {}, {}, GroupSubset(one, {one.identity()})),
       {one.identity(), 0}, {one.identity(), 1}},
      {"C4", SemiCayleySpec(z2, subset(z2, {{1}}), subset(z2, {{1}}), subset(z2, {{0}})),
       {z2.make({0}), 0}, {z2.make({1}), 1}},
      {"Q3", SemiCayleySpec(v4, subset(v4, {{1, 0}, {0, 1}}), subset(v4, {{1, 0}, {0, 1}}),
                            subset(v4, {{0, 0}})),
       {v4.make({0, 0}), 0}, {v4.make({1, 1}), 1}},
  };
  int pairs = 0;
  for (const auto& c : cases) {
    const PstVerdict v = decide(c.spec, c.from, c.to);
    const bool ok = v.status == PstStatus::yes && v.time &&
                    *v.time == PiMultiple{Rational(1, 2), 1} &&
                    *v.certificate.oracle_magnitude >= 1 - 1e-8;
    if (!ok) {
      r.pass = false;
      d << c.name << " verdict " << to_string(v.status) << "; ";
    }
    // exhaustive scan over one period
    const Spectrum s = compute_spectrum(c.spec);
    const PeriodReport p = periodicity(c.spec, s);
    const Eigen::MatrixXd a = build(c.spec);
    for (std::size_t i = 0; i < c.spec.vertex_count(); ++i) {
      for (std::size_t j = 0; j < c.spec.vertex_count(); ++j) {
        if (i == j) continue;
        ++pairs;
        const bool yes = decide(c.spec, s, c.spec.vertex(i), c.spec.vertex(j)).status ==
                         PstStatus::yes;
        const double peak = scan_max_magnitude(a, i, j, p.min_period->value(), 10000).max_magnitude;
        if (yes != (peak >= 1 - 1e-8)) {
          r.pass = false;
          d << c.name << " " << c.spec.vertex(i).str() << "->" << c.spec.vertex(j).str()
            << " decider " << yes << " scan " << peak << "; ";
        }
      }
    }
  }
  d << "K2, C4, Q3 PST at pi/2 oracle-confirmed; " << pairs
    << " ordered pairs agree with a 1e4-sample scan over one period";
  r.detail = d.str();
  return r;
}

Result exactness() {
  Result r;
  auto rng = semicayley::testing::make_rng(107);
  int values = 0;
  int integers = 0;
  double worst_int = 0;
  double closest_non_int = 1;
  auto judge = [&](const CycloValue& v) {
    ++values;
    const auto k = as_integer(v);
    const std::complex<double> z = v.approx();
    if (k) {
      ++integers;
      worst_int = std::max(worst_int, std::abs(z - static_cast<double>(*k)));
    } else {
      closest_non_int = std::min(closest_non_int, std::abs(z - std::round(z.real())));
    }
  };
  int orth = 0;
  for (const AbelianGroup& g : groups_up_to(12)) {
    for (int rep = 0; rep < 4; ++rep) {
      const GroupSubset x = semicayley::testing::random_subset(rng, g, rep % 2 == 0, rep > 1, 0.45);
      std::vector<CycloValue> sums;
      for (std::size_t i = 0; i < static_cast<std::size_t>(g.order()); ++i) {
        const CharacterIndex chi = character(g, i);
        sums.push_back(char_sum(g, chi, x));
        judge(sums.back());
        judge(abs_squared(sums.back()));
      }
      for (const auto& h : g.elements()) {
        CycloValue total(g.exponent());
        for (std::size_t i = 0; i < sums.size(); ++i) {
          total += CycloValue::root(eval_character(g, character(g, i), g.inverse(h))) * sums[i];
        }
        ++orth;
        if (as_integer(total) != (x.contains(h) ? g.order() : 0)) {
          r.pass = false;
        }
      }
    }
  }
  r.pass = r.pass && worst_int < 1e-9 && closest_non_int > 1e-6;
  std::ostringstream d;
  d << values << " values (" << integers << " integers): max integer error " << worst_int
    << ", min non-integer distance " << closest_non_int << "; " << orth
    << " column-orthogonality identities over all presentations of order <= 12";
  r.detail = d.str();
  return r;
}

Result properties() {
  Result r;
  std::ostringstream d;
  auto rng = semicayley::testing::make_rng(108);

  int translations = 0;
  for (int it = 0; it < 25; ++it) {
    const SemiCayleySpec spec = semicayley::testing::random_spec(rng, 8, it % 2 == 0);
    const Spectrum s = compute_spectrum(spec);
    const AbelianGroup& g = spec.group();
    for (std::size_t i = 0; i < spec.vertex_count(); ++i) {
      const Vertex u = spec.vertex(0);
      const Vertex v = spec.vertex(i);
      if (u == v) continue;
      const auto base = decide(spec, s, u, v);
      for (const auto& shift : g.elements()) {
        const auto moved = decide(spec, s, {g.mul(shift, u.element), u.layer},
                                  {g.mul(shift, v.element), v.layer});
        ++translations;
        if (moved.status != base.status || moved.time != base.time) r.pass = false;
      }
    }
  }

  double worst_mag = 0;
  std::uniform_real_distribution<double> time(0.0, 50.0);
  for (int it = 0; it < 40; ++it) {
    const SemiCayleySpec spec = semicayley::testing::random_spec(rng, 12);
    const Spectrum s = compute_spectrum(spec);
    for (int k = 0; k < 5; ++k) {
      worst_mag = std::max(worst_mag, transfer_matrix(s, time(rng)).entries.cwiseAbs().maxCoeff());
    }
  }
  if (worst_mag > 1 + 1e-9) r.pass = false;

  std::uniform_int_distribution<std::int64_t> num(-100000, 100000);
  std::uniform_int_distribution<std::int64_t> den(1, 100000);
  int nu2_failures = 0;
  for (int it = 0; it < 1000; ++it) {
    const Rational a(num(rng), den(rng));
    const Rational b(num(rng), den(rng));
    const TwoAdicVal m = std::min(nu2(a), nu2(b));
    const bool ok = nu2(a * b) == nu2(a) + nu2(b) && nu2(a + b) >= m &&
                    (nu2(a) == nu2(b) || nu2(a + b) == m);
    nu2_failures += !ok;
  }
  if (nu2_failures) r.pass = false;

  double block_gap = 0;
  for (int it = 0; it < 20; ++it) {
    const AbelianGroup g = semicayley::testing::random_group(rng, 12);
    const GroupSubset rr = semicayley::testing::random_subset(rng, g, true, false);
    const GroupSubset ll = semicayley::testing::random_subset(rng, g, true, false);
    const SemiCayleySpec spec(g, rr, ll, GroupSubset(g, {}));
    const auto n = static_cast<Eigen::Index>(spec.n());
    const double t = time(rng);
    const auto h = transfer_matrix(spec, t).entries;
    block_gap = std::max({block_gap, h.topRightCorner(n, n).cwiseAbs().maxCoeff(),
                          h.bottomLeftCorner(n, n).cwiseAbs().maxCoeff(),
                          max_gap(h.topLeftCorner(n, n), oracle_expm(cayley_matrix(g, rr), t).entries),
                          max_gap(h.bottomRightCorner(n, n), oracle_expm(cayley_matrix(g, ll), t).entries)});
  }
  if (block_gap > 1e-9) r.pass = false;

  double coeff_gap = 0;
  for (int it = 0; it < 60; ++it) {
    const Spectrum s = compute_spectrum(semicayley::testing::random_spec(rng, 12));
    for (const auto& p : s.pairs) {
      coeff_gap = std::max({coeff_gap, std::abs(p.coeffs.e_plus + p.coeffs.e_minus),
                            std::abs(p.coeffs.c_plus + p.coeffs.c_minus - 1.0)});
    }
  }
  if (coeff_gap > 1e-12) r.pass = false;

  d << translations << " translated verdicts; max |H_uv| " << worst_mag << "; nu2 laws "
    << 1000 - nu2_failures << "/1000; S=empty block gap " << block_gap
    << "; max |e+ + e-|, |c+ + c- - 1| = " << coeff_gap;
  r.detail = d.str();
  return r;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    Result (*check)();
  };
  const Criterion criteria[] = {
      {1, "spectral correctness", spectral_correctness},
      {2, "transfer equivalence", transfer_equivalence},
      {3, "sunlet: no PST, not periodic", sunlet_example},
      {4, "cone spectrum, no PST for odd n", cone_example},
      {5, "dihedral full coset: period 2pi/|A|, no PST", dihedral_example},
      {6, "known PST and oracle scan", known_pst},
      {7, "exact integrality and orthogonality", exactness},
      {8, "property suite", properties},
  };
  std::printf("seed %llu\n", static_cast<unsigned long long>(semicayley::testing::seed()));
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Result r;
    try {
      r = c.check();
    } catch (const std::exception& e) {
      r = {false, std::string("exception: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    failed += !r.pass;
    std::printf("[%s] %d %s (%.2fs): %s\n", r.pass ? "PASS" : "FAIL", c.id, c.name, secs,
                r.detail.c_str());
  }
  std::printf("%d/%zu criteria pass\n", static_cast<int>(std::size(criteria)) - failed,
              std::size(criteria));
  return failed == 0 ? 0 : 1;
}
