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

#include "semicayley/pst.hpp"

#include <cmath>
#include <complex>
#include <numeric>
#include <sstream>

#include "semicayley/cyclo.hpp"
#include "semicayley/error.hpp"
#include "semicayley/transfer.hpp"

namespace semicayley {

std::string to_string(PstStatus status) {
  switch (status) {
    case PstStatus::yes: return "yes";
    case PstStatus::no: return "no";
    case PstStatus::undecided: return "undecided";
  }
  return "undecided";
}

std::string to_string(Rule rule) {
  switch (rule) {
    case Rule::phases_aligned: return "phases-aligned";
    case Rule::odd_order: return "odd-order";
    case Rule::order_not_two: return "order-not-two";
    case Rule::spoke_symmetry: return "spoke-symmetry";
    case Rule::right_left_differ: return "right-left-differ";
    case Rule::spoke_character_vanishes: return "spoke-character-vanishes";
    case Rule::not_integral: return "not-integral";
    case Rule::spoke_valuation: return "spoke-valuation";
    case Rule::sign_not_real: return "sign-not-real";
    case Rule::valuation_pattern: return "valuation-pattern";
    case Rule::incommensurate: return "incommensurate";
  }
  return "unknown";
}

namespace {

struct Term {
  std::size_t character;
  int sign;  // +1: lambda_plus, -1: lambda_minus
};

const ExactEigenvalue& eigenvalue(const Spectrum& s, const Term& t) {
  return t.sign > 0 ? s.pairs[t.character].plus : s.pairs[t.character].minus;
}

/// Eigenvalues with nonzero projector weight on the diagonal of layer r.
/// The first term is the reference (trivial character).
std::vector<Term> layer_support(const Spectrum& s, int layer) {
  const int primary = layer == 0 ? 1 : -1;
  std::vector<Term> out;
  for (std::size_t i = 0; i < s.n(); ++i) out.push_back({i, primary});
  for (std::size_t i = 0; i < s.n(); ++i) {
    if (!s.pairs[i].spoke_vanishes) out.push_back({i, -primary});
  }
  return out;
}

int sgn(double x) { return (x > 0) - (x < 0); }

/// 2 lambda = a + c sqrt(radicand) for every term.
struct Lattice {
  std::int64_t a = 0;
  std::int64_t radicand = 1;
  std::vector<std::int64_t> coord;
};

struct LatticeResult {
  std::optional<Lattice> lattice;
  std::size_t offending = 0;
  std::string detail;
};

LatticeResult lattice_coordinates(const Spectrum& s,
                                  const std::vector<Term>& terms) {
  LatticeResult out;
  const ExactEigenvalue& ref = eigenvalue(s, terms.front());
  const int order = ref.twice_base.order();
  const auto p = as_integer(ref.twice_base);
  if (!p) {
    out.detail = "reference eigenvalue is not a quadratic integer";
    return out;
  }
  std::int64_t a = *p;
  if (ref.root_sign != 0) {
    const auto d = as_integer(ref.radicand);
    if (!d) {
      out.detail = "reference eigenvalue is not a quadratic integer";
      return out;
    }
    if (const auto r = exact_sqrt(*d)) a += ref.root_sign * *r;
  }

  Lattice lat;
  lat.a = a;
  std::optional<std::int64_t> radicand;
  const CycloValue shift = CycloValue::integer(order, a);
  for (const Term& t : terms) {
    const ExactEigenvalue& ev = eigenvalue(s, t);
    const CycloValue delta = ev.twice_base - shift;
    std::optional<std::int64_t> m;
    if (ev.root_sign == 0) {
      m = as_integer(delta * delta);
    } else {
      const CycloValue d2 = delta * delta;
      const auto e = as_integer(d2 + ev.radicand);
      const auto q = as_integer(d2 * ev.radicand);
      auto r = q ? exact_sqrt(*q) : std::optional<std::int64_t>{};
      if (e && r) {
        *r *= sgn(delta.approx().real());
        m = *e + 2 * ev.root_sign * *r;
      }
    }
    if (!m || *m < 0) {
      out.offending = t.character;
      out.detail = "2 lambda - a is not the square root of an integer";
      return out;
    }
    if (*m == 0) {
      lat.coord.push_back(0);
      continue;
    }
    const auto [d, b] = squarefree_decomposition(*m);
    if (!radicand) radicand = d;
    if (*radicand != d) {
      out.offending = t.character;
      out.detail = "eigenvalue differences span sqrt(" +
                   std::to_string(*radicand) + ") and sqrt(" +
                   std::to_string(d) + ")";
      return out;
    }
    lat.coord.push_back(sgn(2.0 * ev.value - static_cast<double>(a)) * b);
  }
  lat.radicand = radicand.value_or(1);
  out.lattice = std::move(lat);
  return out;
}

/// Solves s n_j in Z + h_j / 2 for the smallest s > 0.
struct Alignment {
  bool ok = false;
  std::int64_t gcd = 0;
  std::optional<int> k;
  std::size_t offending = 0;
};

Alignment align(const std::vector<std::int64_t>& n, const std::vector<int>& h,
                const std::vector<std::size_t>& characters) {
  Alignment out;
  for (auto v : n) out.gcd = std::gcd(out.gcd, v);
  for (std::size_t j = 0; j < n.size(); ++j) {
    if (h[j] == 0) continue;
    const TwoAdicVal v = nu2(n[j]);
    if (v.is_infinite() || (out.k && *out.k != v.exponent())) {
      out.offending = characters[j];
      return out;
    }
    out.k = v.exponent();
  }
  for (std::size_t j = 0; j < n.size(); ++j) {
    if (h[j] != 0) continue;
    if (out.k && nu2(n[j]) <= TwoAdicVal(*out.k)) {
      out.offending = characters[j];
      return out;
    }
  }
  out.ok = true;
  return out;
}

GroupElement difference(const AbelianGroup& g, const Vertex& u,
                        const Vertex& v) {
  return g.mul(g.inverse(u.element), v.element);
}

void check_pair(const SemiCayleySpec& spec, const Vertex& u, const Vertex& v) {
  spec.vertex_index(u);
  spec.vertex_index(v);
  if (u == v) throw ValidationError("PST needs two distinct vertices");
}

PstVerdict base_verdict(const Vertex& u, const Vertex& v, std::string route) {
  PstVerdict out;
  out.from = u;
  out.to = v;
  out.certificate.route = std::move(route);
  return out;
}

PstVerdict reject(PstVerdict out, Rule rule, std::string detail,
                  std::optional<std::size_t> character = std::nullopt) {
  out.status = PstStatus::no;
  out.certificate.rule = rule;
  out.certificate.detail = std::move(detail);
  out.certificate.character = character;
  return out;
}

PstVerdict confirm(const SemiCayleySpec& spec, PstVerdict out) {
  if (out.status != PstStatus::yes) return out;
  const TimeCheck check =
      verify_at_time(spec, out.from, out.to, out.time->value());
  out.certificate.spectral_magnitude = check.spectral_magnitude;
  out.certificate.oracle_magnitude = check.oracle_magnitude;
  if (!check.pass) {
    std::ostringstream msg;
    msg << "exact decision gives PST " << out.from.str() << " -> "
        << out.to.str() << " at " << out.time->str()
        << " but |H(t)_uv| = " << check.oracle_magnitude;
    throw ConsistencyError(msg.str());
  }
  return out;
}

std::string character_name(const Spectrum& s, std::size_t i) {
  return "chi" + GroupElement(s.pairs[i].character.indices()).str();
}

}  // namespace

NecessaryCheck necessary_conditions(const SemiCayleySpec& spec,
                                    const Vertex& u, const Vertex& v) {
  check_pair(spec, u, v);
  const AbelianGroup& g = spec.group();
  const GroupElement a = difference(g, u, v);
  const int ord = g.order(a);
  NecessaryCheck out;
  if (u.layer == v.layer) {
    if (g.order() % 2 != 0) {
      return {false, Rule::odd_order,
              "|G| = " + std::to_string(g.order()) + " is odd"};
    }
    if (ord != 2) {
      return {false, Rule::order_not_two,
              "g^-1 h = " + a.str() + " has order " + std::to_string(ord)};
    }
    return out;
  }
  const bool symmetric = is_inverse_closed(g, spec.spoke());
  if (symmetric != (ord <= 2)) {
    return {false, Rule::spoke_symmetry,
            "g^-1 h = " + a.str() + " has order " + std::to_string(ord) +
                (symmetric ? " but S = S^-1" : " but S != S^-1")};
  }
  return out;
}

PstVerdict decide_same_layer_rl(const SemiCayleySpec& spec,
                                const Spectrum& spectrum, const Vertex& u,
                                const Vertex& v) {
  check_pair(spec, u, v);
  if (!spec.right_equals_left()) {
    throw ValidationError("same-layer valuation test needs R = L");
  }
  if (u.layer != v.layer) throw ValidationError("vertices in different layers");
  PstVerdict out = base_verdict(u, v, "same-layer-rl");
  const AbelianGroup& g = spec.group();
  const GroupElement a = difference(g, u, v);
  if (g.order(a) != 2) {
    return reject(out, Rule::order_not_two,
                  "g^-1 h = " + a.str() + " does not have order 2");
  }
  const auto top = spectrum.pairs.front().plus.integer_value();
  std::vector<std::int64_t> diffs;
  std::vector<int> h;
  std::vector<std::size_t> chars;
  for (std::size_t i = 0; i < spectrum.n(); ++i) {
    const EigenPair& p = spectrum.pairs[i];
    const auto lp = p.plus.integer_value();
    const auto lm = p.minus.integer_value();
    if (!top || !lp || !lm) {
      return reject(out, Rule::not_integral,
                    "eigenvalue of " + character_name(spectrum, i) +
                        " is not an integer",
                    i);
    }
    const int flip = eval_character(g, p.character, a).numerator != 0;
    for (auto l : {*lp, *lm}) {
      diffs.push_back(*top - l);
      h.push_back(flip);
      chars.push_back(i);
    }
  }
  const Alignment al = align(diffs, h, chars);
  if (!al.ok) {
    return reject(out, Rule::valuation_pattern,
                  "2-adic valuation of lambda_1 - lambda breaks the pattern "
                  "at " + character_name(spectrum, al.offending),
                  al.offending);
  }
  out.status = PstStatus::yes;
  out.certificate.rule = Rule::phases_aligned;
  out.certificate.k = al.k;
  out.certificate.detail = "k = " + std::to_string(*al.k);
  out.time = PiMultiple{Rational(1, al.gcd), 1};
  return confirm(spec, out);
}

PstVerdict decide_same_layer(const SemiCayleySpec& spec,
                             const Spectrum& spectrum, const Vertex& u,
                             const Vertex& v) {
  check_pair(spec, u, v);
  if (u.layer != v.layer) throw ValidationError("vertices in different layers");
  PstVerdict out = base_verdict(u, v, "phase-alignment");
  const AbelianGroup& g = spec.group();
  const GroupElement a = difference(g, u, v);
  if (g.order(a) != 2) {
    return reject(out, Rule::order_not_two,
                  "g^-1 h = " + a.str() + " does not have order 2");
  }
  const auto terms = layer_support(spectrum, u.layer);
  const LatticeResult lr = lattice_coordinates(spectrum, terms);
  if (!lr.lattice) {
    return reject(out, Rule::incommensurate, lr.detail, lr.offending);
  }
  const Lattice& lat = *lr.lattice;
  std::vector<std::int64_t> n;
  std::vector<int> h;
  std::vector<std::size_t> chars;
  for (std::size_t j = 0; j < terms.size(); ++j) {
    const auto& chi = spectrum.pairs[terms[j].character].character;
    n.push_back(lat.coord.front() - lat.coord[j]);
    h.push_back(eval_character(g, chi, a).numerator != 0);
    chars.push_back(terms[j].character);
  }
  const Alignment al = align(n, h, chars);
  if (!al.ok) {
    return reject(out, Rule::valuation_pattern,
                  "phases cannot align at " +
                      character_name(spectrum, al.offending),
                  al.offending);
  }
  out.status = PstStatus::yes;
  out.certificate.rule = Rule::phases_aligned;
  out.certificate.k = al.k;
  out.certificate.radicand = lat.radicand;
  out.certificate.detail = "k = " + std::to_string(*al.k) + ", Delta = " +
                           std::to_string(lat.radicand);
  out.time = PiMultiple{Rational(2, al.gcd), lat.radicand};
  return confirm(spec, out);
}

PstVerdict decide_cross_layer(const SemiCayleySpec& spec,
                              const Spectrum& spectrum, const Vertex& u,
                              const Vertex& v) {
  check_pair(spec, u, v);
  if (u.layer == v.layer) throw ValidationError("vertices in the same layer");
  PstVerdict out = base_verdict(u, v, "cross-layer");
  if (!spec.right_equals_left()) {
    return reject(out, Rule::right_left_differ, "R != L");
  }
  const AbelianGroup& g = spec.group();
  const GroupElement a = difference(g, u, v);
  if (!spectrum.vanishing_spoke.empty()) {
    const std::size_t i = spectrum.vanishing_spoke.front();
    return reject(out, Rule::spoke_character_vanishes,
                  character_name(spectrum, i) + "(S) = 0", i);
  }
  const auto top = spectrum.pairs.front().plus.integer_value();
  const TwoAdicVal k = nu2(static_cast<std::int64_t>(spec.spoke().size()));
  std::vector<std::int64_t> n;
  std::vector<int> h;
  std::vector<std::size_t> chars;
  for (std::size_t j = 0; j < spectrum.n(); ++j) {
    const EigenPair& p = spectrum.pairs[j];
    const auto rj = as_integer(p.chi_right);
    const auto sj = abs_as_integer(p.chi_spoke);
    if (!rj || !sj || !top) {
      return reject(out, Rule::not_integral,
                    character_name(spectrum, j) +
                        "(R) or |" + character_name(spectrum, j) +
                        "(S)| is not an integer",
                    j);
    }
    if (nu2(*sj) != k) {
      return reject(out, Rule::spoke_valuation,
                    "nu2|" + character_name(spectrum, j) + "(S)| = " +
                        nu2(*sj).str() + " but nu2|S| = " + k.str(),
                    j);
    }
    const CycloValue root = CycloValue::root(eval_character(g, p.character, a));
    const CycloValue w =
        u.layer == 0 ? root * conj(p.chi_spoke) : root * p.chi_spoke;
    const auto wi = as_integer(w);
    if (!wi || (*wi != *sj && *wi != -*sj)) {
      return reject(out, Rule::sign_not_real,
                    "sign at " + character_name(spectrum, j) + " is not +-1",
                    j);
    }
    n.push_back(2 * *sj);
    h.push_back(1);
    chars.push_back(j);
    n.push_back(*top - (*rj + *sj));
    h.push_back(*wi < 0);
    chars.push_back(j);
  }
  const Alignment al = align(n, h, chars);
  if (!al.ok) {
    return reject(out, Rule::valuation_pattern,
                  "2-adic valuation of lambda_1 - lambda_j breaks the "
                  "pattern at " + character_name(spectrum, al.offending),
                  al.offending);
  }
  out.status = PstStatus::yes;
  out.certificate.rule = Rule::phases_aligned;
  out.certificate.k = k.exponent();
  out.certificate.detail = "k = " + k.str();
  out.time = PiMultiple{Rational(1, al.gcd), 1};
  return confirm(spec, out);
}

PstVerdict decide(const SemiCayleySpec& spec, const Spectrum& spectrum,
                  const Vertex& u, const Vertex& v) {
  const NecessaryCheck nc = necessary_conditions(spec, u, v);
  if (!nc.pass) {
    return reject(base_verdict(u, v, "necessary"), nc.rule, nc.detail);
  }
  if (u.layer != v.layer) return decide_cross_layer(spec, spectrum, u, v);
  if (spec.right_equals_left()) {
    return decide_same_layer_rl(spec, spectrum, u, v);
  }
  return decide_same_layer(spec, spectrum, u, v);
}

PstVerdict decide(const SemiCayleySpec& spec, const Vertex& u,
                  const Vertex& v) {
  return decide(spec, compute_spectrum(spec), u, v);
}

TimeCheck verify_at_time(const SemiCayleySpec& spec, const Vertex& u,
                         const Vertex& v, double t, double tol) {
  if (!std::isfinite(t) || t < 0) {
    throw ValidationError("time must be finite and non-negative");
  }
  const Spectrum spectrum = compute_spectrum(spec);
  const std::complex<double> closed = transfer_entry(spectrum, u, v, t);
  const std::complex<double> oracle =
      oracle_expm(build(spec), t)
          .entries(spec.vertex_index(u), spec.vertex_index(v));
  if (std::abs(closed - oracle) > 1e-8) {
    std::ostringstream msg;
    msg << "closed-form and exponential transfer entries differ by "
        << std::abs(closed - oracle) << " at t = " << t;
    throw ConsistencyError(msg.str());
  }
  TimeCheck out;
  out.time = t;
  out.spectral_magnitude = std::abs(closed);
  out.oracle_magnitude = std::abs(oracle);
  out.pass = out.spectral_magnitude >= 1.0 - tol &&
             out.oracle_magnitude >= 1.0 - tol;
  return out;
}

namespace {

PeriodReport period_from(const Spectrum& spectrum,
                         const std::vector<Term>& terms) {
  PeriodReport out;
  out.route = "phase-alignment";
  const LatticeResult lr = lattice_coordinates(spectrum, terms);
  if (!lr.lattice) return out;
  std::int64_t g = 0;
  for (auto c : lr.lattice->coord) g = std::gcd(g, lr.lattice->coord.front() - c);
  out.periodic = true;
  out.radicand = lr.lattice->radicand;
  if (g == 0) {
    out.route = "trivial";
    return out;
  }
  out.min_period = PiMultiple{Rational(4, g), lr.lattice->radicand};
  return out;
}

}  // namespace

PeriodReport periodicity(const SemiCayleySpec& spec, const Spectrum& spectrum) {
  if (spec.right_equals_left() && is_integral(spectrum)) {
    PeriodReport out;
    out.periodic = true;
    out.route = "integral-rl";
    out.radicand = 1;
    const std::int64_t m = eigen_gcd(spectrum);
    if (m == 0) {
      out.route = "trivial";
      return out;
    }
    out.eigen_gcd = m;
    out.min_period = PiMultiple{Rational(2, m), 1};
    return out;
  }
  // Every vertex of a layer has the same diagonal entry, so the graph
  // period is the least common multiple of the two layer periods.
  const PeriodReport p0 = period_from(spectrum, layer_support(spectrum, 0));
  const PeriodReport p1 = period_from(spectrum, layer_support(spectrum, 1));
  PeriodReport out;
  out.route = "phase-alignment";
  if (!p0.periodic || !p1.periodic) return out;
  if (is_integral(spectrum)) out.eigen_gcd = eigen_gcd(spectrum);
  if (!p0.min_period || !p1.min_period) {
    out = p0.min_period ? p0 : p1;
    if (is_integral(spectrum)) out.eigen_gcd = eigen_gcd(spectrum);
    return out;
  }
  if (p0.min_period->radicand != p1.min_period->radicand) return out;
  const Rational a = p0.min_period->coeff;
  const Rational b = p1.min_period->coeff;
  out.periodic = true;
  out.radicand = p0.radicand;
  out.min_period = PiMultiple{
      Rational(std::lcm(a.numerator(), b.numerator()),
               std::gcd(a.denominator(), b.denominator())),
      p0.min_period->radicand};
  return out;
}

PeriodReport periodicity(const SemiCayleySpec& spec) {
  return periodicity(spec, compute_spectrum(spec));
}

PeriodReport vertex_periodicity(const SemiCayleySpec& spec,
                                const Spectrum& spectrum, int layer) {
  if (layer != 0 && layer != 1) throw ValidationError("layer must be 0 or 1");
  (void)spec;
  return period_from(spectrum, layer_support(spectrum, layer));
}

std::vector<PstVerdict> find_pst(const SemiCayleySpec& spec, double tol) {
  const Spectrum spectrum = compute_spectrum(spec);
  const AbelianGroup& g = spec.group();
  std::vector<PstVerdict> out;
  for (int r = 0; r < 2; ++r) {
    for (int s = 0; s < 2; ++s) {
      const Vertex u{g.identity(), r};
      for (const GroupElement& a : g.elements()) {
        const Vertex v{a, s};
        if (u == v) continue;
        PstVerdict verdict = decide(spec, spectrum, u, v);
        if (verdict.status != PstStatus::yes) continue;
        if (*verdict.certificate.oracle_magnitude < 1.0 - tol) continue;
        out.push_back(std::move(verdict));
      }
    }
  }
  return out;
}

ScanResult scan_max_magnitude(const Eigen::MatrixXd& adjacency, std::size_t u,
                              std::size_t v, double t_max, int samples) {
  if (samples < 1 || !(t_max > 0)) {
    throw ValidationError("scan needs t_max > 0 and samples >= 1");
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(adjacency);
  const Eigen::MatrixXd& q = eig.eigenvectors();
  const Eigen::VectorXd& lam = eig.eigenvalues();
  const Eigen::ArrayXd w = (q.row(u).transpose().array() * q.row(v).transpose().array());
  ScanResult out;
  for (int j = 1; j <= samples; ++j) {
    const double t = t_max * j / samples;
    std::complex<double> z = 0.0;
    for (Eigen::Index k = 0; k < lam.size(); ++k) {
      z += w(k) * std::polar(1.0, -lam(k) * t);
    }
    if (std::abs(z) > out.max_magnitude) {
      out.max_magnitude = std::abs(z);
      out.argmax = t;
    }
  }
  return out;
}

}  // namespace semicayley
