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
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "semicayley/graph.hpp"
#include "semicayley/rational.hpp"
#include "semicayley/spectrum.hpp"

namespace semicayley {

enum class PstStatus { yes, no, undecided };

enum class Rule {
  phases_aligned,
  odd_order,
  order_not_two,
  spoke_symmetry,
  right_left_differ,
  spoke_character_vanishes,
  not_integral,
  spoke_valuation,
  sign_not_real,
  valuation_pattern,
  incommensurate,
};

std::string to_string(PstStatus status);
std::string to_string(Rule rule);

struct Certificate {
  Rule rule = Rule::phases_aligned;
  /// "necessary", "same-layer-rl", "cross-layer", "phase-alignment".
  std::string route;
  std::string detail;
  /// Position of the offending character, when there is one.
  std::optional<std::size_t> character;
  /// Common 2-adic valuation of the certificate.
  std::optional<int> k;
  std::optional<std::int64_t> radicand;
  std::optional<double> spectral_magnitude;
  std::optional<double> oracle_magnitude;
};

struct PstVerdict {
  PstStatus status = PstStatus::undecided;
  Vertex from;
  Vertex to;
  /// Minimal PST time, for status yes.
  std::optional<PiMultiple> time;
  Certificate certificate;
};

struct NecessaryCheck {
  bool pass = true;
  Rule rule = Rule::phases_aligned;
  std::string detail;
};

NecessaryCheck necessary_conditions(const SemiCayleySpec& spec,
                                    const Vertex& u, const Vertex& v);

/// Same layer with R = L, by integrality and 2-adic valuations.
PstVerdict decide_same_layer_rl(const SemiCayleySpec& spec,
                                const Spectrum& spectrum, const Vertex& u,
                                const Vertex& v);
/// Same layer, any R and L: every support eigenvalue must lie on a common
/// lattice a/2 + (Z/2) sqrt(Delta) and the phases must align.
PstVerdict decide_same_layer(const SemiCayleySpec& spec,
                             const Spectrum& spectrum, const Vertex& u,
                             const Vertex& v);
PstVerdict decide_cross_layer(const SemiCayleySpec& spec,
                              const Spectrum& spectrum, const Vertex& u,
                              const Vertex& v);
/// Necessary conditions, then the matching route.
PstVerdict decide(const SemiCayleySpec& spec, const Spectrum& spectrum,
                  const Vertex& u, const Vertex& v);
PstVerdict decide(const SemiCayleySpec& spec, const Vertex& u,
                  const Vertex& v);

struct TimeCheck {
  double time = 0.0;
  double spectral_magnitude = 0.0;
  double oracle_magnitude = 0.0;
  bool pass = false;
};

/// |H(t)_{uv}| by the closed form and by the matrix exponential. Throws
/// ConsistencyError if the two paths differ by more than 1e-8.
TimeCheck verify_at_time(const SemiCayleySpec& spec, const Vertex& u,
                         const Vertex& v, double t, double tol = 1e-8);

struct PeriodReport {
  bool periodic = false;
  /// "integral-rl", "trivial", "phase-alignment".
  std::string route;
  /// Absent when not periodic, or when H(t) = I for every t.
  std::optional<PiMultiple> min_period;
  std::optional<std::int64_t> eigen_gcd;
  std::optional<std::int64_t> radicand;
};

PeriodReport periodicity(const SemiCayleySpec& spec, const Spectrum& spectrum);
PeriodReport periodicity(const SemiCayleySpec& spec);
/// Periodicity of (g, layer); the same for every g.
PeriodReport vertex_periodicity(const SemiCayleySpec& spec,
                                const Spectrum& spectrum, int layer);

/// Every PST pair from (e, r) in canonical order: layer pairs 00, 01, 10,
/// 11, then the enumeration index of the target element.
std::vector<PstVerdict> find_pst(const SemiCayleySpec& spec,
                                 double tol = 1e-8);

struct ScanResult {
  double max_magnitude = 0.0;
  double argmax = 0.0;
};

/// max |exp(-itA)_{uv}| over t = j t_max / samples, j = 1..samples.
ScanResult scan_max_magnitude(const Eigen::MatrixXd& adjacency, std::size_t u,
                              std::size_t v, double t_max, int samples);

}  // namespace semicayley
