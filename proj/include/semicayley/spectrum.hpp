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
#include <complex>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "semicayley/character.hpp"
#include "semicayley/cyclo.hpp"
#include "semicayley/graph.hpp"

namespace semicayley {

/// (base + sign * sqrt(radicand)) / 2, with base and radicand real elements
/// of Z[zeta_N] and sign in {-1, 0, +1}. `value` is the float evaluation.
struct ExactEigenvalue {
  CycloValue twice_base;
  int root_sign = 0;
  CycloValue radicand;
  double value = 0.0;

  /// The eigenvalue as an integer, decided exactly; nullopt if irrational.
  std::optional<std::int64_t> integer_value() const;
};

/// Weights of the projector blocks: c on layer 0 x layer 0, d on
/// layer 1 x layer 1, e on layer 0 x layer 1.
struct ProjectorCoefficients {
  double c_plus = 1.0;
  double c_minus = 0.0;
  double d_plus = 0.0;
  double d_minus = 1.0;
  std::complex<double> e_plus{0.0, 0.0};
  std::complex<double> e_minus{0.0, 0.0};
};

/// Everything attached to one character chi_i: the 2x2 matrix
///   A_i = [[chi_i(R), chi_i(S)], [conj(chi_i(S)), chi_i(L)]]
/// its two eigenvalues and unit eigenvectors (a, b), and the derived
/// projector weights.
struct EigenPair {
  CharacterIndex character;
  CycloValue chi_right;
  CycloValue chi_left;
  CycloValue chi_spoke;
  bool spoke_vanishes = false;  // chi_i(S) == 0, exactly
  double x = 0.0;               // chi_i(R) - chi_i(L)
  ExactEigenvalue plus;
  ExactEigenvalue minus;
  ProjectorCoefficients coeffs;
  std::complex<double> a_plus{1.0, 0.0};
  std::complex<double> b_plus{0.0, 0.0};
  std::complex<double> a_minus{0.0, 0.0};
  std::complex<double> b_minus{1.0, 0.0};
};

/// Closed-form spectrum of SC(G, R, L, S), one EigenPair per character in
/// enumeration order (position 0 is the trivial character).
///
/// The eigenvector of (i, +/-) is (a chi_i(g))_g ++ (b chi_i(g))_g / sqrt(n).
struct Spectrum {
  AbelianGroup group;
  std::vector<EigenPair> pairs;
  /// Positions i with chi_i(S) = 0.
  std::vector<std::size_t> vanishing_spoke;

  std::size_t n() const { return pairs.size(); }
  /// All 2n eigenvalues, ascending.
  std::vector<double> sorted_values() const;
};

Spectrum compute_spectrum(const SemiCayleySpec& spec);
ProjectorCoefficients projector_coefficients(const SemiCayleySpec& spec,
                                             std::size_t position);

/// Columns are v_i^+ (column 2i) and v_i^- (column 2i+1).
Eigen::MatrixXcd eigenvectors(const Spectrum& spectrum);
/// Eigenvalues matching the columns of eigenvectors().
Eigen::VectorXd eigenvector_values(const Spectrum& spectrum);

struct Projector {
  double eigenvalue = 0.0;
  Eigen::MatrixXcd matrix;
};
/// E_i^+ and E_i^-, in the column order of eigenvectors().
std::vector<Projector> projectors(const Spectrum& spectrum);

bool is_integral(const Spectrum& spectrum);
/// gcd{ lambda - lambda_1^+ : lambda in Spec }; 0 when the spectrum is a
/// single point. Throws ValidationError("spectrum not integral").
std::int64_t eigen_gcd(const Spectrum& spectrum);

}  // namespace semicayley
