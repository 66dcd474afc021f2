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

#include "semicayley/transfer.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>

#include "semicayley/error.hpp"

namespace semicayley {

using cd = std::complex<double>;

std::complex<double> transfer_entry(const Spectrum& spectrum, const Vertex& u,
                                    const Vertex& v, double t) {
  const auto& g = spectrum.group;
  g.check(u.element);
  g.check(v.element);
  if ((u.layer != 0 && u.layer != 1) || (v.layer != 0 && v.layer != 1)) {
    throw ValidationError("vertex layer must be 0 or 1");
  }
  const auto a = g.mul(g.inverse(u.element), v.element);
  const cd minus_i{0.0, -1.0};
  cd total{0.0, 0.0};
  for (const auto& p : spectrum.pairs) {
    const auto& c = p.coeffs;
    cd wp, wm;
    if (u.layer == 0 && v.layer == 0) {
      wp = c.c_plus;
      wm = c.c_minus;
    } else if (u.layer == 1 && v.layer == 1) {
      wp = c.d_plus;
      wm = c.d_minus;
    } else if (u.layer == 0) {
      wp = std::conj(c.e_plus);
      wm = std::conj(c.e_minus);
    } else {
      wp = c.e_plus;
      wm = c.e_minus;
    }
    const cd phase = wp * std::exp(minus_i * (p.plus.value * t)) +
                     wm * std::exp(minus_i * (p.minus.value * t));
    total += phase * eval_character(g, p.character, a).value();
  }
  return total / static_cast<double>(spectrum.n());
}

std::complex<double> transfer_entry(const SemiCayleySpec& spec,
                                    const Vertex& u, const Vertex& v,
                                    double t) {
  return transfer_entry(compute_spectrum(spec), u, v, t);
}

TransferMatrix transfer_matrix(const Spectrum& spectrum, double t) {
  const Eigen::MatrixXcd vecs = eigenvectors(spectrum);
  const Eigen::VectorXd values = eigenvector_values(spectrum);
  Eigen::VectorXcd phases(values.size());
  for (Eigen::Index j = 0; j < values.size(); ++j) {
    phases(j) = std::exp(cd{0.0, -values(j) * t});
  }
  return {t, vecs * phases.asDiagonal() * vecs.adjoint()};
}

TransferMatrix transfer_matrix(const SemiCayleySpec& spec, double t) {
  return transfer_matrix(compute_spectrum(spec), t);
}

TransferMatrix oracle_expm(const Eigen::MatrixXd& a, double t) {
  if (a.rows() != a.cols()) throw ValidationError("matrix must be square");
  const Eigen::Index m = a.rows();
  Eigen::MatrixXcd x = a.cast<cd>() * cd{0.0, -t};

  const double norm = x.cwiseAbs().colwise().sum().maxCoeff();
  int squarings = 0;
  if (norm > 0.5) {
    squarings = static_cast<int>(std::ceil(std::log2(norm / 0.5)));
  }
  x /= std::ldexp(1.0, squarings);

  // ||x|| <= 1/2: 30 Taylor terms leave a remainder below 1e-40.
  Eigen::MatrixXcd result = Eigen::MatrixXcd::Identity(m, m);
  Eigen::MatrixXcd term = Eigen::MatrixXcd::Identity(m, m);
  for (int k = 1; k <= 30; ++k) {
    term = term * x / static_cast<double>(k);
    result += term;
  }
  for (int s = 0; s < squarings; ++s) result = result * result;
  return {t, result};
}

namespace {

// f(M) for symmetric positive semidefinite M through its eigendecomposition.
template <typename F>
Eigen::MatrixXcd psd_function(const Eigen::MatrixXd& m, F f) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m);
  const Eigen::VectorXd mu = solver.eigenvalues();
  Eigen::VectorXcd fmu(mu.size());
  for (Eigen::Index j = 0; j < mu.size(); ++j) fmu(j) = f(std::max(mu(j), 0.0));
  const Eigen::MatrixXcd q = solver.eigenvectors().cast<cd>();
  return q * fmu.asDiagonal() * q.adjoint();
}

// sin(t s) / s, continued to t at s = 0.
double sinc_t(double s, double t) {
  if (s * std::abs(t) < 1e-6) {
    const double ts2 = (t * s) * (t * s);
    return t * (1.0 - ts2 / 6.0 + ts2 * ts2 / 120.0);
  }
  return std::sin(t * s) / s;
}

}  // namespace

TransferMatrix block_transfer_rl(const SemiCayleySpec& spec, double t) {
  if (!spec.right_equals_left()) {
    throw ValidationError("block transfer formula needs R = L");
  }
  const auto n = static_cast<Eigen::Index>(spec.n());
  const Eigen::MatrixXd b = cayley_matrix(spec.group(), spec.right());
  const Eigen::MatrixXd c = cayley_matrix(spec.group(), spec.spoke());
  const Eigen::MatrixXd cct = c * c.transpose();

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> bsolver(b);
  Eigen::VectorXcd bphase(n);
  for (Eigen::Index j = 0; j < n; ++j) {
    bphase(j) = std::exp(cd{0.0, -bsolver.eigenvalues()(j) * t});
  }
  const Eigen::MatrixXcd qb = bsolver.eigenvectors().cast<cd>();
  const Eigen::MatrixXcd hb = qb * bphase.asDiagonal() * qb.adjoint();

  const Eigen::MatrixXcd d1 = psd_function(
      cct, [t](double mu) { return cd{std::cos(t * std::sqrt(mu)), 0.0}; });
  const Eigen::MatrixXcd d2 = psd_function(cct, [t](double mu) {
    return cd{0.0, -sinc_t(std::sqrt(mu), t)};
  });

  Eigen::MatrixXcd h(2 * n, 2 * n);
  const Eigen::MatrixXcd diag_block = hb * d1;
  h.topLeftCorner(n, n) = diag_block;
  h.bottomRightCorner(n, n) = diag_block;
  h.topRightCorner(n, n) = hb * c.cast<cd>() * d2;
  h.bottomLeftCorner(n, n) = hb * c.transpose().cast<cd>() * d2;
  return {t, h};
}

}  // namespace semicayley
