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

#include "semicayley/graph.hpp"
#include "semicayley/spectrum.hpp"

namespace semicayley {

/// H(t) = exp(-i t A) on the 2n vertices of a semi-Cayley graph.
struct TransferMatrix {
  double time = 0.0;
  Eigen::MatrixXcd entries;
};

/// One entry of H(t) from the character sums. With a = g^-1 h,
///   H_{(g,0),(h,0)} = 1/n sum_i (c+ e^{-i l+ t} + c- e^{-i l- t}) chi_i(a)
///   H_{(g,1),(h,1)} = 1/n sum_i (d+ e^{-i l+ t} + d- e^{-i l- t}) chi_i(a)
///   H_{(g,0),(h,1)} = 1/n sum_i (conj e+ e^{-i l+ t} + conj e- ...) chi_i(a)
///   H_{(g,1),(h,0)} = 1/n sum_i (e+ e^{-i l+ t} + e- e^{-i l- t}) chi_i(a)
std::complex<double> transfer_entry(const Spectrum& spectrum, const Vertex& u,
                                    const Vertex& v, double t);
std::complex<double> transfer_entry(const SemiCayleySpec& spec,
                                    const Vertex& u, const Vertex& v,
                                    double t);

/// sum over the 2n eigenpairs of exp(-i lambda t) E.
TransferMatrix transfer_matrix(const Spectrum& spectrum, double t);
TransferMatrix transfer_matrix(const SemiCayleySpec& spec, double t);

/// exp(-i t A) by scaling and squaring of a truncated Taylor series. Shares
/// no code with the spectral path; error well below 1e-10 for
/// ||tA||_1 up to a few thousand.
TransferMatrix oracle_expm(const Eigen::MatrixXd& a, double t);

/// R = L only. With B = Cay(G,R) and C the spoke block,
///   H(t) = [[H_B D1, C D2], [C^T D2, H_B D1]],
///   D1 = cos(t sqrt(CC^T)),  D2 = -i sin(t sqrt(CC^T)) / sqrt(CC^T),
/// the quotient in D2 read as its power series so that singular CC^T is
/// fine. Throws ValidationError when R != L.
TransferMatrix block_transfer_rl(const SemiCayleySpec& spec, double t);

}  // namespace semicayley
