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

#include <doctest.h>

#include <cmath>
#include <numbers>

#include "semicayley/error.hpp"
#include "semicayley/transfer.hpp"
#include "support.hpp"

using namespace semicayley;
using semicayley::testing::subset;
using std::numbers::pi;

namespace {

double max_gap(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

bool unitary(const Eigen::MatrixXcd& h) {
  const auto n = h.rows();
  return max_gap(h * h.adjoint(), Eigen::MatrixXcd::Identity(n, n)) < 1e-9;
}

SemiCayleySpec k2() {
  const AbelianGroup one({1});
  return SemiCayleySpec(one, {}, {}, GroupSubset(one, {one.identity()}));
}

}  // namespace

TEST_SUITE("transfer_engine") {

TEST_CASE("H(0) is the identity") {
  auto rng = semicayley::testing::make_rng(7);
  const SemiCayleySpec spec = semicayley::testing::random_spec(rng, 12);
  const auto n = static_cast<Eigen::Index>(spec.vertex_count());
  CHECK(max_gap(transfer_matrix(spec, 0.0).entries, Eigen::MatrixXcd::Identity(n, n)) < 1e-12);
  for (std::size_t i = 0; i < spec.vertex_count(); ++i) {
    const Vertex u = spec.vertex(i);
    CHECK(std::abs(transfer_entry(spec, u, u, 0.0) - 1.0) < 1e-12);
  }
}

TEST_CASE("K2 and C4 transfer") {
  const SemiCayleySpec k = k2();
  const AbelianGroup one = k.group();
  CHECK(std::abs(std::abs(transfer_entry(k, {one.identity(), 0}, {one.identity(), 1}, pi / 2)) - 1.0) < 1e-12);
  CHECK(std::abs(std::abs(transfer_entry(k, {one.identity(), 0}, {one.identity(), 1}, pi / 4)) - std::sin(pi / 4)) < 1e-12);

  const AbelianGroup z2 = AbelianGroup::cyclic(2);
  const SemiCayleySpec c4(z2, subset(z2, {{1}}), subset(z2, {{1}}), subset(z2, {{0}}));
  CHECK(std::abs(std::abs(transfer_entry(c4, {z2.make({0}), 0}, {z2.make({1}), 1}, pi / 2)) - 1.0) < 1e-12);
}

TEST_CASE("oracle") {
  Eigen::MatrixXd zero = Eigen::MatrixXd::Zero(5, 5);
  CHECK(max_gap(oracle_expm(zero, 3.0).entries, Eigen::MatrixXcd::Identity(5, 5)) < 1e-15);
  Eigen::MatrixXd swap(2, 2);
  swap << 0, 1, 1, 0;
  const auto h = oracle_expm(swap, pi / 2).entries;
  CHECK(std::abs(std::abs(h(0, 1)) - 1.0) < 1e-12);
  CHECK(std::abs(h(0, 0)) < 1e-12);

  auto rng = semicayley::testing::make_rng(8);
  std::uniform_real_distribution<double> time(-4.0, 4.0);
  for (int it = 0; it < 10; ++it) {
    Eigen::MatrixXd a = Eigen::MatrixXd::Random(8, 8);
    a = (a + a.transpose()).eval();
    const double t1 = time(rng), t2 = time(rng);
    CHECK(max_gap(oracle_expm(a, t1).entries * oracle_expm(a, t2).entries,
                  oracle_expm(a, t1 + t2).entries) < 1e-9);
    CHECK(max_gap(oracle_expm(a, -t1).entries, oracle_expm(a, t1).entries.adjoint()) < 1e-9);
  }
}

TEST_CASE("spectral, entrywise, oracle and block paths agree") {
  auto rng = semicayley::testing::make_rng(9);
  std::uniform_real_distribution<double> time(0.0, 10.0);
  for (int it = 0; it < 30; ++it) {
    const SemiCayleySpec spec = semicayley::testing::random_spec(rng, 12, it % 2 == 0);
    const Spectrum s = compute_spectrum(spec);
    const Eigen::MatrixXd a = build(spec);
    const double t = time(rng);
    const auto h = transfer_matrix(s, t).entries;
    CHECK(max_gap(h, oracle_expm(a, t).entries) < 1e-9);
    CHECK(unitary(h));
    CHECK(h.cwiseAbs().maxCoeff() <= 1 + 1e-9);
    CHECK((h.cwiseAbs2().rowwise().sum().array() - 1.0).abs().maxCoeff() < 1e-9);
    for (std::size_t i = 0; i < spec.vertex_count(); i += 3) {
      for (std::size_t j = 0; j < spec.vertex_count(); ++j) {
        CHECK(std::abs(transfer_entry(s, spec.vertex(i), spec.vertex(j), t) -
                       h(i, j)) < 1e-9);
      }
    }
    if (spec.right_equals_left()) {
      CHECK(max_gap(block_transfer_rl(spec, t).entries, h) < 1e-9);
    } else {
      CHECK_THROWS_AS(block_transfer_rl(spec, t), ValidationError);
    }
  }
}

TEST_CASE("block formula special cases") {
  // S = {e}: C = I
  const AbelianGroup z6 = AbelianGroup::cyclic(6);
  const GroupSubset r = subset(z6, {{1}, {5}});
  const SemiCayleySpec spec(z6, r, r, subset(z6, {{0}}));
  const auto hb = oracle_expm(cayley_matrix(z6, r), pi / 2).entries;
  const auto h = block_transfer_rl(spec, pi / 2).entries;
  CHECK(max_gap(h.topLeftCorner(6, 6), Eigen::MatrixXcd::Zero(6, 6)) < 1e-12);
  CHECK(max_gap(h.topRightCorner(6, 6), std::complex<double>(0, -1) * hb) < 1e-12);
  // CC^T = I, t = pi: D1 = -I, D2 = 0
  const auto hp = block_transfer_rl(spec, pi).entries;
  const auto hbp = oracle_expm(cayley_matrix(z6, r), pi).entries;
  CHECK(max_gap(hp.topLeftCorner(6, 6), -hbp) < 1e-12);
  CHECK(max_gap(hp.topRightCorner(6, 6), Eigen::MatrixXcd::Zero(6, 6)) < 1e-12);
  // singular CC^T
  const SemiCayleySpec sing(z6, r, r, GroupSubset::whole(z6));
  CHECK(max_gap(block_transfer_rl(sing, 1.3).entries, oracle_expm(build(sing), 1.3).entries) < 1e-9);
}

TEST_CASE("empty spoke set: block-diagonal transfer") {
  auto rng = semicayley::testing::make_rng(10);
  for (int it = 0; it < 10; ++it) {
    const AbelianGroup g = semicayley::testing::random_group(rng, 12);
    const GroupSubset r = semicayley::testing::random_subset(rng, g, true, false);
    const GroupSubset l = semicayley::testing::random_subset(rng, g, true, false);
    const SemiCayleySpec spec(g, r, l, GroupSubset(g, {}));
    const auto n = static_cast<Eigen::Index>(spec.n());
    const auto h = transfer_matrix(spec, 2.1).entries;
    CHECK(h.topRightCorner(n, n).cwiseAbs().maxCoeff() < 1e-12);
    CHECK(h.bottomLeftCorner(n, n).cwiseAbs().maxCoeff() < 1e-12);
    CHECK(max_gap(h.topLeftCorner(n, n), oracle_expm(cayley_matrix(g, r), 2.1).entries) < 1e-9);
    CHECK(max_gap(h.bottomRightCorner(n, n), oracle_expm(cayley_matrix(g, l), 2.1).entries) < 1e-9);
  }
}

}
