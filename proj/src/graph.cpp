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

#include "semicayley/graph.hpp"

#include <set>
#include <string>

#include "semicayley/error.hpp"

namespace semicayley {

std::string Vertex::str() const {
  return "[" + element.str() + "," + std::to_string(layer) + "]";
}

SemiCayleySpec::SemiCayleySpec(AbelianGroup group, GroupSubset right,
                               GroupSubset left, GroupSubset spoke)
    : group_(std::move(group)),
      right_(std::move(right)),
      left_(std::move(left)),
      spoke_(std::move(spoke)) {
  const auto e = group_.identity();
  auto check_connection_set = [&](const GroupSubset& x, const char* name) {
    for (const auto& g : x) group_.check(g);
    if (x.contains(e)) {
      throw ValidationError(std::string(name) + " contains the identity");
    }
    if (!is_inverse_closed(group_, x)) {
      throw ValidationError(std::string(name) + " is not inverse-closed");
    }
  };
  check_connection_set(right_, "R");
  check_connection_set(left_, "L");
  for (const auto& g : spoke_) group_.check(g);
}

std::size_t SemiCayleySpec::vertex_index(const Vertex& v) const {
  if (v.layer != 0 && v.layer != 1) {
    throw ValidationError("vertex layer must be 0 or 1");
  }
  return static_cast<std::size_t>(v.layer) * n() + group_.index(v.element);
}

Vertex SemiCayleySpec::vertex(std::size_t index) const {
  if (index >= vertex_count()) throw ValidationError("vertex index too large");
  return Vertex{group_.element(index % n()), static_cast<int>(index / n())};
}

Eigen::MatrixXd cayley_matrix(const AbelianGroup& group, const GroupSubset& x) {
  const int n = group.order();
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    const auto gi = group.element(i);
    for (const auto& s : x) {
      m(i, static_cast<Eigen::Index>(group.index(group.mul(s, gi)))) = 1.0;
    }
  }
  return m;
}

AdjacencyMatrix build(const SemiCayleySpec& spec) {
  const auto n = static_cast<Eigen::Index>(spec.n());
  AdjacencyMatrix a = AdjacencyMatrix::Zero(2 * n, 2 * n);
  a.topLeftCorner(n, n) = cayley_matrix(spec.group(), spec.right());
  a.bottomRightCorner(n, n) = cayley_matrix(spec.group(), spec.left());
  const Eigen::MatrixXd c = cayley_matrix(spec.group(), spec.spoke());
  a.topRightCorner(n, n) = c;
  a.bottomLeftCorner(n, n) = c.transpose();
  return a;
}

namespace {

GroupSubset plus_minus_one(const AbelianGroup& g) {
  return GroupSubset(g, {g.make({1}), g.make({-1})});
}

}  // namespace

SemiCayleySpec sunlet(int n) {
  if (n < 3) throw ValidationError("sunlet needs n >= 3");
  const auto g = AbelianGroup::cyclic(n);
  return SemiCayleySpec(g, plus_minus_one(g), GroupSubset(),
                        GroupSubset(g, {g.identity()}));
}

SemiCayleySpec cone(int n) {
  if (n < 3) throw ValidationError("cone needs n >= 3");
  const auto g = AbelianGroup::cyclic(n);
  return SemiCayleySpec(g, plus_minus_one(g), GroupSubset(),
                        GroupSubset::whole(g));
}

SemiCayleySpec join_spec(const AbelianGroup& group, const GroupSubset& right,
                         const GroupSubset& left) {
  return SemiCayleySpec(group, right, left, GroupSubset::whole(group));
}

GroupSubset involutions(const AbelianGroup& group) {
  std::vector<GroupElement> out;
  for (const auto& g : group.elements()) {
    if (group.order(g) == 2) out.push_back(g);
  }
  return GroupSubset(group, std::move(out));
}

SemiCayleySpec dihedral_full_coset(const AbelianGroup& a) {
  return from_cayley_index2(IndexTwoExtension::generalized_dihedral(a),
                            GroupSubset(), GroupSubset::whole(a))
      .spec;
}

SemiCayleySpec dihedral_involutions(const AbelianGroup& a) {
  return from_cayley_index2(IndexTwoExtension::generalized_dihedral(a),
                            involutions(a), GroupSubset::whole(a))
      .spec;
}

SemiCayleySpec dicyclic_full_coset(const AbelianGroup& a,
                                   const GroupElement& y) {
  return from_cayley_index2(IndexTwoExtension::generalized_dicyclic(a, y),
                            GroupSubset(), GroupSubset::whole(a))
      .spec;
}

SemiCayleySpec dicyclic_involutions(const AbelianGroup& a,
                                    const GroupElement& y) {
  return from_cayley_index2(IndexTwoExtension::generalized_dicyclic(a, y),
                            involutions(a), GroupSubset::whole(a))
      .spec;
}

SemiCayleySpec hypercube(int d) {
  if (d < 1) throw ValidationError("hypercube needs d >= 1");
  if (d == 1) {
    const AbelianGroup trivial({1});
    return SemiCayleySpec(trivial, GroupSubset(), GroupSubset(),
                          GroupSubset(trivial, {trivial.identity()}));
  }
  const AbelianGroup g(std::vector<int>(d - 1, 2));
  std::vector<GroupElement> units;
  for (int l = 0; l < d - 1; ++l) {
    std::vector<int> e(d - 1, 0);
    e[l] = 1;
    units.emplace_back(std::move(e));
  }
  GroupSubset r(g, units);
  return SemiCayleySpec(g, r, r, GroupSubset(g, {g.identity()}));
}

// ---------------------------------------------------------------------------
// Index-two extensions

IndexTwoExtension::IndexTwoExtension(AbelianGroup base,
                                     std::vector<GroupElement> twist_images,
                                     GroupElement x_square)
    : base_(std::move(base)),
      twist_images_(std::move(twist_images)),
      x_square_(std::move(x_square)) {
  if (twist_images_.size() != base_.rank()) {
    throw ValidationError("twist needs one image per generator");
  }
  for (std::size_t l = 0; l < base_.rank(); ++l) {
    base_.check(twist_images_[l]);
    if (base_.factors()[l] % base_.order(twist_images_[l]) != 0) {
      throw ValidationError("twist is not a homomorphism: image of generator " +
                            std::to_string(l) + " has the wrong order");
    }
  }
  base_.check(x_square_);
  std::set<GroupElement> image;
  for (const auto& h : base_.elements()) {
    const auto th = twist(h);
    image.insert(th);
    if (twist(th) != h) {
      throw ValidationError("twist must be an involution (x^2 is central)");
    }
  }
  if (image.size() != static_cast<std::size_t>(base_.order())) {
    throw ValidationError("twist is not an automorphism");
  }
  if (twist(x_square_) != x_square_) {
    throw ValidationError("twist must fix x^2");
  }
}

IndexTwoExtension IndexTwoExtension::generalized_dihedral(
    const AbelianGroup& a) {
  std::vector<GroupElement> images;
  for (std::size_t l = 0; l < a.rank(); ++l) {
    std::vector<int> e(a.rank(), 0);
    e[l] = -1;
    images.push_back(a.make(std::move(e)));
  }
  return IndexTwoExtension(a, std::move(images), a.identity());
}

IndexTwoExtension IndexTwoExtension::generalized_dicyclic(
    const AbelianGroup& a, const GroupElement& y) {
  a.check(y);
  if (a.order(y) != 2) throw ValidationError("y must be an involution of A");
  if (a.exponent() <= 2) {
    throw ValidationError("generalized dicyclic group needs exp(A) > 2");
  }
  auto ext = generalized_dihedral(a);
  return IndexTwoExtension(a, ext.twist_images_, y);
}

IndexTwoExtension IndexTwoExtension::abelian(const AbelianGroup& h,
                                             const GroupElement& x_square) {
  std::vector<GroupElement> images;
  for (std::size_t l = 0; l < h.rank(); ++l) {
    std::vector<int> e(h.rank(), 0);
    e[l] = 1;
    images.push_back(h.make(std::move(e)));
  }
  return IndexTwoExtension(h, std::move(images), x_square);
}

GroupElement IndexTwoExtension::twist(const GroupElement& h) const {
  base_.check(h);
  GroupElement out = base_.identity();
  for (std::size_t l = 0; l < base_.rank(); ++l) {
    out = base_.mul(out, base_.power(twist_images_[l], h[l]));
  }
  return out;
}

std::vector<IndexTwoExtension::Element> IndexTwoExtension::elements() const {
  std::vector<Element> out;
  for (int coset = 0; coset < 2; ++coset) {
    for (const auto& h : base_.elements()) out.push_back({h, coset});
  }
  return out;
}

std::size_t IndexTwoExtension::index(const Element& g) const {
  return static_cast<std::size_t>(g.coset) * base_.order() +
         base_.index(g.base);
}

IndexTwoExtension::Element IndexTwoExtension::mul(const Element& a,
                                                  const Element& b) const {
  // h x = x tau(h), x x = x^2
  if (b.coset == 0) return {base_.mul(a.base, b.base), a.coset};
  const auto moved = base_.mul(twist(a.base), b.base);
  if (a.coset == 0) return {moved, 1};
  return {base_.mul(x_square_, moved), 0};
}

IndexTwoExtension::Element IndexTwoExtension::inverse(const Element& a) const {
  if (a.coset == 0) return {base_.inverse(a.base), 0};
  // (x h)(x k) = x^2 tau(h) k
  return {base_.inverse(base_.mul(x_square_, twist(a.base))), 1};
}

namespace {

void check_connection_set(const IndexTwoExtension& ext, const GroupSubset& t1,
                          const GroupSubset& t2) {
  const auto& h = ext.base();
  for (const auto& g : t1) h.check(g);
  for (const auto& g : t2) h.check(g);
  if (t1.contains(h.identity())) {
    throw ValidationError("Cayley set contains the identity");
  }
  auto in_t = [&](const IndexTwoExtension::Element& g) {
    return g.coset == 0 ? t1.contains(g.base) : t2.contains(g.base);
  };
  for (int coset = 0; coset < 2; ++coset) {
    for (const auto& g : coset == 0 ? t1 : t2) {
      if (!in_t(ext.inverse({g, coset}))) {
        throw ValidationError("Cayley set T1 u xT2 is not inverse-closed");
      }
    }
  }
}

}  // namespace

Eigen::MatrixXd extension_cayley_matrix(const IndexTwoExtension& ext,
                                        const GroupSubset& t1,
                                        const GroupSubset& t2) {
  check_connection_set(ext, t1, t2);
  const auto elems = ext.elements();
  const auto m = static_cast<Eigen::Index>(elems.size());
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(m, m);
  for (Eigen::Index i = 0; i < m; ++i) {
    const auto inv = ext.inverse(elems[i]);
    for (Eigen::Index j = 0; j < m; ++j) {
      const auto q = ext.mul(elems[j], inv);
      const bool in_t =
          q.coset == 0 ? t1.contains(q.base) : t2.contains(q.base);
      if (in_t) a(i, j) = 1.0;
    }
  }
  return a;
}

CayleyDecomposition from_cayley_index2(const IndexTwoExtension& ext,
                                       const GroupSubset& t1,
                                       const GroupSubset& t2) {
  check_connection_set(ext, t1, t2);
  const auto& h = ext.base();
  std::vector<GroupElement> left;
  std::vector<GroupElement> spoke;
  for (const auto& g : t1) left.push_back(ext.twist(g));
  for (const auto& g : h.elements()) {
    // x g in T, tested by explicit multiplication in the extension
    const auto xg = ext.mul({h.identity(), 1}, {g, 0});
    const bool in_t =
        xg.coset == 0 ? t1.contains(xg.base) : t2.contains(xg.base);
    if (in_t) spoke.push_back(g);
  }
  SemiCayleySpec spec(h, t1, GroupSubset(h, std::move(left)),
                      GroupSubset(h, std::move(spoke)));
  std::vector<IndexTwoExtension::Element> images;
  for (std::size_t i = 0; i < spec.vertex_count(); ++i) {
    const auto v = spec.vertex(i);
    images.push_back(ext.mul({h.identity(), v.layer}, {v.element, 0}));
  }
  return {std::move(spec), std::move(images)};
}

}  // namespace semicayley
