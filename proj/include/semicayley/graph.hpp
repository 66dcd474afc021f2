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
#include <vector>

#include "semicayley/group.hpp"

namespace semicayley {

/// Vertex (g, layer) of a semi-Cayley graph, layer in {0, 1}.
struct Vertex {
  GroupElement element;
  int layer = 0;

  bool operator==(const Vertex&) const = default;
  std::string str() const;
};

/// Dense 0/1 adjacency matrix. Rows list the layer-0 vertices in group
/// enumeration order, then the layer-1 vertices.
using AdjacencyMatrix = Eigen::MatrixXd;

/// The data (G, R, L, S) of SC(G, R, L, S):
///   (x,0) ~ (y,0) iff y x^-1 in R   (right edges)
///   (x,1) ~ (y,1) iff y x^-1 in L   (left edges)
///   (x,0) ~ (y,1) iff y x^-1 in S   (spoke edges)
/// R and L must be inverse-closed and miss the identity; S is arbitrary.
class SemiCayleySpec {
 public:
  SemiCayleySpec(AbelianGroup group, GroupSubset right, GroupSubset left,
                 GroupSubset spoke);

  const AbelianGroup& group() const { return group_; }
  const GroupSubset& right() const { return right_; }
  const GroupSubset& left() const { return left_; }
  const GroupSubset& spoke() const { return spoke_; }

  /// |G|
  std::size_t n() const { return static_cast<std::size_t>(group_.order()); }
  std::size_t vertex_count() const { return 2 * n(); }
  std::size_t vertex_index(const Vertex& v) const;
  Vertex vertex(std::size_t index) const;

  bool regular() const { return right_.size() == left_.size(); }
  bool right_equals_left() const { return right_ == left_; }

  bool operator==(const SemiCayleySpec&) const = default;

 private:
  AbelianGroup group_;
  GroupSubset right_;
  GroupSubset left_;
  GroupSubset spoke_;
};

AdjacencyMatrix build(const SemiCayleySpec& spec);

/// Adjacency matrix of Cay(G, X) (possibly directed or with loops):
/// entry (x, y) is 1 iff y x^-1 in X.
Eigen::MatrixXd cayley_matrix(const AbelianGroup& group, const GroupSubset& x);

// Named families.

/// n-cycle with a pendant edge at every vertex: SC(Z_n, {1,-1}, {}, {0}).
SemiCayleySpec sunlet(int n);
/// n-cycle joined to n independent vertices: SC(Z_n, {1,-1}, {}, Z_n).
SemiCayleySpec cone(int n);
/// Join of Cay(G,R) and Cay(G,L): SC(G, R, L, G).
SemiCayleySpec join_spec(const AbelianGroup& group, const GroupSubset& right,
                         const GroupSubset& left);
/// Cay(Dih(A,x), xA) as SC(A, {}, {}, A).
SemiCayleySpec dihedral_full_coset(const AbelianGroup& a);
/// Cay(Dih(A,x), xA u {a : o(a) = 2}) as SC(A, T1, T1, A).
SemiCayleySpec dihedral_involutions(const AbelianGroup& a);
/// Hypercube Q_d as SC(Z_2^{d-1}, units, units, {0}); Q_1 = K_2 over the
/// trivial group.
SemiCayleySpec hypercube(int d);

/// Group G = H u xH with H abelian of index 2, described by the twist
/// tau(h) = x^-1 h x (an involutive automorphism of H) and x^2 in H.
/// Elements are written x^coset * h.
class IndexTwoExtension {
 public:
  struct Element {
    GroupElement base;
    int coset = 0;
    bool operator==(const Element&) const = default;
  };

  /// `twist_images[l]` is tau of the l-th unit generator of H.
  IndexTwoExtension(AbelianGroup base, std::vector<GroupElement> twist_images,
                    GroupElement x_square);

  /// Dih(A, x): tau = inversion, x^2 = 1.
  static IndexTwoExtension generalized_dihedral(const AbelianGroup& a);
  /// Dic(A, y, x): tau = inversion, x^2 = y with y an involution of A and
  /// exp(A) > 2.
  static IndexTwoExtension generalized_dicyclic(const AbelianGroup& a,
                                                const GroupElement& y);
  /// Abelian G of order 2|H| with x central: tau = identity.
  static IndexTwoExtension abelian(const AbelianGroup& h,
                                   const GroupElement& x_square);

  const AbelianGroup& base() const { return base_; }
  const GroupElement& x_square() const { return x_square_; }
  GroupElement twist(const GroupElement& h) const;

  std::size_t order() const { return 2 * static_cast<std::size_t>(base_.order()); }
  /// Coset-0 elements in base enumeration order, then coset 1.
  std::vector<Element> elements() const;
  std::size_t index(const Element& g) const;
  Element mul(const Element& a, const Element& b) const;
  Element inverse(const Element& a) const;

 private:
  AbelianGroup base_;
  std::vector<GroupElement> twist_images_;
  GroupElement x_square_;
};

/// Result of rewriting Cay(G, T1 u xT2) as a semi-Cayley graph over H.
struct CayleyDecomposition {
  SemiCayleySpec spec;
  /// image[vertex_index] = extension element; (h,0) -> h, (h,1) -> x h.
  std::vector<IndexTwoExtension::Element> vertex_images;
};

/// Cay(G, T) with T = T1 u xT2 (T1, T2 subsets of H), Cayley edges {g, tg}.
/// Yields R = T1, L = tau(T1), S = {h in H : x h in T}.
CayleyDecomposition from_cayley_index2(const IndexTwoExtension& ext,
                                       const GroupSubset& t1,
                                       const GroupSubset& t2);

/// Direct adjacency of Cay(G, T1 u xT2) on the extension elements, rows in
/// IndexTwoExtension::elements() order.
Eigen::MatrixXd extension_cayley_matrix(const IndexTwoExtension& ext,
                                        const GroupSubset& t1,
                                        const GroupSubset& t2);

SemiCayleySpec dicyclic_full_coset(const AbelianGroup& a,
                                   const GroupElement& y);
SemiCayleySpec dicyclic_involutions(const AbelianGroup& a,
                                    const GroupElement& y);

/// Elements of order exactly 2.
GroupSubset involutions(const AbelianGroup& group);

}  // namespace semicayley
