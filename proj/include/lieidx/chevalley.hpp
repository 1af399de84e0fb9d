#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "lieidx/exactla.hpp"
#include "lieidx/rootsys.hpp"

namespace lieidx {

/// Coordinates over the basis of a LieAlgebra.
using Element = RatVector;

/// One term c * b_k of a basis bracket.
struct Term {
  std::size_t index;
  std::int64_t coeff;
};

/// Finite-dimensional Lie algebra given by integral structure constants.
///
/// Built either from a root system (Chevalley basis: x_alpha for positive
/// roots in canonical order, then y_alpha = x_{-alpha} in the same order,
/// then the simple coroots h_1..h_l) or from an explicit table.
class LieAlgebra {
 public:
  /// table[i * dim + j] lists the terms of [b_i, b_j].
  LieAlgebra(std::size_t dim, char type, int rank, std::vector<std::vector<Term>> table,
             std::vector<std::string> labels, std::vector<std::size_t> cartan_indices,
             std::string name);

  std::size_t dim() const { return dim_; }
  /// Simple type letter; the algebra is of type type() rank().
  char type() const { return type_; }
  int rank() const { return rank_; }
  const std::string& name() const { return name_; }
  const std::string& basis_label(std::size_t i) const { return labels_[i]; }
  const std::vector<std::size_t>& cartan_indices() const { return cartan_; }

  /// Non-null only for algebras built from a root system.
  const RootSystem* root_system() const { return roots_.get(); }

  const std::vector<Term>& basis_bracket(std::size_t i, std::size_t j) const {
    return table_[i * dim_ + j];
  }

  Element zero() const { return Element(dim_); }
  Element basis_vector(std::size_t i) const;

  Element bracket(const Element& a, const Element& b) const;
  /// Column j of ad(a) is [a, b_j].
  RatMatrix ad_matrix(const Element& a) const;
  /// Killing form tr(ad a ad b).
  Rational killing(const Element& a, const Element& b) const;
  const RatMatrix& killing_gram() const { return gram_; }
  /// K a, the Killing-dual covector of a.
  RatVector lower(const Element& a) const;

  /// Chevalley-basis index of the root vector for a signed root.
  std::size_t root_index(const IntVector& root) const;
  std::size_t coroot_index(int i) const;

  friend LieAlgebra build_algebra(const RootSystem& rs);

 private:
  std::size_t dim_;
  char type_;
  int rank_;
  std::vector<std::vector<Term>> table_;
  std::vector<std::string> labels_;
  std::vector<std::size_t> cartan_;
  std::string name_;
  std::shared_ptr<const RootSystem> roots_;
  RatMatrix gram_;
};

LieAlgebra build_algebra(const RootSystem& rs);
LieAlgebra build_algebra(char type, int rank);

Element bracket(const LieAlgebra& L, const Element& a, const Element& b);
RatMatrix ad_matrix(const LieAlgebra& L, const Element& a);
Rational killing_pair(const LieAlgebra& L, const Element& a, const Element& b);

/// Images of the basis vectors under a representation on Q^n.
struct MatrixRep {
  std::size_t n = 0;
  std::vector<RatMatrix> images;
};

RatMatrix represent(const MatrixRep& rep, const Element& a);
/// True iff rep([b_i, b_j]) = [rep(b_i), rep(b_j)] for all basis pairs.
bool is_representation(const LieAlgebra& L, const MatrixRep& rep);
/// Natural representation of sl_{l+1} on a Chevalley basis of type A_l:
/// x_{alpha_i} -> E_{i,i+1}, y_{alpha_i} -> E_{i+1,i}, extended through the bracket.
MatrixRep natural_rep_type_a(const LieAlgebra& L);

/// True iff [[b_i,b_j],b_k] + [[b_j,b_k],b_i] + [[b_k,b_i],b_j] = 0.
bool jacobi_holds(const LieAlgebra& L, std::size_t i, std::size_t j, std::size_t k);
bool antisymmetric_pair(const LieAlgebra& L, std::size_t i, std::size_t j);

}  // namespace lieidx
