#pragma once

#include <map>
#include <vector>

#include "lieidx/chevalley.hpp"

namespace lieidx {

/// Subspace of a LieAlgebra verified to be closed under the bracket.
///
/// Holds a non-owning pointer to the parent algebra, which must outlive it.
class Subalgebra {
 public:
  Subalgebra(const LieAlgebra& parent, SubspaceBasis basis);

  const LieAlgebra& parent() const { return *parent_; }
  const SubspaceBasis& basis() const { return basis_; }
  std::size_t dim() const { return basis_.dim(); }
  const Element& vector(std::size_t i) const { return basis_.vectors()[i]; }
  bool closed_under_bracket() const { return closed_; }

  /// Membership via the annihilator equations, cheaper than echelon reduction.
  bool contains(const Element& v) const;

 private:
  const LieAlgebra* parent_;
  SubspaceBasis basis_;
  std::vector<RatVector> equations_;
  bool closed_ = false;
};

struct SL2Triple {
  Element e;
  Element h;
  Element f;
};

/// ad(h)-eigenspaces keyed by integer eigenvalue.
struct Grading {
  std::map<long, SubspaceBasis> pieces;

  std::size_t dim(long i) const;
};

/// Common kernel of ad(x) for x in elems.
Subalgebra centralizer(const LieAlgebra& L, const std::vector<Element>& elems);
SubspaceBasis center_of(const Subalgebra& s);
/// Centralizer of s inside s for the given subset of elements.
SubspaceBasis centralizer_in(const Subalgebra& s, const std::vector<Element>& elems);

bool is_nilpotent(const LieAlgebra& L, const Element& e);
SL2Triple sl2_triple(const LieAlgebra& L, const Element& e);
bool is_sl2_triple(const LieAlgebra& L, const SL2Triple& t);
Grading ad_h_grading(const LieAlgebra& L, const Element& h);
bool is_regular(const LieAlgebra& L, const Element& x);

/// Tests [v, g^f] inside [e, g] directly, caching g^f and the equations of [e, g].
class CenterCriterion {
 public:
  CenterCriterion(const LieAlgebra& L, const SL2Triple& t);
  bool holds(const Element& v) const;

 private:
  const LieAlgebra* L_;
  Element e_;
  SubspaceBasis gf_;
  std::vector<RatVector> image_equations_;
};

bool center_membership_l4(const LieAlgebra& L, const SL2Triple& t, const Element& v);

}  // namespace lieidx
