#pragma once

#include <cstdint>
#include <vector>

#include "lieidx/centralize.hpp"

namespace lieidx {

/// Gram matrix of (v, w) -> <xi, [v, w]> on a list of vectors.
struct KirillovForm {
  RatMatrix gram;
  std::size_t rank = 0;
};

KirillovForm kirillov_form(const LieAlgebra& L, const std::vector<Element>& vectors, const Element& xi);
std::size_t kirillov_rank(const Subalgebra& s, const Element& xi);

struct IndexCertificate {
  std::size_t subalgebra_dim = 0;
  Element witness;
  std::size_t stabilizer_dim = 0;
  /// True iff the smallest stabilizer seen equals the rank of the parent algebra.
  bool certified = false;
  std::size_t samples_used = 0;
  /// Stabilizer dimension of every sampled functional, in draw order.
  std::vector<std::size_t> observed;
};

/// Samples functionals with integer coordinates in [-bound, bound] and keeps
/// the smallest stabilizer. A false `certified` means nothing was found,
/// not that the index exceeds the rank.
IndexCertificate certified_index(const Subalgebra& s, std::size_t samples, std::uint64_t seed,
                                 long bound = 20, bool stop_when_certified = true);

struct BolsinovSubspace {
  Element x;
  Element y;
  std::vector<long> t_samples;
  SubspaceBasis basis;
  /// Primitive integer kernel vectors from every sample; they span `basis`
  /// and are much smaller than its reduced form.
  std::vector<RatVector> generators;
};

/// Sum of the centralizers of x + t y over t = 1, 2, ... with x + t y regular:
/// d_max samples, then t_extra more that must not change the span.
BolsinovSubspace vxy(const LieAlgebra& L, const Element& x, const Element& y, std::size_t t_extra = 3);

/// <y, [v, w]> = 0 for all v, w in g^y + V_{x,y}.
bool isotropy_check(const LieAlgebra& L, const Element& x, const Element& y);

struct BolsinovCertificate {
  bool found = false;
  std::size_t trials_used = 0;
  Element x;
  std::size_t dim_centralizer = 0;
  std::size_t dim_v = 0;
  std::size_t target_v = 0;
  std::size_t dim_sum = 0;
  std::size_t target_sum = 0;
  std::size_t dim_intersection = 0;
  bool condition4 = false;
};

/// Searches for a regular x with dim V_{x,a} = (dim g - dim g^a)/2 + rank.
/// A witness certifies that the index of g^a equals the rank; running out of
/// trials is inconclusive.
BolsinovCertificate bolsinov_condition5(const LieAlgebra& L, const Element& a, std::size_t trials,
                                        std::uint64_t seed, long bound = 20, std::size_t retries = 50,
                                        std::size_t t_extra = 3);

/// Killing duals of the differentials of the characteristic-polynomial
/// invariants at z, ordered by degree. Type A only.
std::vector<Element> phi_at(const LieAlgebra& L, const Element& z);

/// result[i][m] is the t^m coefficient of phi_i(x + t y), 0 <= m < d_i.
std::vector<std::vector<Element>> phi_expansion(const LieAlgebra& L, const Element& x, const Element& y);

/// Poisson brackets <z, [grad p(z), grad q(z)]> for all pairs p, q of the
/// shifted family {f_i^(m)(x, .)} at `points` random z. True iff all vanish.
bool mf_commute_check(const LieAlgebra& L, const Element& x, std::size_t points, std::uint64_t seed,
                      long bound = 20);

/// Coefficients c_0..c_{k-1} of the polynomial of degree < k through
/// (nodes[j], values[j]).
RatVector interpolate(const std::vector<Rational>& nodes, const RatVector& values);

}  // namespace lieidx
