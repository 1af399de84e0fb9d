#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "lieidx/exactla.hpp"

namespace lieidx {

/// Sparse multivariate polynomial over Q. A monomial is the sorted multiset
/// of its variable indices, so x0^2 x3 is {0, 0, 3}.
class Poly {
 public:
  using Monomial = std::vector<std::uint32_t>;

  Poly() = default;
  static Poly constant(const Rational& c);
  static Poly variable(std::uint32_t i);
  /// sum_i coeffs[i] * x_i
  static Poly linear(const RatVector& coeffs);

  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  std::size_t degree() const;
  const std::map<Monomial, Rational>& terms() const { return terms_; }

  Rational evaluate(const RatVector& point) const;
  /// Terms in increasing monomial order, e.g. "-x1 + 2*x0^2*x3".
  std::string to_string(const std::string& var = "x") const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(const Rational& s, const Poly& a);
  friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }

 private:
  void add_term(const Monomial& m, const Rational& c);
  std::map<Monomial, Rational> terms_;
};

using PolyMatrix = std::vector<std::vector<Poly>>;

/// Largest order accepted by `determinant`.
inline constexpr std::size_t kMaxPolyDetOrder = 6;

/// Cofactor expansion along the first row, skipping zero entries.
/// Throws InputError above kMaxPolyDetOrder or for a non-square matrix.
Poly determinant(const PolyMatrix& m);

/// Submatrix on the given rows and columns.
PolyMatrix submatrix(const PolyMatrix& m, const std::vector<std::size_t>& rows,
                     const std::vector<std::size_t>& cols);

}  // namespace lieidx
