#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace lieidx {

using Rational = mpq_class;
using Integer = mpz_class;
using RatVector = std::vector<Rational>;

/// Raised when callers hand in data that violates an operation's
/// precondition (dimension mismatch, invalid type, bad partition, ...).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a computed object fails one of its structural invariants.
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

Rational parse_rational(const std::string& text);
std::string to_string(const Rational& q);
bool is_zero(const RatVector& v);
Rational dot(const RatVector& a, const RatVector& b);
/// Positive multiple of v with coprime integer entries; zero stays zero.
RatVector primitive(const RatVector& v);

/// Dense row-major matrix over Q.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols);

  static RatMatrix identity(std::size_t n);
  static RatMatrix from_rows(const std::vector<RatVector>& rows, std::size_t cols);
  static RatMatrix from_ints(const std::vector<std::vector<long>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  RatVector row(std::size_t r) const;
  RatVector col(std::size_t c) const;
  std::vector<RatVector> row_vectors() const;
  RatMatrix transpose() const;
  RatVector apply(const RatVector& v) const;
  bool is_zero() const;
  Rational trace() const;

  friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
  friend RatMatrix operator+(const RatMatrix& a, const RatMatrix& b);
  friend RatMatrix operator-(const RatMatrix& a, const RatMatrix& b);
  friend RatMatrix operator*(const Rational& s, const RatMatrix& a);
  friend bool operator==(const RatMatrix& a, const RatMatrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// A linear subspace of Q^n stored as its reduced row-echelon basis.
///
/// The stored basis is canonical: two equal subspaces have identical
/// vectors, so equality is structural. Coordinates of a member vector with
/// respect to the stored basis are its entries at the pivot columns.
class SubspaceBasis {
 public:
  explicit SubspaceBasis(std::size_t ambient_dim = 0) : ambient_dim_(ambient_dim) {}

  static SubspaceBasis span(std::size_t ambient_dim, const std::vector<RatVector>& vectors);
  static SubspaceBasis whole(std::size_t ambient_dim);

  std::size_t ambient_dim() const { return ambient_dim_; }
  std::size_t dim() const { return vectors_.size(); }
  bool empty() const { return vectors_.empty(); }
  const std::vector<RatVector>& vectors() const { return vectors_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  bool contains(const RatVector& v) const;
  bool contains(const SubspaceBasis& other) const;
  /// Coordinates of v in the stored basis; throws InputError if v is not in the span.
  RatVector coordinates(const RatVector& v) const;
  RatVector combine(const RatVector& coeffs) const;

  friend bool operator==(const SubspaceBasis& a, const SubspaceBasis& b) = default;

 private:
  std::size_t ambient_dim_ = 0;
  std::vector<RatVector> vectors_;
  std::vector<std::size_t> pivots_;
};

/// Reduced row-echelon form of a list of rows; zero rows dropped.
struct EchelonForm {
  std::vector<RatVector> rows;
  std::vector<std::size_t> pivots;
};

EchelonForm row_reduce(std::vector<RatVector> rows, std::size_t cols);

/// Rank over Q by fraction-free (Bareiss) elimination.
std::size_t rank(const RatMatrix& m);
std::size_t rank(const std::vector<RatVector>& rows, std::size_t cols);

/// Right null space {v : m v = 0}.
SubspaceBasis kernel(const RatMatrix& m);
SubspaceBasis kernel(const std::vector<RatVector>& rows, std::size_t cols);

/// Column space of m.
SubspaceBasis image(const RatMatrix& m);

SubspaceBasis span_sum(const std::vector<SubspaceBasis>& parts);
SubspaceBasis intersect(const SubspaceBasis& a, const SubspaceBasis& b);

/// {v : v^T gram s = 0 for all s in sub}.
SubspaceBasis orthogonal_complement(const SubspaceBasis& sub, const RatMatrix& gram);

/// Some x with m x = b, or nullopt when the system is inconsistent.
std::optional<RatVector> solve(const RatMatrix& m, const RatVector& b);

/// Determinant by fraction-free elimination (square matrices only).
Rational determinant(const RatMatrix& m);

/// Inverse of a square matrix; nullopt when singular.
std::optional<RatMatrix> inverse(const RatMatrix& m);

/// Coefficients c_0..c_n of det(x I - m), lowest degree first.
RatVector characteristic_polynomial(const RatMatrix& m);

struct Eigenspace {
  Rational value;
  SubspaceBasis space;
};

/// Eigenspaces of a matrix with rational spectrum, sorted by eigenvalue.
/// Throws InvariantError if some eigenvalue is irrational or m is not
/// diagonalizable over Q.
std::vector<Eigenspace> rational_eigenspaces(const RatMatrix& m);

}  // namespace lieidx
