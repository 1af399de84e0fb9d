#include "lieidx/exactla.hpp"

#include <algorithm>
#include <map>
#include <utility>

namespace lieidx {

Rational parse_rational(const std::string& text) {
  std::string s;
  for (char c : text) {
    if (c != ' ' && c != '\t') s.push_back(c);
  }
  if (s.empty()) throw InputError("empty rational literal");
  if (s[0] == '+') s.erase(0, 1);
  Rational q;
  try {
    if (q.set_str(s, 10) != 0) throw InputError("bad rational literal '" + text + "'");
  } catch (const std::invalid_argument&) {
    throw InputError("bad rational literal '" + text + "'");
  }
  if (q.get_den() == 0) throw InputError("zero denominator in '" + text + "'");
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(10); }

bool is_zero(const RatVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return sgn(x) == 0; });
}

Rational dot(const RatVector& a, const RatVector& b) {
  if (a.size() != b.size()) throw InputError("dot: length mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) != 0 && sgn(b[i]) != 0) s += a[i] * b[i];
  }
  return s;
}

RatVector primitive(const RatVector& v) {
  Integer l = 1, g = 0;
  for (const auto& x : v) {
    if (sgn(x) != 0) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  }
  for (const auto& x : v) {
    if (sgn(x) != 0) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_num_mpz_t());
  }
  if (sgn(g) == 0) return v;
  RatVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (sgn(v[i]) == 0) continue;
    Integer n;
    mpz_divexact(n.get_mpz_t(), l.get_mpz_t(), v[i].get_den_mpz_t());
    n *= v[i].get_num();
    mpz_divexact(n.get_mpz_t(), n.get_mpz_t(), g.get_mpz_t());
    out[i] = n;
  }
  return out;
}

// ---------------------------------------------------------------- RatMatrix

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RatMatrix RatMatrix::from_rows(const std::vector<RatVector>& rows, std::size_t cols) {
  RatMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw InputError("from_rows: ragged row");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

RatMatrix RatMatrix::from_ints(const std::vector<std::vector<long>>& rows) {
  std::size_t cols = rows.empty() ? 0 : rows[0].size();
  RatMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw InputError("from_ints: ragged row");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

RatVector RatMatrix::row(std::size_t r) const {
  return RatVector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                   data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

RatVector RatMatrix::col(std::size_t c) const {
  RatVector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

std::vector<RatVector> RatMatrix::row_vectors() const {
  std::vector<RatVector> out;
  out.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out.push_back(row(r));
  return out;
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

RatVector RatMatrix::apply(const RatVector& v) const {
  if (v.size() != cols_) throw InputError("apply: length mismatch");
  RatVector out(rows_);
  for (std::size_t c = 0; c < cols_; ++c) {
    if (sgn(v[c]) == 0) continue;
    for (std::size_t r = 0; r < rows_; ++r) {
      const Rational& a = (*this)(r, c);
      if (sgn(a) != 0) out[r] += a * v[c];
    }
  }
  return out;
}

bool RatMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Rational& x) { return sgn(x) == 0; });
}

Rational RatMatrix::trace() const {
  Rational s = 0;
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) s += (*this)(i, i);
  return s;
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
  if (a.cols_ != b.rows_) throw InputError("matrix product: shape mismatch");
  RatMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& x = a(i, k);
      if (sgn(x) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const Rational& y = b(k, j);
        if (sgn(y) != 0) out(i, j) += x * y;
      }
    }
  }
  return out;
}

RatMatrix operator+(const RatMatrix& a, const RatMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw InputError("matrix sum: shape mismatch");
  RatMatrix out = a;
  for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] += b.data_[i];
  return out;
}

RatMatrix operator-(const RatMatrix& a, const RatMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw InputError("matrix difference: shape mismatch");
  RatMatrix out = a;
  for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] -= b.data_[i];
  return out;
}

RatMatrix operator*(const Rational& s, const RatMatrix& a) {
  RatMatrix out = a;
  for (auto& x : out.data_) x *= s;
  return out;
}

// ---------------------------------------------------------------- elimination

namespace {

// Scales every row to an integer row by clearing denominators.
std::vector<std::vector<Integer>> integerize(const std::vector<RatVector>& rows, std::size_t cols) {
  std::vector<std::vector<Integer>> out;
  out.reserve(rows.size());
  for (const auto& r : rows) {
    if (r.size() != cols) throw InputError("row length mismatch");
    Integer l = 1;
    for (const auto& x : r) {
      if (sgn(x) != 0) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    }
    std::vector<Integer> ir(cols);
    bool nz = false;
    for (std::size_t c = 0; c < cols; ++c) {
      if (sgn(r[c]) == 0) continue;
      ir[c] = r[c].get_num() * (l / r[c].get_den());
      nz = true;
    }
    if (nz) out.push_back(std::move(ir));
  }
  return out;
}

}  // namespace

namespace {

std::size_t entry_size(const Rational& q) {
  return mpz_sizeinbase(q.get_num_mpz_t(), 2) + mpz_sizeinbase(q.get_den_mpz_t(), 2);
}

EchelonForm rational_reduce(std::vector<RatVector> rows, std::size_t cols) {
  rows.erase(std::remove_if(rows.begin(), rows.end(), [](const RatVector& r) { return is_zero(r); }),
             rows.end());
  EchelonForm ef;
  std::size_t top = 0;
  for (std::size_t c = 0; c < cols && top < rows.size(); ++c) {
    std::size_t best = rows.size();
    std::size_t best_size = 0;
    for (std::size_t r = top; r < rows.size(); ++r) {
      if (sgn(rows[r][c]) == 0) continue;
      std::size_t s = entry_size(rows[r][c]);
      if (best == rows.size() || s < best_size) {
        best = r;
        best_size = s;
      }
    }
    if (best == rows.size()) continue;
    std::swap(rows[top], rows[best]);
    RatVector& p = rows[top];
    if (p[c] != 1) {
      Rational inv = 1 / p[c];
      for (std::size_t k = c; k < cols; ++k) {
        if (sgn(p[k]) != 0) p[k] *= inv;
      }
    }
    std::vector<std::size_t> support;
    for (std::size_t k = c + 1; k < cols; ++k) {
      if (sgn(p[k]) != 0) support.push_back(k);
    }
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == top || sgn(rows[r][c]) == 0) continue;
      Rational f = rows[r][c];
      RatVector& q = rows[r];
      for (std::size_t k : support) q[k] -= f * p[k];
      q[c] = 0;
    }
    ef.pivots.push_back(c);
    ++top;
  }
  rows.resize(top);
  ef.rows = std::move(rows);
  return ef;
}

// Fraction-free Gauss-Jordan: every entry stays an integer minor of the
// input, and each row is divided by its pivot at the end.
EchelonForm integer_reduce(const std::vector<RatVector>& rows, std::size_t cols) {
  auto a = integerize(rows, cols);
  const std::size_t m = a.size();
  EchelonForm ef;
  std::size_t r = 0;
  Integer prev = 1;
  for (std::size_t c = 0; c < cols && r < m; ++c) {
    std::size_t piv = m;
    std::size_t piv_size = 0;
    for (std::size_t i = r; i < m; ++i) {
      if (sgn(a[i][c]) == 0) continue;
      std::size_t sz = mpz_sizeinbase(a[i][c].get_mpz_t(), 2);
      if (piv == m || sz < piv_size) {
        piv = i;
        piv_size = sz;
      }
    }
    if (piv == m) continue;
    std::swap(a[r], a[piv]);
    const Integer p = a[r][c];
    for (std::size_t i = 0; i < m; ++i) {
      if (i == r) continue;
      std::vector<Integer>& q = a[i];
      const Integer f = q[c];
      // columns left of c are zero except at earlier pivots, which scale like the rest
      for (std::size_t k = 0; k < cols; ++k) {
        if (k == c) continue;
        bool in_support = sgn(a[r][k]) != 0;
        if (sgn(q[k]) == 0 && (!in_support || sgn(f) == 0)) continue;
        Integer v = p * q[k];
        if (in_support && sgn(f) != 0) v -= f * a[r][k];
        if (sgn(v) != 0) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        q[k] = std::move(v);
      }
      q[c] = 0;
    }
    ef.pivots.push_back(c);
    prev = p;
    ++r;
  }
  a.resize(r);
  ef.rows.reserve(r);
  for (std::size_t i = 0; i < r; ++i) {
    RatVector row(cols);
    const Integer& p = a[i][ef.pivots[i]];
    for (std::size_t k = 0; k < cols; ++k) {
      if (sgn(a[i][k]) == 0) continue;
      row[k] = Rational(a[i][k], p);
      row[k].canonicalize();
    }
    ef.rows.push_back(std::move(row));
  }
  return ef;
}

}  // namespace

EchelonForm row_reduce(std::vector<RatVector> rows, std::size_t cols) {
  bool integral = true;
  for (const auto& r : rows) {
    if (r.size() != cols) throw InputError("row_reduce: row length mismatch");
    for (const auto& x : r) {
      if (x.get_den() != 1) integral = false;
    }
  }
  // Integer rows grow slowly under the fraction-free scheme. Rows that are
  // already reduced carry large denominators and need little elimination.
  if (integral) return integer_reduce(rows, cols);
  return rational_reduce(std::move(rows), cols);
}

std::size_t rank(const std::vector<RatVector>& rows, std::size_t cols) {
  auto a = integerize(rows, cols);
  const std::size_t m = a.size();
  std::size_t r = 0;
  Integer prev = 1;
  for (std::size_t c = 0; c < cols && r < m; ++c) {
    std::size_t piv = m;
    for (std::size_t i = r; i < m; ++i) {
      if (sgn(a[i][c]) != 0) {
        piv = i;
        break;
      }
    }
    if (piv == m) continue;
    std::swap(a[r], a[piv]);
    for (std::size_t i = r + 1; i < m; ++i) {
      for (std::size_t k = c + 1; k < cols; ++k) {
        Integer v = a[r][c] * a[i][k] - a[i][c] * a[r][k];
        if (sgn(v) != 0) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        a[i][k] = std::move(v);
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    ++r;
  }
  return r;
}

std::size_t rank(const RatMatrix& m) { return rank(m.row_vectors(), m.cols()); }

std::optional<RatMatrix> inverse(const RatMatrix& m) {
  const std::size_t n = m.rows();
  if (m.cols() != n) throw InputError("inverse: matrix is not square");
  std::vector<RatVector> rows;
  for (std::size_t i = 0; i < n; ++i) {
    RatVector r(2 * n);
    for (std::size_t j = 0; j < n; ++j) r[j] = m(i, j);
    r[n + i] = 1;
    rows.push_back(std::move(r));
  }
  EchelonForm ef = row_reduce(std::move(rows), 2 * n);
  if (ef.pivots.size() < n || ef.pivots[n - 1] != n - 1) return std::nullopt;
  RatMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out(i, j) = ef.rows[i][n + j];
  }
  return out;
}

Rational determinant(const RatMatrix& m) {
  if (m.rows() != m.cols()) throw InputError("determinant: matrix not square");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  Integer scale = 1;
  std::vector<std::vector<Integer>> a(n, std::vector<Integer>(n));
  for (std::size_t i = 0; i < n; ++i) {
    Integer l = 1;
    for (std::size_t j = 0; j < n; ++j) {
      if (sgn(m(i, j)) != 0) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
    }
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m(i, j).get_num() * (l / m(i, j).get_den());
    scale *= l;
  }
  int sign = 1;
  Integer prev = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = n;
    for (std::size_t i = c; i < n; ++i) {
      if (sgn(a[i][c]) != 0) {
        piv = i;
        break;
      }
    }
    if (piv == n) return 0;
    if (piv != c) {
      std::swap(a[c], a[piv]);
      sign = -sign;
    }
    for (std::size_t i = c + 1; i < n; ++i) {
      for (std::size_t k = c + 1; k < n; ++k) {
        Integer v = a[c][c] * a[i][k] - a[i][c] * a[c][k];
        if (sgn(v) != 0) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        a[i][k] = std::move(v);
      }
      a[i][c] = 0;
    }
    prev = a[c][c];
  }
  Rational d(a[n - 1][n - 1] * sign, scale);
  d.canonicalize();
  return d;
}

// ---------------------------------------------------------------- subspaces

SubspaceBasis SubspaceBasis::span(std::size_t ambient_dim, const std::vector<RatVector>& vectors) {
  SubspaceBasis s(ambient_dim);
  EchelonForm ef = row_reduce(vectors, ambient_dim);
  s.vectors_ = std::move(ef.rows);
  s.pivots_ = std::move(ef.pivots);
  return s;
}

SubspaceBasis SubspaceBasis::whole(std::size_t ambient_dim) {
  SubspaceBasis s(ambient_dim);
  for (std::size_t i = 0; i < ambient_dim; ++i) {
    RatVector v(ambient_dim);
    v[i] = 1;
    s.vectors_.push_back(std::move(v));
    s.pivots_.push_back(i);
  }
  return s;
}

namespace {

// Residual of v after subtracting its pivot-column expansion.
RatVector reduce_against(const SubspaceBasis& s, const RatVector& v) {
  RatVector r = v;
  for (std::size_t i = 0; i < s.dim(); ++i) {
    Rational f = r[s.pivots()[i]];
    if (sgn(f) == 0) continue;
    const RatVector& b = s.vectors()[i];
    for (std::size_t k = 0; k < r.size(); ++k) {
      if (sgn(b[k]) != 0) r[k] -= f * b[k];
    }
  }
  return r;
}

}  // namespace

bool SubspaceBasis::contains(const RatVector& v) const {
  if (v.size() != ambient_dim_) throw InputError("contains: ambient dimension mismatch");
  return is_zero(reduce_against(*this, v));
}

bool SubspaceBasis::contains(const SubspaceBasis& other) const {
  if (other.ambient_dim_ != ambient_dim_) throw InputError("contains: ambient dimension mismatch");
  return std::all_of(other.vectors_.begin(), other.vectors_.end(),
                     [this](const RatVector& v) { return contains(v); });
}

RatVector SubspaceBasis::coordinates(const RatVector& v) const {
  if (!contains(v)) throw InputError("coordinates: vector not in subspace");
  RatVector c(dim());
  for (std::size_t i = 0; i < dim(); ++i) c[i] = v[pivots_[i]];
  return c;
}

RatVector SubspaceBasis::combine(const RatVector& coeffs) const {
  if (coeffs.size() != dim()) throw InputError("combine: coefficient count mismatch");
  RatVector out(ambient_dim_);
  for (std::size_t i = 0; i < dim(); ++i) {
    if (sgn(coeffs[i]) == 0) continue;
    for (std::size_t k = 0; k < ambient_dim_; ++k) {
      if (sgn(vectors_[i][k]) != 0) out[k] += coeffs[i] * vectors_[i][k];
    }
  }
  return out;
}

SubspaceBasis kernel(const std::vector<RatVector>& rows, std::size_t cols) {
  EchelonForm ef = row_reduce(rows, cols);
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t p : ef.pivots) is_pivot[p] = true;
  std::vector<RatVector> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    RatVector v(cols);
    v[f] = 1;
    for (std::size_t i = 0; i < ef.rows.size(); ++i) {
      if (sgn(ef.rows[i][f]) != 0) v[ef.pivots[i]] = -ef.rows[i][f];
    }
    basis.push_back(std::move(v));
  }
  return SubspaceBasis::span(cols, basis);
}

SubspaceBasis kernel(const RatMatrix& m) { return kernel(m.row_vectors(), m.cols()); }

SubspaceBasis image(const RatMatrix& m) {
  return SubspaceBasis::span(m.rows(), m.transpose().row_vectors());
}

SubspaceBasis span_sum(const std::vector<SubspaceBasis>& parts) {
  if (parts.empty()) throw InputError("span_sum: empty list");
  std::size_t n = parts[0].ambient_dim();
  std::vector<RatVector> all;
  for (const auto& p : parts) {
    if (p.ambient_dim() != n) throw InputError("span_sum: ambient dimension mismatch");
    all.insert(all.end(), p.vectors().begin(), p.vectors().end());
  }
  return SubspaceBasis::span(n, all);
}

SubspaceBasis intersect(const SubspaceBasis& a, const SubspaceBasis& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw InputError("intersect: ambient dimension mismatch");
  const std::size_t n = a.ambient_dim();
  if (a.empty() || b.empty()) return SubspaceBasis(n);
  // Equations cutting out b, imposed on coefficients of a.
  std::vector<RatVector> b_eqs = kernel(b.vectors(), n).vectors();
  if (b_eqs.empty()) return a;
  std::vector<RatVector> rows;
  rows.reserve(b_eqs.size());
  for (const auto& eq : b_eqs) {
    RatVector r(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) r[i] = dot(eq, a.vectors()[i]);
    rows.push_back(std::move(r));
  }
  SubspaceBasis coeffs = kernel(rows, a.dim());
  std::vector<RatVector> out;
  for (const auto& c : coeffs.vectors()) out.push_back(a.combine(c));
  return SubspaceBasis::span(n, out);
}

SubspaceBasis orthogonal_complement(const SubspaceBasis& sub, const RatMatrix& gram) {
  if (gram.rows() != sub.ambient_dim() || gram.cols() != sub.ambient_dim())
    throw InputError("orthogonal_complement: gram shape mismatch");
  std::vector<RatVector> rows;
  for (const auto& s : sub.vectors()) rows.push_back(gram.apply(s));
  return kernel(rows, sub.ambient_dim());
}

std::optional<RatVector> solve(const RatMatrix& m, const RatVector& b) {
  if (b.size() != m.rows()) throw InputError("solve: right-hand side length mismatch");
  const std::size_t n = m.cols();
  std::vector<RatVector> rows;
  rows.reserve(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    RatVector row = m.row(r);
    row.push_back(b[r]);
    rows.push_back(std::move(row));
  }
  EchelonForm ef = row_reduce(std::move(rows), n + 1);
  RatVector x(n);
  for (std::size_t i = 0; i < ef.rows.size(); ++i) {
    if (ef.pivots[i] == n) return std::nullopt;
    x[ef.pivots[i]] = ef.rows[i][n];
  }
  return x;
}

RatVector characteristic_polynomial(const RatMatrix& m) {
  if (m.rows() != m.cols()) throw InputError("characteristic_polynomial: matrix not square");
  const std::size_t n = m.rows();
  RatMatrix h = m;
  // Similarity transform to upper Hessenberg form.
  for (std::size_t c = 1; c + 1 < n; ++c) {
    std::size_t piv = n;
    for (std::size_t i = c; i < n; ++i) {
      if (sgn(h(i, c - 1)) != 0) {
        piv = i;
        break;
      }
    }
    if (piv == n) continue;
    if (piv != c) {
      for (std::size_t k = 0; k < n; ++k) std::swap(h(piv, k), h(c, k));
      for (std::size_t k = 0; k < n; ++k) std::swap(h(k, piv), h(k, c));
    }
    const Rational t = h(c, c - 1);
    for (std::size_t j = c + 1; j < n; ++j) {
      if (sgn(h(j, c - 1)) == 0) continue;
      Rational u = h(j, c - 1) / t;
      for (std::size_t k = 0; k < n; ++k) {
        if (sgn(h(c, k)) != 0) h(j, k) -= u * h(c, k);
      }
      for (std::size_t k = 0; k < n; ++k) {
        if (sgn(h(k, j)) != 0) h(k, c) += u * h(k, j);
      }
    }
  }
  // p_k = (x - h_kk) p_{k-1} - sum_i h_{k-i,k} (prod of subdiagonal) p_{k-i-1}
  std::vector<RatVector> p(n + 1);
  p[0] = RatVector{1};
  for (std::size_t k = 1; k <= n; ++k) {
    RatVector pk(k + 1);
    const RatVector& prev = p[k - 1];
    for (std::size_t d = 0; d < prev.size(); ++d) {
      pk[d + 1] += prev[d];
      if (sgn(h(k - 1, k - 1)) != 0) pk[d] -= h(k - 1, k - 1) * prev[d];
    }
    Rational t = 1;
    for (std::size_t i = 1; i < k; ++i) {
      t *= h(k - i, k - i - 1);
      if (sgn(t) == 0) break;
      const Rational& a = h(k - i - 1, k - 1);
      if (sgn(a) == 0) continue;
      Rational f = t * a;
      const RatVector& q = p[k - i - 1];
      for (std::size_t d = 0; d < q.size(); ++d) pk[d] -= f * q[d];
    }
    p[k] = std::move(pk);
  }
  return p[n];
}

std::vector<Eigenspace> rational_eigenspaces(const RatMatrix& m) {
  if (m.rows() != m.cols()) throw InputError("rational_eigenspaces: matrix not square");
  const std::size_t n = m.rows();
  std::vector<Eigenspace> out;
  if (n == 0) return out;

  bool diagonal = true;
  for (std::size_t i = 0; i < n && diagonal; ++i)
    for (std::size_t j = 0; j < n && diagonal; ++j)
      if (i != j && sgn(m(i, j)) != 0) diagonal = false;
  if (diagonal) {
    std::map<Rational, std::vector<RatVector>> groups;
    for (std::size_t i = 0; i < n; ++i) {
      RatVector v(n);
      v[i] = 1;
      groups[m(i, i)].push_back(std::move(v));
    }
    for (auto& [val, vecs] : groups) out.push_back({val, SubspaceBasis::span(n, vecs)});
    return out;
  }

  // Integer matrix d*m has monic integral characteristic polynomial, so its
  // rational eigenvalues are integers bounded by the largest absolute row sum.
  Integer d = 1;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (sgn(m(i, j)) != 0) mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), m(i, j).get_den_mpz_t());
  RatMatrix mi = Rational(d) * m;
  Integer bound = 0;
  for (std::size_t i = 0; i < n; ++i) {
    Integer s = 0;
    for (std::size_t j = 0; j < n; ++j) s += abs(mi(i, j).get_num());
    if (s > bound) bound = s;
  }
  RatVector cp = characteristic_polynomial(mi);
  std::vector<Integer> poly;
  for (const auto& c : cp) {
    if (c.get_den() != 1) throw InvariantError("characteristic polynomial not integral");
    poly.push_back(c.get_num());
  }
  std::vector<std::pair<Integer, std::size_t>> roots;
  std::size_t found = 0;
  for (Integer lam = -bound; lam <= bound && poly.size() > 1; ++lam) {
    std::size_t mult = 0;
    while (poly.size() > 1) {
      // Synthetic division by (x - lam).
      std::vector<Integer> q(poly.size() - 1);
      Integer acc = 0;
      for (std::size_t k = poly.size(); k-- > 1;) {
        acc = acc * lam + poly[k];
        q[k - 1] = acc;
      }
      Integer rem = acc * lam + poly[0];
      if (rem != 0) break;
      poly = std::move(q);
      ++mult;
    }
    if (mult > 0) {
      roots.emplace_back(lam, mult);
      found += mult;
    }
  }
  if (found != n) throw InvariantError("spectrum is not rational");
  for (const auto& [lam, mult] : roots) {
    Rational val(lam, d);
    val.canonicalize();
    RatMatrix shifted = m;
    for (std::size_t i = 0; i < n; ++i) shifted(i, i) -= val;
    SubspaceBasis sp = kernel(shifted);
    if (sp.dim() != mult) throw InvariantError("matrix is not diagonalizable");
    out.push_back({val, std::move(sp)});
  }
  return out;
}

}  // namespace lieidx
