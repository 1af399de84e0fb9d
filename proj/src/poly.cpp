#include "lieidx/poly.hpp"

#include <algorithm>

namespace lieidx {

Poly Poly::constant(const Rational& c) {
  Poly p;
  p.add_term({}, c);
  return p;
}

Poly Poly::variable(std::uint32_t i) {
  Poly p;
  p.add_term({i}, 1);
  return p;
}

Poly Poly::linear(const RatVector& coeffs) {
  Poly p;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (sgn(coeffs[i]) != 0) p.terms_.emplace(Monomial{static_cast<std::uint32_t>(i)}, coeffs[i]);
  }
  return p;
}

void Poly::add_term(const Monomial& m, const Rational& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (sgn(it->second) == 0) terms_.erase(it);
}

std::size_t Poly::degree() const {
  std::size_t d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.size());
  return d;
}

Rational Poly::evaluate(const RatVector& point) const {
  Rational s = 0;
  for (const auto& [m, c] : terms_) {
    Rational v = c;
    for (std::uint32_t i : m) {
      if (i >= point.size()) throw InputError("Poly::evaluate: point too short");
      v *= point[i];
    }
    s += v;
  }
  return s;
}

std::string Poly::to_string(const std::string& var) const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Rational a = abs(c);
    if (first) {
      if (sgn(c) < 0) out += "-";
    } else {
      out += sgn(c) < 0 ? " - " : " + ";
    }
    first = false;
    bool unit = a == 1 && !m.empty();
    if (!unit) out += lieidx::to_string(a);
    for (std::size_t k = 0; k < m.size();) {
      std::size_t e = k;
      while (e < m.size() && m[e] == m[k]) ++e;
      if (!unit || k > 0) out += "*";
      out += var + std::to_string(m[k]);
      if (e - k > 1) out += "^" + std::to_string(e - k);
      k = e;
    }
  }
  return out;
}

Poly& Poly::operator+=(const Poly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly out;
  Poly::Monomial m;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      m.resize(ma.size() + mb.size());
      std::merge(ma.begin(), ma.end(), mb.begin(), mb.end(), m.begin());
      out.add_term(m, ca * cb);
    }
  }
  return out;
}

Poly operator*(const Rational& s, const Poly& a) {
  Poly out;
  if (sgn(s) == 0) return out;
  for (const auto& [m, c] : a.terms_) out.terms_.emplace(m, s * c);
  return out;
}

namespace {

Poly det_rec(const PolyMatrix& m, std::vector<std::size_t>& cols, std::size_t row) {
  if (row == m.size()) return Poly::constant(1);
  Poly out;
  for (std::size_t k = 0; k < cols.size(); ++k) {
    const Poly& entry = m[row][cols[k]];
    if (entry.is_zero()) continue;
    std::size_t c = cols[k];
    cols.erase(cols.begin() + static_cast<std::ptrdiff_t>(k));
    Poly minor = det_rec(m, cols, row + 1);
    cols.insert(cols.begin() + static_cast<std::ptrdiff_t>(k), c);
    if (minor.is_zero()) continue;
    Poly term = entry * minor;
    if (k % 2 == 0) {
      out += term;
    } else {
      out -= term;
    }
  }
  return out;
}

}  // namespace

Poly determinant(const PolyMatrix& m) {
  const std::size_t n = m.size();
  for (const auto& row : m) {
    if (row.size() != n) throw InputError("determinant: matrix is not square");
  }
  if (n > kMaxPolyDetOrder) throw InputError("determinant: order " + std::to_string(n) + " above bound");
  std::vector<std::size_t> cols(n);
  for (std::size_t i = 0; i < n; ++i) cols[i] = i;
  return det_rec(m, cols, 0);
}

PolyMatrix submatrix(const PolyMatrix& m, const std::vector<std::size_t>& rows,
                     const std::vector<std::size_t>& cols) {
  PolyMatrix out;
  out.reserve(rows.size());
  for (std::size_t r : rows) {
    std::vector<Poly> row;
    row.reserve(cols.size());
    for (std::size_t c : cols) row.push_back(m.at(r).at(c));
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace lieidx
