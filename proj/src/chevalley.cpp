#include "lieidx/chevalley.hpp"

#include <algorithm>
#include <map>

namespace lieidx {

LieAlgebra::LieAlgebra(std::size_t dim, char type, int rank, std::vector<std::vector<Term>> table,
                       std::vector<std::string> labels, std::vector<std::size_t> cartan_indices,
                       std::string name)
    : dim_(dim),
      type_(type),
      rank_(rank),
      table_(std::move(table)),
      labels_(std::move(labels)),
      cartan_(std::move(cartan_indices)),
      name_(std::move(name)) {
  if (table_.size() != dim_ * dim_) throw InputError("structure table has wrong size");
  if (labels_.size() != dim_) throw InputError("basis label count mismatch");
  validate_type(type_, rank_);

  // tr(ad_a ad_b) = sum_k sum_m [b_a,b_m]_k [b_b,b_k]_m
  std::vector<std::int64_t> g(dim_ * dim_, 0);
  auto coef = [this](std::size_t a, std::size_t m, std::size_t k) -> std::int64_t {
    for (const Term& t : table_[a * dim_ + m]) {
      if (t.index == k) return t.coeff;
    }
    return 0;
  };
  for (std::size_t b = 0; b < dim_; ++b) {
    for (std::size_t k = 0; k < dim_; ++k) {
      for (const Term& t : table_[b * dim_ + k]) {
        for (std::size_t a = 0; a <= b; ++a) {
          std::int64_t c = coef(a, t.index, k);
          if (c != 0) g[a * dim_ + b] += c * t.coeff;
        }
      }
    }
  }
  gram_ = RatMatrix(dim_, dim_);
  for (std::size_t a = 0; a < dim_; ++a) {
    for (std::size_t b = a; b < dim_; ++b) {
      gram_(a, b) = static_cast<long>(g[a * dim_ + b]);
      gram_(b, a) = gram_(a, b);
    }
  }
}

Element LieAlgebra::basis_vector(std::size_t i) const {
  Element v(dim_);
  v.at(i) = 1;
  return v;
}

Element LieAlgebra::bracket(const Element& a, const Element& b) const {
  if (a.size() != dim_ || b.size() != dim_) throw InputError("bracket: element length mismatch");
  Element out(dim_);
  std::vector<std::size_t> sb;
  for (std::size_t j = 0; j < dim_; ++j) {
    if (sgn(b[j]) != 0) sb.push_back(j);
  }
  Rational prod;
  for (std::size_t i = 0; i < dim_; ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j : sb) {
      const auto& terms = table_[i * dim_ + j];
      if (terms.empty()) continue;
      prod = a[i] * b[j];
      for (const Term& t : terms) out[t.index] += prod * static_cast<long>(t.coeff);
    }
  }
  return out;
}

RatMatrix LieAlgebra::ad_matrix(const Element& a) const {
  if (a.size() != dim_) throw InputError("ad_matrix: element length mismatch");
  RatMatrix m(dim_, dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      for (const Term& t : table_[i * dim_ + j]) m(t.index, j) += a[i] * static_cast<long>(t.coeff);
    }
  }
  return m;
}

RatVector LieAlgebra::lower(const Element& a) const { return gram_.apply(a); }

Rational LieAlgebra::killing(const Element& a, const Element& b) const { return dot(a, lower(b)); }

std::size_t LieAlgebra::root_index(const IntVector& root) const {
  if (!roots_) throw InputError("root_index: algebra has no root system");
  if (auto k = roots_->find_positive(root)) return *k;
  IntVector neg(root.size());
  for (std::size_t i = 0; i < root.size(); ++i) neg[i] = -root[i];
  if (auto k = roots_->find_positive(neg)) return roots_->num_positive() + *k;
  throw InputError("root_index: not a root");
}

std::size_t LieAlgebra::coroot_index(int i) const {
  if (!roots_) throw InputError("coroot_index: algebra has no root system");
  if (i < 0 || i >= rank_) throw InputError("coroot_index: out of range");
  return 2 * roots_->num_positive() + static_cast<std::size_t>(i);
}

// ---------------------------------------------------------------- Chevalley basis

namespace {

IntVector negate(const IntVector& v) {
  IntVector n(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) n[i] = -v[i];
  return n;
}

IntVector add(const IntVector& a, const IntVector& b) {
  IntVector s(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) s[i] = a[i] + b[i];
  return s;
}

bool is_positive(const IntVector& v) {
  return std::any_of(v.begin(), v.end(), [](long c) { return c > 0; });
}

bool is_zero_root(const IntVector& v) {
  return std::all_of(v.begin(), v.end(), [](long c) { return c == 0; });
}

Rational ratio(long num, long den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

class StructureConstants {
 public:
  explicit StructureConstants(const RootSystem& rs) : rs_(rs), n_(rs.num_positive()), npos_(n_ * n_, 0) {
    const auto& pos = rs.positive_roots();
    const auto ell = static_cast<std::size_t>(rs.rank());
    for (std::size_t x = 0; x < n_; ++x) {
      const IntVector& xi = pos[x];
      if (RootSystem::height(xi) < 2) continue;
      // Extraspecial pair: smallest simple index i with xi - alpha_i a root.
      std::size_t gi = ell;
      IntVector delta;
      for (std::size_t i = 0; i < ell; ++i) {
        IntVector d = xi;
        d[i] -= 1;
        if (rs.find_positive(d)) {
          gi = i;
          delta = d;
          break;
        }
      }
      if (gi == ell) throw InvariantError("positive root without extraspecial pair");
      IntVector gamma(ell, 0);
      gamma[gi] = 1;
      long p = 0;
      IntVector probe = delta;
      while (true) {
        probe[gi] -= 1;
        if (!rs.is_root(probe)) break;
        ++p;
      }
      const std::size_t g = *rs.find_positive(gamma);
      const std::size_t d = *rs.find_positive(delta);
      set_pos(g, d, p + 1);

      for (std::size_t a = 0; a < n_; ++a) {
        if (a == g || a == d) continue;
        IntVector beta = xi;
        for (std::size_t i = 0; i < ell; ++i) beta[i] -= pos[a][i];
        auto b = rs.find_positive(beta);
        if (!b || get_pos(a, *b) != 0) continue;
        const IntVector& alpha = pos[a];
        Rational sum = 0;
        IntVector bg = add(beta, negate(gamma));
        if (!is_zero_root(bg) && rs.is_root(bg)) {
          sum += ratio(signed_n(beta, negate(gamma)) * signed_n(alpha, negate(delta)), rs.inner(bg, bg));
        }
        IntVector ag = add(alpha, negate(gamma));
        if (!is_zero_root(ag) && rs.is_root(ag)) {
          sum += ratio(signed_n(negate(gamma), alpha) * signed_n(beta, negate(delta)), rs.inner(ag, ag));
        }
        Rational val = sum * rs.inner(xi, xi) / (p + 1);
        if (val.get_den() != 1) throw InvariantError("non-integral structure constant");
        set_pos(a, *b, val.get_num().get_si());
      }
    }
  }

  // N_{x,y} for signed roots x, y; zero when x + y is not a root.
  long signed_n(const IntVector& x, const IntVector& y) const {
    IntVector z = add(x, y);
    if (is_zero_root(z) || !rs_.is_root(z)) return 0;
    bool px = is_positive(x);
    bool py = is_positive(y);
    if (px && py) return require_pos(x, y);
    if (!px && !py) return -require_pos(negate(x), negate(y));
    if (!px) return -signed_n(y, x);
    // x positive, y negative
    Rational v;
    if (is_positive(z)) {
      v = ratio(-rs_.inner(z, z), rs_.inner(x, x)) * require_pos(negate(y), z);
    } else {
      v = ratio(rs_.inner(z, z), rs_.inner(y, y)) * require_pos(negate(z), x);
    }
    if (v.get_den() != 1) throw InvariantError("non-integral mixed structure constant");
    return v.get_num().get_si();
  }

 private:
  void set_pos(std::size_t a, std::size_t b, long v) {
    npos_[a * n_ + b] = v;
    npos_[b * n_ + a] = -v;
  }
  long get_pos(std::size_t a, std::size_t b) const { return npos_[a * n_ + b]; }
  long require_pos(const IntVector& x, const IntVector& y) const {
    long v = get_pos(*rs_.find_positive(x), *rs_.find_positive(y));
    if (v == 0) throw InvariantError("structure constant requested before it was fixed");
    return v;
  }

  const RootSystem& rs_;
  std::size_t n_;
  std::vector<long> npos_;
};

}  // namespace

LieAlgebra build_algebra(const RootSystem& rs) {
  const std::size_t n = rs.num_positive();
  const auto ell = static_cast<std::size_t>(rs.rank());
  const std::size_t dim = 2 * n + ell;
  const auto& pos = rs.positive_roots();

  auto signed_root = [&](std::size_t idx) -> IntVector {
    return idx < n ? pos[idx] : negate(pos[idx - n]);
  };
  auto root_idx = [&](const IntVector& r) -> std::size_t {
    if (auto k = rs.find_positive(r)) return *k;
    return n + *rs.find_positive(negate(r));
  };

  StructureConstants sc(rs);
  std::vector<std::vector<Term>> table(dim * dim);
  for (std::size_t i = 0; i < 2 * n; ++i) {
    const IntVector a = signed_root(i);
    for (std::size_t j = 0; j < 2 * n; ++j) {
      const IntVector b = signed_root(j);
      IntVector s = add(a, b);
      auto& out = table[i * dim + j];
      if (is_zero_root(s)) {
        // [x_a, x_{-a}] = h_a, with h_a the coroot of a (negated for negative a).
        const IntVector& p = is_positive(a) ? a : b;
        const long sign = is_positive(a) ? 1 : -1;
        const long pp = rs.inner(p, p);
        for (std::size_t k = 0; k < ell; ++k) {
          if (p[k] == 0) continue;
          long num = p[k] * rs.form()[k][k];
          if (num % pp != 0) throw InvariantError("non-integral coroot");
          out.push_back({2 * n + k, sign * num / pp});
        }
      } else if (rs.is_root(s)) {
        long c = sc.signed_n(a, b);
        if (c == 0) throw InvariantError("vanishing constant on a root sum");
        out.push_back({root_idx(s), c});
      }
    }
    for (std::size_t k = 0; k < ell; ++k) {
      long c = rs.pair_coroot(a, static_cast<int>(k));
      if (c == 0) continue;
      table[(2 * n + k) * dim + i].push_back({i, c});
      table[i * dim + (2 * n + k)].push_back({i, -c});
    }
  }

  std::vector<std::string> labels(dim);
  std::vector<std::size_t> cartan;
  for (std::size_t k = 0; k < n; ++k) {
    labels[k] = "x" + std::to_string(k + 1);
    labels[n + k] = "y" + std::to_string(k + 1);
  }
  for (std::size_t k = 0; k < ell; ++k) {
    labels[2 * n + k] = "h" + std::to_string(k + 1);
    cartan.push_back(2 * n + k);
  }
  LieAlgebra L(dim, rs.type(), rs.rank(), std::move(table), std::move(labels), std::move(cartan), rs.label());
  L.roots_ = std::make_shared<const RootSystem>(rs);
  return L;
}

LieAlgebra build_algebra(char type, int rank) { return build_algebra(build_root_system(type, rank)); }

Element bracket(const LieAlgebra& L, const Element& a, const Element& b) { return L.bracket(a, b); }

RatMatrix ad_matrix(const LieAlgebra& L, const Element& a) { return L.ad_matrix(a); }

Rational killing_pair(const LieAlgebra& L, const Element& a, const Element& b) {
  return L.killing(a, b);
}

bool antisymmetric_pair(const LieAlgebra& L, std::size_t i, std::size_t j) {
  std::map<std::size_t, std::int64_t> acc;
  for (const Term& t : L.basis_bracket(i, j)) acc[t.index] += t.coeff;
  for (const Term& t : L.basis_bracket(j, i)) acc[t.index] += t.coeff;
  return std::all_of(acc.begin(), acc.end(), [](const auto& kv) { return kv.second == 0; });
}

bool jacobi_holds(const LieAlgebra& L, std::size_t i, std::size_t j, std::size_t k) {
  std::map<std::size_t, std::int64_t> acc;
  auto cyc = [&](std::size_t a, std::size_t b, std::size_t c) {
    for (const Term& t : L.basis_bracket(a, b)) {
      for (const Term& u : L.basis_bracket(t.index, c)) acc[u.index] += t.coeff * u.coeff;
    }
  };
  cyc(i, j, k);
  cyc(j, k, i);
  cyc(k, i, j);
  return std::all_of(acc.begin(), acc.end(), [](const auto& kv) { return kv.second == 0; });
}

RatMatrix represent(const MatrixRep& rep, const Element& a) {
  if (a.size() != rep.images.size()) throw InputError("represent: element length mismatch");
  RatMatrix m(rep.n, rep.n);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) != 0) m = m + a[i] * rep.images[i];
  }
  return m;
}

bool is_representation(const LieAlgebra& L, const MatrixRep& rep) {
  for (std::size_t i = 0; i < L.dim(); ++i) {
    for (std::size_t j = 0; j < L.dim(); ++j) {
      const RatMatrix& a = rep.images[i];
      const RatMatrix& b = rep.images[j];
      RatMatrix lhs(rep.n, rep.n);
      for (const Term& t : L.basis_bracket(i, j)) lhs = lhs + Rational(static_cast<long>(t.coeff)) * rep.images[t.index];
      if (!(lhs == a * b - b * a)) return false;
    }
  }
  return true;
}

MatrixRep natural_rep_type_a(const LieAlgebra& L) {
  const RootSystem* rs = L.root_system();
  if (rs == nullptr || rs->type() != 'A') throw InputError("natural_rep_type_a: algebra is not of type A");
  const auto ell = static_cast<std::size_t>(rs->rank());
  const std::size_t np = rs->num_positive();
  MatrixRep rep;
  rep.n = ell + 1;
  rep.images.assign(L.dim(), RatMatrix(rep.n, rep.n));
  std::vector<bool> done(L.dim(), false);
  for (std::size_t i = 0; i < ell; ++i) {
    IntVector a(ell, 0);
    a[i] = 1;
    std::size_t x = *rs->find_positive(a);
    rep.images[x](i, i + 1) = 1;
    rep.images[np + x](i + 1, i) = 1;
    rep.images[L.coroot_index(static_cast<int>(i))](i, i) = 1;
    rep.images[L.coroot_index(static_cast<int>(i))](i + 1, i + 1) = -1;
    done[x] = done[np + x] = done[L.coroot_index(static_cast<int>(i))] = true;
  }
  // Higher root vectors from brackets with simple root vectors, by height.
  for (std::size_t k = 0; k < np; ++k) {
    if (done[k]) continue;
    for (std::size_t off : {std::size_t{0}, np}) {
      bool set = false;
      for (std::size_t s = 0; s < np && !set; ++s) {
        if (!done[s] || RootSystem::height(rs->positive_roots()[s]) != 1) continue;
        for (std::size_t b = 0; b < k && !set; ++b) {
          const auto& terms = L.basis_bracket(off + s, off + b);
          if (terms.size() != 1 || terms[0].index != off + k) continue;
          const RatMatrix& p = rep.images[off + s];
          const RatMatrix& q = rep.images[off + b];
          rep.images[off + k] = (Rational(1) / static_cast<long>(terms[0].coeff)) * (p * q - q * p);
          set = true;
        }
      }
      if (!set) throw InvariantError("natural_rep_type_a: root vector not reached");
    }
    done[k] = done[np + k] = true;
  }
  return rep;
}

}  // namespace lieidx
