#include "lieidx/centralize.hpp"

#include <optional>

#include "lieidx/random.hpp"

namespace lieidx {

Subalgebra::Subalgebra(const LieAlgebra& parent, SubspaceBasis basis)
    : parent_(&parent), basis_(std::move(basis)) {
  if (basis_.ambient_dim() != parent.dim()) throw InputError("Subalgebra: ambient dimension mismatch");
  equations_ = kernel(basis_.vectors(), parent.dim()).vectors();
  for (std::size_t i = 0; i < dim(); ++i) {
    for (std::size_t j = i + 1; j < dim(); ++j) {
      if (!contains(parent.bracket(vector(i), vector(j)))) {
        throw InvariantError("subspace is not closed under the bracket");
      }
    }
  }
  closed_ = true;
}

bool Subalgebra::contains(const Element& v) const {
  if (v.size() != parent_->dim()) throw InputError("Subalgebra::contains: length mismatch");
  for (const auto& eq : equations_) {
    if (sgn(dot(eq, v)) != 0) return false;
  }
  return true;
}

std::size_t Grading::dim(long i) const {
  auto it = pieces.find(i);
  return it == pieces.end() ? 0 : it->second.dim();
}

Subalgebra centralizer(const LieAlgebra& L, const std::vector<Element>& elems) {
  std::vector<RatVector> rows;
  for (const auto& x : elems) {
    RatMatrix ad = L.ad_matrix(x);
    for (std::size_t r = 0; r < ad.rows(); ++r) {
      RatVector row = ad.row(r);
      if (!is_zero(row)) rows.push_back(std::move(row));
    }
  }
  return Subalgebra(L, kernel(rows, L.dim()));
}

namespace {

// Coefficient vectors c with [sum c_i s_i, x] = 0 for every x in probes.
SubspaceBasis commuting_coefficients(const Subalgebra& s, const std::vector<Element>& probes) {
  const LieAlgebra& L = s.parent();
  std::vector<RatVector> rows;
  for (const auto& x : probes) {
    RatMatrix ad = L.ad_matrix(x);
    std::vector<RatVector> cols;
    cols.reserve(s.dim());
    for (std::size_t i = 0; i < s.dim(); ++i) cols.push_back(ad.apply(s.vector(i)));
    for (std::size_t r = 0; r < L.dim(); ++r) {
      RatVector row(s.dim());
      bool nz = false;
      for (std::size_t i = 0; i < s.dim(); ++i) {
        if (sgn(cols[i][r]) != 0) {
          row[i] = cols[i][r];
          nz = true;
        }
      }
      if (nz) rows.push_back(std::move(row));
    }
  }
  return kernel(rows, s.dim());
}

SubspaceBasis lift(const Subalgebra& s, const SubspaceBasis& coeffs) {
  std::vector<RatVector> out;
  for (const auto& c : coeffs.vectors()) out.push_back(s.basis().combine(c));
  return SubspaceBasis::span(s.parent().dim(), out);
}

}  // namespace

SubspaceBasis centralizer_in(const Subalgebra& s, const std::vector<Element>& elems) {
  return lift(s, commuting_coefficients(s, elems));
}

SubspaceBasis center_of(const Subalgebra& s) {
  const LieAlgebra& L = s.parent();
  if (s.dim() == 0) return SubspaceBasis(L.dim());
  // Random probes cut the candidate space down quickly; every candidate is
  // then checked against the whole basis, and a failing basis vector is
  // added as a probe. The loop ends with an exactly verified center.
  Rng rng(split_seed(0x5eedULL, "center_of"));
  std::vector<Element> probes;
  for (int k = 0; k < 2; ++k) probes.push_back(s.basis().combine(rng.vector(s.dim(), 5)));
  while (true) {
    SubspaceBasis z = lift(s, commuting_coefficients(s, probes));
    std::optional<std::size_t> failing;
    for (const auto& v : z.vectors()) {
      for (std::size_t j = 0; j < s.dim() && !failing; ++j) {
        if (!is_zero(L.bracket(v, s.vector(j)))) failing = j;
      }
      if (failing) break;
    }
    if (!failing) return z;
    probes.push_back(s.vector(*failing));
  }
}

bool is_nilpotent(const LieAlgebra& L, const Element& e) {
  // ad(e)^(2h-1) vanishes for nilpotent e, h the Coxeter number.
  const std::vector<int> d = degrees(L.type(), L.rank());
  const int power = 2 * d.back() - 1;
  RatMatrix a = L.ad_matrix(e);
  RatMatrix p = a;
  for (int k = 1; k < power; ++k) {
    if (p.is_zero()) return true;
    p = a * p;
  }
  return p.is_zero();
}

bool is_sl2_triple(const LieAlgebra& L, const SL2Triple& t) {
  Element he = L.bracket(t.h, t.e);
  Element hf = L.bracket(t.h, t.f);
  Element ef = L.bracket(t.e, t.f);
  for (std::size_t i = 0; i < L.dim(); ++i) {
    if (he[i] != 2 * t.e[i] || hf[i] != -2 * t.f[i] || ef[i] != t.h[i]) return false;
  }
  return true;
}

SL2Triple sl2_triple(const LieAlgebra& L, const Element& e) {
  if (e.size() != L.dim()) throw InputError("sl2_triple: element length mismatch");
  if (is_zero(e)) throw InputError("sl2_triple: e = 0");
  if (!is_nilpotent(L, e)) throw InputError("sl2_triple: e is not nilpotent");
  const std::size_t n = L.dim();
  const RatMatrix a = L.ad_matrix(e);
  const RatMatrix a2 = a * a;
  RatVector minus2e(n);
  for (std::size_t i = 0; i < n; ++i) minus2e[i] = -2 * e[i];

  // h = [e, z] with [h, e] = 2e, i.e. ad(e)^2 z = -2e. Prefer z with h in
  // the Cartan subalgebra so the grading is diagonal in the basis.
  std::vector<bool> cartan(n, false);
  for (std::size_t i : L.cartan_indices()) cartan[i] = true;
  std::vector<RatVector> rows;
  RatVector rhs;
  for (std::size_t r = 0; r < n; ++r) {
    rows.push_back(a2.row(r));
    rhs.push_back(minus2e[r]);
  }
  for (std::size_t r = 0; r < n; ++r) {
    if (cartan[r]) continue;
    rows.push_back(a.row(r));
    rhs.push_back(0);
  }
  std::optional<RatVector> z = solve(RatMatrix::from_rows(rows, n), rhs);
  if (!z) z = solve(a2, minus2e);
  if (!z) throw InvariantError("sl2_triple: no neutral element found");
  Element h = a.apply(*z);

  // f with [e, f] = h and [h, f] = -2f.
  RatMatrix adh = L.ad_matrix(h);
  rows.clear();
  rhs.clear();
  for (std::size_t r = 0; r < n; ++r) {
    rows.push_back(a.row(r));
    rhs.push_back(h[r]);
  }
  for (std::size_t r = 0; r < n; ++r) {
    RatVector row = adh.row(r);
    row[r] += 2;
    rows.push_back(std::move(row));
    rhs.push_back(0);
  }
  std::optional<RatVector> f = solve(RatMatrix::from_rows(rows, n), rhs);
  if (!f) throw InvariantError("sl2_triple: no nilnegative element found");
  SL2Triple t{e, h, *f};
  if (!is_sl2_triple(L, t)) throw InvariantError("sl2_triple: relations fail");
  return t;
}

Grading ad_h_grading(const LieAlgebra& L, const Element& h) {
  Grading g;
  for (auto& es : rational_eigenspaces(L.ad_matrix(h))) {
    if (es.value.get_den() != 1) throw InputError("ad_h_grading: non-integer eigenvalue");
    g.pieces.emplace(es.value.get_num().get_si(), std::move(es.space));
  }
  return g;
}

bool is_regular(const LieAlgebra& L, const Element& x) {
  return L.dim() - rank(L.ad_matrix(x)) == static_cast<std::size_t>(L.rank());
}

CenterCriterion::CenterCriterion(const LieAlgebra& L, const SL2Triple& t) : L_(&L), e_(t.e) {
  gf_ = kernel(L.ad_matrix(t.f));
  // [e, g] is the column space of ad(e); its equations are the left kernel.
  image_equations_ = kernel(L.ad_matrix(t.e).transpose()).vectors();
}

bool CenterCriterion::holds(const Element& v) const {
  if (!is_zero(L_->bracket(e_, v))) throw InputError("center criterion: v is not in g^e");
  for (const auto& w : gf_.vectors()) {
    Element x = L_->bracket(v, w);
    for (const auto& eq : image_equations_) {
      if (sgn(dot(eq, x)) != 0) return false;
    }
  }
  return true;
}

bool center_membership_l4(const LieAlgebra& L, const SL2Triple& t, const Element& v) {
  return CenterCriterion(L, t).holds(v);
}

}  // namespace lieidx
