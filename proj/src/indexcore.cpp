#include "lieidx/indexcore.hpp"

#include <algorithm>

#include "lieidx/random.hpp"

namespace lieidx {

KirillovForm kirillov_form(const LieAlgebra& L, const std::vector<Element>& vectors, const Element& xi) {
  const std::size_t n = L.dim();
  const std::size_t k = vectors.size();
  const RatVector w = L.lower(xi);
  // r_i[c] = <xi, [v_i, b_c]>
  std::vector<RatVector> r(k, RatVector(n));
  std::vector<RatVector> omega(n);
  for (std::size_t i = 0; i < k; ++i) {
    const Element& v = vectors[i];
    if (v.size() != n) throw InputError("kirillov_form: vector length mismatch");
    for (std::size_t a = 0; a < n; ++a) {
      if (sgn(v[a]) == 0) continue;
      if (omega[a].empty()) {
        omega[a].assign(n, Rational(0));
        for (std::size_t c = 0; c < n; ++c) {
          for (const Term& t : L.basis_bracket(a, c)) {
            if (sgn(w[t.index]) != 0) omega[a][c] += w[t.index] * static_cast<long>(t.coeff);
          }
        }
      }
      for (std::size_t c = 0; c < n; ++c) {
        if (sgn(omega[a][c]) != 0) r[i][c] += v[a] * omega[a][c];
      }
    }
  }
  KirillovForm kf;
  kf.gram = RatMatrix(k, k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      Rational s = dot(r[i], vectors[j]);
      kf.gram(i, j) = s;
      kf.gram(j, i) = -s;
    }
  }
  kf.rank = rank(kf.gram);
  if (kf.rank % 2 != 0) throw InvariantError("Kirillov form has odd rank");
  return kf;
}

std::size_t kirillov_rank(const Subalgebra& s, const Element& xi) {
  return kirillov_form(s.parent(), s.basis().vectors(), xi).rank;
}

IndexCertificate certified_index(const Subalgebra& s, std::size_t samples, std::uint64_t seed, long bound,
                                 bool stop_when_certified) {
  const LieAlgebra& L = s.parent();
  const auto ell = static_cast<std::size_t>(L.rank());
  IndexCertificate cert;
  cert.subalgebra_dim = s.dim();
  cert.stabilizer_dim = s.dim() + 1;
  Rng rng(seed);
  for (std::size_t k = 0; k < samples; ++k) {
    Element xi = rng.vector(L.dim(), bound);
    std::size_t stab = s.dim() - kirillov_rank(s, xi);
    cert.observed.push_back(stab);
    ++cert.samples_used;
    if (stab < cert.stabilizer_dim) {
      cert.stabilizer_dim = stab;
      cert.witness = xi;
    }
    if (stab == ell && stop_when_certified) break;
  }
  if (cert.samples_used == 0) cert.stabilizer_dim = s.dim();
  cert.certified = cert.samples_used > 0 && cert.stabilizer_dim == ell;
  return cert;
}

BolsinovSubspace vxy(const LieAlgebra& L, const Element& x, const Element& y, std::size_t t_extra) {
  if (x.size() != L.dim() || y.size() != L.dim()) throw InputError("vxy: element length mismatch");
  if (!is_regular(L, x)) throw InputError("vxy: x is not regular");
  const std::size_t needed = static_cast<std::size_t>(degrees(L.type(), L.rank()).back());
  const long grid = static_cast<long>(needed + t_extra) + 64;
  BolsinovSubspace out{x, y, {}, SubspaceBasis(L.dim()), {}};
  std::vector<RatVector>& gens = out.generators;
  std::size_t dim_at_needed = 0;
  for (long t = 1; t <= grid && out.t_samples.size() < needed + t_extra; ++t) {
    Element z = x;
    for (std::size_t i = 0; i < z.size(); ++i) {
      if (sgn(y[i]) != 0) z[i] += t * y[i];
    }
    SubspaceBasis ker = kernel(L.ad_matrix(z));
    if (ker.dim() != static_cast<std::size_t>(L.rank())) continue;
    for (const auto& v : ker.vectors()) gens.push_back(primitive(v));
    out.t_samples.push_back(t);
    if (out.t_samples.size() == needed) dim_at_needed = SubspaceBasis::span(L.dim(), gens).dim();
  }
  if (out.t_samples.size() < needed + t_extra) throw InputError("vxy: degenerate direction, too few regular samples");
  out.basis = SubspaceBasis::span(L.dim(), gens);
  if (out.basis.dim() != dim_at_needed) throw InvariantError("vxy: span not stable under extra samples");
  return out;
}

bool isotropy_check(const LieAlgebra& L, const Element& x, const Element& y) {
  BolsinovSubspace v = vxy(L, x, y);
  std::vector<RatVector> w = v.generators;
  SubspaceBasis gy = kernel(L.ad_matrix(y));
  for (const auto& g : gy.vectors()) w.push_back(primitive(g));
  return kirillov_form(L, w, y).gram.is_zero();
}

BolsinovCertificate bolsinov_condition5(const LieAlgebra& L, const Element& a, std::size_t trials,
                                        std::uint64_t seed, long bound, std::size_t retries,
                                        std::size_t t_extra) {
  const auto ell = static_cast<std::size_t>(L.rank());
  const SubspaceBasis ga = kernel(L.ad_matrix(a));
  BolsinovCertificate cert;
  cert.dim_centralizer = ga.dim();
  cert.target_v = (L.dim() - ga.dim()) / 2 + ell;
  cert.target_sum = (L.dim() + ga.dim()) / 2;
  Rng rng(seed);
  for (std::size_t trial = 0; trial < trials; ++trial) {
    ++cert.trials_used;
    Element x;
    bool regular = false;
    for (std::size_t r = 0; r < retries && !regular; ++r) {
      x = rng.vector(L.dim(), bound);
      regular = is_regular(L, x);
    }
    if (!regular) continue;
    BolsinovSubspace v = vxy(L, x, a, t_extra);
    std::size_t dv = v.basis.dim();
    if (dv != cert.target_v) continue;
    cert.found = true;
    cert.x = x;
    cert.dim_v = dv;
    cert.dim_sum = span_sum({ga, v.basis}).dim();
    cert.dim_intersection = intersect(ga, v.basis).dim();
    cert.condition4 = cert.dim_sum == cert.target_sum;
    return cert;
  }
  return cert;
}

// ---------------------------------------------------------------- type A invariants

RatVector interpolate(const std::vector<Rational>& nodes, const RatVector& values) {
  const std::size_t k = nodes.size();
  if (values.size() != k) throw InputError("interpolate: size mismatch");
  RatMatrix vand(k, k);
  for (std::size_t i = 0; i < k; ++i) {
    Rational p = 1;
    for (std::size_t j = 0; j < k; ++j) {
      vand(i, j) = p;
      p *= nodes[i];
    }
  }
  auto c = solve(vand, values);
  if (!c) throw InputError("interpolate: repeated nodes");
  return *c;
}

namespace {

// f_i(X) = coefficient of t^(n - d_i) in det(t I - X), d_i = 2..n.
RatVector invariants(const RatMatrix& m) {
  RatVector cp = characteristic_polynomial(m);
  const std::size_t n = m.rows();
  RatVector f;
  for (std::size_t d = 2; d <= n; ++d) f.push_back(cp[n - d]);
  return f;
}

std::vector<Element> phi_with_rep(const LieAlgebra& L, const MatrixRep& rep, const Element& z) {
  const std::size_t n = rep.n;
  const std::size_t ell = n - 1;
  std::vector<Rational> nodes;
  for (std::size_t s = 0; s <= n; ++s) nodes.push_back(static_cast<long>(s));
  const RatMatrix zm = represent(rep, z);
  // d[i][k] = derivative of f_i at z in direction b_k
  std::vector<RatVector> d(ell, RatVector(L.dim()));
  for (std::size_t k = 0; k < L.dim(); ++k) {
    std::vector<RatVector> vals(ell, RatVector(nodes.size()));
    for (std::size_t s = 0; s < nodes.size(); ++s) {
      RatVector f = invariants(zm + nodes[s] * rep.images[k]);
      for (std::size_t i = 0; i < ell; ++i) vals[i][s] = f[i];
    }
    for (std::size_t i = 0; i < ell; ++i) d[i][k] = interpolate(nodes, vals[i])[1];
  }
  std::vector<Element> out;
  for (std::size_t i = 0; i < ell; ++i) {
    auto phi = solve(L.killing_gram(), d[i]);
    if (!phi) throw InvariantError("phi_at: Killing form is degenerate");
    out.push_back(*phi);
  }
  return out;
}

std::vector<std::vector<Element>> expansion_with_rep(const LieAlgebra& L, const MatrixRep& rep, const Element& x,
                                                     const Element& y) {
  const std::size_t ell = rep.n - 1;
  // one node beyond the largest degree d_l = n, used as a consistency check
  const std::size_t nodes_count = rep.n + 1;
  std::vector<Rational> nodes;
  std::vector<std::vector<Element>> samples;
  for (std::size_t s = 0; s < nodes_count; ++s) {
    nodes.push_back(static_cast<long>(s));
    Element p = x;
    for (std::size_t c = 0; c < p.size(); ++c) p[c] += static_cast<long>(s) * y[c];
    samples.push_back(phi_with_rep(L, rep, p));
  }
  std::vector<std::vector<Element>> out(ell);
  for (std::size_t i = 0; i < ell; ++i) {
    const std::size_t di = i + 2;
    out[i].assign(di, L.zero());
    std::vector<Rational> sub(nodes.begin(), nodes.begin() + static_cast<std::ptrdiff_t>(di));
    for (std::size_t c = 0; c < L.dim(); ++c) {
      RatVector vals(di);
      for (std::size_t s = 0; s < di; ++s) vals[s] = samples[s][i][c];
      RatVector coef = interpolate(sub, vals);
      for (std::size_t m = 0; m < di; ++m) out[i][m][c] = coef[m];
    }
    // phi_i is homogeneous of degree d_i - 1, so the fit must be exact at the unused nodes.
    for (std::size_t s = di; s < nodes_count; ++s) {
      for (std::size_t c = 0; c < L.dim(); ++c) {
        Rational v = 0;
        Rational p = 1;
        for (std::size_t m = 0; m < di; ++m) {
          v += out[i][m][c] * p;
          p *= nodes[s];
        }
        if (v != samples[s][i][c]) throw InvariantError("phi expansion has wrong degree");
      }
    }
  }
  return out;
}

}  // namespace

std::vector<Element> phi_at(const LieAlgebra& L, const Element& z) {
  return phi_with_rep(L, natural_rep_type_a(L), z);
}

std::vector<std::vector<Element>> phi_expansion(const LieAlgebra& L, const Element& x, const Element& y) {
  return expansion_with_rep(L, natural_rep_type_a(L), x, y);
}

bool mf_commute_check(const LieAlgebra& L, const Element& x, std::size_t points, std::uint64_t seed, long bound) {
  const MatrixRep rep = natural_rep_type_a(L);
  Rng rng(seed);
  for (std::size_t k = 0; k < points; ++k) {
    Element z = rng.vector(L.dim(), bound);
    // grad of f_i^(m)(x, .) at z is the t^(m-1) coefficient of phi_i(x + t z)
    std::vector<Element> grads;
    for (auto& row : expansion_with_rep(L, rep, x, z)) {
      for (auto& g : row) grads.push_back(std::move(g));
    }
    const RatVector zl = L.lower(z);
    for (std::size_t p = 0; p < grads.size(); ++p) {
      for (std::size_t q = p; q < grads.size(); ++q) {
        if (sgn(dot(zl, L.bracket(grads[p], grads[q]))) != 0) return false;
      }
    }
  }
  return true;
}

}  // namespace lieidx
