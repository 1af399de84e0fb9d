#include "lieidx/elashvili.hpp"

#include <algorithm>

#include "lieidx/random.hpp"

namespace lieidx {

void RunConfig::validate() const {
  if (samples == 0) throw InputError("samples must be positive");
  if (coord_bound <= 0) throw InputError("coord_bound must be positive");
  if (t_extra == 0) throw InputError("t_extra must be positive");
  if (retries == 0) throw InputError("retries must be positive");
  if (bolsinov_trials == 0) throw InputError("bolsinov_trials must be positive");
  if (torus_candidates == 0) throw InputError("torus_candidates must be positive");
}

namespace {

bool is_diagonal(const RatMatrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (i != j && sgn(m(i, j)) != 0) return false;
    }
  }
  return true;
}

bool ad_semisimple(const LieAlgebra& L, const Element& x) {
  RatMatrix ad = L.ad_matrix(x);
  if (is_diagonal(ad)) return true;
  try {
    std::size_t total = 0;
    for (const auto& es : rational_eigenspaces(ad)) total += es.space.dim();
    return total == L.dim();
  } catch (const InvariantError&) {
    return false;
  }
}

bool commute(const LieAlgebra& L, const Element& a, const Element& b) { return is_zero(L.bracket(a, b)); }

SubspaceBasis cartan_span(const LieAlgebra& L) {
  std::vector<RatVector> hs;
  for (std::size_t i : L.cartan_indices()) hs.push_back(L.basis_vector(i));
  return SubspaceBasis::span(L.dim(), hs);
}

RatVector add(const RatVector& a, const RatVector& b, long sign) {
  RatVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + sign * b[i];
  return out;
}

}  // namespace

void validate_torus(const LieAlgebra& L, const SL2Triple& triple, const TorusPair& tp) {
  if (tp.t.empty()) throw InputError("torus: t is empty");
  if (tp.t1.size() < tp.t.size()) throw InputError("torus: t1 shorter than t");
  for (std::size_t i = 0; i < tp.t.size(); ++i) {
    if (tp.t[i] != tp.t1[i]) throw InputError("torus: t1 must start with the generators of t");
  }
  for (const auto& x : tp.t1) {
    if (x.size() != L.dim()) throw InputError("torus: generator length mismatch");
    if (!commute(L, x, triple.e)) throw InputError("torus: generator not in g^e");
    if (!commute(L, x, triple.f)) throw InputError("torus: generator not in g^f");
  }
  if (tp.t1_span(L.dim()).dim() != tp.t1.size()) throw InputError("torus: t1 generators are dependent");
  for (std::size_t i = 0; i < tp.t1.size(); ++i) {
    for (std::size_t j = i + 1; j < tp.t1.size(); ++j) {
      if (!commute(L, tp.t1[i], tp.t1[j])) throw InputError("torus: generators do not commute");
    }
    if (!ad_semisimple(L, tp.t1[i])) throw InputError("torus: generator is not semisimple over Q");
  }
}

std::vector<TorusPair> torus_candidates(const LieAlgebra& L, const SL2Triple& triple, std::size_t limit) {
  std::vector<TorusPair> out;
  Subalgebra gef = centralizer(L, {triple.e, triple.f});
  if (gef.dim() == 0) return out;
  SubspaceBasis toral = intersect(gef.basis(), cartan_span(L));
  if (toral.dim() > 0) {
    std::vector<RatVector> c;
    for (const auto& v : toral.vectors()) c.push_back(primitive(v));
    const std::size_t r = c.size();
    // (t, index of a basis vector t can replace)
    std::vector<std::pair<RatVector, std::size_t>> ts;
    for (std::size_t i = 0; i < r; ++i) ts.emplace_back(c[i], i);
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t j = i + 1; j < r; ++j) {
        ts.emplace_back(primitive(add(c[i], c[j], 1)), j);
        ts.emplace_back(primitive(add(c[i], c[j], -1)), j);
      }
    }
    for (std::size_t size = r; size >= 1 && out.size() < limit; --size) {
      for (const auto& [t, skip] : ts) {
        std::vector<std::size_t> rest;
        for (std::size_t k = 0; k < r; ++k) {
          if (k != skip) rest.push_back(k);
        }
        // subsets of `rest` with size - 1 elements, in lexicographic order
        std::vector<bool> pick(rest.size(), false);
        std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(size - 1), true);
        do {
          TorusPair tp;
          tp.t = {t};
          tp.t1 = {t};
          for (std::size_t k = 0; k < rest.size(); ++k) {
            if (pick[k]) tp.t1.push_back(c[rest[k]]);
          }
          out.push_back(std::move(tp));
          if (out.size() >= limit) return out;
        } while (std::prev_permutation(pick.begin(), pick.end()));
      }
    }
    return out;
  }
  std::vector<RatVector> semisimple;
  std::vector<RatVector> basis;
  for (const auto& v : gef.basis().vectors()) basis.push_back(primitive(v));
  for (const auto& v : basis) {
    if (ad_semisimple(L, v)) semisimple.push_back(v);
  }
  if (semisimple.empty()) {
    for (std::size_t i = 0; i < basis.size() && semisimple.empty(); ++i) {
      for (std::size_t j = i + 1; j < basis.size(); ++j) {
        RatVector s = add(basis[i], basis[j], 1);
        if (ad_semisimple(L, s)) {
          semisimple.push_back(s);
          break;
        }
      }
    }
  }
  for (const auto& t : semisimple) {
    TorusPair tp;
    tp.t = {t};
    tp.t1 = {t};
    for (const auto& u : semisimple) {
      if (u == t) continue;
      bool ok = true;
      for (const auto& w : tp.t1) ok = ok && commute(L, u, w);
      std::vector<RatVector> trial = tp.t1;
      trial.push_back(u);
      if (ok && SubspaceBasis::span(L.dim(), trial).dim() == trial.size()) tp.t1.push_back(u);
    }
    out.push_back(std::move(tp));
    if (out.size() >= limit) break;
  }
  return out;
}

TorusPair find_tori(const LieAlgebra& L, const SL2Triple& triple, const OrbitRecord& record) {
  if (record.torus_t) {
    Subalgebra ge = centralizer(L, {triple.e});
    auto to_element = [&](const RatVector& coords) {
      if (coords.size() != ge.dim()) throw InputError("torus coordinates do not match dim g^e");
      return ge.basis().combine(coords);
    };
    TorusPair tp;
    tp.t = {to_element(*record.torus_t)};
    tp.t1 = tp.t;
    std::vector<RatVector> given;
    for (const auto& c : record.torus_t1) given.push_back(to_element(c));
    if (!SubspaceBasis::span(L.dim(), given).contains(tp.t[0])) throw InputError("torus: t is not inside t1");
    for (const auto& g : given) {
      std::vector<RatVector> trial = tp.t1;
      trial.push_back(g);
      if (SubspaceBasis::span(L.dim(), trial).dim() == trial.size()) tp.t1.push_back(g);
    }
    validate_torus(L, triple, tp);
    return tp;
  }
  auto cands = torus_candidates(L, triple, 1);
  if (cands.empty()) throw SearchError("no semisimple element in g^e and g^f");
  return cands.front();
}

std::vector<RatVector> WeightDecomposition::positive_weights() const {
  std::vector<RatVector> out;
  for (const auto& [w, space] : spaces) {
    for (std::size_t k = 0; k < t_dim; ++k) {
      int s = sgn(w[k]);
      if (s == 0) continue;
      if (s > 0) out.push_back(w);
      break;
    }
  }
  return out;
}

std::size_t WeightDecomposition::multiplicity(const RatVector& w) const {
  auto it = spaces.find(w);
  return it == spaces.end() ? 0 : it->second.dim();
}

long WeightDecomposition::bookkeeping() const {
  long s = 0;
  for (const auto& w : positive_weights()) s += static_cast<long>(multiplicity(w));
  return 2 * s + static_cast<long>(le.dim()) - static_cast<long>(ge_dim);
}

bool WeightDecomposition::symmetric() const {
  for (const auto& [w, space] : spaces) {
    RatVector neg(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) neg[i] = -w[i];
    if (multiplicity(neg) != space.dim()) return false;
  }
  return true;
}

WeightDecomposition weight_decompose(const LieAlgebra& L, const Subalgebra& ge, const TorusPair& tp) {
  WeightDecomposition wd;
  wd.t_dim = tp.t.size();
  wd.ge_dim = ge.dim();
  const std::size_t r = tp.t1.size();
  std::vector<RatMatrix> ads;
  bool diagonal = true;
  for (const auto& x : tp.t1) {
    ads.push_back(L.ad_matrix(x));
    diagonal = diagonal && is_diagonal(ads.back());
  }
  if (diagonal) {
    std::map<RatVector, std::vector<std::size_t>> coords;
    for (std::size_t j = 0; j < L.dim(); ++j) {
      RatVector w(r);
      for (std::size_t k = 0; k < r; ++k) w[k] = ads[k](j, j);
      coords[w].push_back(j);
    }
    for (const auto& [w, idx] : coords) {
      std::vector<RatVector> proj;
      for (const auto& b : ge.basis().vectors()) {
        RatVector p(L.dim());
        bool nz = false;
        for (std::size_t j : idx) {
          p[j] = b[j];
          nz = nz || sgn(b[j]) != 0;
        }
        if (nz) proj.push_back(std::move(p));
      }
      if (!proj.empty()) wd.spaces[w] = SubspaceBasis::span(L.dim(), proj);
    }
  } else {
    const std::size_t n = ge.dim();
    std::vector<std::pair<RatVector, SubspaceBasis>> pieces = {{RatVector{}, SubspaceBasis::whole(n)}};
    for (const auto& x : tp.t1) {
      RatMatrix m(n, n);
      for (std::size_t j = 0; j < n; ++j) {
        Element y = L.bracket(x, ge.vector(j));
        if (!ge.contains(y)) throw InvariantError("weight_decompose: g^e is not stable under the torus");
        RatVector c = ge.basis().coordinates(y);
        for (std::size_t i = 0; i < n; ++i) m(i, j) = c[i];
      }
      auto eig = rational_eigenspaces(m);
      std::vector<std::pair<RatVector, SubspaceBasis>> next;
      for (const auto& [w, piece] : pieces) {
        for (const auto& es : eig) {
          SubspaceBasis s = intersect(piece, es.space);
          if (s.empty()) continue;
          RatVector w2 = w;
          w2.push_back(es.value);
          next.emplace_back(std::move(w2), std::move(s));
        }
      }
      pieces = std::move(next);
    }
    for (const auto& [w, piece] : pieces) {
      std::vector<RatVector> vs;
      for (const auto& c : piece.vectors()) vs.push_back(ge.basis().combine(c));
      wd.spaces[w] = SubspaceBasis::span(L.dim(), vs);
    }
  }
  std::size_t total = 0;
  std::vector<RatVector> le, l1e;
  for (const auto& [w, space] : wd.spaces) {
    total += space.dim();
    bool zero_t = true, zero_all = true;
    for (std::size_t k = 0; k < r; ++k) {
      if (sgn(w[k]) == 0) continue;
      zero_all = false;
      if (k < wd.t_dim) zero_t = false;
    }
    if (zero_t) le.insert(le.end(), space.vectors().begin(), space.vectors().end());
    if (zero_all) l1e = space.vectors();
  }
  if (total != ge.dim()) throw InvariantError("weight_decompose: weight spaces do not add up to g^e");
  wd.le = SubspaceBasis::span(L.dim(), le);
  wd.l1e = SubspaceBasis::span(L.dim(), l1e);
  return wd;
}

std::vector<PairingMatrix> pairing_matrices(const LieAlgebra& L, const WeightDecomposition& wd) {
  std::vector<PairingMatrix> out;
  for (const auto& w : wd.positive_weights()) {
    RatVector neg(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) neg[i] = -w[i];
    const std::size_t m = wd.multiplicity(w);
    if (m != wd.multiplicity(neg)) {
      throw InvariantError("pairing_matrices: weights " + std::to_string(m) + " and " +
                           std::to_string(wd.multiplicity(neg)) + " differ in multiplicity");
    }
    if (m == 0) continue;
    PairingMatrix pm;
    pm.weight = w;
    pm.v = wd.spaces.at(w).vectors();
    pm.w = wd.spaces.at(neg).vectors();
    pm.entries.assign(m, std::vector<Poly>(m));
    for (std::size_t k = 0; k < m; ++k) {
      for (std::size_t l = 0; l < m; ++l) {
        Element x = L.bracket(pm.v[k], pm.w[l]);
        if (!wd.l1e.contains(x)) throw InvariantError("pairing_matrices: bracket outside l1^e");
        pm.entries[k][l] = Poly::linear(wd.l1e.coordinates(x));
      }
    }
    out.push_back(std::move(pm));
  }
  return out;
}

Poly pairing_determinant(const PairingMatrix& pm) { return determinant(pm.entries); }

bool qi_nonzero(const PairingMatrix& pm) { return !pairing_determinant(pm).is_zero(); }

std::size_t minor_rank(const PairingMatrix& pm) {
  const std::size_t m = pm.order();
  if (m > kMaxPolyDetOrder) throw InputError("minor_rank: order above bound");
  for (std::size_t k = m; k >= 1; --k) {
    std::vector<bool> rpick(m, false);
    std::fill(rpick.begin(), rpick.begin() + static_cast<std::ptrdiff_t>(k), true);
    do {
      std::vector<std::size_t> rows;
      for (std::size_t i = 0; i < m; ++i) {
        if (rpick[i]) rows.push_back(i);
      }
      std::vector<bool> cpick(m, false);
      std::fill(cpick.begin(), cpick.begin() + static_cast<std::ptrdiff_t>(k), true);
      do {
        std::vector<std::size_t> cols;
        for (std::size_t i = 0; i < m; ++i) {
          if (cpick[i]) cols.push_back(i);
        }
        if (!determinant(submatrix(pm.entries, rows, cols)).is_zero()) return k;
      } while (std::prev_permutation(cpick.begin(), cpick.end()));
    } while (std::prev_permutation(rpick.begin(), rpick.end()));
  }
  return 0;
}

namespace {

TorusStage evaluate(const LieAlgebra& L, const Subalgebra& ge, const TorusPair& tp, SubspaceBasis* le = nullptr) {
  TorusStage st;
  st.t = ge.basis().coordinates(tp.t[0]);
  for (const auto& x : tp.t1) st.t1.push_back(ge.basis().coordinates(x));
  WeightDecomposition wd = weight_decompose(L, ge, tp);
  st.dim_le = wd.le.dim();
  st.dim_l1e = wd.l1e.dim();
  st.bookkeeping = wd.bookkeeping();
  st.symmetric = wd.symmetric();
  if (le) *le = wd.le;
  for (const auto& [w, space] : wd.spaces) {
    if (sgn(w[0]) != 0) st.t_multiplicities[w[0]] += space.dim();
  }
  std::size_t zeros = 0;
  std::optional<std::size_t> zero_index;
  for (const auto& pm : pairing_matrices(L, wd)) {
    PairingSummary s;
    s.weight = pm.weight;
    s.order = pm.order();
    if (s.order > kMaxPolyDetOrder) {
      s.evaluated = false;
      ++st.unsupported;
      st.matrices.push_back(std::move(s));
      continue;
    }
    Poly d = pairing_determinant(pm);
    s.nonzero = !d.is_zero();
    s.minor_rank = s.nonzero ? s.order : minor_rank(pm);
    s.determinant = d.to_string("v");
    if (!s.nonzero) {
      ++zeros;
      zero_index = st.matrices.size();
    }
    st.matrices.push_back(std::move(s));
  }
  if (st.unsupported > 0) return st;
  if (zeros == 0) {
    st.condition = 1;
  } else if (zeros == 1) {
    const auto& s = st.matrices[*zero_index];
    if (s.minor_rank + 1 == s.order) st.condition = 2;
  }
  return st;
}

}  // namespace

TorusStage evaluate_torus(const LieAlgebra& L, const Subalgebra& ge, const TorusPair& tp, const RunConfig& cfg,
                          const std::string& label) {
  SubspaceBasis le;
  TorusStage st = evaluate(L, ge, tp, &le);
  st.le_index = certified_index(Subalgebra(L, le), cfg.samples, split_seed(cfg.seed, label + "/le"), cfg.coord_bound);
  return st;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Certified: return "CERTIFIED";
    case Verdict::StructureConfirmed: return "STRUCTURE-CONFIRMED";
    case Verdict::Inconclusive: return "INCONCLUSIVE";
  }
  return "INCONCLUSIVE";
}

StageError::StageError(char stage, const std::string& what)
    : std::runtime_error(std::string("stage ") + stage + ": " + what), stage_(stage) {}

OrbitVerdict verify_orbit(AlgebraCache& cache, const OrbitRecord& record, const RunConfig& cfg) {
  OrbitVerdict out;
  out.label = record.label;
  out.type = record.type;
  out.rank = record.rank;
  const LieAlgebra* L = nullptr;
  std::optional<Subalgebra> ge;
  SL2Triple triple;
  try {
    L = &cache.algebra_for(record);
    Element e = cache.representative(record);
    ge.emplace(centralizer(*L, {e}));
    SubspaceBasis z = center_of(*ge);
    out.dim_g = L->dim();
    out.dim_centralizer = ge->dim();
    out.dim_center = z.dim();
    out.dims_match = ge->dim() == record.dim_centralizer && z.dim() == record.dim_center;
    triple = sl2_triple(*L, e);
    CenterCriterion crit(*L, triple);
    out.center_criterion_agrees = true;
    for (const auto& v : ge->basis().vectors()) {
      if (crit.holds(v) != z.contains(v)) out.center_criterion_agrees = false;
    }
  } catch (const std::exception& ex) {
    throw StageError('a', ex.what());
  }

  try {
    out.index = certified_index(*ge, cfg.samples, split_seed(cfg.seed, record.label), cfg.coord_bound);
    const auto rank = static_cast<std::size_t>(record.rank);
    out.vinberg_parity_ok = true;
    for (std::size_t s : out.index.observed) {
      if (s < rank || (ge->dim() - s) % 2 != 0) out.vinberg_parity_ok = false;
    }
  } catch (const std::exception& ex) {
    throw StageError('b', ex.what());
  }

  out.center_dim_one = out.dim_center == 1;

  try {
    SubspaceBasis le;
    if (record.torus_t) {
      out.torus = evaluate(*L, *ge, find_tori(*L, triple, record), &le);
      out.torus->from_record = true;
      out.torus->candidates_tried = 1;
    } else {
      auto cands = torus_candidates(*L, triple, cfg.torus_candidates);
      if (cands.empty()) out.torus_note = "no semisimple element in g^e and g^f";
      std::size_t tried = 0;
      for (const auto& tp : cands) {
        ++tried;
        SubspaceBasis cand_le;
        TorusStage st = evaluate(*L, *ge, tp, &cand_le);
        bool improves = !out.torus || (st.condition && !out.torus->condition) ||
                        (!out.torus->condition && out.torus->unsupported > 0 && st.unsupported == 0);
        if (improves) {
          out.torus = std::move(st);
          le = std::move(cand_le);
        }
        if (out.torus->condition) break;
      }
      if (out.torus) out.torus->candidates_tried = tried;
    }
    if (out.torus) {
      out.torus->le_index = certified_index(Subalgebra(*L, le), cfg.samples,
                                            split_seed(cfg.seed, record.label + "/le"), cfg.coord_bound);
    }
  } catch (const std::exception& ex) {
    throw StageError('d', ex.what());
  }

  if (record.dim_le && (!out.torus || out.torus->dim_le != *record.dim_le)) {
    out.expectation_failures.push_back("dim l^e differs from the record");
  }
  if (record.condition && (!out.torus || out.torus->condition != record.condition)) {
    out.expectation_failures.push_back("condition differs from the record");
  }

  if (out.index.certified) {
    out.verdict = Verdict::Certified;
  } else if (out.center_dim_one || (out.torus && out.torus->condition && out.torus->le_index.certified)) {
    out.verdict = Verdict::StructureConfirmed;
  }
  return out;
}

}  // namespace lieidx
