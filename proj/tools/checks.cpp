#include "checks.hpp"

#include <fstream>
#include <sstream>

#include "lieidx/random.hpp"

namespace lieidx::tool {

CheckContext::CheckContext(std::string table_path, RunConfig cfg) : path_(std::move(table_path)), cfg_(cfg) {}

const std::vector<OrbitRecord>& CheckContext::records() {
  if (!loaded_) {
    OrbitTable t = load_orbit_table(path_, cache_);
    if (!t.rejected.empty()) throw InputError("orbit table rejected a record: " + t.rejected.front());
    records_ = std::move(t.records);
    loaded_ = true;
  }
  return records_;
}

std::vector<OrbitVerdict> CheckContext::verdicts() {
  std::vector<OrbitVerdict> out;
  for (const auto& r : records()) out.push_back(verdict(r.label));
  return out;
}

const OrbitVerdict& CheckContext::verdict(const std::string& label) {
  if (auto it = verdicts_.find(label); it != verdicts_.end()) return it->second;
  for (const auto& r : records()) {
    if (r.label == label) return verdicts_.emplace(label, verify_orbit(cache_, r, cfg_)).first->second;
  }
  throw InputError("no orbit labelled " + label);
}

std::size_t InducedWitnesses::witnessed() const {
  std::size_t n = 0;
  for (const auto& c : certificates) n += c.found && c.condition4;
  return n;
}

InducedWitnesses induced_witnesses(CheckContext& ctx, char type, int rank) {
  InducedWitnesses out;
  out.algebra = std::string(1, type) + std::to_string(rank);
  const RunConfig& cfg = ctx.config();
  std::vector<std::pair<std::string, Element>> orbits;
  const LieAlgebra* L = nullptr;
  if (type == 'G') {
    // G2 has five orbits; 0, A1 and the short-root orbit are rigid
    L = &ctx.cache().chevalley('G', 2);
    orbits.emplace_back("G2", root_vector_sum(*L, {{1, 0}, {0, 1}}));
    orbits.emplace_back("G2(a1)", root_vector_sum(*L, {{0, 1}, {3, 1}}));
  } else {
    const ClassicalRealization& real = ctx.cache().realization(type, rank);
    L = &real.algebra();
    for (const auto& p : partitions_of(natural_dim(type, rank))) {
      if (!valid_for(type, rank, p) || classify_rigidity(type, p) != Rigidity::Induced) continue;
      orbits.emplace_back(p.to_string(), nilpotent_from_partition(real, p));
    }
  }
  for (const auto& [name, a] : orbits) {
    out.orbits.push_back(name);
    out.certificates.push_back(bolsinov_condition5(*L, a, cfg.bolsinov_trials,
                                                   split_seed(cfg.seed, "bolsinov/" + out.algebra + name),
                                                   cfg.coord_bound, cfg.retries, cfg.t_extra));
  }
  return out;
}

namespace {

using Algebras = std::vector<std::pair<char, int>>;

Element random_regular(const LieAlgebra& L, Rng& rng, long bound) {
  for (int k = 0; k < 200; ++k) {
    Element x = rng.vector(L.dim(), bound);
    if (is_regular(L, x)) return x;
  }
  throw InvariantError("no regular element drawn in " + L.name());
}

SubspaceBasis image_of(const LieAlgebra& L, const Element& x, const SubspaceBasis& v) {
  std::vector<RatVector> out;
  for (const auto& w : v.vectors()) out.push_back(L.bracket(x, w));
  return SubspaceBasis::span(L.dim(), out);
}

CheckResult jacobi_suite(const RunConfig& cfg) {
  CheckResult r{"6a", "Jacobi and antisymmetry", true, ""};
  std::size_t triples = 0;
  for (auto [t, n] : Algebras{{'A', 1}, {'A', 2}, {'A', 3}, {'B', 2}, {'B', 3}, {'C', 3}, {'G', 2}}) {
    LieAlgebra L = build_algebra(t, n);
    for (std::size_t i = 0; i < L.dim(); ++i) {
      for (std::size_t j = 0; j < L.dim(); ++j) {
        if (!antisymmetric_pair(L, i, j)) r.pass = false;
        for (std::size_t k = 0; k < L.dim(); ++k, ++triples) {
          if (!jacobi_holds(L, i, j, k)) r.pass = false;
        }
      }
    }
  }
  for (int n : {7, 8}) {
    LieAlgebra L = build_algebra('E', n);
    Rng rng(split_seed(cfg.seed, "jacobi/" + L.name()));
    const long top = static_cast<long>(L.dim()) - 1;
    for (int s = 0; s < 10000; ++s, ++triples) {
      auto i = static_cast<std::size_t>(rng.uniform(0, top));
      auto j = static_cast<std::size_t>(rng.uniform(0, top));
      auto k = static_cast<std::size_t>(rng.uniform(0, top));
      if (!jacobi_holds(L, i, j, k) || !antisymmetric_pair(L, i, j)) r.pass = false;
    }
  }
  r.detail = std::to_string(triples) + " triples";
  return r;
}

CheckResult isotropy_suite(const RunConfig& cfg) {
  CheckResult r{"6b", "total isotropy of g^y + V_{x,y}", true, ""};
  std::size_t pairs = 0;
  for (auto [t, n] : Algebras{{'A', 1}, {'A', 2}, {'A', 3}, {'A', 4}, {'B', 2}, {'B', 3}, {'B', 4}, {'C', 3}, {'C', 4},
                              {'D', 4}, {'G', 2}, {'F', 4}}) {
    LieAlgebra L = build_algebra(t, n);
    Rng rng(split_seed(cfg.seed, "isotropy/" + L.name()));
    for (int s = 0; s < 100; ++s, ++pairs) {
      Element x = random_regular(L, rng, 3);
      Element y = rng.vector(L.dim(), 3);
      if (!isotropy_check(L, x, y)) {
        r.pass = false;
        r.detail = "fails in " + L.name() + "; ";
      }
    }
  }
  r.detail += std::to_string(pairs) + " pairs";
  return r;
}

CheckResult bracket_image_suite(const RunConfig& cfg) {
  CheckResult r{"6c", "[x,V] = [y,V]", true, ""};
  std::size_t pairs = 0;
  for (auto [t, n] : Algebras{{'A', 1}, {'A', 2}, {'A', 3}, {'B', 2}, {'B', 3}, {'C', 3}, {'G', 2}}) {
    LieAlgebra L = build_algebra(t, n);
    Rng rng(split_seed(cfg.seed, "images/" + L.name()));
    for (int s = 0; s < 20; ++s, ++pairs) {
      Element x = random_regular(L, rng, 3);
      Element y = rng.vector(L.dim(), 3);
      BolsinovSubspace v = vxy(L, x, y, cfg.t_extra);
      if (image_of(L, x, v.basis) != image_of(L, y, v.basis)) {
        r.pass = false;
        r.detail = "fails in " + L.name() + "; ";
      }
    }
  }
  r.detail += std::to_string(pairs) + " pairs";
  return r;
}

CheckResult degree_suite() {
  CheckResult r{"6g", "sum of degrees equals b", true, ""};
  std::size_t n = 0;
  for (auto [t, k] : Algebras{{'A', 1}, {'A', 2}, {'A', 3}, {'A', 4}, {'B', 2}, {'B', 3}, {'B', 4}, {'C', 3}, {'C', 4},
                              {'D', 4}, {'D', 5}, {'E', 6}, {'E', 7}, {'E', 8}, {'F', 4}, {'G', 2}}) {
    RootSystem rs(t, k);
    long sum = 0;
    for (int d : degrees(t, k)) sum += d;
    if (static_cast<std::size_t>(sum) != rs.b()) {
      r.pass = false;
      r.detail = std::string("fails for ") + t + std::to_string(k) + "; ";
    }
    ++n;
  }
  r.detail += std::to_string(n) + " algebras";
  return r;
}

std::vector<ClassicalSweepReport> index_sweeps(const RunConfig& cfg) {
  std::vector<ClassicalSweepReport> out;
  for (auto [t, n] : Algebras{{'A', 3}, {'B', 3}, {'C', 3}, {'D', 4}}) out.push_back(sweep(t, n, cfg));
  return out;
}

std::string join(const std::vector<std::string>& items) {
  std::string s;
  for (const auto& x : items) s += (s.empty() ? "" : ", ") + x;
  return s;
}

}  // namespace

std::vector<CheckResult> property_suites(CheckContext& ctx) {
  const RunConfig& cfg = ctx.config();
  std::vector<CheckResult> out;
  out.push_back(jacobi_suite(cfg));
  out.push_back(isotropy_suite(cfg));
  out.push_back(bracket_image_suite(cfg));

  CheckResult sym{"6d", "weight symmetry and S = 0 on shipped orbits", true, ""};
  CheckResult oracle{"6e", "center criterion agrees with center_of", true, ""};
  CheckResult vin{"6f", "Vinberg bound and parity", true, ""};
  std::vector<std::string> bad_sym, bad_oracle, bad_vin;
  const std::vector<OrbitVerdict> all = ctx.verdicts();
  for (const auto& v : all) {
    if (!v.torus || !v.torus->symmetric || v.torus->bookkeeping != 0) bad_sym.push_back(v.label);
    if (!v.center_criterion_agrees) bad_oracle.push_back(v.label);
    if (!v.vinberg_parity_ok) bad_vin.push_back(v.label);
  }
  std::size_t rows = 0;
  for (const auto& rep : index_sweeps(cfg)) {
    for (const auto& row : rep.rows) {
      if (!row.valid) continue;
      ++rows;
      for (std::size_t s : row.index.observed) {
        if (s < static_cast<std::size_t>(rep.rank) || (row.dim_centralizer - s) % 2 != 0) {
          bad_vin.push_back(sweep_label(rep.type, rep.rank, row.partition));
          break;
        }
      }
    }
  }
  const std::string orbits = std::to_string(all.size()) + " orbits";
  sym.pass = bad_sym.empty();
  sym.detail = bad_sym.empty() ? orbits : "fails for " + join(bad_sym);
  oracle.pass = bad_oracle.empty();
  oracle.detail = bad_oracle.empty() ? orbits : "fails for " + join(bad_oracle);
  vin.pass = bad_vin.empty();
  vin.detail = bad_vin.empty() ? orbits + " and " + std::to_string(rows) + " sweep rows" : "fails for " + join(bad_vin);
  out.push_back(sym);
  out.push_back(oracle);
  out.push_back(vin);
  out.push_back(degree_suite());
  return out;
}

namespace {

CheckResult criterion1(CheckContext& ctx) {
  CheckResult r{"1", "E7 dim-41 structure", false, ""};
  const OrbitVerdict& v = ctx.verdict("E7.dim41");
  std::size_t one = 0, two = 0, other = 0;
  bool all_nonzero = v.torus.has_value();
  if (v.torus) {
    for (const auto& m : v.torus->matrices) {
      all_nonzero = all_nonzero && m.evaluated && m.nonzero;
      if (m.weight[0] != 1) {
        ++other;
      } else if (m.order == 1) {
        ++one;
      } else if (m.order == 2) {
        ++two;
      } else {
        ++other;
      }
    }
  }
  const std::size_t le = v.torus ? v.torus->dim_le : 0;
  const bool cond1 = v.torus && v.torus->condition == 1;
  std::ostringstream d;
  d << "dim g^e " << v.dim_centralizer << ", dim l^e " << le << ", dim z " << v.dim_center << ", t-weight 1 matrices "
    << one << "x1x1 + " << two << "x2x2, q_i all nonzero " << (all_nonzero ? "yes" : "no") << ", condition "
    << (cond1 ? "1" : "not 1") << ", index " << v.index.stabilizer_dim;
  r.detail = d.str();
  r.pass = v.dim_centralizer == 41 && le == 23 && v.dim_center == 2 && one == 4 && two == 2 && all_nonzero && cond1 &&
           v.index.certified && v.index.stabilizer_dim == 7;
  return r;
}

CheckResult criterion2(CheckContext& ctx) {
  CheckResult r{"2", "E8 dim-84 structure", false, ""};
  const OrbitVerdict& v = ctx.verdict("E8.dim84");
  std::size_t singular = 0;
  bool singular_ok = true, others_ok = true;
  if (v.torus) {
    for (const auto& m : v.torus->matrices) {
      if (!m.evaluated) {
        others_ok = false;
      } else if (!m.nonzero) {
        ++singular;
        singular_ok = singular_ok && m.order == 5 && m.minor_rank == 4;
      }
    }
  }
  const std::size_t le = v.torus ? v.torus->dim_le : 0;
  const long s = v.torus ? v.torus->bookkeeping : -1;
  const bool cond2 = v.torus && v.torus->condition == 2;
  std::ostringstream d;
  d << "dim g^e " << v.dim_centralizer << ", dim l^e " << le << ", S " << s << ", singular matrices " << singular
    << (singular_ok ? " (order 5, minor rank 4)" : " (wrong shape)") << ", condition " << (cond2 ? "2" : "not 2")
    << ", index " << v.index.stabilizer_dim;
  r.detail = d.str();
  r.pass = v.dim_centralizer == 84 && le == 48 && s == 0 && singular == 1 && singular_ok && others_ok && cond2 &&
           v.index.certified && v.index.stabilizer_dim == 8;
  return r;
}

CheckResult criterion3(CheckContext& ctx) {
  CheckResult r{"3", "center dimensions", true, ""};
  const std::map<std::string, std::size_t> expected = {{"E7.dim41", 2},  {"E8.dim112", 2}, {"E8.dim84", 2},
                                                       {"E8.dim76", 2},  {"E8.dim46a", 2}, {"E8.dim46b", 2},
                                                       {"E8.dim72", 3}};
  std::vector<std::string> bad;
  std::size_t checked = 0;
  const std::vector<OrbitVerdict> all = ctx.verdicts();
  for (const auto& v : all) {
    std::size_t want = 0;
    if (auto it = expected.find(v.label); it != expected.end()) {
      want = it->second;
    } else if (v.type == 'G' || v.type == 'F' || (v.type == 'E' && v.rank == 6)) {
      want = 1;
    } else {
      continue;
    }
    ++checked;
    if (v.dim_center != want) bad.push_back(v.label + " has " + std::to_string(v.dim_center));
  }
  for (const auto& [label, dim] : expected) {
    bool found = false;
    for (const auto& v : all) found = found || v.label == label;
    if (!found) bad.push_back(label + " missing");
  }
  r.pass = bad.empty();
  r.detail = bad.empty() ? std::to_string(checked) + " orbits checked" : join(bad);
  return r;
}

CheckResult criterion4(CheckContext& ctx) {
  CheckResult r{"4", "index certificates", true, ""};
  std::vector<std::string> bad;
  const std::vector<OrbitVerdict> all = ctx.verdicts();
  for (const auto& v : all) {
    if (!v.index.certified || v.index.stabilizer_dim != static_cast<std::size_t>(v.rank)) bad.push_back(v.label);
  }
  std::size_t rows = 0;
  for (const auto& rep : index_sweeps(ctx.config())) {
    for (const auto& row : rep.rows) {
      if (!row.valid) continue;
      ++rows;
      if (!row.index.certified || row.index.stabilizer_dim != static_cast<std::size_t>(rep.rank)) {
        bad.push_back(sweep_label(rep.type, rep.rank, row.partition));
      }
    }
  }
  r.pass = bad.empty();
  r.detail = bad.empty() ? std::to_string(all.size()) + " shipped orbits and " + std::to_string(rows) +
                               " sweep orbits (A3, B3, C3, D4) certified"
                         : "not certified: " + join(bad);
  return r;
}

CheckResult criterion5(CheckContext& ctx) {
  CheckResult r{"5", "Bolsinov witnesses for >= 3 induced orbits in A3, B2, G2", true, ""};
  std::vector<std::string> parts;
  for (auto [t, n] : Algebras{{'A', 3}, {'B', 2}, {'G', 2}}) {
    InducedWitnesses w = induced_witnesses(ctx, t, n);
    const std::size_t got = w.witnessed();
    if (got < 3) r.pass = false;
    std::string p = w.algebra + " " + std::to_string(got) + "/" + std::to_string(w.orbits.size());
    if (w.orbits.size() < 3) p += " (only " + std::to_string(w.orbits.size()) + " induced nonzero orbits exist)";
    parts.push_back(p);
  }
  r.detail = join(parts);
  return r;
}

CheckResult criterion6(CheckContext& ctx) {
  CheckResult r{"6", "property suites", true, ""};
  std::vector<std::string> failed;
  for (const auto& c : property_suites(ctx)) {
    if (!c.pass) {
      r.pass = false;
      failed.push_back(c.id + " " + c.name + ": " + c.detail);
    }
  }
  r.detail = failed.empty() ? "7 suites passed" : join(failed);
  return r;
}

CheckResult criterion7(CheckContext& ctx) {
  CheckResult r{"7", "rigid B/D orbits: powers of e and index", true, ""};
  std::vector<std::string> bad;
  std::size_t rigid = 0;
  for (auto [t, n] : Algebras{{'B', 2}, {'B', 3}, {'D', 4}}) {
    ClassicalSweepReport rep = sweep(t, n, ctx.config());
    for (const auto& row : rep.rows) {
      if (!row.valid || row.rigidity != Rigidity::Rigid) continue;
      ++rigid;
      if (!row.powers_check || !row.index.certified || row.index.stabilizer_dim != static_cast<std::size_t>(n)) {
        bad.push_back(sweep_label(t, n, row.partition));
      }
    }
    if (t == 'B' && n == 3) {
      for (const auto& row : rep.rows) {
        if (row.partition != Partition({3, 3, 1})) continue;
        bool ok = row.valid && row.powers_predicted == false && !row.powers_check && row.rigidity == Rigidity::Induced;
        if (!ok) bad.push_back("B3(3,3,1) not flagged");
      }
    }
  }
  r.pass = bad.empty();
  r.detail = bad.empty() ? std::to_string(rigid) + " rigid rows pass; B3(3,3,1) is induced and not generated by powers"
                         : join(bad);
  return r;
}

CheckResult criterion8(CheckContext& ctx) {
  CheckResult r{"8", "argument-shift family commutes in sl3", false, ""};
  LieAlgebra L = build_algebra('A', 2);
  Rng rng(split_seed(ctx.config().seed, "mf/A2"));
  Element x = rng.vector(L.dim(), ctx.config().coord_bound);
  r.pass = mf_commute_check(L, x, 20, split_seed(ctx.config().seed, "mf/A2/points"), ctx.config().coord_bound);
  r.detail = "20 random points";
  return r;
}

}  // namespace

CheckResult acceptance_criterion(CheckContext& ctx, int n) {
  switch (n) {
    case 1: return criterion1(ctx);
    case 2: return criterion2(ctx);
    case 3: return criterion3(ctx);
    case 4: return criterion4(ctx);
    case 5: return criterion5(ctx);
    case 6: return criterion6(ctx);
    case 7: return criterion7(ctx);
    case 8: return criterion8(ctx);
    default: throw InputError("no criterion " + std::to_string(n));
  }
}

}  // namespace lieidx::tool
