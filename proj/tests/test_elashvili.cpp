#include <gtest/gtest.h>

#include <fstream>
#include <map>

#include "lieidx/elashvili.hpp"
#include "lieidx/random.hpp"

using namespace lieidx;

namespace {

const std::vector<OrbitRecord>& shipped() {
  static const std::vector<OrbitRecord> recs = [] {
    std::ifstream in(std::string(LIEIDX_DATA_DIR) + "/exceptional_rigid.orbits");
    return parse_orbit_table(in, "exceptional_rigid.orbits");
  }();
  return recs;
}

const OrbitRecord& record(const std::string& label) {
  for (const auto& r : shipped()) {
    if (r.label == label) return r;
  }
  throw std::runtime_error("no record " + label);
}

AlgebraCache& cache() {
  static AlgebraCache c;
  return c;
}

std::size_t count_order(const TorusStage& st, std::size_t order, const Rational& t_value) {
  std::size_t n = 0;
  for (const auto& m : st.matrices) {
    if (m.order == order && m.weight[0] == t_value) ++n;
  }
  return n;
}

}  // namespace

TEST(Elashvili, E7Dim41RecordTorus) {
  OrbitVerdict v = verify_orbit(cache(), record("E7.dim41"), RunConfig{});
  EXPECT_EQ(v.dim_centralizer, 41u);
  EXPECT_EQ(v.dim_center, 2u);
  ASSERT_TRUE(v.torus.has_value());
  const TorusStage& st = *v.torus;
  EXPECT_TRUE(st.from_record);
  EXPECT_EQ(st.t1.size(), 3u);
  EXPECT_EQ(st.dim_le, 23u);
  EXPECT_EQ(st.bookkeeping, 0);
  EXPECT_TRUE(st.symmetric);
  std::map<Rational, std::size_t> mult = {{-2, 1}, {-1, 8}, {1, 8}, {2, 1}};
  EXPECT_EQ(st.t_multiplicities, mult);
  // weight 1 on t: four 1x1 and two 2x2; weight 2 on t: one 1x1
  EXPECT_EQ(count_order(st, 1, 1), 4u);
  EXPECT_EQ(count_order(st, 2, 1), 2u);
  EXPECT_EQ(count_order(st, 1, 2), 1u);
  EXPECT_EQ(st.matrices.size(), 7u);
  for (const auto& m : st.matrices) {
    EXPECT_TRUE(m.nonzero) << m.determinant;
    EXPECT_EQ(m.minor_rank, m.order);
  }
  EXPECT_EQ(st.unsupported, 0u);
  ASSERT_TRUE(st.condition.has_value());
  EXPECT_EQ(*st.condition, 1);
  EXPECT_TRUE(st.le_index.certified);
  EXPECT_TRUE(v.index.certified);
  EXPECT_EQ(v.index.stabilizer_dim, 7u);
  EXPECT_TRUE(v.expectation_failures.empty());
  EXPECT_EQ(v.verdict, Verdict::Certified);
}

TEST(Elashvili, E8Dim84RecordTorus) {
  OrbitVerdict v = verify_orbit(cache(), record("E8.dim84"), RunConfig{});
  EXPECT_EQ(v.dim_centralizer, 84u);
  ASSERT_TRUE(v.torus.has_value());
  const TorusStage& st = *v.torus;
  EXPECT_EQ(st.dim_le, 48u);
  EXPECT_EQ(st.bookkeeping, 0);
  std::size_t singular = 0;
  for (const auto& m : st.matrices) {
    if (m.nonzero) {
      EXPECT_LE(m.order, 2u);
      continue;
    }
    ++singular;
    EXPECT_EQ(m.order, 5u);
    EXPECT_EQ(m.minor_rank, 4u);
    EXPECT_EQ(m.determinant, "0");
  }
  EXPECT_EQ(singular, 1u);
  ASSERT_TRUE(st.condition.has_value());
  EXPECT_EQ(*st.condition, 2);
  EXPECT_EQ(v.index.stabilizer_dim, 8u);
  EXPECT_EQ(v.verdict, Verdict::Certified);
}

TEST(Elashvili, E8Dim76ConditionTwo) {
  OrbitVerdict v = verify_orbit(cache(), record("E8.dim76"), RunConfig{});
  ASSERT_TRUE(v.torus && v.torus->condition);
  EXPECT_EQ(*v.torus->condition, 2);
  EXPECT_EQ(v.index.stabilizer_dim, 8u);
  EXPECT_TRUE(v.expectation_failures.empty());
}

TEST(Elashvili, G2MinimalOrbit) {
  OrbitVerdict v = verify_orbit(cache(), record("G2.dim8"), RunConfig{});
  EXPECT_EQ(v.dim_center, 1u);
  EXPECT_TRUE(v.center_dim_one);
  EXPECT_TRUE(v.index.certified);
  EXPECT_EQ(v.index.stabilizer_dim, 2u);
  EXPECT_TRUE(v.vinberg_parity_ok);
  EXPECT_EQ(v.verdict, Verdict::Certified);
}

TEST(Elashvili, RegularSl2HasNoTorus) {
  LieAlgebra L = build_algebra('A', 1);
  SL2Triple tr = sl2_triple(L, L.basis_vector(0));
  EXPECT_TRUE(torus_candidates(L, tr, 64).empty());
  OrbitRecord r;
  r.type = 'A';
  r.rank = 1;
  r.label = "A1.regular";
  r.roots = {{1}};
  r.dim_centralizer = 1;
  r.dim_center = 1;
  EXPECT_THROW(find_tori(L, tr, r), SearchError);
}

TEST(Elashvili, InvalidTorusRejected) {
  LieAlgebra L = build_algebra('A', 1);
  SL2Triple tr = sl2_triple(L, L.basis_vector(0));
  TorusPair tp;
  tp.t = {tr.e};
  tp.t1 = {tr.e};
  EXPECT_THROW(validate_torus(L, tr, tp), InputError);

  // e is in g^e but not semisimple; its coordinates make a bad torus
  OrbitRecord r = record("G2.dim8");
  const LieAlgebra& G = cache().algebra_for(r);
  Element e = cache().representative(r);
  Subalgebra ge = centralizer(G, {e});
  RatVector c = ge.basis().coordinates(e);
  r.torus_t = c;
  r.torus_t1 = {c};
  EXPECT_THROW(find_tori(G, sl2_triple(G, e), r), InputError);

  OrbitRecord short_t1 = record("E7.dim41");
  short_t1.torus_t1.clear();
  const LieAlgebra& E7 = cache().algebra_for(short_t1);
  Element e7 = cache().representative(short_t1);
  EXPECT_THROW(find_tori(E7, sl2_triple(E7, e7), short_t1), InputError);
}

TEST(Elashvili, ZeroTorusOnAbelianCentralizer) {
  LieAlgebra L = build_algebra('A', 2);
  Element e = root_vector_sum(L, {{1, 0}, {0, 1}});
  Subalgebra ge = centralizer(L, {e});
  ASSERT_EQ(ge.dim(), 2u);
  WeightDecomposition wd = weight_decompose(L, ge, TorusPair{});
  ASSERT_EQ(wd.spaces.size(), 1u);
  EXPECT_TRUE(wd.spaces.begin()->first.empty());
  EXPECT_EQ(wd.le, ge.basis());
  EXPECT_EQ(wd.l1e, ge.basis());
  EXPECT_TRUE(wd.positive_weights().empty());
  EXPECT_EQ(wd.bookkeeping(), 0);
  EXPECT_TRUE(pairing_matrices(L, wd).empty());
}

TEST(Elashvili, ZeroOrbitSl2) {
  LieAlgebra L = build_algebra('A', 1);
  Subalgebra ge = centralizer(L, {L.zero()});
  Element h = L.basis_vector(L.cartan_indices()[0]);
  TorusPair tp{{h}, {h}};
  WeightDecomposition wd = weight_decompose(L, ge, tp);
  EXPECT_EQ(wd.le.dim(), 1u);
  EXPECT_EQ(wd.positive_weights(), std::vector<RatVector>{{2}});
  auto pms = pairing_matrices(L, wd);
  ASSERT_EQ(pms.size(), 1u);
  EXPECT_EQ(pms[0].order(), 1u);
  EXPECT_TRUE(qi_nonzero(pms[0]));
  EXPECT_EQ(minor_rank(pms[0]), 1u);
}

TEST(Elashvili, ZeroEntryMatrix) {
  PairingMatrix pm;
  pm.weight = {1};
  pm.v = {RatVector{1}};
  pm.w = {RatVector{1}};
  pm.entries = {{Poly()}};
  EXPECT_FALSE(qi_nonzero(pm));
  EXPECT_EQ(minor_rank(pm), 0u);
  EXPECT_TRUE(pairing_determinant(pm).is_zero());
}

TEST(Elashvili, MinorRankUsesReordering) {
  // leading 1x1 minor vanishes, the (1,0) entry does not
  Poly a = Poly::variable(0);
  PairingMatrix pm;
  pm.weight = {1};
  pm.v = {RatVector{1}, RatVector{1}};
  pm.w = pm.v;
  pm.entries = {{Poly(), Poly()}, {a, Poly()}};
  EXPECT_FALSE(qi_nonzero(pm));
  EXPECT_EQ(minor_rank(pm), 1u);
}

TEST(Elashvili, EmptyWeightSpaceEmitsNoMatrix) {
  WeightDecomposition wd;
  wd.t_dim = 1;
  wd.ge_dim = 1;
  wd.spaces[{0}] = SubspaceBasis::span(1, {RatVector{1}});
  LieAlgebra L = build_algebra('A', 1);
  EXPECT_TRUE(pairing_matrices(L, wd).empty());
}

TEST(Elashvili, MultiplicityMismatchThrows) {
  LieAlgebra L = build_algebra('A', 1);
  WeightDecomposition wd;
  wd.t_dim = 1;
  wd.ge_dim = 1;
  wd.spaces[{2}] = SubspaceBasis::span(L.dim(), {L.basis_vector(0)});
  EXPECT_FALSE(wd.symmetric());
  EXPECT_THROW(pairing_matrices(L, wd), InvariantError);
}

TEST(Elashvili, VerdictNames) {
  EXPECT_EQ(to_string(Verdict::Certified), "CERTIFIED");
  EXPECT_EQ(to_string(Verdict::StructureConfirmed), "STRUCTURE-CONFIRMED");
  EXPECT_EQ(to_string(Verdict::Inconclusive), "INCONCLUSIVE");
}

TEST(Elashvili, RunConfigValidation) {
  RunConfig cfg;
  EXPECT_NO_THROW(cfg.validate());
  cfg.samples = 0;
  EXPECT_THROW(cfg.validate(), InputError);
  cfg = RunConfig{};
  cfg.coord_bound = 0;
  EXPECT_THROW(cfg.validate(), InputError);
}

// Every shipped orbit: weight symmetry, S = 0, index equal to the rank.
TEST(ElashviliProperty, ShippedOrbitsSymmetricAndBalanced) {
  for (const auto& r : shipped()) {
    OrbitVerdict v = verify_orbit(cache(), r, RunConfig{});
    SCOPED_TRACE(r.label);
    EXPECT_TRUE(v.dims_match);
    EXPECT_TRUE(v.center_criterion_agrees);
    EXPECT_TRUE(v.vinberg_parity_ok);
    EXPECT_TRUE(v.index.certified);
    EXPECT_EQ(v.index.stabilizer_dim, static_cast<std::size_t>(r.rank));
    EXPECT_TRUE(v.expectation_failures.empty());
    ASSERT_TRUE(v.torus.has_value()) << v.torus_note;
    EXPECT_TRUE(v.torus->symmetric);
    EXPECT_EQ(v.torus->bookkeeping, 0);
    // the torus path and the direct index agree when the former certifies
    if (v.torus->le_index.certified) {
      EXPECT_EQ(v.torus->le_index.stabilizer_dim, v.index.stabilizer_dim);
    }
  }
}

// Random candidate tori in rank <= 6 give symmetric decompositions whose
// pairing entries lie in l1^e (pairing_matrices throws otherwise).
TEST(ElashviliProperty, RandomCandidateTori) {
  Rng rng(57);
  std::vector<std::string> labels = {"G2.dim6", "F4.dim30", "F4.dim24", "E6.dim38", "E6.dim24"};
  for (const auto& label : labels) {
    const OrbitRecord& r = record(label);
    const LieAlgebra& L = cache().algebra_for(r);
    Element e = cache().representative(r);
    Subalgebra ge = centralizer(L, {e});
    SL2Triple tr = sl2_triple(L, e);
    auto cands = torus_candidates(L, tr, 64);
    ASSERT_FALSE(cands.empty()) << label;
    for (int k = 0; k < 4; ++k) {
      const TorusPair& tp = cands[static_cast<std::size_t>(rng.uniform(0, static_cast<long>(cands.size()) - 1))];
      EXPECT_NO_THROW(validate_torus(L, tr, tp));
      WeightDecomposition wd = weight_decompose(L, ge, tp);
      EXPECT_TRUE(wd.symmetric()) << label;
      EXPECT_EQ(wd.bookkeeping(), 0) << label;
      EXPECT_TRUE(wd.l1e.dim() <= wd.le.dim());
      auto pms = pairing_matrices(L, wd);
      for (const auto& pm : pms) EXPECT_EQ(pm.v.size(), pm.w.size());
    }
  }
}
