#include <gtest/gtest.h>

#include "lieidx/centralize.hpp"
#include "lieidx/random.hpp"

using namespace lieidx;

namespace {

Element root_sum(const LieAlgebra& L, const std::vector<IntVector>& roots) {
  Element e = L.zero();
  for (const auto& r : roots) e[L.root_index(r)] += 1;
  return e;
}

void expect_grading_invariants(const LieAlgebra& L, const SL2Triple& t) {
  Grading g = ad_h_grading(L, t.h);
  std::size_t total = 0;
  std::vector<SubspaceBasis> parts;
  for (const auto& [deg, sp] : g.pieces) {
    total += sp.dim();
    parts.push_back(sp);
    EXPECT_EQ(sp.dim(), g.dim(-deg));
  }
  EXPECT_EQ(total, L.dim());
  EXPECT_EQ(span_sum(parts).dim(), L.dim());
  EXPECT_TRUE(g.pieces.at(2).contains(t.e));
  EXPECT_TRUE(g.pieces.at(-2).contains(t.f));
  for (const auto& [i, a] : g.pieces) {
    for (const auto& [j, b] : g.pieces) {
      for (const auto& u : a.vectors()) {
        for (const auto& v : b.vectors()) {
          Element w = L.bracket(u, v);
          if (is_zero(w)) continue;
          ASSERT_TRUE(g.pieces.count(i + j));
          EXPECT_TRUE(g.pieces.at(i + j).contains(w));
        }
      }
    }
  }
}

}  // namespace

TEST(Centralize, CentralizerExamples) {
  LieAlgebra sl2 = build_algebra('A', 1);
  EXPECT_EQ(centralizer(sl2, {sl2.zero()}).dim(), 3u);
  Subalgebra ge = centralizer(sl2, {sl2.basis_vector(0)});
  EXPECT_EQ(ge.dim(), 1u);
  EXPECT_TRUE(ge.closed_under_bracket());
  EXPECT_TRUE(ge.contains(sl2.basis_vector(0)));
  EXPECT_EQ(center_of(centralizer(sl2, {sl2.zero()})).dim(), 0u);
}

TEST(Centralize, Sl2TripleExamples) {
  LieAlgebra sl2 = build_algebra('A', 1);
  SL2Triple t = sl2_triple(sl2, sl2.basis_vector(0));
  EXPECT_EQ(t.h, sl2.basis_vector(2));
  EXPECT_EQ(t.f, sl2.basis_vector(1));
  EXPECT_THROW(sl2_triple(sl2, sl2.zero()), InputError);
  EXPECT_THROW(sl2_triple(sl2, sl2.basis_vector(2)), InputError);

  LieAlgebra sl3 = build_algebra('A', 2);
  Element e = root_sum(sl3, {{1, 0}, {0, 1}});
  SL2Triple r = sl2_triple(sl3, e);
  EXPECT_TRUE(is_sl2_triple(sl3, r));
  EXPECT_EQ(centralizer(sl3, {e}).dim(), 2u);
  EXPECT_TRUE(is_regular(sl3, e));
  EXPECT_FALSE(is_regular(sl2, sl2.zero()));
  Element diag = sl3.zero();
  diag[sl3.coroot_index(0)] = 1;
  diag[sl3.coroot_index(1)] = 3;
  EXPECT_TRUE(is_regular(sl3, diag));
}

TEST(Centralize, GradingExamples) {
  LieAlgebra sl2 = build_algebra('A', 1);
  Grading g = ad_h_grading(sl2, sl2.basis_vector(2));
  EXPECT_EQ(g.dim(-2), 1u);
  EXPECT_EQ(g.dim(0), 1u);
  EXPECT_EQ(g.dim(2), 1u);

  LieAlgebra sl3 = build_algebra('A', 2);
  SL2Triple t = sl2_triple(sl3, root_sum(sl3, {{1, 0}, {0, 1}}));
  Grading r = ad_h_grading(sl3, t.h);
  EXPECT_EQ(r.dim(-4), 1u);
  EXPECT_EQ(r.dim(-2), 2u);
  EXPECT_EQ(r.dim(0), 2u);
  EXPECT_EQ(r.dim(2), 2u);
  EXPECT_EQ(r.dim(4), 1u);
  EXPECT_EQ(r.pieces.size(), 5u);
  expect_grading_invariants(sl3, t);
}

TEST(Centralize, NonCartanNeutralElement) {
  // e in g but not a root-vector sum; the Cartan-valued solve may fail and
  // the general solve must still produce a triple.
  LieAlgebra b2 = build_algebra('B', 2);
  Element e = b2.zero();
  e[b2.root_index({1, 0})] = 1;
  e[b2.root_index({0, 1})] = 2;
  e[b2.root_index({1, 1})] = 3;
  SL2Triple t = sl2_triple(b2, e);
  EXPECT_TRUE(is_sl2_triple(b2, t));
  expect_grading_invariants(b2, t);
}

TEST(Centralize, MembershipOracleAgreesWithCenter) {
  for (auto [ty, n, roots] : std::vector<std::tuple<char, int, std::vector<IntVector>>>{
           {'A', 1, {{1}}},
           {'A', 3, {{1, 0, 0}}},
           {'A', 3, {{1, 0, 0}, {0, 0, 1}}},
           {'B', 2, {{1, 0}}},
           {'B', 2, {{0, 1}}},
           {'G', 2, {{0, 1}}},
           {'G', 2, {{1, 0}}},
           {'C', 3, {{0, 0, 1}, {1, 1, 0}}},
       }) {
    LieAlgebra L = build_algebra(ty, n);
    Element e = root_sum(L, roots);
    SL2Triple t = sl2_triple(L, e);
    Subalgebra ge = centralizer(L, {e});
    SubspaceBasis z = center_of(ge);
    CenterCriterion crit(L, t);
    EXPECT_TRUE(crit.holds(e));
    for (const auto& v : ge.basis().vectors()) EXPECT_EQ(crit.holds(v), z.contains(v));
    for (const auto& v : z.vectors()) EXPECT_TRUE(crit.holds(v));
    EXPECT_THROW(crit.holds(t.f), InputError);
    EXPECT_EQ((L.dim() - ge.dim()) % 2, 0u);
    // g^e and g^f intersect in a subalgebra killed by ad h.
    SubspaceBasis red = intersect(ge.basis(), centralizer(L, {t.f}).basis());
    for (const auto& v : red.vectors()) EXPECT_TRUE(is_zero(L.bracket(t.h, v)));
    expect_grading_invariants(L, t);
  }
}

TEST(CentralizeProperty, OrthogonalOfCentralizerIsImage) {
  for (auto [ty, n] : std::vector<std::pair<char, int>>{{'A', 2}, {'A', 3}, {'B', 2}, {'G', 2}, {'C', 3}}) {
    LieAlgebra L = build_algebra(ty, n);
    Rng rng(split_seed(3, L.name()));
    for (int s = 0; s < 5; ++s) {
      Element x = rng.vector(L.dim(), 2);
      if (s % 2) {
        // sparse elements give non-regular centralizers
        for (std::size_t i = 0; i < L.dim(); ++i)
          if (rng.uniform(0, 3) != 0) x[i] = 0;
      }
      SubspaceBasis gx = kernel(L.ad_matrix(x));
      EXPECT_EQ(orthogonal_complement(gx, L.killing_gram()), image(L.ad_matrix(x)));
    }
  }
}

TEST(Centralize, E7Dim41OrbitCenter) {
  LieAlgebra L = build_algebra('E', 7);
  Element e = root_sum(L, {{1, 0, 1, 1, 0, 0, 0}, {1, 1, 1, 1, 1, 0, 0}, {0, 1, 1, 2, 1, 0, 0}, {0, 1, 1, 2, 2, 2, 1}});
  Subalgebra ge = centralizer(L, {e});
  EXPECT_EQ(ge.dim(), 41u);
  SubspaceBasis z = center_of(ge);
  EXPECT_EQ(z.dim(), 2u);
  SL2Triple t = sl2_triple(L, e);
  CenterCriterion crit(L, t);
  std::size_t passing = 0;
  for (const auto& v : ge.basis().vectors()) {
    bool c = crit.holds(v);
    EXPECT_EQ(c, z.contains(v));
    passing += c;
  }
  for (const auto& v : z.vectors()) EXPECT_TRUE(crit.holds(v));
}
