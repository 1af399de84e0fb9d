#include <gtest/gtest.h>

#include "lieidx/indexcore.hpp"
#include "lieidx/random.hpp"

using namespace lieidx;

namespace {

Element root_sum(const LieAlgebra& L, const std::vector<IntVector>& roots) {
  Element e = L.zero();
  for (const auto& r : roots) e[L.root_index(r)] += 1;
  return e;
}

Element regular_nilpotent(const LieAlgebra& L) {
  Element e = L.zero();
  for (int i = 0; i < L.rank(); ++i) {
    IntVector a(static_cast<std::size_t>(L.rank()), 0);
    a[static_cast<std::size_t>(i)] = 1;
    e[L.root_index(a)] = 1;
  }
  return e;
}

Element random_regular(const LieAlgebra& L, Rng& rng, long bound) {
  for (int k = 0; k < 50; ++k) {
    Element x = rng.vector(L.dim(), bound);
    if (is_regular(L, x)) return x;
  }
  throw std::runtime_error("no regular element drawn");
}

SubspaceBasis image_of(const LieAlgebra& L, const Element& x, const SubspaceBasis& v) {
  std::vector<RatVector> out;
  for (const auto& w : v.vectors()) out.push_back(L.bracket(x, w));
  return SubspaceBasis::span(L.dim(), out);
}

const std::vector<std::pair<char, int>> kRankAtMost4 = {{'A', 1}, {'A', 2}, {'A', 3}, {'A', 4}, {'B', 2},
                                                        {'B', 3}, {'B', 4}, {'C', 3}, {'C', 4}, {'D', 4},
                                                        {'G', 2}, {'F', 4}};

}  // namespace

TEST(IndexCore, KirillovRankExamples) {
  LieAlgebra sl2 = build_algebra('A', 1);
  Subalgebra whole = centralizer(sl2, {sl2.zero()});
  EXPECT_EQ(kirillov_rank(whole, sl2.zero()), 0u);
  EXPECT_EQ(kirillov_rank(whole, Element{1, 2, 3}), 2u);
  LieAlgebra a3 = build_algebra('A', 3);
  Subalgebra cartan = centralizer(a3, {Element([&] {
                                    Element h = a3.zero();
                                    h[a3.coroot_index(0)] = 1;
                                    h[a3.coroot_index(1)] = 5;
                                    h[a3.coroot_index(2)] = 2;
                                    return h;
                                  }())});
  EXPECT_EQ(cartan.dim(), 3u);
  Rng rng(1);
  EXPECT_EQ(kirillov_rank(cartan, rng.vector(a3.dim(), 9)), 0u);
}

TEST(IndexCore, CertifiedIndexExamples) {
  LieAlgebra sl2 = build_algebra('A', 1);
  IndexCertificate c1 = certified_index(centralizer(sl2, {sl2.basis_vector(0)}), 4, 7);
  EXPECT_TRUE(c1.certified);
  EXPECT_EQ(c1.stabilizer_dim, 1u);
  for (auto [t, n] : std::vector<std::pair<char, int>>{{'A', 3}, {'B', 3}, {'G', 2}, {'F', 4}}) {
    LieAlgebra L = build_algebra(t, n);
    Subalgebra ge = centralizer(L, {regular_nilpotent(L)});
    EXPECT_EQ(ge.dim(), static_cast<std::size_t>(n));
    IndexCertificate c = certified_index(ge, 2, 9);
    EXPECT_TRUE(c.certified);
    EXPECT_EQ(c.stabilizer_dim, static_cast<std::size_t>(n));
    EXPECT_EQ(c.samples_used, 1u);
  }
}

TEST(IndexCore, VxyExamples) {
  LieAlgebra sl2 = build_algebra('A', 1);
  Element h = sl2.basis_vector(2), e = sl2.basis_vector(0);
  EXPECT_EQ(vxy(sl2, h, sl2.zero()).basis, kernel(sl2.ad_matrix(h)));
  EXPECT_EQ(vxy(sl2, h, h).basis.dim(), 1u);
  BolsinovSubspace v = vxy(sl2, h, e);
  EXPECT_EQ(v.basis.dim(), 2u);
  EXPECT_EQ(v.t_samples.size(), 2u + 3u);
  EXPECT_THROW(vxy(sl2, sl2.zero(), e), InputError);
  EXPECT_TRUE(isotropy_check(sl2, h, sl2.zero()));
  LieAlgebra sl3 = build_algebra('A', 2);
  Element x = sl3.zero();
  x[sl3.coroot_index(0)] = 1;
  x[sl3.coroot_index(1)] = 3;
  EXPECT_TRUE(isotropy_check(sl3, x, root_sum(sl3, {{1, 0}})));
  EXPECT_TRUE(isotropy_check(sl3, x, root_sum(sl3, {{1, 0}, {0, 1}})));
}

TEST(IndexCore, BolsinovExamples) {
  LieAlgebra sl2 = build_algebra('A', 1);
  BolsinovCertificate z = bolsinov_condition5(sl2, sl2.zero(), 5, 1);
  EXPECT_TRUE(z.found);
  EXPECT_EQ(z.trials_used, 1u);
  EXPECT_EQ(z.dim_v, 1u);
  BolsinovCertificate r = bolsinov_condition5(sl2, sl2.basis_vector(0), 5, 1);
  EXPECT_TRUE(r.found);
  EXPECT_EQ(r.dim_v, 2u);
  EXPECT_TRUE(r.condition4);
  LieAlgebra g2 = build_algebra('G', 2);
  // subregular orbit of G2: g^a has dimension 4
  Element a = root_sum(g2, {{0, 1}, {3, 1}});
  ASSERT_EQ(kernel(g2.ad_matrix(a)).dim(), 4u);
  BolsinovCertificate s = bolsinov_condition5(g2, a, 50, 3);
  EXPECT_TRUE(s.found);
  EXPECT_EQ(s.dim_v, (14u - 4u) / 2 + 2);
  EXPECT_TRUE(s.condition4);
  EXPECT_EQ(s.dim_intersection, 2u);
}

TEST(IndexCore, PhiExamples) {
  LieAlgebra sl3 = build_algebra('A', 2);
  MatrixRep rep = natural_rep_type_a(sl3);
  EXPECT_TRUE(is_representation(sl3, rep));
  for (const auto& p : phi_at(sl3, sl3.zero())) EXPECT_TRUE(is_zero(p));
  Rng rng(4);
  Element x = random_regular(sl3, rng, 5);
  std::vector<Element> phi = phi_at(sl3, x);
  EXPECT_EQ(SubspaceBasis::span(sl3.dim(), phi), kernel(sl3.ad_matrix(x)));
  Element e = regular_nilpotent(sl3);
  Subalgebra ge = centralizer(sl3, {e});
  SubspaceBasis z = center_of(ge);
  for (const auto& p : phi_at(sl3, e)) EXPECT_TRUE(z.contains(p));
  EXPECT_THROW(phi_at(build_algebra('B', 2), build_algebra('B', 2).zero()), InputError);
}

TEST(IndexCore, MFCommutativityExamples) {
  LieAlgebra sl2 = build_algebra('A', 1);
  EXPECT_TRUE(mf_commute_check(sl2, Element{1, 2, 3}, 3, 1, 5));
  LieAlgebra sl3 = build_algebra('A', 2);
  Rng rng(8);
  EXPECT_TRUE(mf_commute_check(sl3, rng.vector(8, 5), 20, 2, 5));
}

TEST(IndexCoreProperty, PhiIsCentralInCentralizer) {
  // phi_i(x) lies in the center of g^x for regular and non-regular x alike.
  for (int n : {2, 3}) {
    LieAlgebra L = build_algebra('A', n);
    Rng rng(split_seed(21, L.name()));
    std::vector<Element> xs = {rng.vector(L.dim(), 4), regular_nilpotent(L), root_sum(L, {IntVector(static_cast<std::size_t>(n), 1)})};
    Element semi = L.zero();
    semi[L.coroot_index(0)] = 1;
    xs.push_back(semi);
    for (const auto& x : xs) {
      Subalgebra gx = centralizer(L, {x});
      SubspaceBasis z = center_of(gx);
      std::vector<Element> phi = phi_at(L, x);
      for (const auto& p : phi) EXPECT_TRUE(z.contains(p));
      bool regular = gx.dim() == static_cast<std::size_t>(n);
      EXPECT_EQ(SubspaceBasis::span(L.dim(), phi).dim() == static_cast<std::size_t>(n), regular);
    }
  }
}

TEST(IndexCoreProperty, CentralizerSumMatchesPhiSpan) {
  for (int n : {1, 2, 3}) {
    LieAlgebra L = build_algebra('A', n);
    Rng rng(split_seed(22, L.name()));
    for (int s = 0; s < 4; ++s) {
      Element x = random_regular(L, rng, 4);
      Element y = rng.vector(L.dim(), 4);
      if (s % 2) y = regular_nilpotent(L);
      std::vector<RatVector> gens;
      for (const auto& row : phi_expansion(L, x, y))
        for (const auto& v : row) gens.push_back(v);
      EXPECT_EQ(SubspaceBasis::span(L.dim(), gens), vxy(L, x, y).basis);
    }
  }
}

class IsotropyOnRandomPairs : public ::testing::TestWithParam<std::pair<char, int>> {};

TEST_P(IsotropyOnRandomPairs, HundredPairs) {
  auto [t, n] = GetParam();
  LieAlgebra L = build_algebra(t, n);
  Rng rng(split_seed(23, L.name()));
  for (int s = 0; s < 100; ++s) {
    Element x = random_regular(L, rng, 3);
    Element y = rng.vector(L.dim(), 3);
    BolsinovSubspace v = vxy(L, x, y);
    EXPECT_LE(v.basis.dim(), L.root_system()->b());
    EXPECT_TRUE(v.basis.contains(kernel(L.ad_matrix(x))));
    EXPECT_EQ(SubspaceBasis::span(L.dim(), v.generators), v.basis);
    std::vector<RatVector> w = v.generators;
    SubspaceBasis gy = kernel(L.ad_matrix(y));
    w.insert(w.end(), gy.vectors().begin(), gy.vectors().end());
    EXPECT_TRUE(kirillov_form(L, w, y).gram.is_zero());
  }
}

INSTANTIATE_TEST_SUITE_P(IndexCoreProperty, IsotropyOnRandomPairs, ::testing::ValuesIn(kRankAtMost4),
                         [](const auto& info) {
                           return std::string(1, info.param.first) + std::to_string(info.param.second);
                         });

TEST(IndexCoreProperty, BracketImagesAgree) {
  for (auto [t, n] : std::vector<std::pair<char, int>>{{'A', 1}, {'A', 2}, {'A', 3}, {'B', 2}, {'B', 3}, {'C', 3}, {'G', 2}}) {
    LieAlgebra L = build_algebra(t, n);
    SCOPED_TRACE(L.name());
    Rng rng(split_seed(24, L.name()));
    for (int s = 0; s < 20; ++s) {
      Element x = random_regular(L, rng, 3);
      Element y = rng.vector(L.dim(), 3);
      if (s % 3 == 1) y = regular_nilpotent(L);
      BolsinovSubspace v = vxy(L, x, y);
      EXPECT_EQ(image_of(L, x, v.basis), image_of(L, y, v.basis));
    }
  }
}

TEST(IndexCoreProperty, CentralizerMeetsVInRank) {
  for (auto [t, n] : std::vector<std::pair<char, int>>{{'A', 2}, {'A', 3}, {'B', 2}, {'G', 2}}) {
    LieAlgebra L = build_algebra(t, n);
    Rng rng(split_seed(25, L.name()));
    std::vector<Element> as = {regular_nilpotent(L), L.basis_vector(0), rng.vector(L.dim(), 2)};
    for (const auto& a : as) {
      for (int s = 0; s < 3; ++s) {
        Element x = random_regular(L, rng, 4);
        BolsinovSubspace v = vxy(L, x, a);
        EXPECT_EQ(intersect(kernel(L.ad_matrix(a)), v.basis).dim(), static_cast<std::size_t>(n));
      }
    }
  }
}
