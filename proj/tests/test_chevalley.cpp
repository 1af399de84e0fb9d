#include <gtest/gtest.h>

#include <random>

#include "lieidx/chevalley.hpp"

using namespace lieidx;

namespace {

const std::vector<std::pair<char, int>> kSmall = {{'A', 1}, {'A', 2}, {'A', 3}, {'B', 2},
                                                  {'B', 3}, {'C', 3}, {'G', 2}};

Element random_element(std::mt19937_64& rng, std::size_t dim, int bound) {
  Element v(dim);
  for (auto& c : v) c = static_cast<long>(rng() % static_cast<unsigned>(2 * bound + 1)) - bound;
  return v;
}

}  // namespace

TEST(Chevalley, Sl2Relations) {
  LieAlgebra L = build_algebra('A', 1);
  ASSERT_EQ(L.dim(), 3u);
  Element e = L.basis_vector(0), f = L.basis_vector(1), h = L.basis_vector(2);
  EXPECT_EQ(L.bracket(h, e), Element({2, 0, 0}));
  EXPECT_EQ(L.bracket(h, f), Element({0, -2, 0}));
  EXPECT_EQ(L.bracket(e, f), h);
  EXPECT_TRUE(is_zero(L.bracket(e, e)));
  RatMatrix adh = L.ad_matrix(h);
  // basis order (e, f, h): diagonal (2, -2, 0)
  EXPECT_EQ(adh(0, 0), 2);
  EXPECT_EQ(adh(1, 1), -2);
  EXPECT_EQ(adh(2, 2), 0);
  EXPECT_EQ(L.killing(h, h), 8);
  EXPECT_EQ(L.killing(e, e), 0);
  EXPECT_EQ(L.killing(e, f), 4);
}

TEST(Chevalley, CartanActionOnRootVectors) {
  for (auto [t, n] : kSmall) {
    LieAlgebra L = build_algebra(t, n);
    const RootSystem& rs = *L.root_system();
    for (std::size_t k = 0; k < rs.num_positive(); ++k) {
      for (int i = 0; i < n; ++i) {
        Element br = L.bracket(L.basis_vector(L.coroot_index(i)), L.basis_vector(k));
        Element expect = L.zero();
        expect[k] = rs.pair_coroot(rs.positive_roots()[k], i);
        EXPECT_EQ(br, expect);
      }
    }
  }
}

TEST(Chevalley, A2ExhaustiveJacobi) {
  LieAlgebra L = build_algebra('A', 2);
  ASSERT_EQ(L.dim(), 8u);
  std::size_t triples = 0;
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = i + 1; j < 8; ++j)
      for (std::size_t k = j + 1; k < 8; ++k) {
        EXPECT_TRUE(jacobi_holds(L, i, j, k));
        ++triples;
      }
  EXPECT_EQ(triples, 56u);
}

TEST(ChevalleyProperty, JacobiAllTriplesRankAtMost3) {
  for (auto [t, n] : kSmall) {
    LieAlgebra L = build_algebra(t, n);
    SCOPED_TRACE(L.name());
    std::size_t bad = 0;
    for (std::size_t i = 0; i < L.dim(); ++i) {
      for (std::size_t j = 0; j < L.dim(); ++j) {
        if (!antisymmetric_pair(L, i, j)) ++bad;
        for (std::size_t k = j + 1; k < L.dim(); ++k) {
          if (i < j && !jacobi_holds(L, i, j, k)) ++bad;
        }
      }
    }
    EXPECT_EQ(bad, 0u);
  }
}

TEST(ChevalleyProperty, JacobiSampledLargeRank) {
  for (auto [t, n] : std::vector<std::pair<char, int>>{{'D', 4}, {'F', 4}, {'E', 6}}) {
    LieAlgebra L = build_algebra(t, n);
    SCOPED_TRACE(L.name());
    std::mt19937_64 rng(77);
    for (int s = 0; s < 3000; ++s) {
      std::size_t i = rng() % L.dim(), j = rng() % L.dim(), k = rng() % L.dim();
      EXPECT_TRUE(jacobi_holds(L, i, j, k));
    }
  }
}

TEST(ChevalleyProperty, KillingSymmetricInvariantNondegenerate) {
  for (auto [t, n] : kSmall) {
    LieAlgebra L = build_algebra(t, n);
    SCOPED_TRACE(L.name());
    EXPECT_EQ(L.killing_gram(), L.killing_gram().transpose());
    EXPECT_EQ(rank(L.killing_gram()), L.dim());
    std::mt19937_64 rng(5);
    for (int s = 0; s < 30; ++s) {
      Element a = random_element(rng, L.dim(), 3);
      Element b = random_element(rng, L.dim(), 3);
      Element c = random_element(rng, L.dim(), 3);
      EXPECT_EQ(L.killing(L.bracket(a, b), c), L.killing(a, L.bracket(b, c)));
      EXPECT_EQ(L.killing(a, b), L.killing(b, a));
      EXPECT_EQ(L.killing(a, b), (L.ad_matrix(a) * L.ad_matrix(b)).trace());
      EXPECT_EQ(L.ad_matrix(a).apply(b), L.bracket(a, b));
    }
  }
}

TEST(ChevalleyProperty, JacobiSampledE7E8) {
  for (int n : {7, 8}) {
    LieAlgebra L = build_algebra('E', n);
    SCOPED_TRACE(L.name());
    std::mt19937_64 rng(static_cast<unsigned>(n));
    std::size_t bad = 0;
    for (int s = 0; s < 10000; ++s) {
      std::size_t i = rng() % L.dim(), j = rng() % L.dim(), k = rng() % L.dim();
      if (!jacobi_holds(L, i, j, k) || !antisymmetric_pair(L, i, j)) ++bad;
    }
    EXPECT_EQ(bad, 0u);
    EXPECT_EQ(rank(L.killing_gram()), L.dim());
  }
}

TEST(ChevalleyProperty, StructureConstantMagnitudes) {
  // |N_{a,b}| = p + 1 where b - p a is the bottom of the a-string through b.
  for (auto [t, n] : std::vector<std::pair<char, int>>{{'B', 3}, {'C', 3}, {'F', 4}, {'G', 2}, {'E', 6}}) {
    LieAlgebra L = build_algebra(t, n);
    SCOPED_TRACE(L.name());
    const RootSystem& rs = *L.root_system();
    const std::size_t np = rs.num_positive();
    auto root_of = [&](std::size_t i) {
      IntVector r = rs.positive_roots()[i % np];
      if (i >= np)
        for (auto& c : r) c = -c;
      return r;
    };
    for (std::size_t i = 0; i < 2 * np; ++i) {
      for (std::size_t j = 0; j < 2 * np; ++j) {
        IntVector a = root_of(i), b = root_of(j), s(a.size());
        bool zero = true;
        for (std::size_t k = 0; k < a.size(); ++k) {
          s[k] = a[k] + b[k];
          zero = zero && s[k] == 0;
        }
        if (zero || !rs.is_root(s)) {
          if (!zero) EXPECT_TRUE(L.basis_bracket(i, j).empty());
          continue;
        }
        long p = 0;
        IntVector probe = b;
        while (true) {
          for (std::size_t k = 0; k < a.size(); ++k) probe[k] -= a[k];
          if (!rs.is_root(probe)) break;
          ++p;
        }
        const auto& terms = L.basis_bracket(i, j);
        ASSERT_EQ(terms.size(), 1u);
        EXPECT_EQ(terms[0].index, L.root_index(s));
        EXPECT_EQ(std::abs(terms[0].coeff), p + 1);
      }
    }
  }
}

TEST(ChevalleyProperty, RootVectorsAreIsotropic) {
  LieAlgebra L = build_algebra('G', 2);
  for (std::size_t k = 0; k < 12; ++k) EXPECT_EQ(L.killing(L.basis_vector(k), L.basis_vector(k)), 0);
}
