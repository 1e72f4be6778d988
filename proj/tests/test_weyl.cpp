#include <gtest/gtest.h>

#include <random>
#include <set>

#include "daha/weyl.hpp"
#include "oracles.hpp"

using namespace daha;

namespace {

WeylGroup affine(RootType t, int n) { return WeylGroup::affine(make_affine(t, n)); }
WeylGroup finite(RootType t, int n) { return WeylGroup::finite(make_affine(t, n)); }

std::set<AffineRoot> as_set(const std::vector<AffineRoot>& v) { return {v.begin(), v.end()}; }

}  // namespace

TEST(WeylAction, Examples) {
  auto W = affine(RootType::A, 1);
  AffineRoot a{ZVec{1}, 0};
  EXPECT_EQ(W.act(W.identity(), a), a);
  auto X = W.translation(W.roots().coroot(ZVec{1}));
  EXPECT_EQ(W.act(X, a), (AffineRoot{ZVec{1}, -2}));
  EXPECT_EQ(W.act(W.simple(0), AffineRoot{ZVec{1}, 0}), (AffineRoot{ZVec{-1}, 2}));
}

TEST(WeylAction, IsAGroupActionOnRootsAndPoints) {
  std::mt19937_64 rng(7);
  for (auto [t, n] : std::vector<std::pair<RootType, int>>{{RootType::A, 2}, {RootType::C, 2}, {RootType::BC, 2}, {RootType::G, 2}}) {
    auto W = affine(t, n);
    const auto& S = W.system();
    QVec x = S.alcove_interior_point();
    for (int trial = 0; trial < 50; ++trial) {
      auto g = oracle::random_element(W, 8, rng), h = oracle::random_element(W, 8, rng);
      for (const auto& b : W.roots().roots()) {
        std::int64_t lvl = S.contains(b, 1) ? 1 : 0;
        AffineRoot a{b, lvl};
        auto lhs = W.act(g, W.act(h, a));
        EXPECT_EQ(lhs, W.act(W.multiply(g, h), a));
        EXPECT_TRUE(S.contains(lhs.dir, lhs.level));
        EXPECT_EQ(W.act_inverse(g, W.act(g, a)), a);
        // (g a)(g x) = a(x)
        EXPECT_EQ(lhs.function()(W.act_point(W.multiply(g, h), x)), a.function()(x));
      }
      EXPECT_EQ(W.act_point(g, W.act_point(h, x)), W.act_point(W.multiply(g, h), x));
      EXPECT_EQ(W.multiply(g, W.inverse(g)), W.identity());
    }
  }
}

TEST(WeylLength, Examples) {
  auto A1 = affine(RootType::A, 1);
  EXPECT_EQ(A1.length(A1.identity()), 0);
  EXPECT_EQ(A1.length(A1.from_word({0, 1})), 2);
  auto B2 = finite(RootType::B, 2);
  EXPECT_EQ(B2.length(B2.longest_element(B2.generators())), 4);
  auto X = A1.translation(A1.roots().coroot(A1.roots().highest_root()));
  EXPECT_EQ(A1.length(X), 2);
  EXPECT_EQ(A1.reduced_word(X).letters.size(), 2u);
}

TEST(WeylLength, MatchesSeparatingHyperplanes) {
  std::mt19937_64 rng(11);
  for (auto [t, n] : std::vector<std::pair<RootType, int>>{
           {RootType::A, 1}, {RootType::A, 2}, {RootType::B, 2}, {RootType::C, 3}, {RootType::G, 2}, {RootType::BC, 1}, {RootType::BC, 2}}) {
    auto W = affine(t, n);
    SCOPED_TRACE(W.roots().label());
    for (int trial = 0; trial < 60; ++trial) {
      auto g = oracle::random_element(W, 12, rng);
      EXPECT_EQ(W.length(g), oracle::separating_hyperplanes(W, g));
    }
  }
}

TEST(WeylLength, FiniteGroupsMatchPermutationOracle) {
  for (auto [t, n] : std::vector<std::pair<RootType, int>>{{RootType::A, 3}, {RootType::B, 3}, {RootType::G, 2}, {RootType::F, 4}}) {
    auto W = finite(t, n);
    oracle::PermutationGroup P(W.roots());
    auto ball = W.enumerate_ball(1000);
    EXPECT_EQ(ball.size(), P.elements.size());
    std::map<int, int> by_len_lib, by_len_oracle;
    for (const auto& g : ball) ++by_len_lib[static_cast<int>(W.length(g))];
    for (const auto& p : P.elements) ++by_len_oracle[P.inversions(p)];
    EXPECT_EQ(by_len_lib, by_len_oracle);
  }
}

TEST(WeylLength, ParityInverseAndTriangleBounds) {
  std::mt19937_64 rng(3);
  for (auto [t, n] : std::vector<std::pair<RootType, int>>{{RootType::A, 2}, {RootType::B, 2}, {RootType::G, 2}}) {
    auto W = affine(t, n);
    for (int trial = 0; trial < 200; ++trial) {
      auto g = oracle::random_element(W, 10, rng), h = oracle::random_element(W, 10, rng);
      auto lg = W.length(g), lh = W.length(h), lgh = W.length(W.multiply(g, h));
      EXPECT_EQ(lg, W.length(W.inverse(g)));
      EXPECT_EQ((lg + lh - lgh) % 2, 0);
      EXPECT_LE(std::abs(lgh - lg - lh), 2 * std::min(lg, lh));
    }
  }
}

TEST(WeylLength, LengthZeroElementsOfExtendedGroup) {
  auto W = affine(RootType::A, 2);
  auto pis = W.length_zero_elements();
  ASSERT_EQ(pis.size(), 3u);
  for (const auto& p : pis) {
    EXPECT_EQ(W.length(p), 0);
    auto perm = W.permutation_of_simples(p);
    EXPECT_EQ(std::set<int>(perm.begin(), perm.end()).size(), 3u);
  }
  EXPECT_FALSE(W.in_coroot_lattice(pis[1].mu));
}

TEST(ReducedWords, Examples) {
  auto A2 = finite(RootType::A, 2);
  EXPECT_TRUE(A2.reduced_word(A2.identity()).letters.empty());
  EXPECT_EQ(A2.reduced_word(A2.longest_element(A2.generators())).letters, (std::vector<int>{1, 2, 1}));
}

TEST(ReducedWords, EvaluateBackAndHaveLengthEll) {
  std::mt19937_64 rng(5);
  auto W = affine(RootType::C, 2);
  for (int trial = 0; trial < 100; ++trial) {
    auto g = oracle::random_element(W, 15, rng);
    auto w = W.reduced_word(g);
    EXPECT_EQ(W.evaluate(w), g);
    EXPECT_EQ(static_cast<std::int64_t>(w.letters.size()), W.length(g));
  }
  // Extended element: X^{varpi_1} in affine A2 leaves a length-zero pi.
  auto A2 = affine(RootType::A, 2);
  auto X = A2.translation(ZVec{1, 0});
  auto w = A2.reduced_word(X);
  EXPECT_EQ(A2.length(w.pi), 0);
  EXPECT_EQ(static_cast<std::int64_t>(w.letters.size()), A2.length(X));
  EXPECT_EQ(A2.evaluate(w), X);
}

TEST(Reflections, TExamples) {
  auto A2 = finite(RootType::A, 2);
  EXPECT_TRUE(A2.inversion_set(A2.identity()).empty());
  auto T1 = A2.inversion_set(A2.simple(1));
  ASSERT_EQ(T1.size(), 1u);
  EXPECT_EQ(T1[0], A2.reflection_key(A2.simple(1)));
  auto w0 = A2.longest_element(A2.generators());
  EXPECT_EQ(A2.inversion_set(w0).size(), 3u);
  EXPECT_THROW(A2.reflection_key(A2.from_word({1, 2})), NotAReflection);
  EXPECT_THROW(A2.reflection_key(A2.identity()), NotAReflection);
}

TEST(Reflections, TIsTheSetOfLeftShorteningReflections) {
  auto W = affine(RootType::BC, 2);
  auto ball = W.enumerate_ball(5);
  for (const auto& g : ball) {
    auto T = W.inversion_set(g);
    EXPECT_EQ(static_cast<std::int64_t>(T.size()), W.length(g));
    for (const auto& a : T) {
      auto t = W.reflection(a);
      EXPECT_EQ(W.reflection_key(t), a);
      EXPECT_LT(W.length(W.multiply(t, g)), W.length(g));
      EXPECT_EQ(W.eta(g, t), -1);
    }
  }
}

TEST(Reflections, PropTIiiOnBalls) {
  for (auto [t, n] : std::vector<std::pair<RootType, int>>{{RootType::A, 2}, {RootType::B, 2}}) {
    auto W = affine(t, n);
    auto ball = W.enumerate_ball(4);
    for (const auto& x : ball) {
      auto Tx = as_set(W.inversion_set(x));
      for (const auto& y : ball) {
        std::set<AffineRoot> rhs = Tx;
        for (const auto& a : W.inversion_set(y)) rhs.insert(W.act(x, a).positive());
        for (const auto& a : W.inversion_set(W.multiply(x, y))) ASSERT_TRUE(rhs.count(a));
      }
    }
  }
}

TEST(Reflections, EtaIndependentOfReducedWord) {
  for (auto W : {affine(RootType::A, 1), finite(RootType::B, 2)}) {
    for (const auto& g : W.enumerate_ball(5)) {
      auto words = oracle::all_reduced_words(W, g);
      ASSERT_FALSE(words.empty());
      std::set<AffineRoot> candidates;
      for (const auto& w : words) {
        WeylElement p = W.identity();
        for (int i : w) {
          candidates.insert(W.act(p, W.simple_root(i)).positive());
          p = W.multiply(p, W.simple(i));
        }
      }
      for (const auto& a : candidates) {
        auto t = W.reflection(a);
        int expected = W.eta(g, t);
        for (const auto& w : words) EXPECT_EQ(W.eta_from_word(w, t), expected);
      }
    }
  }
}

TEST(Bruhat, Examples) {
  auto A2 = finite(RootType::A, 2);
  auto s1 = A2.simple(1), s2 = A2.simple(2);
  for (const auto& y : A2.enumerate_ball(3)) EXPECT_TRUE(A2.bruhat_leq(A2.identity(), y));
  EXPECT_TRUE(A2.bruhat_leq(s1, A2.multiply(s1, s2)));
  EXPECT_FALSE(A2.bruhat_leq(s2, s1));
  auto W = affine(RootType::A, 2);
  EXPECT_THROW(W.bruhat_leq(W.identity(), W.translation(ZVec{1, 0})), DifferentComponents);
}

TEST(Bruhat, AgreesWithSubwordCriterionAndLifting) {
  for (auto W : {finite(RootType::A, 2), finite(RootType::B, 2), affine(RootType::A, 2)}) {
    auto ball = W.enumerate_ball(W.is_affine() ? 4 : 10);
    for (const auto& y : ball) {
      auto yw = W.reduced_word(y).letters;
      for (const auto& x : ball) {
        bool leq = W.bruhat_leq(x, y);
        ASSERT_EQ(leq, oracle::bruhat_by_subwords(W, x, yw));
        // lifting: s in D(y) \ D(x) gives x <= y <=> s x <= y
        for (int s : W.left_descents(y).minus(W.left_descents(x)).indices())
          EXPECT_EQ(leq, W.bruhat_leq(W.multiply(W.simple(s), x), y));
      }
    }
  }
}

TEST(Cosets, Examples) {
  auto A2 = finite(RootType::A, 2);
  auto sig = GenSet::of({1});
  EXPECT_EQ(A2.min_coset_rep(A2.simple(1), sig, Side::Right), A2.identity());
  EXPECT_EQ(A2.min_coset_rep(A2.from_word({2, 1}), sig, Side::Right), A2.simple(2));
  auto W = affine(RootType::A, 2);
  auto X = W.translation(W.roots().coroot(ZVec{1, 0}));
  auto rep = W.min_coset_rep(X, sig, Side::Right);
  EXPECT_EQ(W.length(rep), W.length(X) - 1);
}

TEST(Cosets, DefiningPropertyAndIdempotence) {
  std::mt19937_64 rng(9);
  auto W = affine(RootType::C, 2);
  for (GenSet sig : {GenSet::of({1}), GenSet::of({0, 2}), GenSet::of({1, 2})}) {
    auto ball_sig = W.enumerate_ball(10, sig);
    for (int trial = 0; trial < 60; ++trial) {
      auto g = oracle::random_element(W, 12, rng);
      for (Side side : {Side::Left, Side::Right}) {
        auto r = W.min_coset_rep(g, sig, side);
        // r is in the coset and has no descent in sigma on that side
        auto q = side == Side::Right ? W.multiply(W.inverse(r), g) : W.multiply(g, W.inverse(r));
        EXPECT_TRUE(W.in_parabolic(q, sig));
        auto inv = W.inversion_set(side == Side::Right ? W.inverse(r) : r);
        for (const auto& a : inv)
          for (int s : sig.indices()) EXPECT_NE(a, W.simple_root(s));
        // minimal over the whole coset
        for (const auto& u : ball_sig) {
          auto other = side == Side::Right ? W.multiply(g, u) : W.multiply(u, g);
          EXPECT_LE(W.length(r), W.length(other));
        }
      }
      auto d = W.double_coset_min_rep(g, sig, GenSet::of({1}));
      EXPECT_EQ(W.double_coset_min_rep(d, sig, GenSet::of({1})), d);
    }
  }
}

TEST(Balls, Sizes) {
  auto A1 = affine(RootType::A, 1);
  for (int L = 0; L <= 8; ++L) EXPECT_EQ(A1.enumerate_ball(L).size(), static_cast<std::size_t>(2 * L + 1));
  auto A2 = finite(RootType::A, 2);
  EXPECT_EQ(A2.enumerate_ball(3).size(), 6u);
  EXPECT_EQ(A2.enumerate_ball(0).size(), 1u);
  EXPECT_THROW(affine(RootType::A, 3).enumerate_ball(20, std::nullopt, 100), BallTooLarge);
}

TEST(Balls, SortedLengthLexicographic) {
  auto W = affine(RootType::A, 2);
  auto ball = W.enumerate_ball(4);
  for (std::size_t i = 1; i < ball.size(); ++i) {
    auto a = W.reduced_word(ball[i - 1]).letters, b = W.reduced_word(ball[i]).letters;
    EXPECT_TRUE(a.size() < b.size() || (a.size() == b.size() && a < b));
  }
}

TEST(Orders, FiniteAndInfinite) {
  auto W = affine(RootType::A, 1);
  EXPECT_TRUE(W.order(W.from_word({0, 1})).infinite);
  EXPECT_EQ(W.order(W.simple(0)).order, 2);
  auto G = affine(RootType::G, 2);
  EXPECT_EQ(G.order(G.from_word({1, 2})).order, 6);
  EXPECT_TRUE(G.order(G.from_word({0, 1, 2})).infinite);
}

TEST(Parabolics, FinitenessAndLongestElements) {
  auto A1 = affine(RootType::A, 1);
  EXPECT_TRUE(A1.is_parabolic_finite(GenSet{}));
  EXPECT_EQ(A1.longest_element(GenSet{}), A1.identity());
  EXPECT_FALSE(A1.is_parabolic_finite(A1.generators()));
  EXPECT_THROW(A1.longest_element(A1.generators()), NotFinite);
  auto A2 = affine(RootType::A, 2);
  EXPECT_TRUE(A2.is_parabolic_finite(GenSet::of({1, 2})));
  EXPECT_EQ(A2.length(A2.longest_element(GenSet::of({1, 2}))), 3);
  // Every proper subset of an affine diagram is finite; the full set is not.
  for (auto [t, n] : std::vector<std::pair<RootType, int>>{
           {RootType::A, 3}, {RootType::B, 3}, {RootType::C, 3}, {RootType::D, 5}, {RootType::G, 2},
           {RootType::F, 4}, {RootType::E, 6}, {RootType::E, 7}, {RootType::E, 8}, {RootType::BC, 2}}) {
    auto W = affine(t, n);
    SCOPED_TRACE(W.roots().label());
    EXPECT_FALSE(W.is_parabolic_finite(W.generators()));
    for (int i : W.generators().indices()) {
      GenSet sig = W.generators().without(i);
      // oracle: the gradients of a proper subset have a positive definite Gram matrix
      QMat G(sig.size(), QVec(sig.size()));
      auto ids = sig.indices();
      for (std::size_t a = 0; a < ids.size(); ++a)
        for (std::size_t b = 0; b < ids.size(); ++b)
          G[a][b] = W.roots().inner(to_qvec(W.simple_root(ids[a]).dir), to_qvec(W.simple_root(ids[b]).dir));
      EXPECT_TRUE(is_positive_definite(G));
      EXPECT_TRUE(W.is_parabolic_finite(sig));
    }
  }
}

TEST(Parabolics, ClassificationAgreesWithGramOracleOnAllSubsets) {
  for (auto [t, n] : std::vector<std::pair<RootType, int>>{{RootType::A, 4}, {RootType::D, 5}, {RootType::F, 4}, {RootType::E, 6}}) {
    auto W = affine(t, n);
    for (std::uint32_t bits = 0; bits < (1u << (n + 1)); ++bits) {
      GenSet sig{bits};
      auto ids = sig.indices();
      QMat G(ids.size(), QVec(ids.size()));
      for (std::size_t a = 0; a < ids.size(); ++a)
        for (std::size_t b = 0; b < ids.size(); ++b)
          G[a][b] = W.roots().inner(to_qvec(W.simple_root(ids[a]).dir), to_qvec(W.simple_root(ids[b]).dir));
      EXPECT_EQ(W.is_parabolic_finite(sig), is_positive_definite(G)) << to_string(sig);
    }
  }
  // Non-crystallographic checks on raw Coxeter matrices.
  EXPECT_TRUE(is_finite_coxeter({{1, 5, 2}, {5, 1, 3}, {2, 3, 1}}));   // H3
  EXPECT_FALSE(is_finite_coxeter({{1, 4, 2}, {4, 1, 4}, {2, 4, 1}}));  // affine C2
  EXPECT_TRUE(is_finite_coxeter({{1, 7}, {7, 1}}));
  EXPECT_FALSE(is_finite_coxeter({{1, 3, 3}, {3, 1, 3}, {3, 3, 1}}));  // cycle
}
