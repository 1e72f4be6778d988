#include <gtest/gtest.h>

#include <set>

#include "daha/coxeter_builder.hpp"
#include "daha/relative.hpp"
#include "oracles.hpp"

using namespace daha;

namespace {

WeylGroup affine(RootType t, int n) { return WeylGroup::affine(make_affine(t, n)); }
WeylGroup finite(RootType t, int n) { return WeylGroup::finite(make_affine(t, n)); }

struct System {
  std::string name;
  WeylGroup W;
  GenSet sigma;
};

std::vector<System> test_systems() {
  return {{"B2/{1}", finite(RootType::B, 2), GenSet::of({1})},
          {"F4/{2,3}", finite(RootType::F, 4), GenSet::of({2, 3})},
          {"affine C2/{1}", affine(RootType::C, 2), GenSet::of({1})},
          {"affine A3/{1,3}", affine(RootType::A, 3), GenSet::of({1, 3})}};
}

/// Brute-force W~ of a finite group: minimal coset representatives g with
/// g x g^-1 in W_Sigma for every element x of W_Sigma.
std::set<WeylElement> brute_force_relative(const WeylGroup& W, GenSet sigma) {
  auto all = W.enumerate_ball(1000);
  auto sub = W.enumerate_ball(1000, sigma);
  ElementSet subset(sub.begin(), sub.end());
  std::set<WeylElement> out;
  for (const auto& g : all) {
    bool normal = true;
    for (const auto& x : sub)
      if (!subset.count(W.conjugate(g, x))) {
        normal = false;
        break;
      }
    if (!normal) continue;
    bool minimal = true;
    for (const auto& x : sub)
      if (W.length(W.multiply(g, x)) < W.length(g)) minimal = false;
    if (minimal) out.insert(g);
  }
  return out;
}

}  // namespace

TEST(Parabolic, Examples) {
  auto A1 = affine(RootType::A, 1);
  auto p = ParabolicSubset::make(A1, GenSet{});
  EXPECT_TRUE(p.finite);
  EXPECT_EQ(*p.w0, A1.identity());
  EXPECT_FALSE(ParabolicSubset::make(A1, A1.generators()).finite);
  auto A2 = affine(RootType::A, 2);
  auto q = ParabolicSubset::make(A2, GenSet::of({1, 2}));
  EXPECT_EQ(A2.length(*q.w0), 3);
  EXPECT_EQ(q.reflections.size(), 3u);
  EXPECT_EQ(A2.multiply(*q.w0, *q.w0), A2.identity());
}

TEST(Admissibility, Examples) {
  auto A2 = finite(RootType::A, 2);
  EXPECT_TRUE(is_admissible(A2, GenSet{}));
  auto c = check_admissible(A2, GenSet::of({1}));
  EXPECT_FALSE(c.admissible);
  ASSERT_TRUE(c.witness.has_value());
  EXPECT_EQ(*c.witness, A2.longest_element(A2.generators()));
  EXPECT_EQ(A2.conjugate(*c.witness, A2.simple(1)), A2.simple(2));
  EXPECT_TRUE(is_admissible(finite(RootType::B, 2), GenSet::of({1})));
  EXPECT_THROW(RelativeCoxeterSystem::build(A2, GenSet::of({1})), NotAdmissible);
  for (const auto& sys : test_systems()) EXPECT_TRUE(is_admissible(sys.W, sys.sigma)) << sys.name;
  EXPECT_FALSE(is_admissible(affine(RootType::A, 1), GenSet::of({0, 1})));
}

TEST(RelativeSystem, EmptySigmaGivesTheGroupItself) {
  auto W = affine(RootType::G, 2);
  auto R = RelativeCoxeterSystem::build(W, GenSet{});
  ASSERT_EQ(R.simples().size(), 3u);
  for (std::size_t a = 0; a < 3; ++a) {
    EXPECT_EQ(R.simples()[a].element, W.simple(static_cast<int>(a)));
    for (std::size_t b = 0; b < 3; ++b)
      if (a != b) EXPECT_EQ(R.coxeter_matrix()[a][b], W.coxeter_entry(static_cast<int>(a), static_cast<int>(b)));
  }
}

TEST(RelativeSystem, B2SigmaOne) {
  auto W = finite(RootType::B, 2);
  auto R = RelativeCoxeterSystem::build(W, GenSet::of({1}));
  ASSERT_EQ(R.simples().size(), 1u);
  auto w0 = W.longest_element(W.generators());
  EXPECT_EQ(R.simples()[0].element, W.multiply(w0, W.simple(1)));
  EXPECT_EQ(R.simples()[0].length, 3);
  EXPECT_EQ(R.relative_length(R.simples()[0].element), 1);
  auto brute = brute_force_relative(W, GenSet::of({1}));
  EXPECT_EQ(brute.size(), 2u);
  auto ball = R.ball(5);
  EXPECT_EQ(std::set<WeylElement>(ball.begin(), ball.end()), brute);
}

TEST(RelativeSystem, FiniteSystemsMatchBruteForce) {
  for (auto [t, n, sig] : std::vector<std::tuple<RootType, int, GenSet>>{{RootType::B, 3, GenSet::of({1})},
                                                                       {RootType::B, 3, GenSet::of({3})},
                                                                       {RootType::A, 3, GenSet::of({1, 3})},
                                                                       {RootType::F, 4, GenSet::of({2, 3})},
                                                                       {RootType::D, 4, GenSet::of({1, 3, 4})},
                                                                       {RootType::G, 2, GenSet::of({2})}}) {
    auto W = finite(t, n);
    SCOPED_TRACE(W.roots().label() + " " + to_string(sig));
    if (!is_admissible(W, sig)) continue;
    auto R = RelativeCoxeterSystem::build(W, sig);
    auto brute = brute_force_relative(W, sig);
    auto ball = R.ball(50);
    EXPECT_EQ(std::set<WeylElement>(ball.begin(), ball.end()), brute);
    for (const auto& g : brute) EXPECT_TRUE(R.contains(g));
  }
}

TEST(RelativeSystem, AffineA3SimplesHaveLengthFour) {
  auto W = affine(RootType::A, 3);
  auto R = RelativeCoxeterSystem::build(W, GenSet::of({1, 3}));
  EXPECT_EQ(R.complement(), GenSet::of({0, 2}));
  ASSERT_EQ(R.simples().size(), 2u);
  for (const auto& s : R.simples()) {
    EXPECT_EQ(s.length, 4);
    EXPECT_EQ(s.element, W.multiply(W.longest_element(GenSet::of({1, 3}).with(s.s)), W.longest_element(GenSet::of({1, 3}))));
    EXPECT_EQ(W.multiply(s.element, s.element), W.identity());
    EXPECT_TRUE(R.contains(s.element));
  }
  // Every member of W~ in a radius-12 ball of W is reached by the S~ BFS.
  auto ball = R.ball(6);
  ElementSet rel(ball.begin(), ball.end());
  std::size_t members = 0;
  for (const auto& g : W.enumerate_ball(12))
    if (R.contains(g)) {
      ++members;
      EXPECT_TRUE(rel.count(g));
    }
  EXPECT_GT(members, 1u);
}

TEST(RelativeSystem, CoxeterMatrixOrdersMatchIteration) {
  for (const auto& sys : test_systems()) {
    auto R = RelativeCoxeterSystem::build(sys.W, sys.sigma);
    const auto& m = R.coxeter_matrix();
    for (std::size_t a = 0; a < m.size(); ++a)
      for (std::size_t b = 0; b < m.size(); ++b) {
        if (a == b) continue;
        auto x = sys.W.multiply(R.simples()[a].element, R.simples()[b].element);
        WeylElement p = x;
        int k = 1;
        while (!(p == sys.W.identity()) && k <= 40) {
          p = sys.W.multiply(p, x);
          ++k;
        }
        if (m[a][b] == 0) EXPECT_GT(k, 40) << sys.name;
        else EXPECT_EQ(k, m[a][b]) << sys.name;
      }
  }
}

TEST(RelativeSystem, BallSizesMatchIndependentBuilder) {
  for (const auto& sys : test_systems()) {
    auto R = RelativeCoxeterSystem::build(sys.W, sys.sigma);
    auto layers = R.ball_layers(4);
    CoxeterBuilder B(R.coxeter_matrix());
    auto sizes = B.sphere_sizes(4);
    for (std::size_t d = 0; d < sizes.size(); ++d) {
      std::size_t got = d < layers.size() ? layers[d].size() : 0;
      EXPECT_EQ(got, sizes[d]) << sys.name << " radius " << d;
    }
  }
}

TEST(RelativeLength, Examples) {
  auto W = finite(RootType::B, 2);
  auto R = RelativeCoxeterSystem::build(W, GenSet::of({1}));
  EXPECT_EQ(R.relative_length(W.identity()), 0);
  auto w0 = W.longest_element(W.generators());
  EXPECT_EQ(R.relative_length(W.multiply(w0, W.simple(1))), 1);
  EXPECT_EQ(W.length(W.multiply(w0, W.simple(1))), 3);
  EXPECT_THROW(R.relative_length(W.simple(2)), NotInRelativeGroup);
  for (const auto& s : R.simples())
    EXPECT_EQ(s.length, W.length(W.longest_element(GenSet::of({1}).with(s.s))) - W.length(*R.base().w0));
}

TEST(RelativeLength, EqualsBfsDistance) {
  for (const auto& sys : test_systems()) {
    auto R = RelativeCoxeterSystem::build(sys.W, sys.sigma);
    auto layers = R.ball_layers(4);
    for (std::size_t d = 0; d < layers.size(); ++d)
      for (const auto& g : layers[d]) {
        EXPECT_EQ(R.relative_length(g), static_cast<std::int64_t>(d)) << sys.name;
        EXPECT_EQ(R.evaluate(R.relative_word(g)), g);
      }
  }
}

TEST(RelativeTheorems, LengthAdditivityEquivalence) {
  for (const auto& sys : test_systems()) {
    auto R = RelativeCoxeterSystem::build(sys.W, sys.sigma);
    auto ball = R.ball(3);
    for (const auto& g : ball)
      for (const auto& h : ball) {
        auto gh = sys.W.multiply(g, h);
        bool rel = R.relative_length(g) + R.relative_length(h) == R.relative_length(gh);
        bool abs = sys.W.length(g) + sys.W.length(h) == sys.W.length(gh);
        EXPECT_EQ(rel, abs) << sys.name;
      }
  }
}

TEST(RelativeTheorems, ConjugationPermutesSigmaAndW0Centralises) {
  for (const auto& sys : test_systems()) {
    auto R = RelativeCoxeterSystem::build(sys.W, sys.sigma);
    const auto& W = sys.W;
    auto w0 = *R.base().w0;
    auto TS = R.base().reflections;
    for (const auto& g : R.ball(3)) {
      std::set<AffineRoot> image;
      for (int s : sys.sigma.indices()) image.insert(W.act(g, W.simple_root(s)).positive());
      std::set<AffineRoot> simples;
      for (int s : sys.sigma.indices()) simples.insert(W.simple_root(s));
      EXPECT_EQ(image, simples) << sys.name;
      EXPECT_EQ(W.multiply(w0, g), W.multiply(g, w0));
      // T(w0 g) = T(g) disjoint union T_Sigma
      auto Tg = W.inversion_set(g);
      std::set<AffineRoot> expected(Tg.begin(), Tg.end());
      for (const auto& a : TS) EXPECT_TRUE(expected.insert(a).second);
      auto T = W.inversion_set(W.multiply(w0, g));
      EXPECT_EQ(std::set<AffineRoot>(T.begin(), T.end()), expected);
    }
  }
}

TEST(RelativeTheorems, DichotomyConditionsAgree) {
  for (const auto& sys : test_systems()) {
    auto R = RelativeCoxeterSystem::build(sys.W, sys.sigma);
    const auto& W = sys.W;
    auto w0 = *R.base().w0;
    std::set<AffineRoot> TS(R.base().reflections.begin(), R.base().reflections.end());
    int radius = W.is_affine() ? 3 : 8;
    for (const auto& g : R.ball(radius)) {
      auto Tg = W.inversion_set(g);
      std::set<AffineRoot> T(Tg.begin(), Tg.end());
      auto Tw0g = W.inversion_set(W.multiply(w0, g));
      std::set<AffineRoot> T0(Tw0g.begin(), Tw0g.end());
      for (int s : W.generators().minus(sys.sigma).indices()) {
        bool c1 = W.length(W.multiply(W.simple(s), g)) == W.length(g) - 1;
        bool c2 = W.is_left_descent(W.multiply(w0, g), s);
        bool c3 = false, c4 = false;
        if (W.is_parabolic_finite(sys.sigma.with(s))) {
          auto st = W.multiply(W.longest_element(sys.sigma.with(s)), w0);
          c3 = W.length(W.multiply(st, g)) == W.length(g) - W.length(st);
          auto big = W.inversion_set(W.longest_element(sys.sigma.with(s)));
          c4 = true;
          for (const auto& a : big)
            if (!TS.count(a) && !T.count(a)) c4 = false;
        }
        EXPECT_EQ(c1, c2) << sys.name;
        EXPECT_EQ(c1, c3) << sys.name;
        EXPECT_EQ(c1, c4) << sys.name;
      }
    }
  }
}

TEST(RelativeTheorems, ExchangeProperty) {
  for (const auto& sys : {test_systems()[0], test_systems()[2]}) {
    auto R = RelativeCoxeterSystem::build(sys.W, sys.sigma);
    const auto& W = sys.W;
    const int k = static_cast<int>(R.simples().size());
    for (const auto& w : R.ball(3)) {
      auto lt = R.relative_length(w);
      // every S~-word of length l~(w) evaluating to w
      std::vector<std::vector<int>> words{{}};
      for (int d = 0; d < lt; ++d) {
        std::vector<std::vector<int>> next;
        for (auto& p : words)
          for (int j = 0; j < k; ++j) {
            auto q = p;
            q.push_back(j);
            next.push_back(q);
          }
        words = next;
      }
      for (int s : R.descents(w)) {
        const auto& st = R.simples()[s].element;
        for (const auto& word : words) {
          if (!(R.evaluate(word) == w)) continue;
          std::int64_t sum = 0;
          for (int j : word) sum += R.simples()[j].length;
          if (sum != W.length(w)) continue;
          bool found = false;
          for (std::size_t i = 1; i <= word.size() && !found; ++i) {
            std::vector<int> prefix(word.begin(), word.begin() + static_cast<long>(i) - 1);
            std::vector<int> upto(word.begin(), word.begin() + static_cast<long>(i));
            if (W.multiply(st, R.evaluate(prefix)) == R.evaluate(upto)) found = true;
          }
          EXPECT_TRUE(found) << sys.name;
        }
      }
    }
  }
}

TEST(Lien, Examples) {
  auto W = finite(RootType::B, 2);
  auto sig = GenSet::of({1});
  EXPECT_TRUE(lien_decompose(W, W.identity(), sig, sig).empty());
  auto y = W.multiply(W.longest_element(W.generators()), W.simple(1));
  auto moves = lien_decompose(W, y, sig, sig);
  ASSERT_EQ(moves.size(), 1u);
  EXPECT_EQ(moves[0].from, sig);
  EXPECT_EQ(moves[0].to, sig);
  EXPECT_EQ(moves[0].element, y);
  EXPECT_EQ(W.length(moves[0].element), 3);
  EXPECT_THROW(lien_decompose(W, W.simple(2), sig, sig), NotANormalizerElement);
}

TEST(Lien, AffineA2ChainsAreLengthAdditive) {
  auto W = affine(RootType::A, 2);
  auto sig = GenSet::of({1}), sigp = GenSet::of({2});
  auto ys = normalizer_pairs(W, sig, sigp, 8);
  ASSERT_FALSE(ys.empty());
  for (const auto& y : ys) {
    auto moves = lien_decompose(W, y, sig, sigp);
    ASSERT_FALSE(moves.empty());
    EXPECT_EQ(moves.front().from, sig);
    EXPECT_EQ(moves.back().to, sigp);
    WeylElement prod = W.identity();
    std::int64_t total = 0;
    for (std::size_t i = 0; i < moves.size(); ++i) {
      const auto& m = moves[i];
      if (i) EXPECT_EQ(moves[i - 1].to, m.from);
      EXPECT_LE(m.from.minus(m.to).size(), 1);
      EXPECT_EQ(m.element, W.multiply(W.longest_element(m.from.with(m.s)), W.longest_element(m.from)));
      EXPECT_TRUE(in_normalizer_pair(W, m.element, m.from, m.to));
      prod = W.multiply(m.element, prod);
      total += W.length(m.element);
    }
    EXPECT_EQ(prod, y);
    EXPECT_EQ(total, W.length(y));
  }
}

TEST(CoxeterBuilder, KnownGroups) {
  // A2: 1,2,2,1 ; affine A1: 1,2,2,2,... ; B2: 1,2,2,2,1
  EXPECT_EQ(CoxeterBuilder({{1, 3}, {3, 1}}).sphere_sizes(4), (std::vector<std::size_t>{1, 2, 2, 1, 0}));
  EXPECT_EQ(CoxeterBuilder({{1, 0}, {0, 1}}).sphere_sizes(3), (std::vector<std::size_t>{1, 2, 2, 2}));
  EXPECT_EQ(CoxeterBuilder({{1, 4}, {4, 1}}).sphere_sizes(5), (std::vector<std::size_t>{1, 2, 2, 2, 1, 0}));
  EXPECT_THROW(CoxeterBuilder({{1, 5}, {5, 1}}), InvalidParameters);
}
