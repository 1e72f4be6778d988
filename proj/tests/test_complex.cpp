#include <gtest/gtest.h>

#include <random>
#include <set>

#include "daha/complex.hpp"
#include "oracles.hpp"

using namespace daha;

namespace {

CoxeterComplex affine(RootType t, int n) { return CoxeterComplex(WeylGroup::affine(make_affine(t, n))); }
CoxeterComplex finite(RootType t, int n) { return CoxeterComplex(WeylGroup::finite(make_affine(t, n))); }

/// Elements of the radius ball fixing x, by direct evaluation.
std::set<WeylElement> fixing_point(const WeylGroup& W, const QVec& x, int radius) {
  std::set<WeylElement> out;
  for (const auto& g : W.enumerate_ball(radius))
    if (W.act_point(g, x) == x) out.insert(g);
  return out;
}

}  // namespace

TEST(Facet, BoundaryWithEqualTypeIsIdentity) {
  auto C = affine(RootType::B, 3);
  auto f = C.facet(C.group().from_word({0, 2, 1}), GenSet::of({1}));
  EXPECT_EQ(C.boundary(f, f.type), f);
  EXPECT_THROW(C.boundary(f, GenSet::of({2})), TypeNotContained);
  EXPECT_THROW(C.facet(C.group().identity(), GenSet::of({0, 1, 2, 3})), InvalidParameters);
}

TEST(Facet, AffineA1VertexIsFixedByItsWall) {
  auto C = affine(RootType::A, 1);
  const auto& W = C.group();
  auto kappa = C.fundamental(GenSet{});
  auto v = C.boundary(kappa, GenSet::of({1}));
  EXPECT_EQ(v.interior, QVec{Rational(0)});
  EXPECT_EQ(W.act_point(W.simple(1), v.interior), v.interior);
  EXPECT_EQ(v.span.dimension(), 0);
  EXPECT_EQ(kappa.interior, QVec{Rational(1, 2)});
}

TEST(Facet, TypeIsInvariantUnderTheAction) {
  auto C = affine(RootType::C, 2);
  std::mt19937_64 rng(7);
  auto f = C.facet(C.group().from_word({1, 0}), GenSet::of({2}));
  for (int i = 0; i < 20; ++i) {
    auto w = oracle::random_element(C.group(), 8, rng);
    EXPECT_EQ(C.act(w, f).type, f.type);
  }
}

TEST(Facet, InteriorPointSignsAndStabilizersInBall) {
  for (auto C : {affine(RootType::A, 2), affine(RootType::G, 2), finite(RootType::B, 3)}) {
    const auto& W = C.group();
    SCOPED_TRACE(W.roots().label());
    auto all = C.facets(3);
    ASSERT_FALSE(all.facets.empty());
    auto search = W.enumerate_ball(8);
    for (const auto& f : all.facets) {
      // J-walls of the defining chamber vanish, the others are positive.
      for (int i : W.generators().indices()) {
        auto v = W.act(f.rep, W.simple_root(i)).function()(f.interior);
        if (f.type.contains(i)) EXPECT_EQ(v, 0);
        else EXPECT_GT(v, 0);
      }
      EXPECT_TRUE(f.span.contains(f.interior));
      EXPECT_EQ(f.span.dimension(), W.rank() - f.type.size());
      // Stab(f) = rep W_J rep^-1: the generated group equals the set of
      // elements fixing the coset, within the search ball.
      auto gens = C.stabilizer_generators(f);
      auto group = C.generated_group(gens);
      ElementSet stab(group.begin(), group.end());
      for (const auto& g : search) {
        bool fixes = C.act(g, f) == f;
        if (fixes) EXPECT_TRUE(stab.count(g));
        if (stab.count(g)) EXPECT_TRUE(fixes);
        EXPECT_EQ(fixes, W.act_point(g, f.interior) == f.interior);
      }
    }
  }
}

TEST(Facet, FacetContainingRecoversInteriorPoints) {
  auto C = affine(RootType::B, 2);
  for (const auto& f : C.facets(4).facets) EXPECT_EQ(C.facet_containing(f.interior), f);
  auto F = finite(RootType::A, 2);
  EXPECT_THROW(F.facet_containing(QVec{0, 0}), InvalidParameters);
}

TEST(Facet, BoundaryFunctorialityAndClosure) {
  auto C = affine(RootType::A, 3);
  const auto& W = C.group();
  for (const auto& f : C.facets(2, GenSet::of({1})).facets)
    for (std::uint32_t kb = 0; kb < 16; ++kb) {
      GenSet K;
      K.bits = kb;
      if (!f.type.subset_of(K) || K == W.generators()) continue;
      auto b = C.boundary(f, K);
      EXPECT_EQ(b.type, K);
      EXPECT_TRUE(f.span.contains(b.interior));
      for (std::uint32_t lb = 0; lb < 16; ++lb) {
        GenSet L;
        L.bits = lb;
        if (!K.subset_of(L) || L == W.generators()) continue;
        EXPECT_EQ(C.boundary(b, L), C.boundary(f, L));
      }
    }
}

TEST(Facet, FundamentalFacetsAtRadiusZero) {
  auto C = affine(RootType::A, 2);
  auto e = C.facets(0);
  EXPECT_EQ(e.facets.size(), 7u);
  EXPECT_FALSE(e.complete);
  auto F = finite(RootType::B, 2);
  auto all = F.facets(10);
  EXPECT_TRUE(all.complete);
  // 8 chambers, 4 + 4 edges of the two types
  EXPECT_EQ(all.facets.size(), 16u);
}

TEST(Span, AlcoveAndVertexProjections) {
  auto C = affine(RootType::A, 2);
  auto kappa = C.fundamental(GenSet{});
  EXPECT_EQ(kappa.span.dimension(), 2);
  QVec x{Rational(1, 3), Rational(-5, 7)};
  EXPECT_EQ(C.project_point(x, kappa.span), x);
  auto origin = C.fundamental(GenSet::of({1, 2}));
  EXPECT_EQ(origin.span.dimension(), 0);
  EXPECT_EQ(origin.span.base_point(), (QVec{0, 0}));
  EXPECT_EQ(C.project_point(x, origin.span), (QVec{0, 0}));
}

TEST(Span, ProjectionIsOrthogonalForTheDualGram) {
  for (auto C : {affine(RootType::B, 3), affine(RootType::G, 2), affine(RootType::C, 3)}) {
    const auto& W = C.group();
    const QMat Ginv = W.roots().gram_dual();
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<int> num(-9, 9);
    for (const auto& f : C.facets(2).facets) {
      QVec x(W.rank());
      for (auto& c : x) c = make_rational(num(rng), 4);
      auto p = C.project_point(x, f.span);
      EXPECT_TRUE(f.span.contains(p));
      QVec diff(W.rank());
      for (int i = 0; i < W.rank(); ++i) diff[i] = x[i] - p[i];
      for (const auto& v : f.span.direction()) EXPECT_EQ(dot(diff, mat_vec(Ginv, v)), 0);
      EXPECT_EQ(C.project_point(p, f.span), p);
      auto can = C.canonical_projection(x, f);
      EXPECT_TRUE(C.fundamental(f.type).span.contains(can));
    }
  }
}

TEST(PointStabilizer, Examples) {
  auto C = affine(RootType::A, 2);
  const auto& W = C.group();
  EXPECT_TRUE(C.stabilizer_of_point(W.system().alcove_interior_point()).empty());
  auto origin = C.generated_group(C.stabilizer_of_point(QVec{0, 0}));
  EXPECT_EQ(origin.size(), 6u);
  for (const auto& g : origin) EXPECT_TRUE(g.has_zero_translation());
  auto A1 = affine(RootType::A, 1);
  EXPECT_TRUE(A1.stabilizer_of_point(QVec{Rational(1, 2)}).empty());
  EXPECT_EQ(A1.stabilizer_of_point(QVec{Rational(1)}).size(), 1u);
}

TEST(PointStabilizer, MatchesBallSearch) {
  for (auto [t, n] : std::vector<std::pair<RootType, int>>{{RootType::C, 2}, {RootType::G, 2}, {RootType::BC, 2}}) {
    auto C = affine(t, n);
    const auto& W = C.group();
    SCOPED_TRACE(W.roots().label());
    std::vector<QVec> points{QVec{0, 0}, QVec{Rational(1, 2), 0}, QVec{Rational(1, 2), Rational(1, 2)},
                             QVec{Rational(1, 3), Rational(1, 3)}, QVec{1, Rational(-1, 2)}};
    for (const auto& x : points) {
      auto gen = C.generated_group(C.stabilizer_of_point(x));
      // the ball may not hold every long element of W_x, so compare both ways
      std::set<WeylElement> generated(gen.begin(), gen.end());
      for (const auto& g : gen) EXPECT_EQ(W.act_point(g, x), x);
      for (const auto& g : fixing_point(W, x, 10)) EXPECT_TRUE(generated.count(g)) << to_string(x);
    }
  }
}

TEST(RelativePosition, SelfIsIdentityAndGood) {
  auto C = affine(RootType::C, 2);
  for (const auto& f : C.facets(3, GenSet::of({1})).facets) {
    auto r = C.relative_position(f, f);
    EXPECT_EQ(r.double_coset, C.group().identity());
    EXPECT_TRUE(r.good);
  }
  EXPECT_THROW(C.relative_position(C.fundamental(GenSet::of({1})), C.fundamental(GenSet::of({2}))), TypesDiffer);
}

TEST(RelativePosition, InvariantUnderTheAction) {
  auto C = affine(RootType::C, 2);
  const auto& W = C.group();
  std::mt19937_64 rng(11);
  auto fs = C.facets(3, GenSet::of({1})).facets;
  std::uniform_int_distribution<std::size_t> pick(0, fs.size() - 1);
  for (int i = 0; i < 20; ++i) {
    auto w = oracle::random_element(W, 7, rng);
    const auto& a = fs[pick(rng)];
    const auto& b = fs[pick(rng)];
    auto r = C.relative_position(a, b);
    auto s = C.relative_position(C.act(w, a), C.act(w, b));
    EXPECT_EQ(r.double_coset, s.double_coset);
    EXPECT_EQ(r.good, s.good);
  }
}

TEST(RelativePosition, GoodIffSpansAgreeIffNormalizing) {
  std::vector<std::pair<CoxeterComplex, GenSet>> cases{{affine(RootType::C, 2), GenSet::of({1})},
                                                       {affine(RootType::A, 2), GenSet::of({1})},
                                                       {affine(RootType::A, 3), GenSet::of({1, 3})},
                                                       {finite(RootType::B, 3), GenSet::of({1})}};
  for (const auto& [C, I] : cases) {
    SCOPED_TRACE(C.group().roots().label() + " " + to_string(I));
    auto fs = C.facets(4, I).facets;
    std::size_t good = 0;
    for (const auto& a : fs)
      for (const auto& b : fs) {
        auto r = C.relative_position(a, b);
        EXPECT_EQ(r.good, C.normalizes_parabolic(r.double_coset, I));
        if (r.good) {
          ++good;
          EXPECT_EQ(C.canonical_act(*r.relative_element, b), a);
          EXPECT_EQ(C.act(*r.realizing_element, b), a);
        }
      }
    EXPECT_GT(good, fs.size());
  }
}

TEST(RelativePosition, RelativeElementIsUnique) {
  auto C = affine(RootType::C, 2);
  const auto& W = C.group();
  GenSet I = GenSet::of({1});
  auto R = RelativeCoxeterSystem::build(W, I);
  auto rel = R.ball(6);
  auto fs = C.facets(3, I).facets;
  for (const auto& a : fs)
    for (const auto& b : fs) {
      auto r = C.relative_position(a, b);
      if (!r.good) continue;
      int hits = 0;
      for (const auto& w : rel)
        if (C.canonical_act(w, b) == a) ++hits;
      EXPECT_EQ(hits, 1);
      EXPECT_TRUE(R.contains(*r.relative_element));
    }
}

TEST(Xi, OrbitOfAlcovesOfTheSpan) {
  auto C = affine(RootType::C, 2);
  const auto& W = C.group();
  auto nu0 = C.fundamental(GenSet::of({1}));
  QVec x{0, 0};
  auto xi = C.xi_orbit(x, nu0, 4);
  EXPECT_FALSE(xi.complete);
  ASSERT_FALSE(xi.facets.empty());
  auto wx = C.generated_group(C.stabilizer_of_point(x));
  std::set<AffineSubspace> spans;
  for (const auto& u : wx) spans.insert(C.act_subspace(u, nu0.span));
  for (const auto& f : xi.facets) {
    EXPECT_EQ(f.type, nu0.type);
    // same stabilizer as some W_x-translate of nu0's span
    bool found = false;
    for (const auto& u : wx)
      if (C.stabilizer_reflections(f) == C.stabilizer_reflections(C.act(u, nu0))) found = true;
    EXPECT_TRUE(found);
  }
  EXPECT_TRUE(std::find(xi.facets.begin(), xi.facets.end(), nu0) != xi.facets.end());
  (void)W;
}

TEST(Xi, OrbitFibersOverRelativeClasses) {
  for (auto [t, n, sig, x] : std::vector<std::tuple<RootType, int, GenSet, QVec>>{
           {RootType::C, 2, GenSet::of({1}), QVec{0, 0}},
           {RootType::C, 2, GenSet::of({1}), QVec{Rational(1, 2), 0}},
           {RootType::A, 3, GenSet::of({1, 3}), QVec{0, 0, 0}}}) {
    auto C = affine(t, n);
    const auto& W = C.group();
    SCOPED_TRACE(W.roots().label() + " " + to_string(x));
    auto R = RelativeCoxeterSystem::build(W, sig);
    auto wx = C.generated_group(C.stabilizer_of_point(x));
    auto xi = C.xi_orbit(x, C.fundamental(sig), 3).facets;
    auto rel = R.ball(2);
    for (const auto& a : xi)
      for (const auto& b : xi) {
        auto fibers = orbit_fibers(C, wx, a, b);
        std::map<WeylElement, std::size_t> count;
        for (const auto& f : fibers) {
          if (f.good) EXPECT_LE(f.orbits, 1u);
          count[f.double_coset] = f.orbits;
        }
        for (const auto& w : rel) {
          bool lands = false;
          auto moved = C.canonical_act(w, a);
          for (const auto& u : wx)
            if (C.act(u, moved) == b) lands = true;
          EXPECT_EQ(count.count(w) ? count[w] : 0u, lands ? 1u : 0u);
        }
      }
  }
}

TEST(Xi, FibersFromGeneratorsMatchTheWholeGroup) {
  for (auto [C, sig, x] : std::vector<std::tuple<CoxeterComplex, GenSet, QVec>>{
           {affine(RootType::C, 2), GenSet::of({1}), QVec{0, 0}},
           {CoxeterComplex(WeylGroup::finite(make_affine(RootType::B, 3))), GenSet::of({1}), QVec{0, 0, 0}}}) {
    auto gens = C.stabilizer_of_point(x);
    auto whole = C.generated_group(gens);
    auto xi = C.xi_orbit(x, C.fundamental(sig), 2).facets;
    ASSERT_FALSE(xi.empty());
    for (const auto& a : xi)
      for (const auto& b : xi) {
        auto f1 = orbit_fibers(C, gens, a, b);
        auto f2 = orbit_fibers(C, whole, a, b);
        ASSERT_EQ(f1.size(), f2.size());
        for (std::size_t i = 0; i < f1.size(); ++i) {
          EXPECT_EQ(f1[i].double_coset, f2[i].double_coset);
          EXPECT_EQ(f1[i].orbits, f2[i].orbits);
          EXPECT_EQ(f1[i].good, f2[i].good);
        }
      }
  }
}

TEST(FixedChambers, EmptySigmaGivesAllAlcoves) {
  auto C = affine(RootType::A, 2);
  auto fc = C.fixed_chambers(C.fundamental(GenSet{}), 3);
  EXPECT_EQ(fc.chambers.size(), C.group().enumerate_ball(3).size());
  EXPECT_TRUE(fc.all_same_type);
  EXPECT_TRUE(fc.single_free_orbit);
  EXPECT_GT(fc.boundary_chambers, 0u);
}

TEST(FixedChambers, FiniteB2) {
  auto C = finite(RootType::B, 2);
  const auto& W = C.group();
  auto fc = C.fixed_chambers(C.fundamental(GenSet::of({1})), 6);
  ASSERT_EQ(fc.chambers.size(), 2u);
  auto w0 = W.longest_element(W.generators());
  std::set<Facet> got(fc.chambers.begin(), fc.chambers.end());
  std::set<Facet> want{C.fundamental(GenSet::of({1})), C.facet(W.multiply(w0, W.simple(1)), GenSet::of({1}))};
  EXPECT_EQ(got, want);
  EXPECT_TRUE(fc.complete);
  EXPECT_EQ(fc.boundary_chambers, 0u);
  EXPECT_TRUE(fc.single_free_orbit);
  EXPECT_THROW(finite(RootType::A, 2).fixed_chambers(finite(RootType::A, 2).fundamental(GenSet::of({1})), 3),
               NotAdmissible);
}

TEST(FixedChambers, AffineSystemsShareTheType) {
  for (auto [t, n, sig] : std::vector<std::tuple<RootType, int, GenSet>>{{RootType::C, 2, GenSet::of({1})},
                                                                        {RootType::A, 3, GenSet::of({1, 3})}}) {
    auto C = affine(t, n);
    SCOPED_TRACE(C.group().roots().label());
    auto fc = C.fixed_chambers(C.fundamental(sig), 6);
    EXPECT_GT(fc.chambers.size(), 1u);
    EXPECT_TRUE(fc.all_same_type);
    EXPECT_TRUE(fc.single_free_orbit);
    EXPECT_FALSE(fc.complete);
    // away from the base facet too
    auto y = C.group().from_word({0, 2});
    auto moved = C.fixed_chambers(C.facet(y, sig), 6);
    EXPECT_EQ(moved.chambers.size(), fc.chambers.size());
    for (const auto& c : moved.chambers)
      EXPECT_EQ(C.stabilizer_reflections(c), C.stabilizer_reflections(C.facet(y, sig)));
    EXPECT_THROW(C.fixed_chambers(C.fundamental(sig), 1), BallTooSmall);
  }
}
