#pragma once

// Invariant checks over whole systems. Each returns a CheckResult with a
// case count and the first few counterexamples; none of them throw on a
// failed invariant.

#include <algorithm>
#include <concepts>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "daha/complex.hpp"
#include "daha/coxeter_builder.hpp"
#include "daha/ddaha.hpp"
#include "daha/relative.hpp"
#include "daha/spiral.hpp"

namespace daha {

enum class CheckStatus { Pass, Fail, Skip };

inline std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Skip: return "skip";
  }
  return "?";
}

struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::Pass;
  std::size_t cases = 0;
  std::string detail;
  std::vector<std::string> counterexamples;

  static constexpr std::size_t kMaxCounterexamples = 5;

  explicit CheckResult(std::string n) : name(std::move(n)) {}
  bool passed() const { return status != CheckStatus::Fail; }
  void fail(const std::string& what) {
    status = CheckStatus::Fail;
    if (counterexamples.size() < kMaxCounterexamples) counterexamples.push_back(what);
  }
  void expect(bool ok, const std::string& what) {
    ++cases;
    if (!ok) fail(what);
  }
  /// Builds the message only on failure.
  template <class F>
    requires std::invocable<F>
  void expect(bool ok, F&& what) {
    ++cases;
    if (!ok) fail(what());
  }
};

inline std::string word_of(const WeylGroup& W, const WeylElement& g) { return word_string(W.reduced_word(g).letters); }

/// Sphere sizes of W~ from its Coxeter matrix alone against the sizes found
/// inside W.
inline CheckResult check_relative_ball_sizes(const RelativeCoxeterSystem& R, int radius) {
  CheckResult r("relative ball sizes");
  std::vector<std::size_t> sizes;
  try {
    sizes = CoxeterBuilder(R.coxeter_matrix()).sphere_sizes(radius);
  } catch (const InvalidParameters& e) {
    r.fail(e.what());
    return r;
  }
  auto layers = R.ball_layers(radius);
  std::string got, want;
  for (std::size_t d = 0; d < sizes.size(); ++d) {
    std::size_t have = d < layers.size() ? layers[d].size() : 0;
    got += (d ? "," : "") + std::to_string(have);
    want += (d ? "," : "") + std::to_string(sizes[d]);
    r.expect(have == sizes[d], "radius " + std::to_string(d) + ": " + std::to_string(have) + " in W, " +
                                   std::to_string(sizes[d]) + " from the Coxeter matrix");
  }
  r.detail = "spheres " + got + " (builder " + want + ")";
  return r;
}

inline CheckResult check_length_additivity(const WeylGroup& W, const RelativeCoxeterSystem& R, int radius) {
  CheckResult r("length additivity");
  auto ball = R.ball(radius);
  std::map<WeylElement, std::int64_t> rel;
  for (const auto& g : ball) rel[g] = R.relative_length(g);
  for (const auto& g : ball)
    for (const auto& h : ball) {
      auto gh = W.multiply(g, h);
      bool a = rel[g] + rel[h] == R.relative_length(gh);
      bool b = W.length(g) + W.length(h) == W.length(gh);
      r.expect(a == b, [&] { return "g=" + word_of(W, g) + " h=" + word_of(W, h); });
    }
  r.detail = std::to_string(ball.size()) + " elements";
  return r;
}

inline std::set<AffineRoot> inversion_keys(const WeylGroup& W, const WeylElement& g) {
  auto t = W.inversion_set(g);
  return {t.begin(), t.end()};
}

/// l(w) = #T(w) on a ball, and T(wy) within T(w) u w T(y) w^-1 on random pairs.
inline CheckResult check_reflection_calculus(const WeylGroup& W, int radius, int pairs, std::mt19937_64& rng) {
  CheckResult r("reflection calculus");
  auto ball = W.enumerate_ball(radius);
  for (const auto& w : ball)
    r.expect(W.length(w) == static_cast<std::int64_t>(inversion_keys(W, w).size()),
             [&] { return "l != #T at " + word_of(W, w); });
  std::uniform_int_distribution<std::size_t> pick(0, ball.size() - 1);
  for (int i = 0; i < pairs; ++i) {
    const auto& w = ball[pick(rng)];
    const auto& y = ball[pick(rng)];
    auto rhs = inversion_keys(W, w);
    for (const auto& a : W.inversion_set(y)) rhs.insert(W.act(w, a).positive());
    bool ok = true;
    for (const auto& a : W.inversion_set(W.multiply(w, y)))
      if (!rhs.count(a)) ok = false;
    r.expect(ok, [&] { return "w=" + word_of(W, w) + " y=" + word_of(W, y); });
  }
  r.detail = std::to_string(ball.size()) + " elements, " + std::to_string(pairs) + " pairs";
  return r;
}

/// For every reduced S~-word of w and every relative descent s~ of w, some
/// prefix satisfies s~ s~_1..s~_{i-1} = s~_1..s~_i.
inline CheckResult check_exchange(const WeylGroup& W, const RelativeCoxeterSystem& R, int radius) {
  CheckResult r("exchange property");
  const int k = static_cast<int>(R.simples().size());
  for (const auto& w : R.ball(radius)) {
    auto lt = R.relative_length(w);
    std::vector<std::vector<int>> words{{}};
    for (std::int64_t d = 0; d < lt; ++d) {
      std::vector<std::vector<int>> next;
      for (const auto& p : words)
        for (int j = 0; j < k; ++j) {
          auto q = p;
          q.push_back(j);
          // prefixes of reduced words are reduced
          if (R.relative_length(R.evaluate(q)) == static_cast<std::int64_t>(q.size()))
            next.push_back(std::move(q));
        }
      words = std::move(next);
    }
    for (int s : R.descents(w)) {
      const auto& st = R.simples()[s].element;
      for (const auto& word : words) {
        if (!(R.evaluate(word) == w)) continue;
        bool found = false;
        for (std::size_t i = 1; i <= word.size() && !found; ++i) {
          std::vector<int> prefix(word.begin(), word.begin() + static_cast<long>(i) - 1);
          std::vector<int> upto(word.begin(), word.begin() + static_cast<long>(i));
          if (W.multiply(st, R.evaluate(prefix)) == R.evaluate(upto)) found = true;
        }
        r.expect(found, [&] {
          return "w=" + word_of(W, w) + " s~=" + std::to_string(R.simples()[s].s) + " word " + word_string(word);
        });
      }
    }
  }
  return r;
}

inline CheckResult check_fixed_chambers(const CoxeterComplex& C, GenSet sigma, int radius) {
  CheckResult r("fixed subcomplex");
  FixedChambers fc;
  try {
    fc = C.fixed_chambers(C.fundamental(sigma), radius);
  } catch (const BallTooSmall& e) {
    r.status = CheckStatus::Skip;
    r.detail = e.what();
    return r;
  }
  r.expect(!fc.chambers.empty(), "no chamber found");
  r.expect(fc.all_same_type, "a chamber of another type is fixed by W_Sigma");
  r.expect(fc.single_free_orbit, "the relative group does not act simply transitively on the chambers found");
  r.detail = std::to_string(fc.chambers.size()) + " chambers, " + std::to_string(fc.boundary_chambers) +
             " on the ball boundary" + (fc.complete ? ", ball complete" : "");
  return r;
}

/// On all type-I facet pairs of a ball: good iff equal spans iff the double
/// coset normalizes W_I; the relative element maps nu' to nu and is the only
/// one in a relative ball; W_x-orbit fibres over good classes have size <= 1.
inline CheckResult check_relative_positions(const CoxeterComplex& C, GenSet I, int radius, int relative_radius,
                                            const QVec& x) {
  CheckResult r("relative position");
  const auto& W = C.group();
  auto R = RelativeCoxeterSystem::build(W, I);
  auto rel = R.ball(relative_radius);
  auto fs = C.facets(radius, I).facets;
  std::size_t good = 0;
  for (const auto& a : fs)
    for (const auto& b : fs) {
      auto p = C.relative_position(a, b);
      auto tag = [&] { return word_of(W, a.rep) + " vs " + word_of(W, b.rep); };
      r.expect(p.good == (a.span == b.span), [&] { return "good flag disagrees with span equality: " + tag(); });
      r.expect(p.good == C.normalizes_parabolic(p.double_coset, I),
               [&] { return "good flag disagrees with normalizing: " + tag(); });
      if (!p.good) continue;
      ++good;
      r.expect(C.canonical_act(*p.relative_element, b) == a,
               [&] { return "relative element does not map nu' to nu: " + tag(); });
      r.expect(R.contains(*p.relative_element), [&] { return "relative element outside W~: " + tag(); });
      if (R.relative_length(*p.relative_element) <= relative_radius) {
        int hits = 0;
        for (const auto& w : rel)
          if (C.canonical_act(w, b) == a) ++hits;
        r.expect(hits == 1, [&] { return std::to_string(hits) + " relative elements for " + tag(); });
      }
    }
  auto wx = C.stabilizer_of_point(x);
  auto nu0 = C.fundamental(I);
  auto xi = C.xi_orbit(x, nu0, std::min(radius, 2)).facets;
  std::size_t fibres = 0;
  for (const auto& a : xi)
    for (const auto& b : xi)
      for (const auto& f : orbit_fibers(C, wx, a, b)) {
        ++fibres;
        if (f.good)
          r.expect(f.orbits <= 1,
                   [&] { return "fibre of size " + std::to_string(f.orbits) + " over " + word_of(W, f.double_coset); });
      }
  r.detail = std::to_string(fs.size()) + " facets, " + std::to_string(good) + " good pairs, " +
             std::to_string(fibres) + " fibres";
  return r;
}

inline QVec random_rational_vector(int n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-12, 12), den(1, 6);
  QVec v(n);
  for (auto& c : v) c = make_rational(num(rng), den(rng));
  return v;
}

/// P_n = L_n u U_n, the bracket maps P_a x P_b into P_{a+b} and U into U, on
/// random cocharacters; facet spirals independent of the sample point.
inline CheckResult check_spirals(const GradedRootDatum& g, int trials, std::int64_t window, int facet_radius,
                                 std::mt19937_64& rng) {
  CheckResult r("spiral algebra");
  const auto& R = g.roots();
  auto add = [&](const ZVec& a, const ZVec& b) {
    ZVec s(a.size());
    for (std::size_t i = 0; i < s.size(); ++i) s[i] = a[i] + b[i];
    return s;
  };
  auto spaces = g.spaces();
  for (int t = 0; t < trials; ++t) {
    Spiral sp(g, random_rational_vector(R.rank(), rng), g.epsilon());
    auto lev = levi_decomposition_check(sp, -window, window);
    r.expect(lev.ok, "P != L + U for lambda " + to_string(sp.lambda()) +
                         (lev.failures.empty() ? "" : " at " + lev.failures[0]));
    for (std::int64_t a = -window; a <= window; ++a)
      for (std::int64_t b = -window; b <= window; ++b)
        for (const auto& x : spaces) {
          if (!sp.in_P(x, a)) continue;
          for (const auto& y : spaces) {
            if (!sp.in_P(y, b) || (!x && !y)) continue;
            RootSpace target;
            if (!x || !y) {
              target = x ? x : y;
            } else {
              ZVec s = add(*x, *y);
              if (std::all_of(s.begin(), s.end(), [](auto c) { return c == 0; })) target = std::nullopt;
              else if (R.is_root(s)) target = s;
              else continue;
            }
            auto tag = [&] {
              return "lambda " + to_string(sp.lambda()) + " " + to_string(x) + "@" + std::to_string(a) +
                              " " + to_string(y) + "@" + std::to_string(b);
            };
            r.expect(sp.in_P(target, a + b), [&] { return "bracket leaves P: " + tag(); });
            if (target && (sp.in_U(x, a) || sp.in_U(y, b)))
              r.expect(sp.in_U(target, a + b), [&] { return "U is not an ideal: " + tag(); });
          }
        }
  }
  CoxeterComplex C(WeylGroup::affine(g.system_ptr()));
  std::size_t facets = 0;
  for (const auto& f : C.facets(facet_radius).facets) {
    ++facets;
    auto fs = spiral_from_facet(g, C, f, window);
    r.expect(fs.independent, [&] {
      return "facet spiral depends on the sample point at " + word_of(C.group(), f.rep) + " type " + to_string(f.type);
    });
  }
  r.detail = std::to_string(trials) + " cocharacters, " + std::to_string(facets) + " facets";
  return r;
}

/// Associativity of random triples and the defining relations.
inline CheckResult check_ddaha(const DDAHA& A, int triples, int ball_radius, int depth, std::mt19937_64& rng) {
  CheckResult r("dDAHA relations");
  auto ball = A.model().ball(ball_radius);
  for (int t = 0; t < triples; ++t) {
    auto x = A.random_element(rng, ball, 3, 2);
    auto y = A.random_element(rng, ball, 3, 2);
    auto z = A.random_element(rng, ball, 3, 2);
    r.expect(A.multiply(A.multiply(x, y), z) == A.multiply(x, A.multiply(y, z)), [&] {
      return "(xy)z != x(yz) for x=" + A.to_string(x) + " y=" + A.to_string(y) + " z=" + A.to_string(z);
    });
  }
  auto rel = A.verify_relations(depth, rng());
  r.cases += rel.checks;
  for (const auto& f : rel.failures) r.fail(f);
  r.detail = std::to_string(triples) + " triples, " + std::to_string(rel.checks) + " relation checks";
  if (!rel.skipped.empty()) r.detail += ", skipped " + std::to_string(rel.skipped.size()) + " infinite or deep braids";
  return r;
}

/// With h = 0 the product is the smash product.
inline CheckResult check_smash_product(const DDAHA& A, int pairs, int ball_radius, std::mt19937_64& rng) {
  CheckResult r("smash product");
  auto ball = A.model().ball(ball_radius);
  for (int t = 0; t < pairs; ++t) {
    auto x = A.random_element(rng, ball, 3, 2);
    auto y = A.random_element(rng, ball, 3, 2);
    r.expect(A.multiply(x, y) == A.smash_multiply(x, y), [&] { return "x=" + A.to_string(x) + " y=" + A.to_string(y); });
  }
  return r;
}

/// Weights of the truncated standard module at lambda0: the multiset
/// {g lambda0 : l~(g) <= N}, each generalized weight space matching it.
inline CheckResult check_standard_weights(const DDAHA& A, const QVec& lambda0, int N) {
  CheckResult r("standard module weights");
  auto M = A.standard_module(lambda0, N);
  std::map<QVec, std::size_t> want;
  for (const auto& g : M.basis) ++want[A.apply(g, lambda0)];
  std::map<QVec, std::size_t> got;
  for (const auto& w : M.weights) got[w.weight] += w.dimension;
  r.expect(got == want, "weight multiset differs from the orbit of lambda0");
  std::size_t simple = 0;
  for (const auto& w : M.weights)
    if (w.dimension == 1) ++simple;
  r.detail = std::to_string(M.basis.size()) + " basis vectors, " + std::to_string(M.weights.size()) + " weights, " +
             std::to_string(simple) + " of multiplicity one";
  return r;
}

}  // namespace daha
