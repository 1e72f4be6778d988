#pragma once

// Z/m-graded root combinatorics. The graded Lie algebra is modelled by its
// root spaces plus one marker for the Cartan subalgebra; brackets reduce to
// root addition.

#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>
#include <vector>

#include "daha/complex.hpp"
#include "daha/errors.hpp"

namespace daha {

/// A root, or std::nullopt for the Cartan subalgebra.
using RootSpace = std::optional<ZVec>;

inline std::string to_string(const RootSpace& r) { return r ? to_string(*r) : std::string("h"); }

class GradedRootDatum {
 public:
  GradedRootDatum(AffineSystemPtr sys, QVec theta, std::int64_t m, std::int64_t d)
      : sys_(std::move(sys)), theta_(std::move(theta)), m_(m), d_(d) {
    if (m_ <= 0) throw InvalidParameters("m must be positive");
    if (d_ == 0) throw InvalidParameters("d must be nonzero");
    if (static_cast<int>(theta_.size()) != roots().rank()) throw InvalidParameters("theta has the wrong rank");
    for (const auto& a : roots().roots())
      if (!is_integer(dot(to_qvec(a), theta_)))
        throw InvalidParameters("theta pairs non-integrally with root " + to_string(a));
  }

  const AffineRootSystem& system() const { return *sys_; }
  AffineSystemPtr system_ptr() const { return sys_; }
  const FiniteRootSystem& roots() const { return sys_->finite(); }
  const QVec& theta() const { return theta_; }
  std::int64_t m() const { return m_; }
  std::int64_t d() const { return d_; }
  int epsilon() const { return d_ > 0 ? 1 : -1; }
  /// The grading point theta / m.
  QVec grading_point() const {
    QVec x = theta_;
    for (auto& c : x) c /= Rational(static_cast<long>(m_));
    return x;
  }

  std::int64_t pairing(const ZVec& alpha) const { return to_int64(dot(to_qvec(alpha), theta_)); }
  /// <alpha, theta> mod m, in [0, m).
  std::int64_t degree(const ZVec& alpha) const { return mod(pairing(alpha)); }
  std::int64_t degree(const RootSpace& r) const { return r ? degree(*r) : 0; }
  std::int64_t mod(std::int64_t k) const { return ((k % m_) + m_) % m_; }

  /// The Cartan marker followed by every root.
  std::vector<RootSpace> spaces() const {
    std::vector<RootSpace> out{std::nullopt};
    for (const auto& a : roots().roots()) out.push_back(a);
    return out;
  }

 private:
  AffineSystemPtr sys_;
  QVec theta_;
  std::int64_t m_;
  std::int64_t d_;
};

struct SpiralPieces {
  std::vector<RootSpace> P, L, U;
};

class Spiral {
 public:
  Spiral(const GradedRootDatum& datum, QVec lambda, int epsilon)
      : datum_(&datum), lambda_(std::move(lambda)), eps_(epsilon) {
    if (eps_ != 1 && eps_ != -1) throw InvalidParameters("epsilon must be 1 or -1");
    if (static_cast<int>(lambda_.size()) != datum.roots().rank()) throw InvalidParameters("lambda has the wrong rank");
  }
  Spiral(const Spiral& o) : datum_(o.datum_), lambda_(o.lambda_), eps_(o.eps_) {}

  const QVec& lambda() const { return lambda_; }
  int epsilon() const { return eps_; }
  const GradedRootDatum& datum() const { return *datum_; }

  Rational weight(const RootSpace& r) const { return r ? dot(to_qvec(*r), lambda_) : Rational(0); }
  bool degree_matches(const RootSpace& r, std::int64_t n) const { return datum_->degree(r) == datum_->mod(n); }
  bool in_P(const RootSpace& r, std::int64_t n) const { return degree_matches(r, n) && weight(r) >= eps_ * n; }
  bool in_L(const RootSpace& r, std::int64_t n) const { return degree_matches(r, n) && weight(r) == eps_ * n; }
  bool in_U(const RootSpace& r, std::int64_t n) const { return degree_matches(r, n) && weight(r) > eps_ * n; }

  /// max |<alpha, lambda>| over the roots: L_n is empty and P_n = U_n or
  /// P_n = the whole degree-n part once |n| exceeds it.
  Rational pairing_bound() const {
    Rational b = 0;
    for (const auto& a : datum_->roots().roots()) b = std::max(b, Rational(abs(weight(a))));
    return b;
  }

  SpiralPieces pieces(std::int64_t n) const {
    {
      std::shared_lock lock(mutex_);
      auto it = memo_.find(n);
      if (it != memo_.end()) return it->second;
    }
    SpiralPieces p;
    for (const auto& r : datum_->spaces()) {
      if (in_P(r, n)) p.P.push_back(r);
      if (in_L(r, n)) p.L.push_back(r);
      if (in_U(r, n)) p.U.push_back(r);
    }
    std::unique_lock lock(mutex_);
    memo_.emplace(n, p);
    return p;
  }

 private:
  const GradedRootDatum* datum_;
  QVec lambda_;
  int eps_;
  mutable std::shared_mutex mutex_;
  mutable std::map<std::int64_t, SpiralPieces> memo_;
};

inline Spiral spiral_from_cochar(const GradedRootDatum& datum, const QVec& lambda, int epsilon) {
  return Spiral(datum, lambda, epsilon);
}

/// lambda_y = eps (theta - m y).
inline QVec facet_cochar(const GradedRootDatum& datum, const QVec& y) {
  QVec lambda(y.size());
  for (std::size_t i = 0; i < y.size(); ++i)
    lambda[i] = datum.epsilon() * (datum.theta()[i] - Rational(static_cast<long>(datum.m())) * y[i]);
  return lambda;
}

struct FacetSpiral {
  Spiral spiral;
  /// Whether the P_n agree for the sample points of the facet on the window.
  bool independent = true;
  std::vector<QVec> samples;
};

inline std::vector<QVec> facet_samples(const CoxeterComplex& C, const Facet& f) {
  const std::size_t k = C.group().generators().minus(f.type).size();
  std::vector<QVec> out{f.interior};
  if (k < 2) return out;
  for (int s = 1; s <= 2; ++s) {
    std::vector<Rational> w(k, Rational(1));
    w[static_cast<std::size_t>(s - 1) % k] = Rational(s + 1);
    w[k - 1] += make_rational(1, 2 * s + 1);
    out.push_back(C.point_in(f, w));
  }
  return out;
}

inline bool same_P(const Spiral& a, const Spiral& b, std::int64_t lo, std::int64_t hi) {
  for (std::int64_t n = lo; n <= hi; ++n)
    if (a.pieces(n).P != b.pieces(n).P) return false;
  return true;
}

inline FacetSpiral spiral_from_facet(const GradedRootDatum& datum, const CoxeterComplex& C, const Facet& f,
                                     std::int64_t window = 8) {
  auto samples = facet_samples(C, f);
  FacetSpiral out{Spiral(datum, facet_cochar(datum, samples[0]), datum.epsilon()), true, samples};
  for (std::size_t i = 1; i < samples.size(); ++i) {
    Spiral other(datum, facet_cochar(datum, samples[i]), datum.epsilon());
    if (!same_P(out.spiral, other, -window, window)) out.independent = false;
  }
  return out;
}

struct GradedPseudoLevi {
  std::vector<ZVec> roots;
  /// The Z-degree n of each root, i.e. the index with alpha in L_n.
  std::map<ZVec, std::int64_t> grading;
  /// Whether two distinct spanning facets gave the same data.
  bool independent = true;
  std::size_t facets_compared = 0;
};

/// Facets whose span is s, found by moving generic points of s into the
/// fundamental alcove. At most `want` are returned.
inline std::vector<Facet> spanning_facets(const CoxeterComplex& C, const AffineSubspace& s, std::size_t want) {
  std::vector<Facet> out;
  auto base = s.base_point();
  auto dirs = s.direction();
  static const int primes[] = {1, 3, 7, 13, 19, 29, 37, 43};
  for (int trial = 1; trial <= 24 && out.size() < want; ++trial) {
    QVec p = base;
    for (std::size_t k = 0; k < dirs.size(); ++k) {
      Rational t = make_rational(primes[k % 8] * trial, 89 + static_cast<std::int64_t>(k));
      for (std::size_t i = 0; i < p.size(); ++i) p[i] += t * dirs[k][i];
    }
    Facet f;
    try {
      f = C.facet_containing(p);
    } catch (const InvalidParameters&) {
      continue;
    }
    if (!(f.span == s)) continue;
    if (std::find(out.begin(), out.end(), f) == out.end()) out.push_back(f);
  }
  return out;
}

/// Whether s is an intersection of root hyperplanes.
inline bool is_relevant(const CoxeterComplex& C, const AffineSubspace& s) {
  const auto& W = C.group();
  auto base = s.base_point();
  auto dirs = s.direction();
  std::vector<AffineFunction> walls;
  for (const auto& a : W.roots().positive_roots()) {
    auto aq = to_qvec(a);
    bool constant = true;
    for (const auto& v : dirs)
      if (dot(aq, v) != 0) constant = false;
    if (!constant) continue;
    Rational level = -dot(aq, base);
    if (!is_integer(level)) continue;
    if (W.is_affine() ? !W.system().contains(a, to_int64(level)) : level != 0) continue;
    walls.push_back(AffineFunction{aq, level});
  }
  if (walls.empty()) return s.equations.empty();
  return AffineSubspace::from_functions(s.ambient, walls) == s;
}

inline GradedPseudoLevi pseudo_levi_from_subspace(const GradedRootDatum& datum, const CoxeterComplex& C,
                                                  const AffineSubspace& s) {
  if (!is_relevant(C, s)) throw NotRelevant("subspace is not an intersection of root hyperplanes");
  auto facets = spanning_facets(C, s, 2);
  if (facets.empty()) throw NotRelevant("no facet spans the subspace");
  auto from_facet = [&](const Facet& f) {
    GradedPseudoLevi p;
    auto sp = spiral_from_facet(datum, C, f);
    // alpha lies in L_n for exactly one n when <alpha, lambda> = eps n.
    for (const auto& a : datum.roots().roots()) {
      Rational w = sp.spiral.weight(a) * datum.epsilon();
      if (!is_integer(w)) continue;
      auto n = to_int64(w);
      if (sp.spiral.in_L(a, n)) {
        p.roots.push_back(a);
        p.grading[a] = n;
      }
    }
    return p;
  };
  auto out = from_facet(facets[0]);
  out.facets_compared = facets.size();
  for (std::size_t i = 1; i < facets.size(); ++i) {
    auto other = from_facet(facets[i]);
    if (other.roots != out.roots || other.grading != out.grading) out.independent = false;
  }
  return out;
}

struct LeviReport {
  bool ok = true;
  std::vector<std::string> failures;
};

/// P_n = L_n disjoint union U_n on [lo, hi].
inline LeviReport levi_decomposition_check(const Spiral& sp, std::int64_t lo, std::int64_t hi) {
  LeviReport r;
  for (std::int64_t n = lo; n <= hi; ++n)
    for (const auto& x : sp.datum().spaces()) {
      bool p = sp.in_P(x, n), l = sp.in_L(x, n), u = sp.in_U(x, n);
      if (p != (l || u) || (l && u)) {
        r.ok = false;
        r.failures.push_back("n=" + std::to_string(n) + " " + to_string(x));
      }
    }
  return r;
}

/// If a and b have the same P_n on [lo, hi], their U_n agree there too.
inline LeviReport levi_decomposition_check(const Spiral& a, const Spiral& b, std::int64_t lo, std::int64_t hi) {
  LeviReport r = levi_decomposition_check(a, lo, hi);
  auto rb = levi_decomposition_check(b, lo, hi);
  r.failures.insert(r.failures.end(), rb.failures.begin(), rb.failures.end());
  r.ok = r.ok && rb.ok;
  if (!same_P(a, b, lo, hi)) return r;
  for (std::int64_t n = lo; n <= hi; ++n)
    if (a.pieces(n).U != b.pieces(n).U) {
      r.ok = false;
      r.failures.push_back("U differs at n=" + std::to_string(n));
    }
  return r;
}

}  // namespace daha
