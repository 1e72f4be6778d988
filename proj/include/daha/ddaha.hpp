#pragma once

// Degenerate double affine Hecke algebra over a reflection group acting on an
// affine space E by affine maps. Elements are kept in the normal form
// sum_g g (x) f_g, group letters on the left, and products are rewritten with
//   f s = s s(f) + h_s (f - s(f)) / a_s.

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <random>
#include <set>
#include <shared_mutex>
#include <string>
#include <vector>

#include "daha/complex.hpp"
#include "daha/errors.hpp"
#include "daha/polynomial.hpp"

namespace daha {

/// p -> A p + b on coordinates of E.
struct AffineMap {
  QMat A;
  QVec b;
};

/// A Coxeter group with simple generators acting on E by affine reflections,
/// together with the simple affine roots a_s as polynomials on E.
struct ReflectionModel {
  std::string name;
  int nvars = 0;
  std::vector<WeylElement> gens;
  /// Printed and parsed as s<label>.
  std::vector<int> labels;
  std::vector<Polynomial> roots;
  /// m(s, t); 0 is infinity, -1 a finite order above the cap.
  std::vector<std::vector<int>> coxeter;
  /// Permutations of the generators induced by length-zero elements of the
  /// extended group; parameters must be constant along them.
  std::vector<std::vector<int>> symmetries;
  WeylElement identity;
  std::function<WeylElement(const WeylElement&, const WeylElement&)> multiply;
  std::function<WeylElement(const WeylElement&)> inverse;
  /// Generator indices with g = gens[w0] gens[w1] ...
  std::function<std::vector<int>(const WeylElement&)> word;
  std::function<std::vector<WeylElement>(int)> ball;
  std::function<AffineMap(const WeylElement&)> point_map;

  std::int64_t length(const WeylElement& g) const { return static_cast<std::int64_t>(word(g).size()); }
  int index_of_label(int label) const {
    for (std::size_t k = 0; k < labels.size(); ++k)
      if (labels[k] == label) return static_cast<int>(k);
    return -1;
  }
};

/// The affine Weyl group on E with coordinates x_i = alpha_i, i = 1..n.
inline ReflectionModel affine_model(const WeylGroup& W) {
  if (!W.is_affine()) throw InvalidParameters("affine_model needs the affine Weyl group");
  auto G = std::make_shared<WeylGroup>(W);
  const int n = W.rank();
  ReflectionModel m;
  m.name = "affine " + W.roots().label();
  m.nvars = n;
  for (int i = 0; i <= n; ++i) {
    m.gens.push_back(W.simple(i));
    m.labels.push_back(i);
    m.roots.push_back(Polynomial::affine(W.simple_root(i).function()));
  }
  m.coxeter.assign(n + 1, std::vector<int>(n + 1, 1));
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j) m.coxeter[i][j] = W.coxeter_entry(i, j);
  for (const auto& pi : W.length_zero_elements()) m.symmetries.push_back(W.permutation_of_simples(pi));
  m.identity = W.identity();
  m.multiply = [G](const WeylElement& a, const WeylElement& b) { return G->multiply(a, b); };
  m.inverse = [G](const WeylElement& a) { return G->inverse(a); };
  m.word = [G](const WeylElement& g) {
    auto w = G->reduced_word(g);
    if (!(w.pi == G->identity())) throw InvalidParameters("element lies outside the affine Weyl group");
    return w.letters;
  };
  m.ball = [G](int r) { return G->enumerate_ball(r); };
  m.point_map = [G, n](const WeylElement& g) {
    AffineMap f{QMat(n, QVec(n, Rational(0))), QVec(n)};
    for (int i = 0; i < n; ++i) {
      f.b[i] = Rational(static_cast<long>(g.mu[i]));
      for (int j = 0; j < n; ++j) f.A[i][j] = Rational(static_cast<long>(g.Minv[j * n + i]));
    }
    return f;
  };
  return m;
}

/// The relative group W~ acting on the span E of the standard facet of type
/// Sigma. Coordinates t_j are the free coordinates of E, and the root of
/// s~ is the restriction of the simple root alpha_s to E.
inline ReflectionModel relative_model(const RelativeCoxeterSystem& R) {
  auto Rp = std::make_shared<RelativeCoxeterSystem>(R);
  const WeylGroup& W = Rp->group();
  const int n = W.rank();
  std::vector<AffineFunction> walls;
  for (int j : R.sigma().indices()) walls.push_back(W.simple_root(j).function());
  auto E = std::make_shared<AffineSubspace>(AffineSubspace::from_functions(n, walls));
  auto dirs = std::make_shared<QMat>(E->direction());
  auto base = std::make_shared<QVec>(E->base_point());
  std::vector<int> free;
  {
    std::vector<bool> pivot(n, false);
    for (const auto& row : E->equations) {
      int p = 0;
      while (row[p] == 0) ++p;
      pivot[p] = true;
    }
    for (int i = 0; i < n; ++i)
      if (!pivot[i]) free.push_back(i);
  }
  const int k = static_cast<int>(free.size());
  auto embed = [dirs, base](const QVec& t) {
    QVec x = *base;
    for (std::size_t j = 0; j < t.size(); ++j)
      for (std::size_t i = 0; i < x.size(); ++i) x[i] += t[j] * (*dirs)[j][i];
    return x;
  };

  ReflectionModel m;
  m.name = "relative " + W.roots().label() + " / " + to_string(R.sigma());
  m.nvars = k;
  for (const auto& s : R.simples()) {
    m.gens.push_back(s.element);
    m.labels.push_back(s.s);
    auto f = W.simple_root(s.s).function();
    AffineFunction r{QVec(k, Rational(0)), f(*base)};
    for (int j = 0; j < k; ++j) r.gradient[j] = dot(f.gradient, (*dirs)[j]);
    m.roots.push_back(Polynomial::affine(r));
  }
  m.coxeter = R.coxeter_matrix();
  std::vector<int> id(m.gens.size());
  for (std::size_t i = 0; i < id.size(); ++i) id[i] = static_cast<int>(i);
  m.symmetries.push_back(id);
  m.identity = W.identity();
  m.multiply = [Rp](const WeylElement& a, const WeylElement& b) { return Rp->group().multiply(a, b); };
  m.inverse = [Rp](const WeylElement& a) { return Rp->group().inverse(a); };
  m.word = [Rp](const WeylElement& g) { return Rp->relative_word(g); };
  m.ball = [Rp](int r) { return Rp->ball(r); };
  m.point_map = [Rp, embed, free, k](const WeylElement& g) {
    auto image = [&](const QVec& t) {
      QVec x = Rp->group().act_point(g, embed(t));
      QVec out(k);
      for (int j = 0; j < k; ++j) out[j] = x[free[j]];
      return out;
    };
    AffineMap f{QMat(k, QVec(k, Rational(0))), image(QVec(k, Rational(0)))};
    for (int j = 0; j < k; ++j) {
      QVec t(k, Rational(0));
      t[j] = 1;
      auto col = image(t);
      for (int i = 0; i < k; ++i) f.A[i][j] = col[i] - f.b[i];
    }
    return f;
  };
  return m;
}

struct HeckeParameters {
  std::int64_t m = 1;
  std::int64_t d = 1;
  /// c_s per generator index of the model.
  std::vector<Rational> c;
  /// Specialization point u with h_s = u c_s; d / 2m when unset.
  std::optional<Rational> u;
  /// Skip the c_s >= 2 and h_s != 0 checks.
  bool unsafe = false;

  Rational specialization() const {
    return u ? *u : make_rational(d, 2 * m);
  }
  Rational h(std::size_t s) const { return specialization() * c.at(s); }

  static HeckeParameters uniform(std::size_t ngens, std::int64_t m, std::int64_t d, std::int64_t c = 2) {
    HeckeParameters p;
    p.m = m;
    p.d = d;
    p.c.assign(ngens, Rational(c));
    return p;
  }
};

inline void validate(const ReflectionModel& model, const HeckeParameters& p) {
  if (p.m <= 0) throw InvalidParameters("m must be positive");
  if (p.d == 0) throw InvalidParameters("d must be nonzero");
  const std::size_t k = model.gens.size();
  if (p.c.size() != k)
    throw InvalidParameters("expected " + std::to_string(k) + " parameters c, got " + std::to_string(p.c.size()));
  for (std::size_t s = 0; s < k; ++s) {
    if (p.unsafe) continue;
    if (!is_integer(p.c[s]) || p.c[s] < 2)
      throw InvalidParameters("c_s" + std::to_string(model.labels[s]) + " = " + p.c[s].get_str() +
                              " is not an integer >= 2");
    if (p.h(s) == 0) throw InvalidParameters("h_s" + std::to_string(model.labels[s]) + " vanishes");
  }
  // Conjugate generators: joined by an odd edge, or swapped by a symmetry.
  for (std::size_t s = 0; s < k; ++s)
    for (std::size_t t = 0; t < k; ++t) {
      int o = model.coxeter[s][t];
      if (s != t && o > 0 && o % 2 == 1 && p.c[s] != p.c[t])
        throw InvalidParameters("c differs on the conjugate generators s" + std::to_string(model.labels[s]) +
                                " and s" + std::to_string(model.labels[t]));
    }
  for (const auto& perm : model.symmetries)
    for (std::size_t s = 0; s < k; ++s)
      if (p.c[s] != p.c[perm[s]])
        throw InvalidParameters("c is not invariant under the diagram symmetry moving s" +
                                std::to_string(model.labels[s]) + " to s" + std::to_string(model.labels[perm[s]]));
}

/// sum_g g (x) f_g with every f_g nonzero.
struct DDAHAElement {
  std::map<WeylElement, Polynomial> terms;

  bool is_zero() const { return terms.empty(); }
  bool operator==(const DDAHAElement& o) const { return terms == o.terms; }
  bool operator!=(const DDAHAElement& o) const { return !(*this == o); }

  void add(const WeylElement& g, const Polynomial& f) {
    if (f.is_zero()) return;
    auto [it, fresh] = terms.emplace(g, f);
    if (!fresh) {
      it->second += f;
      if (it->second.is_zero()) terms.erase(it);
    }
  }
  DDAHAElement& operator+=(const DDAHAElement& o) {
    for (const auto& [g, f] : o.terms) add(g, f);
    return *this;
  }
  DDAHAElement& operator-=(const DDAHAElement& o) {
    for (const auto& [g, f] : o.terms) add(g, -f);
    return *this;
  }
  DDAHAElement operator+(const DDAHAElement& o) const {
    DDAHAElement r = *this;
    return r += o;
  }
  DDAHAElement operator-(const DDAHAElement& o) const {
    DDAHAElement r = *this;
    return r -= o;
  }
  DDAHAElement scaled(const Rational& k) const {
    DDAHAElement r;
    for (const auto& [g, f] : terms) r.add(g, f.scaled(k));
    return r;
  }
  int degree() const {
    int d = -1;
    for (const auto& [g, f] : terms) d = std::max(d, f.degree());
    return d;
  }
};

struct RelationReport {
  std::size_t checks = 0;
  std::vector<std::string> failures;
  std::vector<std::string> skipped;
  bool ok() const { return failures.empty(); }
};

struct WeightSpace {
  QVec weight;
  std::size_t dimension = 0;
  /// Basis elements g whose diagonal weight g.lambda0 is this weight.
  std::vector<WeylElement> support;
  /// Some coordinate acts on the generalized weight space by a
  /// non-semisimple matrix.
  bool nilpotent_part = false;
};

struct StandardModule {
  QVec lambda0;
  int depth = 0;
  std::vector<WeylElement> basis;
  /// Action matrices of the coordinates x_1..x_n; column j is the image of
  /// basis[j].
  std::vector<QMat> coordinate_action;
  std::vector<WeightSpace> weights;
};

struct PointOrbit {
  std::vector<WeylElement> stabilizer;
  std::vector<QVec> orbit;
  bool complete = false;
};

class DDAHA {
 public:
  DDAHA(ReflectionModel model, HeckeParameters params) : model_(std::move(model)), params_(std::move(params)) {
    validate(model_, params_);
    for (std::size_t s = 0; s < model_.gens.size(); ++s) h_.push_back(params_.h(s));
  }

  const ReflectionModel& model() const { return model_; }
  const HeckeParameters& parameters() const { return params_; }
  int nvars() const { return model_.nvars; }
  std::size_t rank() const { return model_.gens.size(); }
  const Rational& h(std::size_t s) const { return h_[s]; }

  Polynomial zero_polynomial() const { return Polynomial(model_.nvars); }
  Polynomial constant(const Rational& c) const { return Polynomial::constant(model_.nvars, c); }
  Polynomial variable(int i) const { return Polynomial::variable(model_.nvars, i); }

  DDAHAElement element(const WeylElement& g, const Polynomial& f) const {
    DDAHAElement x;
    x.add(g, f);
    return x;
  }
  DDAHAElement one() const { return element(model_.identity, constant(1)); }
  DDAHAElement generator(std::size_t s) const { return element(model_.gens.at(s), constant(1)); }
  DDAHAElement polynomial(const Polynomial& f) const { return element(model_.identity, f); }
  DDAHAElement group_element(const WeylElement& g) const { return element(g, constant(1)); }

  /// g.f, i.e. x -> f(g^-1 x).
  Polynomial act(const WeylElement& g, const Polynomial& f) const { return f.substitute(images(g)); }

  /// f s in normal form: s (x) s(f) + e (x) h_s (f - s(f)) / a_s.
  DDAHAElement cross_multiply(std::size_t s, const Polynomial& f) const {
    const auto& g = model_.gens.at(s);
    Polynomial sf = act(g, f);
    DDAHAElement out = element(g, sf);
    if (h_[s] != 0) out.add(model_.identity, (f - sf).divide_linear(model_.roots[s]).scaled(h_[s]));
    return out;
  }

  /// f g in normal form.
  DDAHAElement push(const Polynomial& f, const WeylElement& g) const {
    DDAHAElement out;
    for (const auto& [e, c] : f.terms()) out += push_monomial(e, g).scaled(c);
    return out;
  }

  DDAHAElement multiply(const DDAHAElement& x, const DDAHAElement& y) const {
    DDAHAElement out;
    for (const auto& [g, f] : x.terms)
      for (const auto& [g2, f2] : y.terms)
        for (const auto& [g3, f3] : push(f, g2).terms) out.add(model_.multiply(g, g3), f3 * f2);
    return out;
  }

  DDAHAElement power(const DDAHAElement& x, int k) const {
    DDAHAElement r = one();
    for (int i = 0; i < k; ++i) r = multiply(r, x);
    return r;
  }

  /// The product in the smash product C[W] # C[E], where h = 0.
  DDAHAElement smash_multiply(const DDAHAElement& x, const DDAHAElement& y) const {
    DDAHAElement out;
    for (const auto& [g, f] : x.terms)
      for (const auto& [g2, f2] : y.terms) out.add(model_.multiply(g, g2), act(model_.inverse(g2), f) * f2);
    return out;
  }

  RelationReport verify_relations(int depth, std::uint64_t seed = 1) const {
    RelationReport r;
    const std::size_t k = rank();
    for (std::size_t s = 0; s < k; ++s) {
      ++r.checks;
      if (multiply(generator(s), generator(s)) != one()) r.failures.push_back("s" + label(s) + "^2 != e");
    }
    for (std::size_t s = 0; s < k; ++s)
      for (std::size_t t = s + 1; t < k; ++t) {
        int o = model_.coxeter[s][t];
        std::string pair = "(s" + label(s) + ",s" + label(t) + ")";
        if (o <= 0 || o > depth) {
          r.skipped.push_back(pair + (o == 0 ? " has infinite order" : " exceeds the depth"));
          continue;
        }
        ++r.checks;
        DDAHAElement a = one(), b = one();
        for (int i = 0; i < o; ++i) {
          a = multiply(a, generator(i % 2 ? t : s));
          b = multiply(b, generator(i % 2 ? s : t));
        }
        if (a != b) r.failures.push_back("braid relation of length " + std::to_string(o) + " fails for " + pair);
      }
    std::mt19937_64 rng(seed);
    for (std::size_t s = 0; s < k; ++s)
      for (int trial = 0; trial < 20; ++trial) {
        ++r.checks;
        Polynomial f = random_polynomial(rng, 3);
        if (!commutation_holds(s, f))
          r.failures.push_back("commutation fails for s" + label(s) + " and " + f.to_string());
      }
    return r;
  }

  /// s f - s(f) s == h_s (f - s(f)) / a_s in normal form.
  bool commutation_holds(std::size_t s, const Polynomial& f) const {
    const auto& g = model_.gens[s];
    Polynomial sf = act(g, f);
    DDAHAElement lhs = multiply(generator(s), polynomial(f)) - multiply(polynomial(sf), generator(s));
    DDAHAElement rhs = polynomial((f - sf).divide_linear(model_.roots[s]).scaled(h_[s]));
    return lhs == rhs;
  }

  Polynomial random_polynomial(std::mt19937_64& rng, int max_degree, int max_terms = 4) const {
    std::uniform_int_distribution<int> coef(-5, 5), deg(0, max_degree), var(0, std::max(0, nvars() - 1)),
        count(1, max_terms);
    Polynomial f = zero_polynomial();
    int terms = count(rng);
    for (int t = 0; t < terms; ++t) {
      Exponents e(nvars(), 0);
      int dd = nvars() ? deg(rng) : 0;
      for (int i = 0; i < dd; ++i) ++e[var(rng)];
      f.add_term(e, Rational(coef(rng)));
    }
    return f;
  }

  /// Up to `support` terms g (x) f with g in the ball of the given radius.
  DDAHAElement random_element(std::mt19937_64& rng, const std::vector<WeylElement>& ball, int support,
                              int max_degree) const {
    std::uniform_int_distribution<std::size_t> pick(0, ball.size() - 1);
    std::uniform_int_distribution<int> count(1, support);
    DDAHAElement x;
    int n = count(rng);
    for (int i = 0; i < n; ++i) x.add(ball[pick(rng)], random_polynomial(rng, max_degree, 3));
    return x;
  }

  /// The standard module induced from lambda0, truncated to relative length
  /// at most N.
  StandardModule standard_module(const QVec& lambda0, int N) const {
    if (static_cast<int>(lambda0.size()) != nvars()) throw InvalidParameters("lambda0 has the wrong dimension");
    StandardModule M;
    M.lambda0 = lambda0;
    M.depth = N;
    M.basis = model_.ball(N);
    std::map<WeylElement, std::size_t> index;
    for (std::size_t j = 0; j < M.basis.size(); ++j) index[M.basis[j]] = j;
    const std::size_t dim = M.basis.size();
    std::vector<std::int64_t> len;
    for (const auto& g : M.basis) len.push_back(model_.length(g));
    for (int i = 0; i < nvars(); ++i) {
      QMat X(dim, QVec(dim, Rational(0)));
      for (std::size_t j = 0; j < dim; ++j)
        for (const auto& [g, f] : push(variable(i), M.basis[j]).terms) {
          auto it = index.find(g);
          if (it == index.end() || (it->second != j && len[it->second] >= len[j]))
            throw TriangularityViolated("x" + std::to_string(i + 1) + " moves " + word_string(model_.word(M.basis[j])) +
                                        " to " + word_string(model_.word(g)));
          X[it->second][j] += f.evaluate(lambda0);
        }
      M.coordinate_action.push_back(std::move(X));
    }

    // Diagonal entries give the candidate weights g.lambda0.
    std::map<QVec, WeightSpace> spaces;
    std::vector<QVec> order;
    for (std::size_t j = 0; j < dim; ++j) {
      QVec w(nvars());
      for (int i = 0; i < nvars(); ++i) w[i] = M.coordinate_action[i][j][j];
      auto [it, fresh] = spaces.try_emplace(w);
      if (fresh) {
        it->second.weight = w;
        order.push_back(w);
      }
      it->second.support.push_back(M.basis[j]);
    }
    for (const auto& w : order) {
      auto& ws = spaces[w];
      // Generalized eigenspace: common kernel of (X_i - w_i)^dim.
      QMat stacked;
      std::vector<QMat> shifted;
      for (int i = 0; i < nvars(); ++i) {
        QMat B = M.coordinate_action[i];
        for (std::size_t r = 0; r < dim; ++r) B[r][r] -= w[i];
        shifted.push_back(B);
        QMat P = identity_matrix(dim);
        for (std::size_t p = 0; p < dim; ++p) P = mat_mul(P, B);
        for (auto& row : P) stacked.push_back(row);
      }
      QMat K = stacked.empty() ? identity_matrix(dim) : kernel(stacked, dim);
      ws.dimension = K.size();
      for (const auto& B : shifted)
        for (const auto& v : K)
          for (const auto& row : B)
            if (dot(row, v) != 0) ws.nilpotent_part = true;
      M.weights.push_back(ws);
    }
    return M;
  }

  /// Stabilizer and orbit of a point of E within the ball of radius r.
  PointOrbit orbit(const QVec& lambda0, int r) const {
    PointOrbit out;
    auto ball = model_.ball(r);
    out.complete = model_.ball(r + 1).size() == ball.size();
    std::set<QVec> seen;
    for (const auto& g : ball) {
      QVec p = apply(g, lambda0);
      if (p == lambda0) out.stabilizer.push_back(g);
      if (seen.insert(p).second) out.orbit.push_back(p);
    }
    return out;
  }

  QVec apply(const WeylElement& g, const QVec& p) const {
    auto f = model_.point_map(g);
    QVec out = mat_vec(f.A, p);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += f.b[i];
    return out;
  }

  std::string label(std::size_t s) const { return std::to_string(model_.labels[s]); }

  std::string word_string_of(const WeylElement& g) const {
    std::string out;
    for (int k : model_.word(g)) {
      if (!out.empty()) out += "*";
      out += "s" + label(static_cast<std::size_t>(k));
    }
    return out;
  }

  /// Group elements by length, then by word; polynomial terms by degree.
  std::string to_string(const DDAHAElement& x) const {
    if (x.is_zero()) return "0";
    std::vector<std::pair<std::pair<std::size_t, std::vector<int>>, const WeylElement*>> keys;
    for (const auto& [g, f] : x.terms) {
      auto w = model_.word(g);
      std::vector<int> labels;
      for (int k : w) labels.push_back(model_.labels[k]);
      keys.push_back({{w.size(), labels}, &g});
    }
    std::sort(keys.begin(), keys.end());
    std::string out;
    for (const auto& [key, g] : keys) {
      std::string word = word_string_of(*g);
      for (const auto& [e, c] : x.terms.at(*g).ordered_terms()) {
        std::vector<std::string> parts;
        std::string mono = Polynomial::monomial_string(e);
        if (c != 1 || (word.empty() && mono.empty())) parts.push_back(Polynomial::coefficient_string(c));
        if (!word.empty()) parts.push_back(word);
        if (!mono.empty()) parts.push_back(mono);
        std::string term;
        for (const auto& p : parts) term += (term.empty() ? "" : "*") + p;
        out += (out.empty() ? "" : " + ") + term;
      }
    }
    return out;
  }

  DDAHAElement parse(const std::string& text) const;

 private:
  const std::vector<Polynomial>& images(const WeylElement& g) const {
    {
      std::shared_lock lock(mutex_);
      auto it = images_.find(g);
      if (it != images_.end()) return it->second;
    }
    auto f = model_.point_map(model_.inverse(g));
    std::vector<Polynomial> im;
    for (int i = 0; i < nvars(); ++i) {
      Polynomial p = constant(f.b[i]);
      for (int j = 0; j < nvars(); ++j)
        if (f.A[i][j] != 0) p.add_term(Polynomial::unit(nvars(), j), f.A[i][j]);
      im.push_back(std::move(p));
    }
    std::unique_lock lock(mutex_);
    return images_.emplace(g, std::move(im)).first->second;
  }

  DDAHAElement push_monomial(const Exponents& e, const WeylElement& g) const {
    {
      std::shared_lock lock(mutex_);
      auto it = pushes_.find({e, g});
      if (it != pushes_.end()) return it->second;
    }
    Polynomial m(nvars());
    m.add_term(e, 1);
    DDAHAElement out;
    if (g == model_.identity) {
      out = polynomial(m);
    } else {
      std::size_t s = static_cast<std::size_t>(model_.word(g).front());
      const auto& sg = model_.gens[s];
      WeylElement rest = model_.multiply(sg, g);
      for (const auto& [g1, f1] : cross_multiply(s, m).terms)
        for (const auto& [g2, f2] : push(f1, rest).terms) out.add(model_.multiply(g1, g2), f2);
    }
    std::unique_lock lock(mutex_);
    pushes_.emplace(std::make_pair(e, g), out);
    return out;
  }

  ReflectionModel model_;
  HeckeParameters params_;
  std::vector<Rational> h_;
  mutable std::shared_mutex mutex_;
  mutable std::map<WeylElement, std::vector<Polynomial>> images_;
  mutable std::map<std::pair<Exponents, WeylElement>, DDAHAElement> pushes_;
};

namespace detail {

class ElementParser {
 public:
  ElementParser(const DDAHA& A, const std::string& text) : A_(A), s_(text) {}

  DDAHAElement run() {
    auto x = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return x;
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at position " + std::to_string(pos_) + " in \"" + s_ + "\"");
  }
  std::int64_t integer() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    if (pos_ - start > 17) fail("integer literal too long");
    return std::stoll(s_.substr(start, pos_ - start));
  }

  DDAHAElement expr() {
    bool negate = eat('-');
    DDAHAElement x = term();
    if (negate) x = x.scaled(-1);
    for (;;) {
      if (eat('+')) x += term();
      else if (eat('-')) x -= term();
      else return x;
    }
  }
  DDAHAElement term() {
    DDAHAElement x = factor();
    for (;;) {
      if (eat('*')) {
        x = A_.multiply(x, factor());
      } else if (eat('/')) {
        auto d = factor();
        auto it = d.terms.find(A_.model().identity);
        if (d.terms.size() != 1 || it == d.terms.end() || it->second.degree() != 0)
          fail("division is only by nonzero scalars");
        x = x.scaled(Rational(1) / it->second.coefficient(Exponents(A_.nvars(), 0)));
      } else {
        return x;
      }
    }
  }
  DDAHAElement factor() {
    DDAHAElement x = atom();
    if (eat('^')) x = A_.power(x, static_cast<int>(integer()));
    return x;
  }
  DDAHAElement atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      auto x = expr();
      if (!eat(')')) fail("expected ')'");
      return x;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return A_.polynomial(A_.constant(Rational(integer())));
    if (c == 'e' && !(pos_ + 1 < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_ + 1])))) {
      ++pos_;
      return A_.one();
    }
    if (c == 's' || c == 'x') {
      ++pos_;
      auto k = integer();
      if (c == 's') {
        int idx = A_.model().index_of_label(static_cast<int>(k));
        if (idx < 0) fail("no generator s" + std::to_string(k));
        return A_.generator(static_cast<std::size_t>(idx));
      }
      if (k < 1 || k > A_.nvars()) fail("no coordinate x" + std::to_string(k));
      return A_.polynomial(A_.variable(static_cast<int>(k - 1)));
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  const DDAHA& A_;
  std::string s_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// expr := ['-'] term (('+'|'-') term)*, term := factor (('*'|'/') factor)*,
/// factor := atom ['^' int], atom := s<k> | x<k> | e | int | '(' expr ')'.
inline DDAHAElement DDAHA::parse(const std::string& text) const { return detail::ElementParser(*this, text).run(); }

}  // namespace daha
