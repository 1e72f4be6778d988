#pragma once

// The Coxeter complex of W and its realization by facets of the alcove
// arrangement: a facet is a coset y W_J, realized as y applied to the face
// of the fundamental alcove (or chamber, for the finite group) cut out by the
// walls in J.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "daha/errors.hpp"
#include "daha/relative.hpp"

namespace daha {

/// An affine subspace {x : A x + b = 0}, stored as the reduced row echelon
/// form of the rows [A | b]. Equal subspaces have equal equations.
struct AffineSubspace {
  QMat equations;
  int ambient = 0;

  static AffineSubspace from_functions(int ambient, const std::vector<AffineFunction>& fs) {
    AffineSubspace s;
    s.ambient = ambient;
    for (const auto& f : fs) {
      QVec row = f.gradient;
      row.push_back(f.constant);
      s.equations.push_back(std::move(row));
    }
    rref(s.equations, static_cast<std::size_t>(ambient));
    for (auto& row : s.equations) {
      bool zero_gradient = true;
      for (int i = 0; i < ambient; ++i)
        if (row[i] != 0) zero_gradient = false;
      if (zero_gradient) throw InvalidParameters("empty affine subspace");
    }
    return s;
  }

  int dimension() const { return ambient - static_cast<int>(equations.size()); }
  bool contains(const QVec& x) const {
    for (const auto& row : equations) {
      Rational v = row[ambient];
      for (int i = 0; i < ambient; ++i) v += row[i] * x[i];
      if (v != 0) return false;
    }
    return true;
  }
  std::vector<AffineFunction> functions() const {
    std::vector<AffineFunction> out;
    for (const auto& row : equations) out.push_back({QVec(row.begin(), row.begin() + ambient), row[ambient]});
    return out;
  }
  /// Basis of the direction space.
  QMat direction() const {
    QMat a;
    for (const auto& row : equations) a.push_back(QVec(row.begin(), row.begin() + ambient));
    if (a.empty()) return identity_matrix(static_cast<std::size_t>(ambient));
    return kernel(a, static_cast<std::size_t>(ambient));
  }
  /// The point of the subspace with free coordinates set to zero.
  QVec base_point() const {
    QVec x(ambient, Rational(0));
    for (const auto& row : equations) {
      int p = 0;
      while (row[p] == 0) ++p;
      x[p] = -row[ambient];
    }
    return x;
  }

  bool operator==(const AffineSubspace& o) const { return equations == o.equations; }
  bool operator<(const AffineSubspace& o) const { return equations < o.equations; }
};

struct Facet {
  WeylElement rep;
  GenSet type;
  QVec interior;
  AffineSubspace span;

  bool operator==(const Facet& o) const { return type == o.type && rep == o.rep; }
  bool operator<(const Facet& o) const {
    if (type != o.type) return type < o.type;
    return rep < o.rep;
  }
};

struct FacetEnumeration {
  std::vector<Facet> facets;
  bool complete = false;
};

struct RelativePosition {
  WeylElement double_coset;
  bool good = false;
  /// The element w~ of W~ with w~ . nu' = nu for the canonical action.
  std::optional<WeylElement> relative_element;
  /// The same element as a member of N_W(W_nu), mapping nu' to nu by the
  /// ordinary action.
  std::optional<WeylElement> realizing_element;
};

struct FixedChambers {
  Facet base;
  std::vector<Facet> chambers;
  /// table[c][k]: chamber index of s~_k acting on chamber c, or -1 when the
  /// image falls outside the ball.
  std::vector<std::vector<int>> table;
  bool all_same_type = true;
  bool single_free_orbit = true;
  std::size_t boundary_chambers = 0;
  bool complete = false;
};

class CoxeterComplex {
 public:
  explicit CoxeterComplex(WeylGroup W) : W_(std::move(W)) {}

  const WeylGroup& group() const { return W_; }
  int dimension() const { return W_.rank(); }

  Facet facet(const WeylElement& y, GenSet J) const {
    if (!J.subset_of(W_.generators()) || J == W_.generators())
      throw InvalidParameters("facet type must be a proper subset of the generators, got " + to_string(J));
    Facet f;
    f.type = J;
    f.rep = W_.min_coset_rep(y, J, Side::Right);
    std::vector<AffineFunction> walls;
    for (int j : J.indices()) walls.push_back(W_.act(f.rep, W_.simple_root(j)).function());
    f.span = AffineSubspace::from_functions(dimension(), walls);
    f.interior = point_in(f, std::vector<Rational>(W_.generators().minus(J).size(), Rational(1)));
    return f;
  }

  Facet fundamental(GenSet J) const { return facet(W_.identity(), J); }

  /// The vertex of the fundamental alcove (or chamber) opposite wall k.
  QVec vertex(int k) const {
    if (W_.is_affine()) return W_.system().alcove_vertices()[k];
    QVec v(dimension(), Rational(0));
    v[k - 1] = 1;
    return v;
  }

  /// rep applied to the weighted average of the vertices outside the type;
  /// weights must be positive, one per generator not in the type.
  QVec point_in(const Facet& f, const std::vector<Rational>& weights) const {
    auto outside = W_.generators().minus(f.type).indices();
    if (weights.size() != outside.size()) throw InvalidParameters("one weight per vertex of the facet");
    QVec p(dimension(), Rational(0));
    Rational total = 0;
    for (std::size_t i = 0; i < outside.size(); ++i) {
      if (weights[i] <= 0) throw InvalidParameters("facet weights must be positive");
      auto v = vertex(outside[i]);
      for (int c = 0; c < dimension(); ++c) p[c] += weights[i] * v[c];
      total += weights[i];
    }
    for (auto& c : p) c /= total;
    return W_.act_point(f.rep, p);
  }

  Facet boundary(const Facet& f, GenSet K) const {
    if (!f.type.subset_of(K)) throw TypeNotContained(to_string(f.type) + " is not contained in " + to_string(K));
    return facet(f.rep, K);
  }

  Facet act(const WeylElement& w, const Facet& f) const { return facet(W_.multiply(w, f.rep), f.type); }

  /// Generators rep s_j rep^-1 of Stab_W(f).
  std::vector<WeylElement> stabilizer_generators(const Facet& f) const {
    std::vector<WeylElement> out;
    for (int j : f.type.indices()) out.push_back(W_.conjugate(f.rep, W_.simple(j)));
    return out;
  }

  /// Reflections of Stab_W(f), keyed by positive affine roots.
  std::set<AffineRoot> stabilizer_reflections(const Facet& f) const {
    return conjugate_reflections(W_, f.rep, ParabolicSubset::make(W_, f.type).reflections);
  }

  /// The facet whose relative interior contains x.
  Facet facet_containing(const QVec& x) const {
    WeylElement y = W_.identity();
    QVec p = x;
    for (;;) {
      int bad = -1;
      for (int i : W_.generators().indices())
        if (W_.simple_root(i).function()(p) < 0) {
          bad = i;
          break;
        }
      if (bad < 0) break;
      p = W_.act_point(W_.simple(bad), p);
      y = W_.multiply(y, W_.simple(bad));
    }
    GenSet J;
    for (int i : W_.generators().indices())
      if (W_.simple_root(i).function()(p) == 0) J.insert(i);
    if (J == W_.generators()) throw InvalidParameters("the cone point is not a facet of the finite complex");
    return facet(y, J);
  }

  AffineSubspace act_subspace(const WeylElement& w, const AffineSubspace& s) const {
    std::vector<AffineFunction> fs;
    for (const auto& f : s.functions()) fs.push_back(W_.act_function(w, f));
    return AffineSubspace::from_functions(s.ambient, fs);
  }

  /// Orthogonal projection of x onto s for the inner product on points
  /// dual to the Gram matrix of the roots.
  QVec project_point(const QVec& x, const AffineSubspace& s) const {
    if (s.equations.empty()) return x;
    const int n = dimension();
    const QMat& G = W_.roots().gram();
    const std::size_t k = s.equations.size();
    QMat normals(k, QVec(n, Rational(0)));
    for (std::size_t r = 0; r < k; ++r)
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) normals[r][i] += G[i][j] * s.equations[r][j];
    QMat sys(k, QVec(k, Rational(0)));
    QVec rhs(k, Rational(0));
    for (std::size_t r = 0; r < k; ++r) {
      rhs[r] = s.equations[r][n];
      for (int i = 0; i < n; ++i) rhs[r] += s.equations[r][i] * x[i];
      for (std::size_t c = 0; c < k; ++c)
        for (int i = 0; i < n; ++i) sys[r][c] += s.equations[r][i] * normals[c][i];
    }
    QVec coef = mat_vec(inverse(sys), rhs);
    QVec out = x;
    for (std::size_t c = 0; c < k; ++c)
      for (int i = 0; i < n; ++i) out[i] -= coef[c] * normals[c][i];
    return out;
  }

  /// Projection of x onto the span of f, moved back to the span of the
  /// standard facet of the same type.
  QVec canonical_projection(const QVec& x, const Facet& f) const {
    return W_.act_point(W_.inverse(f.rep), project_point(x, f.span));
  }

  /// Reflections of W through x.
  std::vector<WeylElement> stabilizer_of_point(const QVec& x) const {
    std::vector<WeylElement> out;
    for (const auto& beta : W_.roots().positive_roots()) {
      Rational v = -dot(to_qvec(beta), x);
      if (!is_integer(v)) continue;
      auto n = to_int64(v);
      if (W_.is_affine() ? !W_.system().contains(beta, n) : n != 0) continue;
      out.push_back(W_.reflection(AffineRoot{beta, n}));
    }
    return out;
  }

  /// Every element of the finite group generated by gens.
  std::vector<WeylElement> generated_group(const std::vector<WeylElement>& gens, std::size_t cap = 100000) const {
    std::vector<WeylElement> all{W_.identity()};
    ElementSet seen{W_.identity()};
    for (std::size_t i = 0; i < all.size(); ++i)
      for (const auto& g : gens) {
        auto h = W_.multiply(all[i], g);
        if (seen.insert(h).second) {
          all.push_back(h);
          if (all.size() > cap) throw BallTooLarge("generated group exceeds " + std::to_string(cap) + " elements");
        }
      }
    W_.sort_length_lex(all);
    return all;
  }

  /// Facets y W_J with y in the radius ball, one per coset, optionally
  /// restricted to one type.
  FacetEnumeration facets(int radius, std::optional<GenSet> type = std::nullopt) const {
    auto ball = W_.enumerate_ball(radius);
    FacetEnumeration out;
    out.complete = W_.enumerate_ball(radius + 1).size() == ball.size();
    std::vector<GenSet> types;
    if (type) types.push_back(*type);
    else
      for (std::uint32_t m = 0; m < (1u << (W_.rank() + 1)); ++m) {
        GenSet J;
        J.bits = m;
        if (J.subset_of(W_.generators()) && !(J == W_.generators())) types.push_back(J);
      }
    for (const auto& J : types)
      for (const auto& y : ball)
        if ((W_.right_descents(y) & J).empty()) out.facets.push_back(facet(y, J));
    return out;
  }

  /// Xi = W_x . A(E) intersected with the ball, where E is the span of nu0:
  /// facets of the type of nu0 whose span is a W_x-translate of E.
  FacetEnumeration xi_orbit(const QVec& x, const Facet& nu0, int radius) const {
    auto wx = generated_group(stabilizer_of_point(x));
    std::set<AffineSubspace> spans;
    for (const auto& u : wx) spans.insert(act_subspace(u, nu0.span));
    auto all = facets(radius, nu0.type);
    FacetEnumeration out;
    out.complete = all.complete;
    for (auto& f : all.facets)
      if (spans.count(f.span)) out.facets.push_back(std::move(f));
    return out;
  }

  /// The canonical action w . (y W_I) = y w W_I of the normalizer of W_I.
  Facet canonical_act(const WeylElement& w, const Facet& f) const {
    return facet(W_.multiply(f.rep, w), f.type);
  }

  RelativePosition relative_position(const Facet& nu, const Facet& nu_prime) const {
    if (nu.type != nu_prime.type)
      throw TypesDiffer(to_string(nu.type) + " and " + to_string(nu_prime.type));
    const GenSet I = nu.type;
    RelativePosition out;
    out.double_coset = W_.double_coset_min_rep(W_.multiply(W_.inverse(nu.rep), nu_prime.rep), I, I);
    out.good = nu.span == nu_prime.span;
    if (out.good) {
      auto inv = W_.inverse(out.double_coset);
      out.relative_element = inv;
      out.realizing_element = W_.conjugate(nu.rep, inv);
    }
    return out;
  }

  /// Whether the minimal double coset representative normalizes W_I, which
  /// is the group-theoretic form of good relative position.
  bool normalizes_parabolic(const WeylElement& d, GenSet I) const { return conjugates_onto(W_, d, I, I); }

  FixedChambers fixed_chambers(const Facet& nu, int radius) const {
    if (!is_admissible(W_, nu.type))
      throw NotAdmissible(to_string(nu.type) + " is not admissible");
    auto R = RelativeCoxeterSystem::build(W_, nu.type);
    FixedChambers out;
    out.base = nu;
    auto target = ParabolicSubset::make(W_, nu.type).reflections;
    std::set<AffineRoot> want(target.begin(), target.end());

    // Work around the standard facet W_Sigma and move the result by rep.
    auto ball = W_.enumerate_ball(radius);
    out.complete = W_.enumerate_ball(radius + 1).size() == ball.size();
    std::map<GenSet, std::vector<AffineRoot>> refl;
    std::vector<Facet> local;
    for (std::uint32_t m = 0; m < (1u << (W_.rank() + 1)); ++m) {
      GenSet J;
      J.bits = m;
      if (!J.subset_of(W_.generators()) || J == W_.generators() || J.size() != nu.type.size()) continue;
      refl[J] = ParabolicSubset::make(W_, J).reflections;
    }
    for (const auto& y : ball)
      for (const auto& [J, t] : refl) {
        if (!(W_.min_coset_rep(y, J, Side::Right) == y)) continue;
        if (conjugate_reflections(W_, y, t) == want) local.push_back(facet(y, J));
      }
    std::sort(local.begin(), local.end());
    local.erase(std::unique(local.begin(), local.end()), local.end());

    std::map<std::pair<GenSet, WeylElement>, int> index;
    for (std::size_t i = 0; i < local.size(); ++i) index[{local[i].type, local[i].rep}] = static_cast<int>(i);
    const auto& simples = R.simples();
    if (!simples.empty()) {
      std::int64_t shortest = simples[0].length;
      for (const auto& s : simples) shortest = std::min(shortest, s.length);
      if (radius < shortest)
        throw BallTooSmall("radius " + std::to_string(radius) + " is below the shortest relative generator length " +
                           std::to_string(shortest));
    }
    for (const auto& c : local) {
      if (c.type != nu.type) out.all_same_type = false;
      std::vector<int> row;
      bool edge = false;
      for (const auto& s : simples) {
        auto img = facet(W_.multiply(s.element, c.rep), c.type);
        auto it = index.find({img.type, img.rep});
        row.push_back(it == index.end() ? -1 : it->second);
        if (it == index.end()) edge = true;
      }
      if (edge) ++out.boundary_chambers;
      out.table.push_back(std::move(row));
    }

    // Simple transitivity: every chamber is reached from the base along the
    // table, and the element reaching it is the one member of W~ in its coset.
    std::vector<int> seen(local.size(), 0);
    auto base = index.find({nu.type, W_.identity()});
    if (base == index.end()) {
      out.single_free_orbit = false;
    } else {
      std::vector<int> todo{base->second};
      seen[base->second] = 1;
      while (!todo.empty()) {
        int c = todo.back();
        todo.pop_back();
        for (int t : out.table[c])
          if (t >= 0 && !seen[t]) {
            seen[t] = 1;
            todo.push_back(t);
          }
      }
      for (std::size_t i = 0; i < local.size(); ++i) {
        if (!seen[i]) out.single_free_orbit = false;
        if (local[i].type != nu.type || !R.contains(local[i].rep)) out.single_free_orbit = false;
      }
      // Regularity: distinct generators move each chamber to distinct chambers.
      for (const auto& row : out.table)
        for (std::size_t a = 0; a < row.size(); ++a)
          for (std::size_t b = a + 1; b < row.size(); ++b)
            if (row[a] >= 0 && row[a] == row[b]) out.single_free_orbit = false;
    }

    // Translate to nu and relabel the action through conjugation by rep.
    for (auto& c : local) c = facet(W_.multiply(nu.rep, c.rep), c.type);
    out.chambers = std::move(local);
    return out;
  }

 private:
  WeylGroup W_;
};

/// W_x-orbits of pairs (u nu, u' nu') for u, u' in W_x, grouped by relative
/// position. For each double coset representative found, the number of
/// orbits lying over it.
struct OrbitFiber {
  WeylElement double_coset;
  bool good = false;
  std::size_t orbits = 0;
};

/// gens is any generating set of W_x (the whole group also works). Each
/// one-sided orbit gets a permutation table per generator; orbits of pairs
/// are then the connected components of the generator moves.
inline std::vector<OrbitFiber> orbit_fibers(const CoxeterComplex& C, const std::vector<WeylElement>& gens,
                                            const Facet& nu, const Facet& nu_prime) {
  const auto& W = C.group();
  struct Orbit {
    std::vector<WeylElement> reps;
    std::vector<std::vector<int>> moves;  // moves[g][i]: index of gens[g] . reps[i]
  };
  auto orbit_of = [&](const Facet& f) {
    Orbit o;
    std::map<WeylElement, int> index{{f.rep, 0}};
    o.reps.push_back(f.rep);
    o.moves.assign(gens.size(), {});
    for (std::size_t i = 0; i < o.reps.size(); ++i)
      for (std::size_t g = 0; g < gens.size(); ++g) {
        auto y = W.min_coset_rep(W.multiply(gens[g], o.reps[i]), f.type, Side::Right);
        auto [it, fresh] = index.emplace(y, static_cast<int>(o.reps.size()));
        if (fresh) o.reps.push_back(y);
        o.moves[g].push_back(it->second);
      }
    return o;
  };
  const Orbit left = orbit_of(nu), right = orbit_of(nu_prime);
  const std::size_t nl = left.reps.size(), nr = right.reps.size();
  std::vector<int> component(nl * nr, -1);
  std::map<WeylElement, OrbitFiber> fibers;
  std::vector<std::size_t> stack;
  int next = 0;
  for (std::size_t start = 0; start < component.size(); ++start) {
    if (component[start] >= 0) continue;
    component[start] = next;
    stack.assign(1, start);
    while (!stack.empty()) {
      auto p = stack.back();
      stack.pop_back();
      for (std::size_t g = 0; g < gens.size(); ++g) {
        auto q = static_cast<std::size_t>(left.moves[g][p / nr]) * nr + static_cast<std::size_t>(right.moves[g][p % nr]);
        if (component[q] < 0) {
          component[q] = next;
          stack.push_back(q);
        }
      }
    }
    ++next;
    auto rel = C.relative_position(C.facet(left.reps[start / nr], nu.type), C.facet(right.reps[start % nr], nu_prime.type));
    auto& f = fibers[rel.double_coset];
    f.double_coset = rel.double_coset;
    f.good = C.normalizes_parabolic(rel.double_coset, nu.type);
    ++f.orbits;
  }
  std::vector<OrbitFiber> out;
  for (auto& [k, v] : fibers) out.push_back(v);
  return out;
}

}  // namespace daha
