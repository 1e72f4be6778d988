#pragma once

// The extended affine Weyl group P^vee x| W_R and its finite Weyl subgroup.
//
// An element X^mu w is stored as (mu, M, Minv) with integer entries: mu is the
// translation in coweight coordinates and M is the matrix of w on V* in the
// simple-root basis. On points of E the element acts by x -> Minv^T x + mu.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "daha/errors.hpp"
#include "daha/rational.hpp"
#include "daha/root_system.hpp"

namespace daha {

/// A subset of the simple reflections, as a bitmask over indices of Delta.
struct GenSet {
  std::uint32_t bits = 0;

  static GenSet of(std::initializer_list<int> ids) {
    GenSet s;
    for (int i : ids) s.insert(i);
    return s;
  }
  static GenSet of(const std::vector<int>& ids) {
    GenSet s;
    for (int i : ids) s.insert(i);
    return s;
  }
  bool contains(int i) const { return (bits >> i) & 1u; }
  void insert(int i) { bits |= (1u << i); }
  void erase(int i) { bits &= ~(1u << i); }
  GenSet with(int i) const {
    GenSet s = *this;
    s.insert(i);
    return s;
  }
  GenSet without(int i) const {
    GenSet s = *this;
    s.erase(i);
    return s;
  }
  int size() const { return std::popcount(bits); }
  bool empty() const { return bits == 0; }
  bool subset_of(GenSet o) const { return (bits & ~o.bits) == 0; }
  std::vector<int> indices() const {
    std::vector<int> out;
    for (int i = 0; i < 32; ++i)
      if (contains(i)) out.push_back(i);
    return out;
  }
  int lowest() const { return bits == 0 ? -1 : std::countr_zero(bits); }
  GenSet operator|(GenSet o) const { return GenSet{bits | o.bits}; }
  GenSet operator&(GenSet o) const { return GenSet{bits & o.bits}; }
  GenSet minus(GenSet o) const { return GenSet{bits & ~o.bits}; }
  bool operator==(const GenSet&) const = default;
  auto operator<=>(const GenSet&) const = default;
};

inline std::string to_string(GenSet s) {
  std::string out = "{";
  bool first = true;
  for (int i : s.indices()) {
    if (!first) out += ",";
    out += std::to_string(i);
    first = false;
  }
  return out + "}";
}

struct WeylElement {
  ZVec mu;
  ZVec M;     // n*n, row major
  ZVec Minv;  // n*n, row major

  bool operator==(const WeylElement& o) const { return mu == o.mu && M == o.M; }
  bool operator<(const WeylElement& o) const { return mu != o.mu ? mu < o.mu : M < o.M; }
  int rank() const { return static_cast<int>(mu.size()); }
  bool is_translation() const {
    const int n = rank();
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (M[i * n + j] != (i == j ? 1 : 0)) return false;
    return true;
  }
  bool has_zero_translation() const {
    return std::all_of(mu.begin(), mu.end(), [](std::int64_t c) { return c == 0; });
  }
};

struct WeylElementHash {
  std::size_t operator()(const WeylElement& g) const {
    std::size_t h = 1469598103934665603ull;
    auto mix = [&](std::int64_t v) {
      h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    };
    for (auto v : g.mu) mix(v);
    for (auto v : g.M) mix(v);
    return h;
  }
};

using ElementSet = std::unordered_set<WeylElement, WeylElementHash>;

/// letters s_{i1} ... s_{ik} followed by a length-zero element pi.
struct ReducedWord {
  std::vector<int> letters;
  WeylElement pi;
};

inline std::string word_string(const std::vector<int>& letters) {
  std::string s = "[";
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(letters[i]);
  }
  return s + "]";
}

struct ElementOrder {
  bool infinite = false;
  std::int64_t order = 1;
};

enum class Side { Left, Right };

inline constexpr std::size_t kDefaultBallCap = 1000000;

/// Finite-type test for a Coxeter matrix (entries m_ij, 0 meaning infinity).
inline bool is_finite_coxeter(const std::vector<std::vector<int>>& m) {
  const int k = static_cast<int>(m.size());
  std::vector<int> comp(k, -1);
  for (int start = 0; start < k; ++start) {
    if (comp[start] != -1) continue;
    std::vector<int> nodes{start};
    comp[start] = start;
    for (std::size_t q = 0; q < nodes.size(); ++q)
      for (int j = 0; j < k; ++j)
        if (j != nodes[q] && m[nodes[q]][j] != 2 && comp[j] == -1) {
          comp[j] = start;
          nodes.push_back(j);
        }
    const int c = static_cast<int>(nodes.size());
    std::vector<int> deg(k, 0);
    int edges = 0, heavy = 0, label = 3;
    std::pair<int, int> heavy_edge{-1, -1};
    for (int a : nodes)
      for (int b : nodes) {
        if (a >= b || m[a][b] == 2) continue;
        if (m[a][b] == 0) return false;
        ++edges;
        ++deg[a];
        ++deg[b];
        if (m[a][b] >= 4) {
          ++heavy;
          label = m[a][b];
          heavy_edge = {a, b};
        }
      }
    if (edges != c - 1) return false;
    if (heavy > 1) return false;
    int branch = -1, branches = 0;
    for (int a : nodes) {
      if (deg[a] > 3) return false;
      if (deg[a] == 3) {
        branch = a;
        ++branches;
      }
    }
    if (branches > 1) return false;
    if (branches == 1) {
      if (heavy) return false;
      std::vector<int> arms;
      for (int nb : nodes) {
        if (nb == branch || m[branch][nb] == 2) continue;
        int len = 1, prev = branch, cur = nb;
        for (;;) {
          int next = -1;
          for (int x : nodes)
            if (x != cur && x != prev && m[cur][x] != 2) next = x;
          if (next < 0) break;
          prev = cur;
          cur = next;
          ++len;
        }
        arms.push_back(len);
      }
      Rational s = 0;
      for (int p : arms) s += Rational(1) / (p + 1);
      if (s <= 1) return false;
      continue;
    }
    if (!heavy) continue;
    auto is_end = [&](int a) { return deg[a] == 1; };
    bool at_end = is_end(heavy_edge.first) || is_end(heavy_edge.second);
    if (label == 4) {
      if (at_end) continue;
      if (c == 4) continue;  // F4: heavy edge in the middle of a 4-node path
      return false;
    }
    if (label == 5) {
      if (at_end && c <= 4) continue;
      return false;
    }
    if (c != 2) return false;
  }
  return true;
}

class WeylGroup {
 public:
  /// The affine Weyl group W_S generated by s_0, ..., s_n (inside the
  /// extended group, which is reached through translations).
  static WeylGroup affine(AffineSystemPtr sys) { return WeylGroup(std::move(sys), true); }
  /// The finite Weyl group W_R generated by s_1, ..., s_n.
  static WeylGroup finite(AffineSystemPtr sys) { return WeylGroup(std::move(sys), false); }

  const AffineRootSystem& system() const { return *sys_; }
  AffineSystemPtr system_ptr() const { return sys_; }
  const FiniteRootSystem& roots() const { return sys_->finite(); }
  int rank() const { return n_; }
  bool is_affine() const { return affine_; }
  GenSet generators() const { return gens_; }
  const AffineRoot& simple_root(int i) const { return sys_->simples()[i]; }

  WeylElement identity() const {
    WeylElement g;
    g.mu.assign(n_, 0);
    g.M.assign(n_ * n_, 0);
    for (int i = 0; i < n_; ++i) g.M[i * n_ + i] = 1;
    g.Minv = g.M;
    return g;
  }

  WeylElement translation(const ZVec& mu) const {
    WeylElement g = identity();
    g.mu = mu;
    return g;
  }

  /// The reflection s_a in the hyperplane {a = 0}.
  WeylElement reflection(const AffineRoot& a) const {
    ZVec r = roots().coroot(a.dir);
    WeylElement g = identity();
    for (int i = 0; i < n_; ++i) {
      g.mu[i] = -a.level * r[i];
      for (int j = 0; j < n_; ++j) g.M[i * n_ + j] -= a.dir[i] * r[j];
    }
    g.Minv = g.M;
    return g;
  }

  const WeylElement& simple(int i) const { return simple_refl_[i]; }

  WeylElement multiply(const WeylElement& a, const WeylElement& b) const {
    WeylElement g;
    g.mu = a.mu;
    g.M.assign(n_ * n_, 0);
    g.Minv.assign(n_ * n_, 0);
    for (int i = 0; i < n_; ++i) {
      std::int64_t s = 0;
      for (int j = 0; j < n_; ++j) s += a.Minv[j * n_ + i] * b.mu[j];
      g.mu[i] += s;
    }
    for (int i = 0; i < n_; ++i)
      for (int k = 0; k < n_; ++k) {
        auto x = a.M[i * n_ + k];
        auto y = b.Minv[i * n_ + k];
        for (int j = 0; j < n_; ++j) {
          if (x) g.M[i * n_ + j] += x * b.M[k * n_ + j];
          if (y) g.Minv[i * n_ + j] += y * a.Minv[k * n_ + j];
        }
      }
    return g;
  }

  WeylElement inverse(const WeylElement& a) const {
    WeylElement g;
    g.M = a.Minv;
    g.Minv = a.M;
    g.mu.assign(n_, 0);
    for (int i = 0; i < n_; ++i) {
      std::int64_t s = 0;
      for (int j = 0; j < n_; ++j) s += a.M[j * n_ + i] * a.mu[j];
      g.mu[i] = -s;
    }
    return g;
  }

  WeylElement power(const WeylElement& a, std::int64_t k) const {
    WeylElement base = k < 0 ? inverse(a) : a;
    WeylElement out = identity();
    for (std::int64_t i = 0; i < (k < 0 ? -k : k); ++i) out = multiply(out, base);
    return out;
  }

  WeylElement conjugate(const WeylElement& g, const WeylElement& x) const {
    return multiply(multiply(g, x), inverse(g));
  }

  WeylElement from_word(const std::vector<int>& letters) const {
    WeylElement g = identity();
    for (int i : letters) g = multiply(g, simple(i));
    return g;
  }

  WeylElement evaluate(const ReducedWord& w) const { return multiply(from_word(w.letters), w.pi); }

  /// M beta.
  ZVec act_finite(const WeylElement& g, const ZVec& beta) const { return apply(g.M, beta); }

  /// g . (beta + n) = M beta + n - <M beta, mu>.
  AffineRoot act(const WeylElement& g, const AffineRoot& a) const {
    ZVec b = apply(g.M, a.dir);
    return AffineRoot{b, a.level - zdot(b, g.mu)};
  }

  AffineRoot act_inverse(const WeylElement& g, const AffineRoot& a) const {
    return AffineRoot{apply(g.Minv, a.dir), a.level + zdot(a.dir, g.mu)};
  }

  /// Action on a point of E.
  QVec act_point(const WeylElement& g, const QVec& x) const {
    QVec out(n_);
    for (int i = 0; i < n_; ++i) {
      Rational s = static_cast<long>(g.mu[i]);
      for (int j = 0; j < n_; ++j)
        if (g.Minv[j * n_ + i]) s += Rational(static_cast<long>(g.Minv[j * n_ + i])) * x[j];
      out[i] = s;
    }
    return out;
  }

  /// Action on an affine function: (g f)(x) = f(g^-1 x).
  AffineFunction act_function(const WeylElement& g, const AffineFunction& f) const {
    AffineFunction out{QVec(n_, Rational(0)), f.constant};
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j)
        if (g.M[i * n_ + j]) out.gradient[i] += Rational(static_cast<long>(g.M[i * n_ + j])) * f.gradient[j];
    for (int i = 0; i < n_; ++i) out.constant -= out.gradient[i] * Rational(static_cast<long>(g.mu[i]));
    return out;
  }

  /// Number of positive affine roots a with g^-1 a < 0.
  std::int64_t length(const WeylElement& g) const {
    std::int64_t total = 0;
    for (const auto& beta : roots().roots()) {
      auto [lo, hi] = inversion_range(g, beta);
      total += count_levels(beta, lo, hi);
    }
    return total;
  }

  /// The positive affine roots a with g^-1 a < 0; their reflections form T(g).
  std::vector<AffineRoot> inversion_set(const WeylElement& g) const {
    std::vector<AffineRoot> out;
    for (const auto& beta : roots().roots()) {
      auto [lo, hi] = inversion_range(g, beta);
      bool odd_only = roots().in_twice_root_lattice(beta);
      for (std::int64_t n = lo; n <= hi; ++n) {
        if (odd_only && n % 2 == 0) continue;
        out.push_back(AffineRoot{beta, n});
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  bool is_left_descent(const WeylElement& g, int i) const {
    return !act_inverse(g, simple_root(i)).is_positive();
  }
  bool is_right_descent(const WeylElement& g, int i) const { return !act(g, simple_root(i)).is_positive(); }

  GenSet left_descents(const WeylElement& g) const {
    GenSet s;
    for (int i : gens_.indices())
      if (is_left_descent(g, i)) s.insert(i);
    return s;
  }
  GenSet right_descents(const WeylElement& g) const {
    GenSet s;
    for (int i : gens_.indices())
      if (is_right_descent(g, i)) s.insert(i);
    return s;
  }

  /// Greedy reduction by the lowest-index left descent.
  ReducedWord reduced_word(WeylElement g) const {
    ReducedWord w;
    for (;;) {
      int d = -1;
      for (int i : gens_.indices())
        if (is_left_descent(g, i)) {
          d = i;
          break;
        }
      if (d < 0) break;
      w.letters.push_back(d);
      g = multiply(simple(d), g);
    }
    w.pi = std::move(g);
    return w;
  }

  bool is_reflection(const WeylElement& t) const { return find_reflection_root(t).has_value(); }

  /// Canonical key of a reflection: the positive affine root of its hyperplane.
  AffineRoot reflection_key(const WeylElement& t) const {
    auto a = find_reflection_root(t);
    if (!a) throw NotAReflection("element is not a reflection");
    return *a;
  }

  /// eta(g, t) = -1 iff t lies in T(g).
  int eta(const WeylElement& g, const WeylElement& t) const {
    AffineRoot a = reflection_key(t);
    return act_inverse(g, a).is_positive() ? 1 : -1;
  }

  /// eta computed from a word: the parity of the positions j with
  /// t = (w_1...w_{j-1}) w_j (w_1...w_{j-1})^-1.
  int eta_from_word(const std::vector<int>& letters, const WeylElement& t) const {
    AffineRoot key = reflection_key(t);
    WeylElement prefix = identity();
    int sign = 1;
    for (int i : letters) {
      if (act(prefix, simple_root(i)).positive() == key) sign = -sign;
      prefix = multiply(prefix, simple(i));
    }
    return sign;
  }

  /// Whether the translation part lies in the coroot lattice, i.e. g is in W_S.
  bool in_coroot_lattice(const ZVec& mu) const {
    QVec q = to_qvec(mu);
    for (int j = 0; j < n_; ++j) {
      Rational s = 0;
      for (int i = 0; i < n_; ++i) s += q[i] * coroot_basis_inv_[i][j];
      if (!is_integer(s)) return false;
    }
    return true;
  }

  bool same_component(const WeylElement& x, const WeylElement& y) const {
    return in_coroot_lattice(multiply(x, inverse(y)).mu);
  }

  /// Bruhat order by the lifting recursion along the lowest left descent of y.
  bool bruhat_leq(WeylElement x, WeylElement y) const {
    if (!same_component(x, y)) throw DifferentComponents("elements lie in different components");
    std::int64_t lx = length(x), ly = length(y);
    for (;;) {
      if (lx > ly) return false;
      if (ly == 0) return x == y;
      int s = left_descents(y).lowest();
      y = multiply(simple(s), y);
      --ly;
      if (is_left_descent(x, s)) {
        x = multiply(simple(s), x);
        --lx;
      }
    }
  }

  /// Minimal length element of g W_Sigma (Right) or W_Sigma g (Left).
  WeylElement min_coset_rep(WeylElement g, GenSet sigma, Side side) const {
    for (;;) {
      int d = -1;
      for (int i : sigma.indices())
        if (side == Side::Right ? is_right_descent(g, i) : is_left_descent(g, i)) {
          d = i;
          break;
        }
      if (d < 0) return g;
      g = side == Side::Right ? multiply(g, simple(d)) : multiply(simple(d), g);
    }
  }

  /// Minimal length element of W_I g W_J.
  WeylElement double_coset_min_rep(WeylElement g, GenSet I, GenSet J) const {
    for (;;) {
      bool moved = false;
      for (int i : I.indices())
        if (is_left_descent(g, i)) {
          g = multiply(simple(i), g);
          moved = true;
        }
      for (int j : J.indices())
        if (is_right_descent(g, j)) {
          g = multiply(g, simple(j));
          moved = true;
        }
      if (!moved) return g;
    }
  }

  bool in_parabolic(const WeylElement& g, GenSet sigma) const {
    return min_coset_rep(g, sigma, Side::Right) == identity();
  }

  /// All elements of W_gens with length at most L, sorted by length and
  /// then lexicographically by reduced word.
  std::vector<WeylElement> enumerate_ball(std::int64_t L, std::optional<GenSet> gens = std::nullopt,
                                          std::size_t cap = kDefaultBallCap) const {
    GenSet use = gens.value_or(gens_);
    std::vector<WeylElement> all{identity()};
    ElementSet seen{identity()};
    std::size_t begin = 0;
    for (std::int64_t layer = 0; layer < L; ++layer) {
      std::size_t end = all.size();
      for (std::size_t k = begin; k < end; ++k)
        for (int s : use.indices()) {
          if (is_right_descent(all[k], s)) continue;
          WeylElement h = multiply(all[k], simple(s));
          if (seen.insert(h).second) {
            all.push_back(std::move(h));
            if (all.size() > cap)
              throw BallTooLarge("ball of radius " + std::to_string(L) + " exceeds " + std::to_string(cap) +
                                 " elements");
          }
        }
      begin = end;
      if (begin == all.size()) break;
    }
    sort_length_lex(all);
    return all;
  }

  void sort_length_lex(std::vector<WeylElement>& v) const {
    std::vector<std::pair<std::pair<std::int64_t, std::vector<int>>, std::size_t>> keys;
    keys.reserve(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
      auto w = reduced_word(v[i]);
      keys.push_back({{static_cast<std::int64_t>(w.letters.size()), w.letters}, i});
    }
    std::sort(keys.begin(), keys.end());
    std::vector<WeylElement> out;
    out.reserve(v.size());
    for (auto& k : keys) out.push_back(std::move(v[k.second]));
    v = std::move(out);
  }

  /// Exact order; infinite order is certified by a nonzero translation in
  /// the power that kills the finite part.
  ElementOrder order(const WeylElement& g) const {
    WeylElement p = g;
    std::int64_t r = 1;
    while (!p.is_translation()) {
      p = multiply(p, g);
      ++r;
      if (r > 1000) throw Error("finite part has implausibly large order");
    }
    if (!p.has_zero_translation()) return ElementOrder{true, 0};
    WeylElement q = g;
    std::int64_t k = 1;
    while (!(q == identity())) {
      q = multiply(q, g);
      ++k;
    }
    return ElementOrder{false, k};
  }

  /// m(s_i, s_j) with 0 encoding infinity.
  int coxeter_entry(int i, int j) const { return sys_->coxeter_entry(i, j); }

  bool is_parabolic_finite(GenSet sigma) const {
    auto ids = sigma.indices();
    std::vector<std::vector<int>> m(ids.size(), std::vector<int>(ids.size()));
    for (std::size_t a = 0; a < ids.size(); ++a)
      for (std::size_t b = 0; b < ids.size(); ++b) m[a][b] = coxeter_entry(ids[a], ids[b]);
    return is_finite_coxeter(m);
  }

  /// Longest element of a finite standard parabolic subgroup.
  WeylElement longest_element(GenSet sigma) const {
    if (!sigma.subset_of(gens_)) throw NotFinite("subset is not made of generators of this group");
    if (!is_parabolic_finite(sigma)) throw NotFinite("W_Sigma is infinite for Sigma = " + to_string(sigma));
    WeylElement w = identity();
    for (;;) {
      int up = -1;
      for (int i : sigma.indices())
        if (!is_left_descent(w, i)) {
          up = i;
          break;
        }
      if (up < 0) return w;
      w = multiply(simple(up), w);
    }
  }

  /// Length-zero elements of the extended group attached to minuscule
  /// coweights (including the identity).
  std::vector<WeylElement> length_zero_elements() const {
    std::vector<WeylElement> out{identity()};
    if (!affine_) return out;
    const ZVec& theta = roots().highest_root();
    for (int k = 0; k < n_; ++k) {
      if (theta[k] != 1) continue;
      ZVec mu(n_, 0);
      mu[k] = 1;
      out.push_back(reduced_word(translation(mu)).pi);
    }
    return out;
  }

  /// Permutation of Delta induced by a length-zero element.
  std::vector<int> permutation_of_simples(const WeylElement& pi) const {
    const auto& simples = sys_->simples();
    std::vector<int> perm(simples.size(), -1);
    for (std::size_t i = 0; i < simples.size(); ++i) {
      AffineRoot b = act(pi, simples[i]);
      for (std::size_t j = 0; j < simples.size(); ++j)
        if (simples[j] == b) perm[i] = static_cast<int>(j);
      if (perm[i] < 0) throw Error("element does not permute the simple affine roots");
    }
    return perm;
  }

 private:
  WeylGroup(AffineSystemPtr sys, bool affine) : sys_(std::move(sys)), affine_(affine) {
    n_ = sys_->rank();
    for (int i = affine_ ? 0 : 1; i <= n_; ++i) gens_.insert(i);
    for (const auto& a : sys_->simples()) simple_refl_.push_back(reflection(a));
    const auto& R = roots();
    QMat basis(n_, QVec(n_));
    for (int i = 0; i < n_; ++i) {
      ZVec alpha = R.simple_root(i);
      if (i == n_ - 1 && R.type() == RootType::BC) alpha[i] = 2;
      basis[i] = to_qvec(R.coroot(alpha));
    }
    coroot_basis_inv_ = daha::inverse(basis);
  }

  ZVec apply(const ZVec& m, const ZVec& v) const {
    ZVec out(n_, 0);
    for (int i = 0; i < n_; ++i) {
      std::int64_t s = 0;
      for (int j = 0; j < n_; ++j) s += m[i * n_ + j] * v[j];
      out[i] = s;
    }
    return out;
  }

  bool negative_finite(const ZVec& v) const { return height(v) < 0; }

  std::pair<std::int64_t, std::int64_t> inversion_range(const WeylElement& g, const ZVec& beta) const {
    std::int64_t c = zdot(beta, g.mu);
    std::int64_t lo = is_positive_root(beta) ? 0 : 1;
    std::int64_t hi = negative_finite(apply(g.Minv, beta)) ? -c : -c - 1;
    return {lo, hi};
  }

  std::int64_t count_levels(const ZVec& beta, std::int64_t lo, std::int64_t hi) const {
    if (hi < lo) return 0;
    if (!roots().in_twice_root_lattice(beta)) return hi - lo + 1;
    auto floor_div = [](std::int64_t a, std::int64_t b) {
      std::int64_t q = a / b;
      if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
      return q;
    };
    // odd numbers 2k+1 in [lo, hi]
    std::int64_t kmin = floor_div(lo, 2);
    if (2 * kmin + 1 < lo) ++kmin;
    std::int64_t kmax = floor_div(hi - 1, 2);
    return kmax >= kmin ? kmax - kmin + 1 : 0;
  }

  std::optional<AffineRoot> find_reflection_root(const WeylElement& t) const {
    const auto& R = roots();
    if (t.is_translation()) return std::nullopt;
    for (const auto& beta : R.positive_roots()) {
      ZVec r = R.coroot(beta);
      bool match = true;
      for (int i = 0; i < n_ && match; ++i)
        for (int j = 0; j < n_; ++j)
          if (t.M[i * n_ + j] != (i == j ? 1 : 0) - beta[i] * r[j]) {
            match = false;
            break;
          }
      if (!match) continue;
      int k = 0;
      while (k < n_ && r[k] == 0) ++k;
      if (k == n_) continue;
      if (t.mu[k] % r[k] != 0) continue;
      std::int64_t level = -t.mu[k] / r[k];
      bool ok = true;
      for (int i = 0; i < n_; ++i)
        if (t.mu[i] != -level * r[i]) ok = false;
      if (!ok || !sys_->contains(beta, level)) continue;
      return AffineRoot{beta, level}.positive();
    }
    return std::nullopt;
  }

  AffineSystemPtr sys_;
  bool affine_;
  int n_ = 0;
  GenSet gens_;
  std::vector<WeylElement> simple_refl_;
  QMat coroot_basis_inv_;
};

}  // namespace daha
