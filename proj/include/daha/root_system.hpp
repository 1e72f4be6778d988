#pragma once

// Finite root systems (reduced or of type BC), affine functions on the
// euclidean space E, and the affinization of a finite root system.
//
// Coordinates: roots live in V* written in the basis of simple roots;
// points of E = V are written in the basis of fundamental coweights, so the
// pairing <beta, x> is the plain dot product of coordinate vectors.

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <queue>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "daha/errors.hpp"
#include "daha/rational.hpp"

namespace daha {

enum class RootType { A, B, C, D, E, F, G, BC };

inline std::string type_name(RootType t) {
  switch (t) {
    case RootType::A: return "A";
    case RootType::B: return "B";
    case RootType::C: return "C";
    case RootType::D: return "D";
    case RootType::E: return "E";
    case RootType::F: return "F";
    case RootType::G: return "G";
    case RootType::BC: return "BC";
  }
  return "?";
}

inline RootType parse_type(const std::string& s) {
  static const std::map<std::string, RootType> table = {
      {"A", RootType::A}, {"B", RootType::B}, {"C", RootType::C}, {"D", RootType::D},
      {"E", RootType::E}, {"F", RootType::F}, {"G", RootType::G}, {"BC", RootType::BC}};
  auto it = table.find(s);
  if (it == table.end()) throw IllegalType("unknown root type '" + s + "'");
  return it->second;
}

inline void check_legal_type(RootType t, int n) {
  bool ok = false;
  switch (t) {
    case RootType::A: ok = n >= 1 && n <= 8; break;
    case RootType::B: ok = n >= 2 && n <= 8; break;
    case RootType::C: ok = n >= 2 && n <= 8; break;
    case RootType::D: ok = n >= 4 && n <= 8; break;
    case RootType::E: ok = n >= 6 && n <= 8; break;
    case RootType::F: ok = n == 4; break;
    case RootType::G: ok = n == 2; break;
    case RootType::BC: ok = n >= 1 && n <= 8; break;
  }
  if (!ok) throw IllegalType(type_name(t) + std::to_string(n) + " is not a supported root system");
}

inline std::int64_t height(const ZVec& beta) {
  std::int64_t h = 0;
  for (auto c : beta) h += c;
  return h;
}

inline bool is_positive_root(const ZVec& beta) { return height(beta) > 0; }

inline ZVec negate(ZVec v) {
  for (auto& c : v) c = -c;
  return v;
}

inline std::int64_t zdot(const ZVec& a, const ZVec& b) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

class FiniteRootSystem {
 public:
  /// Builds the system with Bourbaki numbering. Long roots have squared
  /// length 2; in type BC the roots e_i have squared length 1 and 2e_i
  /// length 4. `gram_scale` rescales the invariant form uniformly.
  static FiniteRootSystem build(RootType type, int rank, const Rational& gram_scale = 1) {
    check_legal_type(type, rank);
    if (gram_scale <= 0) throw InvalidRootData("gram scale must be positive");
    FiniteRootSystem r;
    r.type_ = type;
    r.rank_ = rank;
    const int n = rank;
    r.cartan_.assign(n, ZVec(n, 0));
    std::vector<Rational> len(n, Rational(2));
    auto& a = r.cartan_;
    for (int i = 0; i < n; ++i) a[i][i] = 2;
    auto edge = [&](int i, int j) {  // 1-indexed simple edge
      a[i - 1][j - 1] = -1;
      a[j - 1][i - 1] = -1;
    };
    switch (type) {
      case RootType::A:
        for (int i = 1; i < n; ++i) edge(i, i + 1);
        break;
      case RootType::B:
      case RootType::BC:
        for (int i = 1; i < n; ++i) edge(i, i + 1);
        if (n >= 2) a[n - 1][n - 2] = -2;
        len[n - 1] = 1;
        break;
      case RootType::C:
        for (int i = 1; i < n; ++i) edge(i, i + 1);
        a[n - 2][n - 1] = -2;
        for (int i = 0; i < n - 1; ++i) len[i] = 1;
        break;
      case RootType::D:
        for (int i = 1; i < n - 1; ++i) edge(i, i + 1);
        edge(n - 2, n);
        break;
      case RootType::E:
        edge(1, 3);
        edge(2, 4);
        for (int i = 3; i < n; ++i) edge(i, i + 1);
        break;
      case RootType::F:
        edge(1, 2);
        edge(2, 3);
        edge(3, 4);
        a[2][1] = -2;
        len[2] = len[3] = 1;
        break;
      case RootType::G:
        a[0][1] = -3;
        a[1][0] = -1;
        len[0] = make_rational(2, 3);
        break;
    }
    r.sq_len_ = len;
    r.finish(gram_scale);
    return r;
  }

  /// Validates user supplied Cartan and Gram data against the type tables.
  static FiniteRootSystem from_data(RootType type, int rank, const ZMat& cartan, const QMat& gram) {
    check_legal_type(type, rank);
    if (gram.size() != static_cast<std::size_t>(rank) || gram.empty() || gram[0].size() != gram.size())
      throw InvalidRootData("gram matrix has the wrong shape");
    Rational scale = gram[0][0] / build(type, rank).gram_[0][0];
    FiniteRootSystem r = build(type, rank, scale);
    if (r.cartan_ != cartan) throw InvalidRootData("cartan matrix does not match type " + r.label());
    if (r.gram_ != gram) throw InvalidRootData("gram matrix is not a multiple of the standard form");
    return r;
  }

  RootType type() const { return type_; }
  int rank() const { return rank_; }
  std::string label() const { return type_name(type_) + std::to_string(rank_); }
  bool is_reduced() const { return type_ != RootType::BC; }

  /// cartan()[i][j] = <alpha_i^vee, alpha_j>.
  const ZMat& cartan() const { return cartan_; }
  /// Invariant form on V* in the simple-root basis.
  const QMat& gram() const { return gram_; }
  /// Inverse form, i.e. the invariant form on V in the coweight basis.
  const QMat& gram_dual() const { return gram_dual_; }
  const Rational& gram_scale() const { return scale_; }

  const std::vector<ZVec>& roots() const { return roots_; }
  const std::vector<ZVec>& positive_roots() const { return positive_; }
  bool is_root(const ZVec& beta) const { return index_.count(beta) != 0; }
  int root_index(const ZVec& beta) const {
    auto it = index_.find(beta);
    if (it == index_.end()) throw NotARoot(to_string(beta) + " is not a root of " + label());
    return it->second;
  }

  ZVec simple_root(int i) const {
    ZVec v(rank_, 0);
    v[i] = 1;
    return v;
  }

  /// Coroot of beta in coweight coordinates: 2 G beta / (beta, beta).
  ZVec coroot(const ZVec& beta) const {
    QVec q = coroot_q(to_qvec(beta));
    ZVec out(rank_);
    for (int i = 0; i < rank_; ++i) out[i] = to_int64(q[i]);
    return out;
  }

  QVec coroot_q(const QVec& beta) const {
    Rational n = norm2(beta);
    if (n == 0) throw ConstantFunction("zero vector has no coroot");
    QVec gb = mat_vec(gram_, beta);
    for (auto& c : gb) c = 2 * c / n;
    return gb;
  }

  std::vector<ZVec> simple_coroots() const {
    std::vector<ZVec> out;
    for (int i = 0; i < rank_; ++i) out.push_back(coroot(simple_root(i)));
    return out;
  }

  Rational inner(const QVec& a, const QVec& b) const { return dot(a, mat_vec(gram_, b)); }
  Rational norm2(const QVec& a) const { return inner(a, a); }
  Rational norm2(const ZVec& a) const { return norm2(to_qvec(a)); }

  /// True iff beta lies in 2 Q_R (only the roots 2e_i of type BC).
  bool in_twice_root_lattice(const ZVec& beta) const {
    return std::all_of(beta.begin(), beta.end(), [](std::int64_t c) { return c % 2 == 0; });
  }

  const ZVec& highest_root() const { return highest_; }

  /// Fundamental weights in the simple-root basis (rows).
  QMat fundamental_weights() const {
    QMat c(rank_, QVec(rank_));
    for (int i = 0; i < rank_; ++i)
      for (int j = 0; j < rank_; ++j) c[i][j] = Rational(static_cast<long>(cartan_[j][i]));
    return inverse(c);
  }

  /// Simple reflection s_i applied to beta.
  ZVec reflect_simple(int i, const ZVec& beta) const {
    std::int64_t k = 0;
    for (int j = 0; j < rank_; ++j) k += cartan_[i][j] * beta[j];
    ZVec out = beta;
    out[i] -= k;
    return out;
  }

 private:
  void finish(const Rational& scale) {
    const int n = rank_;
    scale_ = scale;
    gram_.assign(n, QVec(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        gram_[i][j] = Rational(static_cast<long>(cartan_[i][j])) * sq_len_[i] / 2 * scale;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (gram_[i][j] != gram_[j][i]) throw InvalidRootData("cartan data is not symmetrizable");
    if (!is_positive_definite(gram_)) throw InvalidRootData("gram matrix is not positive definite");
    gram_dual_ = inverse(gram_);

    std::set<ZVec> seen;
    std::queue<ZVec> todo;
    auto push = [&](const ZVec& v) {
      if (seen.insert(v).second) todo.push(v);
    };
    for (int i = 0; i < n; ++i) push(simple_root(i));
    if (type_ == RootType::BC) {
      ZVec two = simple_root(n - 1);
      two[n - 1] = 2;
      push(two);
    }
    while (!todo.empty()) {
      ZVec v = todo.front();
      todo.pop();
      for (int i = 0; i < n; ++i) push(reflect_simple(i, v));
    }
    for (const auto& v : seen)
      if (is_positive_root(v)) positive_.push_back(v);
    std::sort(positive_.begin(), positive_.end(), [](const ZVec& x, const ZVec& y) {
      auto hx = height(x), hy = height(y);
      return hx != hy ? hx < hy : x < y;
    });
    roots_ = positive_;
    for (const auto& v : positive_) roots_.push_back(negate(v));
    for (std::size_t i = 0; i < roots_.size(); ++i) index_[roots_[i]] = static_cast<int>(i);
    highest_ = positive_.back();
  }

  RootType type_ = RootType::A;
  int rank_ = 0;
  ZMat cartan_;
  std::vector<Rational> sq_len_;
  Rational scale_ = 1;
  QMat gram_, gram_dual_;
  std::vector<ZVec> roots_, positive_;
  std::map<ZVec, int> index_;
  ZVec highest_;
};

/// An affine function x -> <gradient, x> + constant on E.
struct AffineFunction {
  QVec gradient;
  Rational constant;

  Rational operator()(const QVec& x) const { return dot(gradient, x) + constant; }
  bool operator==(const AffineFunction& o) const = default;
  AffineFunction operator-() const {
    AffineFunction f = *this;
    for (auto& c : f.gradient) c = -c;
    f.constant = -f.constant;
    return f;
  }
  AffineFunction scaled(const Rational& k) const {
    AffineFunction f = *this;
    for (auto& c : f.gradient) c *= k;
    f.constant *= k;
    return f;
  }
  bool is_constant() const {
    return std::all_of(gradient.begin(), gradient.end(), [](const Rational& c) { return c == 0; });
  }
};

inline std::string to_string(const AffineFunction& f) {
  return "(" + to_string(f.gradient) + "," + to_string(f.constant) + ")";
}

/// <f, g> = (df, dg); constants are ignored.
inline Rational pairing(const FiniteRootSystem& R, const AffineFunction& f, const AffineFunction& g) {
  return R.inner(f.gradient, g.gradient);
}

/// f^vee = 2 f / |df|^2.
inline AffineFunction coroot(const FiniteRootSystem& R, const AffineFunction& f) {
  if (f.is_constant()) throw ConstantFunction("coroot of a constant function");
  return f.scaled(Rational(2) / R.norm2(f.gradient));
}

/// s_f(g) = g - <f^vee, g> f.
inline AffineFunction reflect_fn(const FiniteRootSystem& R, const AffineFunction& f, const AffineFunction& g) {
  Rational k = pairing(R, coroot(R, f), g);
  AffineFunction out = g;
  for (std::size_t i = 0; i < out.gradient.size(); ++i) out.gradient[i] -= k * f.gradient[i];
  out.constant -= k * f.constant;
  return out;
}

/// Orthogonal reflection of E in the hyperplane {f = 0}: x - f(x) (df)^vee.
inline QVec reflect_point(const FiniteRootSystem& R, const AffineFunction& f, const QVec& x) {
  if (f.is_constant()) throw ConstantFunction("reflection in a constant function");
  QVec r = R.coroot_q(f.gradient);
  Rational v = f(x);
  QVec out = x;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] -= v * r[i];
  return out;
}

/// An affine root alpha + n; only legal pairs can be constructed.
struct AffineRoot {
  ZVec dir;
  std::int64_t level = 0;

  bool operator==(const AffineRoot& o) const = default;
  auto operator<=>(const AffineRoot& o) const = default;

  static AffineRoot make(const FiniteRootSystem& R, ZVec dir, std::int64_t level) {
    if (!R.is_root(dir)) throw NotARoot(to_string(dir) + " is not a root of " + R.label());
    if (R.in_twice_root_lattice(dir) && level % 2 == 0)
      throw NotARoot("(" + to_string(dir) + "," + std::to_string(level) +
                     ") needs an odd level because its direction lies in 2Q");
    return AffineRoot{std::move(dir), level};
  }

  bool is_positive() const { return level > 0 || (level == 0 && is_positive_root(dir)); }
  AffineRoot operator-() const { return AffineRoot{negate(dir), -level}; }
  AffineRoot positive() const { return is_positive() ? *this : -*this; }

  AffineFunction function() const {
    return AffineFunction{to_qvec(dir), Rational(static_cast<long>(level))};
  }
};

inline std::string to_string(const AffineRoot& a) {
  return "(" + to_string(a.dir) + "," + std::to_string(a.level) + ")";
}

class AffineRootSystem {
 public:
  static std::shared_ptr<const AffineRootSystem> affinize(FiniteRootSystem finite) {
    auto s = std::shared_ptr<AffineRootSystem>(new AffineRootSystem());
    s->finite_ = std::move(finite);
    const auto& R = s->finite_;
    const int n = R.rank();
    const ZVec& theta = R.highest_root();
    s->simples_.push_back(AffineRoot::make(R, negate(theta), 1));
    for (int i = 0; i < n; ++i) s->simples_.push_back(AffineRoot::make(R, R.simple_root(i), 0));

    // Vertices of the fundamental alcove: 0 and fundamental coweights / marks.
    s->vertices_.push_back(QVec(n, Rational(0)));
    for (int k = 0; k < n; ++k) {
      QVec v(n, Rational(0));
      v[k] = Rational(1) / Rational(static_cast<long>(theta[k]));
      s->vertices_.push_back(v);
    }
    QVec bary(n, Rational(0));
    for (const auto& v : s->vertices_)
      for (int i = 0; i < n; ++i) bary[i] += v[i];
    for (auto& c : bary) c /= (n + 1);
    s->interior_ = bary;
    for (const auto& a : s->simples_)
      if (a.function()(bary) <= 0) throw InvalidRootData("fundamental alcove is empty");

    // Generalized Cartan matrix of the simple affine roots.
    s->cartan_.assign(n + 1, ZVec(n + 1, 0));
    for (int i = 0; i <= n; ++i)
      for (int j = 0; j <= n; ++j) {
        Rational v = pairing(R, coroot(R, s->simples_[i].function()), s->simples_[j].function());
        s->cartan_[i][j] = to_int64(v);
      }
    return s;
  }

  const FiniteRootSystem& finite() const { return finite_; }
  int rank() const { return finite_.rank(); }
  /// Delta: index 0 is a0 = 1 - theta, index i is alpha_i.
  const std::vector<AffineRoot>& simples() const { return simples_; }
  const ZVec& highest_root() const { return finite_.highest_root(); }
  AffineFunction delta() const {
    auto f = simples_[0].function();
    auto t = AffineFunction{to_qvec(highest_root()), 0};
    for (std::size_t i = 0; i < f.gradient.size(); ++i) f.gradient[i] += t.gradient[i];
    return f;
  }
  const std::vector<QVec>& alcove_vertices() const { return vertices_; }
  const QVec& alcove_interior_point() const { return interior_; }
  /// cartan()[i][j] = <a_i^vee, a_j>, indices over Delta.
  const ZMat& cartan() const { return cartan_; }

  bool contains(const ZVec& dir, std::int64_t level) const {
    if (!finite_.is_root(dir)) return false;
    return !(finite_.in_twice_root_lattice(dir) && level % 2 == 0);
  }

  /// Coxeter matrix entry m(s_i, s_j); 0 encodes infinity.
  int coxeter_entry(int i, int j) const {
    if (i == j) return 1;
    auto p = cartan_[i][j] * cartan_[j][i];
    switch (p) {
      case 0: return 2;
      case 1: return 3;
      case 2: return 4;
      case 3: return 6;
      default: return 0;
    }
  }

 private:
  AffineRootSystem() = default;
  FiniteRootSystem finite_;
  std::vector<AffineRoot> simples_;
  std::vector<QVec> vertices_;
  QVec interior_;
  ZMat cartan_;
};

using AffineSystemPtr = std::shared_ptr<const AffineRootSystem>;

inline AffineSystemPtr make_affine(RootType t, int rank, const Rational& gram_scale = 1) {
  return AffineRootSystem::affinize(FiniteRootSystem::build(t, rank, gram_scale));
}

}  // namespace daha
