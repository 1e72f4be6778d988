#pragma once

// Relative Coxeter groups attached to a finite standard parabolic subgroup
// W_Sigma: the group W~ of minimal length representatives of
// N_W(W_Sigma)/W_Sigma, its simple system S~ and its own length function.

#include <algorithm>
#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <shared_mutex>
#include <string>
#include <tuple>
#include <vector>

#include "daha/errors.hpp"
#include "daha/weyl.hpp"

namespace daha {

struct ParabolicSubset {
  GenSet sigma;
  bool finite = false;
  std::optional<WeylElement> w0;
  std::vector<AffineRoot> reflections;  // keys of T_Sigma

  static ParabolicSubset make(const WeylGroup& W, GenSet sigma) {
    ParabolicSubset p;
    p.sigma = sigma;
    p.finite = W.is_parabolic_finite(sigma);
    if (p.finite) {
      p.w0 = W.longest_element(sigma);
      p.reflections = W.inversion_set(*p.w0);
    }
    return p;
  }
};

/// Reflections of y W_Sigma y^-1, as positive affine roots.
inline std::set<AffineRoot> conjugate_reflections(const WeylGroup& W, const WeylElement& y,
                                                  const std::vector<AffineRoot>& t_sigma) {
  std::set<AffineRoot> out;
  for (const auto& a : t_sigma) out.insert(W.act(y, a).positive());
  return out;
}

/// Whether y W_Sigma y^-1 is contained in W_Sigma', checked on generators.
inline bool conjugates_into(const WeylGroup& W, const WeylElement& y, GenSet sigma, GenSet sigma_prime) {
  for (int s : sigma.indices())
    if (!W.in_parabolic(W.conjugate(y, W.simple(s)), sigma_prime)) return false;
  return true;
}

/// y W_Sigma y^-1 = W_Sigma'.
inline bool conjugates_onto(const WeylGroup& W, const WeylElement& y, GenSet sigma, GenSet sigma_prime) {
  return conjugates_into(W, y, sigma, sigma_prime) && conjugates_into(W, W.inverse(y), sigma_prime, sigma);
}

struct AdmissibilityCertificate {
  bool admissible = false;
  bool finite = false;
  /// Finite over-parabolics whose longest element fails to normalise W_Sigma.
  std::vector<GenSet> violations;
  /// w0 of the first violating over-parabolic, and the generator it moves out.
  std::optional<WeylElement> witness;
  int moved_generator = -1;
};

inline AdmissibilityCertificate check_admissible(const WeylGroup& W, GenSet sigma) {
  AdmissibilityCertificate c;
  c.finite = W.is_parabolic_finite(sigma);
  if (!c.finite) return c;
  GenSet rest = W.generators().minus(sigma);
  auto free = rest.indices();
  for (std::uint32_t m = 0; m < (1u << free.size()); ++m) {
    GenSet sp = sigma;
    for (std::size_t k = 0; k < free.size(); ++k)
      if (m >> k & 1) sp.insert(free[k]);
    if (!W.is_parabolic_finite(sp)) continue;
    WeylElement w0 = W.longest_element(sp);
    for (int s : sigma.indices()) {
      if (W.in_parabolic(W.conjugate(w0, W.simple(s)), sigma)) continue;
      c.violations.push_back(sp);
      if (!c.witness) {
        c.witness = w0;
        c.moved_generator = s;
      }
      break;
    }
  }
  std::sort(c.violations.begin(), c.violations.end());
  c.admissible = c.violations.empty();
  return c;
}

/// Process-wide memo of admissibility results, safe for concurrent readers.
class AdmissibilityMemo {
 public:
  static AdmissibilityMemo& instance() {
    static AdmissibilityMemo memo;
    return memo;
  }

  AdmissibilityCertificate get(const WeylGroup& W, GenSet sigma) {
    Key key{W.roots().label(), to_string(W.roots().gram_scale()), W.is_affine(), sigma.bits};
    {
      std::shared_lock lock(mutex_);
      auto it = table_.find(key);
      if (it != table_.end()) return it->second;
    }
    AdmissibilityCertificate c = check_admissible(W, sigma);
    std::unique_lock lock(mutex_);
    table_.emplace(key, c);
    return c;
  }

 private:
  using Key = std::tuple<std::string, std::string, bool, std::uint32_t>;
  std::shared_mutex mutex_;
  std::map<Key, AdmissibilityCertificate> table_;
};

inline bool is_admissible(const WeylGroup& W, GenSet sigma) {
  return AdmissibilityMemo::instance().get(W, sigma).admissible;
}

struct RelativeSimple {
  int s = 0;  // the generator of W outside Sigma that defines it
  WeylElement element;
  std::vector<int> word;
  std::int64_t length = 0;
};

/// One elementary step y_i = w0^{Sigma_i + s_i} w0^{Sigma_i} in N(Sigma_i, Sigma_{i+1}).
struct LienMove {
  GenSet from;
  GenSet to;
  int s = 0;
  WeylElement element;
};

class RelativeCoxeterSystem {
 public:
  /// Order cap used when reporting Coxeter matrix entries; entries whose
  /// exact finite order exceeds it are reported as -1.
  static RelativeCoxeterSystem build(const WeylGroup& W, GenSet sigma, int order_cap = 12) {
    auto cert = AdmissibilityMemo::instance().get(W, sigma);
    if (!cert.admissible)
      throw NotAdmissible("Sigma = " + to_string(sigma) + (cert.finite ? " fails the normaliser condition"
                                                                         : " generates an infinite group"));
    RelativeCoxeterSystem r(W);
    r.base_ = ParabolicSubset::make(W, sigma);
    r.order_cap_ = order_cap;
    for (int s : W.generators().minus(sigma).indices()) {
      if (!W.is_parabolic_finite(sigma.with(s))) continue;
      r.complement_.insert(s);
      RelativeSimple rs;
      rs.s = s;
      rs.element = W.multiply(W.longest_element(sigma.with(s)), *r.base_.w0);
      rs.word = W.reduced_word(rs.element).letters;
      rs.length = static_cast<std::int64_t>(rs.word.size());
      r.simples_.push_back(rs);
    }
    const std::size_t k = r.simples_.size();
    r.coxeter_.assign(k, std::vector<int>(k, 1));
    for (std::size_t a = 0; a < k; ++a)
      for (std::size_t b = 0; b < k; ++b) {
        if (a == b) continue;
        auto o = W.order(W.multiply(r.simples_[a].element, r.simples_[b].element));
        if (o.infinite) r.coxeter_[a][b] = 0;
        else if (o.order > order_cap) r.coxeter_[a][b] = -1;
        else r.coxeter_[a][b] = static_cast<int>(o.order);
      }
    if (k == 0) r.diagnose_degenerate();
    return r;
  }

  const WeylGroup& group() const { return W_; }
  GenSet sigma() const { return base_.sigma; }
  const ParabolicSubset& base() const { return base_; }
  GenSet complement() const { return complement_; }
  const std::vector<RelativeSimple>& simples() const { return simples_; }
  /// Orders m(s~, t~); 0 is infinity, -1 is a finite order above the cap.
  const std::vector<std::vector<int>>& coxeter_matrix() const { return coxeter_; }
  int order_cap() const { return order_cap_; }
  /// Non-empty when S~ is empty but W~ was seen to be nontrivial.
  const std::string& diagnostic() const { return diagnostic_; }

  /// g normalises W_Sigma and is minimal in g W_Sigma.
  bool contains(const WeylElement& g) const {
    for (int s : base_.sigma.indices())
      if (W_.is_right_descent(g, s)) return false;
    return conjugates_onto(W_, g, base_.sigma, base_.sigma);
  }

  /// Indices k with l(s~_k g) = l(g) - l(s~_k).
  std::vector<int> descents(const WeylElement& g) const {
    require_member(g);
    std::vector<int> out;
    std::int64_t lg = W_.length(g);
    for (std::size_t k = 0; k < simples_.size(); ++k)
      if (W_.length(W_.multiply(simples_[k].element, g)) == lg - simples_[k].length)
        out.push_back(static_cast<int>(k));
    return out;
  }

  /// Greedy S~-word of g (indices into simples()), by strictly decreasing l.
  std::vector<int> relative_word(WeylElement g) const {
    require_member(g);
    std::vector<int> word;
    std::int64_t lg = W_.length(g);
    while (lg > 0) {
      int found = -1;
      std::int64_t next = 0;
      for (std::size_t k = 0; k < simples_.size(); ++k) {
        std::int64_t l = W_.length(W_.multiply(simples_[k].element, g));
        if (l == lg - simples_[k].length) {
          found = static_cast<int>(k);
          next = l;
          break;
        }
      }
      if (found < 0)
        throw NotInRelativeGroup("element of W~ has no relative descent; S~ does not generate it");
      word.push_back(found);
      g = W_.multiply(simples_[found].element, g);
      lg = next;
    }
    if (!(g == W_.identity())) throw NotInRelativeGroup("element reduces to a nontrivial length-zero element");
    return word;
  }

  std::int64_t relative_length(const WeylElement& g) const {
    return static_cast<std::int64_t>(relative_word(g).size());
  }

  WeylElement evaluate(const std::vector<int>& word) const {
    WeylElement g = W_.identity();
    for (int k : word) g = W_.multiply(g, simples_[k].element);
    return g;
  }

  /// All elements of W~ with relative length at most r, grouped by
  /// relative length (BFS distance in the S~ Cayley graph).
  std::vector<std::vector<WeylElement>> ball_layers(int r, std::size_t cap = kDefaultBallCap) const {
    std::vector<std::vector<WeylElement>> layers{{W_.identity()}};
    ElementSet seen{W_.identity()};
    for (int d = 0; d < r; ++d) {
      std::vector<WeylElement> next;
      for (const auto& g : layers.back())
        for (const auto& s : simples_) {
          WeylElement h = W_.multiply(g, s.element);
          if (seen.insert(h).second) next.push_back(std::move(h));
        }
      if (seen.size() > cap) throw BallTooLarge("relative ball exceeds " + std::to_string(cap) + " elements");
      if (next.empty()) break;
      W_.sort_length_lex(next);
      layers.push_back(std::move(next));
    }
    return layers;
  }

  std::vector<WeylElement> ball(int r) const {
    std::vector<WeylElement> out;
    for (auto& layer : ball_layers(r))
      for (auto& g : layer) out.push_back(g);
    return out;
  }

 private:
  explicit RelativeCoxeterSystem(const WeylGroup& W) : W_(W) {}

  void require_member(const WeylElement& g) const {
    if (!contains(g)) throw NotInRelativeGroup("element does not lie in W~");
  }

  void diagnose_degenerate() {
    // With S~ empty, W~ should be trivial; look for counterexamples nearby.
    std::int64_t radius = W_.is_affine() ? 6 : 64;
    for (const auto& g : W_.enumerate_ball(radius)) {
      if (g == W_.identity()) continue;
      if (contains(g)) {
        diagnostic_ = "S~ is empty but W~ contains the element " + word_string(W_.reduced_word(g).letters);
        return;
      }
    }
  }

  WeylGroup W_;
  ParabolicSubset base_;
  GenSet complement_;
  std::vector<RelativeSimple> simples_;
  std::vector<std::vector<int>> coxeter_;
  int order_cap_ = 12;
  std::string diagnostic_;
};

/// Elements of N(Sigma, Sigma') inside the ball of radius `radius` of W.
inline std::vector<WeylElement> normalizer_pairs(const WeylGroup& W, GenSet sigma, GenSet sigma_prime,
                                                 std::int64_t radius) {
  std::vector<WeylElement> out;
  for (const auto& y : W.enumerate_ball(radius)) {
    bool ok = true;
    for (int s : sigma.indices())
      if (W.is_right_descent(y, s)) ok = false;
    for (int s : sigma_prime.indices())
      if (W.is_left_descent(y, s)) ok = false;
    if (ok && conjugates_onto(W, y, sigma, sigma_prime)) out.push_back(y);
  }
  return out;
}

inline bool in_normalizer_pair(const WeylGroup& W, const WeylElement& y, GenSet sigma, GenSet sigma_prime) {
  for (int s : sigma.indices())
    if (W.is_right_descent(y, s)) return false;
  for (int s : sigma_prime.indices())
    if (W.is_left_descent(y, s)) return false;
  return conjugates_onto(W, y, sigma, sigma_prime);
}

/// Splits y in N(Sigma, Sigma') into elementary moves y = y_{q-1} ... y_1,
/// returned in the order y_1, ..., y_{q-1}.
inline std::vector<LienMove> lien_decompose(const WeylGroup& W, const WeylElement& y, GenSet sigma,
                                            GenSet sigma_prime) {
  if (!W.is_parabolic_finite(sigma) || !W.is_parabolic_finite(sigma_prime))
    throw NotFinite("both parabolic subgroups must be finite");
  if (!in_normalizer_pair(W, y, sigma, sigma_prime))
    throw NotANormalizerElement("element is not in N(" + to_string(sigma) + "," + to_string(sigma_prime) + ")");
  std::vector<LienMove> moves;
  WeylElement cur = y;
  GenSet target = sigma_prime;
  std::vector<LienMove> reversed;
  while (!(cur == W.identity())) {
    int s = W.left_descents(cur).lowest();
    if (s < 0) throw NotANormalizerElement("length-zero element left over");
    GenSet K = target.with(s);
    if (!W.is_parabolic_finite(K)) throw Error("over-parabolic is infinite during decomposition");
    WeylElement u = W.multiply(W.longest_element(K), W.longest_element(target));
    GenSet next;
    for (int t : target.indices()) {
      AffineRoot b = W.act(u, W.simple_root(t));
      int found = -1;
      for (int j : K.indices())
        if (W.simple_root(j) == b) found = j;
      if (found < 0) throw Error("conjugation does not map Sigma' onto simple reflections");
      next.insert(found);
    }
    GenSet leftover = K.minus(next);
    LienMove mv;
    mv.from = next;
    mv.to = target;
    mv.s = leftover.lowest();
    mv.element = W.inverse(u);
    reversed.push_back(mv);
    cur = W.multiply(u, cur);
    target = next;
  }
  if (!(target == sigma)) throw Error("decomposition did not end at Sigma");
  moves.assign(reversed.rbegin(), reversed.rend());
  return moves;
}

}  // namespace daha
