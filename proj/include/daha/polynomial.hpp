#pragma once

// Sparse multivariate polynomials with exact rational coefficients.

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "daha/errors.hpp"
#include "daha/rational.hpp"
#include "daha/root_system.hpp"

namespace daha {

using Exponents = std::vector<int>;

class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(int nvars) : n_(nvars) {}

  static Polynomial constant(int nvars, const Rational& c) {
    Polynomial p(nvars);
    if (c != 0) p.terms_[Exponents(nvars, 0)] = c;
    return p;
  }
  static Polynomial variable(int nvars, int i) {
    Polynomial p(nvars);
    Exponents e(nvars, 0);
    e[i] = 1;
    p.terms_[e] = 1;
    return p;
  }
  /// sum gradient_i x_i + constant
  static Polynomial affine(const AffineFunction& f) {
    const int n = static_cast<int>(f.gradient.size());
    Polynomial p = constant(n, f.constant);
    for (int i = 0; i < n; ++i)
      if (f.gradient[i] != 0) p.add_term(unit(n, i), f.gradient[i]);
    return p;
  }
  static Exponents unit(int nvars, int i) {
    Exponents e(nvars, 0);
    e[i] = 1;
    return e;
  }

  int nvars() const { return n_; }
  const std::map<Exponents, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) {
      int s = 0;
      for (int k : e) s += k;
      d = std::max(d, s);
    }
    return d;
  }
  Rational coefficient(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  void add_term(const Exponents& e, const Rational& c) {
    if (c == 0) return;
    auto [it, fresh] = terms_.emplace(e, c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Polynomial& operator+=(const Polynomial& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  Polynomial operator+(const Polynomial& o) const {
    Polynomial r = *this;
    return r += o;
  }
  Polynomial operator-(const Polynomial& o) const {
    Polynomial r = *this;
    return r -= o;
  }
  Polynomial operator-() const { return scaled(Rational(-1)); }
  Polynomial scaled(const Rational& k) const {
    Polynomial r(n_);
    if (k == 0) return r;
    for (const auto& [e, c] : terms_) r.terms_[e] = c * k;
    return r;
  }
  Polynomial operator*(const Polynomial& o) const {
    Polynomial r(n_);
    for (const auto& [e1, c1] : terms_)
      for (const auto& [e2, c2] : o.terms_) {
        Exponents e(n_);
        for (int i = 0; i < n_; ++i) e[i] = e1[i] + e2[i];
        r.add_term(e, c1 * c2);
      }
    return r;
  }
  Polynomial pow(int k) const {
    Polynomial r = constant(n_, 1);
    for (int i = 0; i < k; ++i) r = r * *this;
    return r;
  }
  bool operator==(const Polynomial& o) const { return terms_ == o.terms_; }
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  Rational evaluate(const QVec& x) const {
    Rational v = 0;
    for (const auto& [e, c] : terms_) {
      Rational t = c;
      for (int i = 0; i < n_; ++i)
        for (int k = 0; k < e[i]; ++k) t *= x[i];
      v += t;
    }
    return v;
  }

  /// The polynomial with x_i replaced by images[i].
  Polynomial substitute(const std::vector<Polynomial>& images) const {
    Polynomial r(n_);
    std::vector<std::vector<Polynomial>> powers(n_);
    for (int i = 0; i < n_; ++i) powers[i].push_back(constant(n_, 1));
    for (const auto& [e, c] : terms_) {
      Polynomial t = constant(n_, c);
      for (int i = 0; i < n_; ++i) {
        while (static_cast<int>(powers[i].size()) <= e[i]) powers[i].push_back(powers[i].back() * images[i]);
        if (e[i]) t = t * powers[i][e[i]];
      }
      r += t;
    }
    return r;
  }

  /// Exact quotient by a non-constant polynomial of degree one.
  Polynomial divide_linear(const Polynomial& a) const {
    if (a.degree() != 1) throw DivisionNotExact("divisor is not of degree one");
    int k = -1;
    Rational lead;
    for (int i = 0; i < n_ && k < 0; ++i) {
      Rational c = a.coefficient(unit(n_, i));
      if (c != 0) {
        k = i;
        lead = c;
      }
    }
    Polynomial q(n_), r = *this;
    for (;;) {
      // the remaining term of highest x_k degree
      const Exponents* top = nullptr;
      for (const auto& [e, c] : r.terms_)
        if (e[k] > 0 && (!top || e[k] > (*top)[k])) top = &e;
      if (!top) break;
      Exponents e = *top;
      Rational c = r.coefficient(e) / lead;
      e[k] -= 1;
      Polynomial m(n_);
      m.add_term(e, c);
      q += m;
      r -= m * a;
    }
    if (!r.is_zero()) throw DivisionNotExact("nonzero remainder " + r.to_string() + " dividing by " + a.to_string());
    return q;
  }

  /// Terms by decreasing total degree, then decreasing exponents.
  std::vector<std::pair<Exponents, Rational>> ordered_terms() const {
    std::vector<std::pair<Exponents, Rational>> v(terms_.begin(), terms_.end());
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) {
      int da = 0, db = 0;
      for (int x : a.first) da += x;
      for (int x : b.first) db += x;
      if (da != db) return da > db;
      return a.first > b.first;
    });
    return v;
  }

  static std::string monomial_string(const Exponents& e) {
    std::string s;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (!e[i]) continue;
      if (!s.empty()) s += "*";
      s += "x" + std::to_string(i + 1);
      if (e[i] > 1) s += "^" + std::to_string(e[i]);
    }
    return s;
  }

  static std::string coefficient_string(const Rational& c) {
    if (c > 0 && c.get_den() == 1) return c.get_str();
    return "(" + c.get_str() + ")";
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [e, c] : ordered_terms()) {
      if (!out.empty()) out += " + ";
      auto mono = monomial_string(e);
      if (mono.empty()) out += coefficient_string(c);
      else if (c == 1) out += mono;
      else out += coefficient_string(c) + "*" + mono;
    }
    return out;
  }

 private:
  int n_ = 0;
  std::map<Exponents, Rational> terms_;
};

}  // namespace daha
