#pragma once

// Exact rational scalars, vectors and the small amount of dense linear
// algebra over Q the rest of the library needs.

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "daha/errors.hpp"

namespace daha {

using Rational = mpq_class;
using QVec = std::vector<Rational>;
using QMat = std::vector<QVec>;
using ZVec = std::vector<std::int64_t>;
using ZMat = std::vector<ZVec>;

inline Rational make_rational(std::int64_t num, std::int64_t den = 1) {
  if (den == 0) throw ParseError("zero denominator");
  Rational q(static_cast<long>(num), 1L);
  if (den != 1) {
    q /= Rational(static_cast<long>(den));
  }
  return q;
}

/// "p/q", or "p" when the denominator is one.
inline std::string to_string(const Rational& q) { return q.get_str(); }

inline Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto trim = [](std::string& v) {
    while (!v.empty() && (v.back() == ' ' || v.back() == '\t')) v.pop_back();
    std::size_t i = 0;
    while (i < v.size() && (v[i] == ' ' || v[i] == '\t')) ++i;
    v.erase(0, i);
  };
  trim(s);
  if (s.empty()) throw ParseError("empty rational literal");
  if (s.front() == '+') s.erase(0, 1);
  for (std::size_t i = 0; i < s.size(); ++i) {
    char c = s[i];
    bool ok = (c >= '0' && c <= '9') || c == '/' || (c == '-' && i == 0);
    if (!ok) throw ParseError("bad rational literal '" + std::string(text) + "'");
  }
  auto slash = s.find('/');
  if (slash != std::string::npos) {
    std::string den = s.substr(slash + 1);
    if (den.empty() || den.find_first_not_of('0') == std::string::npos)
      throw ParseError("bad denominator in '" + std::string(text) + "'");
    if (den.front() == '-') throw ParseError("negative denominator in '" + std::string(text) + "'");
  }
  Rational q;
  if (q.set_str(s, 10) != 0) throw ParseError("bad rational literal '" + std::string(text) + "'");
  q.canonicalize();
  return q;
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

inline std::int64_t to_int64(const Rational& q) {
  if (!is_integer(q) || !q.get_num().fits_slong_p())
    throw Error("rational " + to_string(q) + " is not a machine integer");
  return q.get_num().get_si();
}

inline QVec to_qvec(const ZVec& v) {
  QVec out;
  out.reserve(v.size());
  for (auto x : v) out.emplace_back(static_cast<long>(x));
  return out;
}

inline Rational dot(const QVec& a, const QVec& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline QVec mat_vec(const QMat& m, const QVec& v) {
  QVec out(m.size(), Rational(0));
  for (std::size_t i = 0; i < m.size(); ++i) out[i] = dot(m[i], v);
  return out;
}

inline QMat mat_mul(const QMat& a, const QMat& b) {
  const std::size_t n = a.size(), k = b.size(), p = b.empty() ? 0 : b[0].size();
  QMat out(n, QVec(p, Rational(0)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < k; ++l) {
      if (a[i][l] == 0) continue;
      for (std::size_t j = 0; j < p; ++j) out[i][j] += a[i][l] * b[l][j];
    }
  return out;
}

inline QMat transpose(const QMat& a) {
  if (a.empty()) return {};
  QMat out(a[0].size(), QVec(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[i].size(); ++j) out[j][i] = a[i][j];
  return out;
}

inline QMat identity_matrix(std::size_t n) {
  QMat out(n, QVec(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) out[i][i] = 1;
  return out;
}

/// Reduced row echelon form in place; returns the pivot columns.
/// Rows that become zero are removed.
inline std::vector<std::size_t> rref(QMat& m, std::size_t ncols_to_pivot) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < ncols_to_pivot && row < m.size(); ++col) {
    std::size_t sel = row;
    while (sel < m.size() && m[sel][col] == 0) ++sel;
    if (sel == m.size()) continue;
    std::swap(m[row], m[sel]);
    Rational lead = m[row][col];
    for (auto& x : m[row]) x /= lead;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][col] == 0) continue;
      Rational f = m[r][col];
      for (std::size_t c = 0; c < m[r].size(); ++c) m[r][c] -= f * m[row][c];
    }
    pivots.push_back(col);
    ++row;
  }
  m.resize(row);
  return pivots;
}

inline std::size_t rank_of(QMat m) {
  if (m.empty()) return 0;
  return rref(m, m[0].size()).size();
}

/// Basis of {x : m x = 0}.
inline QMat kernel(const QMat& m, std::size_t ncols) {
  QMat r = m;
  auto pivots = rref(r, ncols);
  std::vector<bool> is_pivot(ncols, false);
  for (auto p : pivots) is_pivot[p] = true;
  QMat basis;
  for (std::size_t free = 0; free < ncols; ++free) {
    if (is_pivot[free]) continue;
    QVec v(ncols, Rational(0));
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -r[i][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

inline QMat inverse(const QMat& a) {
  const std::size_t n = a.size();
  QMat aug(n, QVec(2 * n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug[i][j] = a[i][j];
    aug[i][n + i] = 1;
  }
  auto piv = rref(aug, n);
  if (piv.size() != n) throw Error("matrix is singular");
  QMat out(n, QVec(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out[i][j] = aug[i][n + j];
  return out;
}

inline Rational determinant(QMat a) {
  const std::size_t n = a.size();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(a[p], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      if (a[r][c] == 0) continue;
      Rational f = a[r][c] / a[c][c];
      for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
    }
  }
  return det;
}

/// Sylvester's criterion on leading principal minors.
inline bool is_positive_definite(const QMat& g) {
  for (std::size_t k = 1; k <= g.size(); ++k) {
    QMat minor(k, QVec(k));
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) minor[i][j] = g[i][j];
    if (determinant(minor) <= 0) return false;
  }
  return true;
}

inline std::string to_string(const QVec& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += to_string(v[i]);
  }
  return s + "]";
}

inline std::string to_string(const ZVec& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s + "]";
}

/// Parses "1/2,0,3" (commas or whitespace separated).
inline QVec parse_qvec(std::string_view text) {
  QVec out;
  std::string cur;
  auto flush = [&] {
    if (!cur.empty()) out.push_back(parse_rational(cur));
    cur.clear();
  };
  for (char c : text) {
    if (c == ',' || c == ' ' || c == '[' || c == ']' || c == '"') {
      flush();
    } else {
      cur += c;
    }
  }
  flush();
  return out;
}

}  // namespace daha
