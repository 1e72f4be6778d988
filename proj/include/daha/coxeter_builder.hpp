#pragma once

// Builds a Coxeter group from its Coxeter matrix alone, through the integral
// Kac-Moody representation: a generalized Cartan matrix A whose products
// a_ij a_ji realise the orders, acting by s_i(e_j) = e_j - a_ij e_i. The
// Weyl group of A is the Coxeter group of the matrix, so BFS over integer
// matrices gives its ball sizes without using any root-system code.

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "daha/errors.hpp"

namespace daha {

class CoxeterBuilder {
 public:
  /// m[i][j] with m[i][i] = 1 and 0 encoding infinity.
  explicit CoxeterBuilder(const std::vector<std::vector<int>>& m) : k_(static_cast<int>(m.size())) {
    a_.assign(k_, std::vector<std::int64_t>(k_, 0));
    for (int i = 0; i < k_; ++i) {
      a_[i][i] = 2;
      for (int j = i + 1; j < k_; ++j) {
        if (m[i][j] != m[j][i]) throw InvalidParameters("Coxeter matrix is not symmetric");
        std::int64_t x = 0, y = 0;
        switch (m[i][j]) {
          case 2: break;
          case 3: x = -1; y = -1; break;
          case 4: x = -1; y = -2; break;
          case 6: x = -1; y = -3; break;
          case 0: x = -2; y = -2; break;
          default:
            throw InvalidParameters("order " + std::to_string(m[i][j]) + " has no integral realisation");
        }
        a_[i][j] = x;
        a_[j][i] = y;
      }
    }
  }

  /// Number of elements of word length exactly d, for d = 0..radius.
  std::vector<std::size_t> sphere_sizes(int radius) const {
    using Mat = std::vector<std::int64_t>;
    auto gen = [&](int i) {
      Mat g(k_ * k_, 0);
      for (int j = 0; j < k_; ++j) g[j * k_ + j] = 1;
      for (int j = 0; j < k_; ++j) g[i * k_ + j] -= a_[i][j];  // column j is the image of e_j
      return g;
    };
    std::vector<Mat> gens;
    for (int i = 0; i < k_; ++i) gens.push_back(gen(i));
    auto mul = [&](const Mat& x, const Mat& y) {
      Mat z(k_ * k_, 0);
      for (int i = 0; i < k_; ++i)
        for (int l = 0; l < k_; ++l)
          if (x[i * k_ + l])
            for (int j = 0; j < k_; ++j) z[i * k_ + j] += x[i * k_ + l] * y[l * k_ + j];
      return z;
    };
    Mat id(k_ * k_, 0);
    for (int j = 0; j < k_; ++j) id[j * k_ + j] = 1;
    std::set<Mat> seen{id};
    std::vector<Mat> layer{id};
    std::vector<std::size_t> sizes{1};
    for (int d = 0; d < radius; ++d) {
      std::vector<Mat> next;
      for (const auto& g : layer)
        for (const auto& s : gens) {
          Mat h = mul(g, s);
          if (seen.insert(h).second) next.push_back(h);
        }
      sizes.push_back(next.size());
      layer = std::move(next);
    }
    return sizes;
  }

  const std::vector<std::vector<std::int64_t>>& cartan() const { return a_; }

 private:
  int k_;
  std::vector<std::vector<std::int64_t>> a_;
};

}  // namespace daha
