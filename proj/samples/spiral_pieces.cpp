// The spiral of a facet in affine G2 graded by theta = (1, 0), m = 2:
// which root spaces lie in P_n, L_n and U_n for small n.

#include <iostream>

#include "daha/spiral.hpp"

using namespace daha;

int main() {
  GradedRootDatum g(make_affine(RootType::G, 2), QVec{Rational(1), Rational(0)}, 2, 1);
  CoxeterComplex C(WeylGroup::affine(g.system_ptr()));
  auto f = C.fundamental(GenSet::of({0}));
  auto fs = spiral_from_facet(g, C, f);
  std::cout << "facet of type " << to_string(f.type) << ", lambda " << to_string(fs.spiral.lambda())
            << (fs.independent ? ", independent of the sample point\n" : ", depends on the sample point\n");
  for (std::int64_t n = -2; n <= 2; ++n) {
    std::cout << "n = " << n << ":";
    for (const auto& x : g.spaces()) {
      if (!fs.spiral.in_P(x, n)) continue;
      std::cout << " " << to_string(x) << (fs.spiral.in_L(x, n) ? "(L)" : "(U)");
    }
    std::cout << "\n";
  }
}
