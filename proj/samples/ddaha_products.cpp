// Products in the degenerate DAHA of affine A1 with c = 2, m = 2, d = 1,
// so h = 1/2, and the weights of a standard module at a wall.

#include <iostream>

#include "daha/ddaha.hpp"

using namespace daha;

int main() {
  WeylGroup W = WeylGroup::affine(make_affine(RootType::A, 1));
  DDAHA A(affine_model(W), HeckeParameters::uniform(2, 2, 1));

  for (const char* text : {"x1*s1", "x1*s1 - s1*x1", "s1*s0*x1^2", "(s0*s1)^2 * x1"})
    std::cout << text << " = " << A.to_string(A.parse(text)) << "\n";

  auto r = A.verify_relations(4);
  std::cout << r.checks << " relation checks, " << r.failures.size() << " failures\n";

  // x1 = 0 lies on the wall of s1, so e and s1 share a weight.
  auto M = A.standard_module(QVec{Rational(0)}, 2);
  for (const auto& w : M.weights)
    std::cout << "weight " << to_string(w.weight) << " dim " << w.dimension
              << (w.nilpotent_part ? " (not semisimple)" : "") << "\n";
}
