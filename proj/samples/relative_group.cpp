// Relative Coxeter system of Sigma = {1} in affine C2: its simple
// reflections as words in W, the Coxeter matrix, and the first spheres.

#include <iostream>

#include "daha/relative.hpp"

using namespace daha;

int main() {
  WeylGroup W = WeylGroup::affine(make_affine(RootType::C, 2));
  GenSet sigma = GenSet::of({1});
  auto cert = check_admissible(W, sigma);
  std::cout << "Sigma " << to_string(sigma) << (cert.admissible ? " is" : " is not") << " admissible\n";
  if (!cert.admissible) return 1;

  auto R = RelativeCoxeterSystem::build(W, sigma);
  for (std::size_t k = 0; k < R.simples().size(); ++k) {
    const auto& s = R.simples()[k];
    std::cout << "simple " << k << " from s" << s.s << ": word " << word_string(s.word) << ", length " << s.length
              << "\n";
  }
  std::cout << "Coxeter matrix (0 = infinite):\n";
  for (const auto& row : R.coxeter_matrix()) {
    for (int m : row) std::cout << " " << m;
    std::cout << "\n";
  }
  auto layers = R.ball_layers(4);
  for (std::size_t d = 0; d < layers.size(); ++d)
    std::cout << "relative length " << d << ": " << layers[d].size() << " elements\n";
}
