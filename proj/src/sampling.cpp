#include "thermo/sampling.hpp"

#include <algorithm>

namespace thermo {

PopulationVector random_simplex_state(int d, std::mt19937_64& rng) {
  std::exponential_distribution<double> exp1(1.0);
  Vec p(d);
  double s = 0.0;
  for (double& x : p) {
    x = exp1(rng);
    s += x;
  }
  for (double& x : p) x /= s;
  return PopulationVector(std::move(p));
}

Hamiltonian random_hamiltonian(int d, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  Vec e(d);
  for (double& x : e) x = uni(rng);
  std::sort(e.begin(), e.end());
  return Hamiltonian(std::move(e));
}

}  // namespace thermo
