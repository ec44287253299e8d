#pragma once

#include <random>

#include "thermo/core.hpp"

namespace thermo {

/// Uniform draw from the probability simplex (symmetric Dirichlet, all
/// parameters 1), via normalized exponentials.
PopulationVector random_simplex_state(int d, std::mt19937_64& rng);

/// Energies i.i.d. uniform in [0,1], sorted ascending.
Hamiltonian random_hamiltonian(int d, std::mt19937_64& rng);

}  // namespace thermo
