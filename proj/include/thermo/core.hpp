#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "thermo/tolerances.hpp"

namespace thermo {

using Vec = std::vector<double>;
using Mat = std::vector<std::vector<double>>;

/// Energy levels stored pre-multiplied by the inverse temperature, so a
/// Hamiltonian is just the dimensionless vector (beta*E_1, ..., beta*E_d).
struct Hamiltonian {
  Vec energies;

  explicit Hamiltonian(Vec beta_energies);

  int dim() const { return static_cast<int>(energies.size()); }

  /// Same spectrum sorted ascending.
  Hamiltonian canonicalized() const;
};

/// A point in the probability simplex V^d. Entries in [-tol::neg, 0) are
/// clamped to zero on construction; anything worse is rejected.
struct PopulationVector {
  Vec probs;

  explicit PopulationVector(Vec p);

  int dim() const { return static_cast<int>(probs.size()); }
  double operator[](int level) const { return probs[level - 1]; }  // 1-indexed
};

/// Permutation of level labels (1..d) sorting slopes non-increasingly.
struct BetaOrder {
  std::vector<int> perm;

  int dim() const { return static_cast<int>(perm.size()); }
  bool operator==(const BetaOrder&) const = default;
};

/// Hamiltonian plus everything derived from it: the Gibbs vector, the
/// Boltzmann-ratio table Delta_{jk} = exp(E_j - E_k) = tau_k / tau_j, and
/// log Z. Immutable after construction.
class GibbsContext {
 public:
  explicit GibbsContext(Hamiltonian h);

  int dim() const { return hamiltonian_.dim(); }
  const Hamiltonian& hamiltonian() const { return hamiltonian_; }
  const PopulationVector& gibbs() const { return gibbs_; }
  double partition_log() const { return partition_log_; }

  /// Boltzmann ratio for 1-indexed levels: delta(j,k) = exp(E_j - E_k).
  double delta(int j, int k) const { return delta_[j - 1][k - 1]; }
  double tau(int level) const { return gibbs_.probs[level - 1]; }
  double energy(int level) const { return hamiltonian_.energies[level - 1]; }

 private:
  Hamiltonian hamiltonian_;
  PopulationVector gibbs_;
  Mat delta_;
  double partition_log_;
};

/// tau_i proportional to exp(-E_i), normalized.
PopulationVector gibbs_state(const Hamiltonian& h);

/// Element-wise ratios g_i = p_i / tau_i.
Vec slopes(const PopulationVector& p, const GibbsContext& ctx);

/// Canonical beta-order: slopes descending, ties (relative tol::slope)
/// broken by ascending level index.
BetaOrder beta_order(const PopulationVector& p, const GibbsContext& ctx);

/// True if the canonical order is ambiguous, i.e. some adjacent slopes are
/// degenerate within tolerance (degeneracy-sensitivity warning hook).
bool has_degenerate_slopes(const PopulationVector& p, const GibbsContext& ctx);

double linf_distance(const Vec& a, const Vec& b);

}  // namespace thermo
