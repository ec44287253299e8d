#include "thermo/core.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace thermo {

Hamiltonian::Hamiltonian(Vec beta_energies) : energies(std::move(beta_energies)) {
  if (energies.size() < 2) {
    throw std::invalid_argument("Hamiltonian needs at least two levels");
  }
  for (double e : energies) {
    if (!std::isfinite(e)) {
      throw std::invalid_argument("Hamiltonian energies must be finite");
    }
  }
}

Hamiltonian Hamiltonian::canonicalized() const {
  Vec sorted = energies;
  std::sort(sorted.begin(), sorted.end());
  return Hamiltonian(std::move(sorted));
}

PopulationVector::PopulationVector(Vec p) : probs(std::move(p)) {
  if (probs.empty()) {
    throw std::invalid_argument("empty population vector");
  }
  double total = 0.0;
  for (double& x : probs) {
    if (x < 0.0) {
      if (x < -tol::neg) {
        throw std::invalid_argument("negative population " + std::to_string(x));
      }
      x = 0.0;
    }
    total += x;
  }
  if (std::abs(total - 1.0) > 1e3 * tol::sum) {
    throw std::invalid_argument("population vector not normalized: sum = " +
                                std::to_string(total));
  }
}

GibbsContext::GibbsContext(Hamiltonian h)
    : hamiltonian_(std::move(h)), gibbs_(gibbs_state(hamiltonian_)) {
  const int d = hamiltonian_.dim();
  // log Z with the max-shift trick so large beta*E stay finite.
  const double emin = *std::min_element(hamiltonian_.energies.begin(),
                                        hamiltonian_.energies.end());
  double z = 0.0;
  for (double e : hamiltonian_.energies) z += std::exp(-(e - emin));
  partition_log_ = std::log(z) - emin;

  delta_.assign(d, Vec(d, 1.0));
  for (int j = 0; j < d; ++j) {
    for (int k = 0; k < d; ++k) {
      delta_[j][k] = std::exp(hamiltonian_.energies[j] - hamiltonian_.energies[k]);
    }
  }
}

PopulationVector gibbs_state(const Hamiltonian& h) {
  const double emin = *std::min_element(h.energies.begin(), h.energies.end());
  Vec tau(h.energies.size());
  double z = 0.0;
  for (size_t i = 0; i < tau.size(); ++i) {
    tau[i] = std::exp(-(h.energies[i] - emin));
    z += tau[i];
  }
  for (double& t : tau) t /= z;
  return PopulationVector(std::move(tau));
}

Vec slopes(const PopulationVector& p, const GibbsContext& ctx) {
  if (p.dim() != ctx.dim()) {
    throw std::invalid_argument("dimension mismatch in slopes");
  }
  Vec g(p.probs.size());
  for (size_t i = 0; i < g.size(); ++i) {
    g[i] = p.probs[i] / ctx.gibbs().probs[i];
  }
  return g;
}

namespace {

bool slopes_tied(double a, double b) {
  return std::abs(a - b) <= tol::slope * std::max(1.0, std::max(std::abs(a), std::abs(b)));
}

}  // namespace

BetaOrder beta_order(const PopulationVector& p, const GibbsContext& ctx) {
  const Vec g = slopes(p, ctx);
  const int d = p.dim();
  std::vector<int> idx(d);
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(),
                   [&](int a, int b) { return g[a] > g[b]; });
  // Group adjacent entries whose slopes chain within tolerance, then make
  // each group canonical by ascending level index.
  int start = 0;
  while (start < d) {
    int end = start + 1;
    while (end < d && slopes_tied(g[idx[end - 1]], g[idx[end]])) ++end;
    std::sort(idx.begin() + start, idx.begin() + end);
    start = end;
  }
  BetaOrder order;
  order.perm.resize(d);
  for (int i = 0; i < d; ++i) order.perm[i] = idx[i] + 1;
  return order;
}

bool has_degenerate_slopes(const PopulationVector& p, const GibbsContext& ctx) {
  const Vec g = slopes(p, ctx);
  Vec sorted = g;
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  for (size_t i = 0; i + 1 < sorted.size(); ++i) {
    if (slopes_tied(sorted[i], sorted[i + 1])) return true;
  }
  return false;
}

double linf_distance(const Vec& a, const Vec& b) {
  double m = 0.0;
  for (size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

}  // namespace thermo
