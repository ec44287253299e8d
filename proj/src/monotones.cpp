#include "thermo/monotones.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace thermo {

namespace {

constexpr double kAlphaEps = 1e-9;

}  // namespace

double shannon_entropy(const PopulationVector& p) {
  double s = 0.0;
  for (double x : p.probs) {
    if (x > 0.0) s -= x * std::log(x);
  }
  return s;
}

double renyi_divergence(const PopulationVector& p, const PopulationVector& tau,
                        double alpha) {
  if (p.dim() != tau.dim()) throw std::invalid_argument("dimension mismatch");
  for (double t : tau.probs) {
    if (t <= 0.0) throw std::invalid_argument("reference state must have full support");
  }
  if (std::abs(alpha - 1.0) < kAlphaEps) {
    double s = 0.0;
    for (int i = 0; i < p.dim(); ++i) {
      const double x = p.probs[i];
      if (x > 0.0) s += x * std::log(x / tau.probs[i]);
    }
    return s;
  }
  if (std::abs(alpha) < kAlphaEps) {
    double supp = 0.0;
    for (int i = 0; i < p.dim(); ++i) {
      if (p.probs[i] > 0.0) supp += tau.probs[i];
    }
    return -std::log(supp);
  }
  double s = 0.0;
  for (int i = 0; i < p.dim(); ++i) {
    const double x = p.probs[i];
    if (x > 0.0) {
      s += std::pow(x, alpha) * std::pow(tau.probs[i], 1.0 - alpha);
    } else if (alpha < 0.0) {
      // 0^alpha diverges; the divergence is +inf by convention.
      return std::numeric_limits<double>::infinity();
    }
  }
  const double sgn = alpha > 0.0 ? 1.0 : -1.0;
  return sgn / (alpha - 1.0) * std::log(s);
}

double free_energy_alpha(const PopulationVector& p, const GibbsContext& ctx,
                         double alpha) {
  return renyi_divergence(p, ctx.gibbs(), alpha) - ctx.partition_log();
}

double nonequilibrium_free_energy(const PopulationVector& p, const GibbsContext& ctx) {
  return free_energy_alpha(p, ctx, 1.0);
}

PopulationVector system_marginal(const PopulationVector& joint, int d_sys, int d_cat) {
  if (joint.dim() != d_sys * d_cat) throw std::invalid_argument("joint dimension mismatch");
  Vec m(d_sys, 0.0);
  for (int a = 0; a < d_sys; ++a) {
    for (int b = 0; b < d_cat; ++b) m[a] += joint.probs[a * d_cat + b];
  }
  return PopulationVector(std::move(m));
}

PopulationVector catalyst_marginal(const PopulationVector& joint, int d_sys, int d_cat) {
  if (joint.dim() != d_sys * d_cat) throw std::invalid_argument("joint dimension mismatch");
  Vec m(d_cat, 0.0);
  for (int a = 0; a < d_sys; ++a) {
    for (int b = 0; b < d_cat; ++b) m[b] += joint.probs[a * d_cat + b];
  }
  return PopulationVector(std::move(m));
}

double mutual_information(const PopulationVector& joint, int d_sys, int d_cat) {
  const PopulationVector ms = system_marginal(joint, d_sys, d_cat);
  const PopulationVector mc = catalyst_marginal(joint, d_sys, d_cat);
  return shannon_entropy(ms) + shannon_entropy(mc) - shannon_entropy(joint);
}

MonotoneReport monotone_report(const PopulationVector& p, const GibbsContext& ctx,
                               Vec alpha_grid) {
  MonotoneReport r;
  r.alpha_grid = std::move(alpha_grid);
  r.values.reserve(r.alpha_grid.size());
  for (double a : r.alpha_grid) r.values.push_back(free_energy_alpha(p, ctx, a));
  r.f1 = nonequilibrium_free_energy(p, ctx);
  return r;
}

}  // namespace thermo
