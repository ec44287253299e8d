#pragma once

#include <vector>

#include "thermo/core.hpp"

namespace thermo {

/// Shannon entropy in nats, 0 log 0 := 0.
double shannon_entropy(const PopulationVector& p);

/// Renyi divergence D_alpha(p || tau) = sgn(alpha)/(alpha-1) log sum p^a t^(1-a).
/// alpha near 1 takes the KL limit, alpha near 0 the -log sum_{p_i>0} tau_i
/// limit. tau must have full support. Can return +inf (e.g. alpha > 1 with
/// p outside supp tau never happens here since tau is full support, but
/// alpha = +large with zero p entries is fine).
double renyi_divergence(const PopulationVector& p, const PopulationVector& tau,
                        double alpha);

/// Dimensionless generalized free energy beta*F_alpha = D_alpha(p||tau) - log Z.
double free_energy_alpha(const PopulationVector& p, const GibbsContext& ctx,
                         double alpha);

/// alpha -> 1 specialization: beta*F = sum p_i (beta E_i) + sum p_i log p_i.
double nonequilibrium_free_energy(const PopulationVector& p, const GibbsContext& ctx);

/// I(S:C) of a joint population vector with flat index 2(a-1)+b style layout
/// (system index major). Non-negative up to rounding.
double mutual_information(const PopulationVector& joint, int d_sys, int d_cat);

/// Marginals of a joint vector, system index major.
PopulationVector system_marginal(const PopulationVector& joint, int d_sys, int d_cat);
PopulationVector catalyst_marginal(const PopulationVector& joint, int d_sys, int d_cat);

struct MonotoneReport {
  Vec alpha_grid;
  Vec values;  // beta*F_alpha per grid entry
  double f1;   // alpha -> 1 limit
};

/// Default grid {0, 0.5, 1, 2, 50}; the last entry stands in for alpha = inf.
MonotoneReport monotone_report(const PopulationVector& p, const GibbsContext& ctx,
                               Vec alpha_grid = {0.0, 0.5, 1.0, 2.0, 50.0});

}  // namespace thermo
