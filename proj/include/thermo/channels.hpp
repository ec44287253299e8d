#pragma once

#include <set>
#include <vector>

#include "thermo/core.hpp"

namespace thermo {

/// One two-level thermal operation: levels (j,k), mixing parameter lam.
/// lam = 1 is a beta-swap. Levels are 1-indexed and may be given in any
/// order; construction enforces the low-energy-first convention.
struct SwapStep {
  int j;
  int k;
  double lam;

  bool operator==(const SwapStep&) const = default;
};

/// Ordered list of steps, applied left-to-right (steps[0] first).
struct SwapSeries {
  std::vector<SwapStep> steps;

  int length() const { return static_cast<int>(steps.size()); }
  bool operator==(const SwapSeries&) const = default;
};

/// Dense column-stochastic Gibbs-preserving matrix.
struct StochasticChannel {
  Mat matrix;  // matrix[row][col]

  int dim() const { return static_cast<int>(matrix.size()); }
};

StochasticChannel identity_channel(int d);

/// M_lam^{(j,k)}: identity outside {j,k}, block [[1-lam*D, lam],[lam*D, 1-lam]]
/// on the pair reordered so the first level has the lower energy.
StochasticChannel partial_swap(int j, int k, double lam, const GibbsContext& ctx);

/// The lam = 1 extremal case.
StochasticChannel beta_swap(int j, int k, const GibbsContext& ctx);

StochasticChannel compose(const StochasticChannel& later, const StochasticChannel& first);

PopulationVector apply(const StochasticChannel& ch, const PopulationVector& p);

/// Apply a single step without materializing the full matrix.
PopulationVector apply_step(const SwapStep& step, const PopulationVector& p,
                            const GibbsContext& ctx);

PopulationVector apply_series(const SwapSeries& s, const PopulationVector& p,
                              const GibbsContext& ctx);

StochasticChannel series_channel(const SwapSeries& s, const GibbsContext& ctx);

/// True iff the step swaps two levels adjacent in beta_order(p).
bool is_neighbouring(const SwapStep& step, const PopulationVector& p,
                     const GibbsContext& ctx);

/// Mix the populations of `levels` toward their conditional Gibbs weights;
/// mass over the subset is conserved, other levels untouched.
PopulationVector partial_level_thermalization(const std::set<int>& levels, double lam,
                                              const PopulationVector& p,
                                              const GibbsContext& ctx);

/// No-repetition all-neighbouring beta-swap series taking any state of order
/// pi_from to one of order pi_to, built block by block.
SwapSeries standard_formation(const BetaOrder& pi_from, const BetaOrder& pi_to);

struct TrajectorySample {
  double t;  // g*t, in [0, pi/2]
  PopulationVector state;
};

/// Continuous reduced dynamics of a single beta-swap under the resonant
/// Jaynes-Cummings coupling: lam(t) = sin^2(g t), g fixed to 1.
std::vector<TrajectorySample> jc_trajectory(const PopulationVector& p, int j, int k,
                                            const GibbsContext& ctx, int samples);

}  // namespace thermo
