#include "thermo/channels.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace thermo {

namespace {

void check_levels(int j, int k, int d) {
  if (j < 1 || j > d || k < 1 || k > d) {
    throw std::invalid_argument("level index out of range");
  }
  if (j == k) {
    throw std::invalid_argument("swap levels must differ");
  }
}

// Low-energy-first pair convention; energy ties broken by index.
std::pair<int, int> ordered_pair(int j, int k, const GibbsContext& ctx) {
  const double ej = ctx.energy(j), ek = ctx.energy(k);
  if (ej < ek || (ej == ek && j < k)) return {j, k};
  return {k, j};
}

}  // namespace

StochasticChannel identity_channel(int d) {
  StochasticChannel ch;
  ch.matrix.assign(d, Vec(d, 0.0));
  for (int i = 0; i < d; ++i) ch.matrix[i][i] = 1.0;
  return ch;
}

StochasticChannel partial_swap(int j, int k, double lam, const GibbsContext& ctx) {
  check_levels(j, k, ctx.dim());
  if (lam < 0.0 || lam > 1.0) {
    throw std::invalid_argument("lam must lie in [0,1]");
  }
  auto [lo, hi] = ordered_pair(j, k, ctx);
  const double d = ctx.delta(lo, hi);  // <= 1
  StochasticChannel ch = identity_channel(ctx.dim());
  ch.matrix[lo - 1][lo - 1] = 1.0 - lam * d;
  ch.matrix[hi - 1][lo - 1] = lam * d;
  ch.matrix[lo - 1][hi - 1] = lam;
  ch.matrix[hi - 1][hi - 1] = 1.0 - lam;
  return ch;
}

StochasticChannel beta_swap(int j, int k, const GibbsContext& ctx) {
  return partial_swap(j, k, 1.0, ctx);
}

StochasticChannel compose(const StochasticChannel& later, const StochasticChannel& first) {
  const int d = later.dim();
  StochasticChannel out;
  out.matrix.assign(d, Vec(d, 0.0));
  for (int r = 0; r < d; ++r) {
    for (int m = 0; m < d; ++m) {
      const double a = later.matrix[r][m];
      if (a == 0.0) continue;
      for (int c = 0; c < d; ++c) {
        out.matrix[r][c] += a * first.matrix[m][c];
      }
    }
  }
  return out;
}

PopulationVector apply(const StochasticChannel& ch, const PopulationVector& p) {
  const int d = ch.dim();
  if (p.dim() != d) {
    throw std::invalid_argument("dimension mismatch in apply");
  }
  Vec q(d, 0.0);
  for (int r = 0; r < d; ++r) {
    for (int c = 0; c < d; ++c) {
      q[r] += ch.matrix[r][c] * p.probs[c];
    }
  }
  return PopulationVector(std::move(q));
}

PopulationVector apply_step(const SwapStep& step, const PopulationVector& p,
                            const GibbsContext& ctx) {
  check_levels(step.j, step.k, ctx.dim());
  auto [lo, hi] = ordered_pair(step.j, step.k, ctx);
  const double d = ctx.delta(lo, hi);
  const double lam = step.lam;
  Vec q = p.probs;
  const double plo = p.probs[lo - 1], phi = p.probs[hi - 1];
  q[lo - 1] = (1.0 - lam * d) * plo + lam * phi;
  q[hi - 1] = lam * d * plo + (1.0 - lam) * phi;
  return PopulationVector(std::move(q));
}

PopulationVector apply_series(const SwapSeries& s, const PopulationVector& p,
                              const GibbsContext& ctx) {
  PopulationVector cur = p;
  for (const SwapStep& step : s.steps) cur = apply_step(step, cur, ctx);
  return cur;
}

StochasticChannel series_channel(const SwapSeries& s, const GibbsContext& ctx) {
  StochasticChannel ch = identity_channel(ctx.dim());
  for (const SwapStep& step : s.steps) {
    ch = compose(partial_swap(step.j, step.k, step.lam, ctx), ch);
  }
  return ch;
}

bool is_neighbouring(const SwapStep& step, const PopulationVector& p,
                     const GibbsContext& ctx) {
  check_levels(step.j, step.k, ctx.dim());
  // With degenerate slopes the canonical order is one valid choice among
  // several; accept the pair as neighbouring if some valid order makes it
  // so, i.e. no third level has a slope strictly between the pair's.
  const Vec g = slopes(p, ctx);
  const double gj = g[step.j - 1], gk = g[step.k - 1];
  const double hi = std::max(gj, gk), lo = std::min(gj, gk);
  auto tied = [](double a, double b) {
    return std::abs(a - b) <=
           tol::slope * std::max(1.0, std::max(std::abs(a), std::abs(b)));
  };
  for (int l = 1; l <= ctx.dim(); ++l) {
    if (l == step.j || l == step.k) continue;
    const double gl = g[l - 1];
    if (gl < hi && gl > lo && !tied(gl, hi) && !tied(gl, lo)) return false;
  }
  return true;
}

PopulationVector partial_level_thermalization(const std::set<int>& levels, double lam,
                                              const PopulationVector& p,
                                              const GibbsContext& ctx) {
  if (levels.size() < 2) {
    throw std::invalid_argument("need at least two levels to thermalize");
  }
  for (int l : levels) {
    if (l < 1 || l > ctx.dim()) throw std::invalid_argument("level index out of range");
  }
  double mass = 0.0, tau_mass = 0.0;
  for (int l : levels) {
    mass += p[l];
    tau_mass += ctx.tau(l);
  }
  Vec q = p.probs;
  for (int l : levels) {
    q[l - 1] = (1.0 - lam) * p[l] + lam * mass * ctx.tau(l) / tau_mass;
  }
  return PopulationVector(std::move(q));
}

SwapSeries standard_formation(const BetaOrder& pi_from, const BetaOrder& pi_to) {
  if (pi_from.dim() != pi_to.dim()) {
    throw std::invalid_argument("beta-order dimension mismatch");
  }
  const int d = pi_from.dim();
  std::vector<int> cur = pi_from.perm;
  SwapSeries series;
  for (int j = 0; j < d - 1; ++j) {
    const int target = pi_to.perm[j];
    int m = j;
    while (m < d && cur[m] != target) ++m;
    if (m == d) throw std::invalid_argument("orders are not permutations of each other");
    // Each emitted swap moves `target` one slot up in the running order.
    for (int t = m - 1; t >= j; --t) {
      series.steps.push_back({cur[t], target, 1.0});
    }
    cur.erase(cur.begin() + m);
    cur.insert(cur.begin() + j, target);
  }
  return series;
}

std::vector<TrajectorySample> jc_trajectory(const PopulationVector& p, int j, int k,
                                            const GibbsContext& ctx, int samples) {
  if (samples < 2) {
    throw std::invalid_argument("need at least two trajectory samples");
  }
  std::vector<TrajectorySample> out;
  out.reserve(samples);
  const double tmax = std::numbers::pi / 2.0;
  for (int i = 0; i < samples; ++i) {
    const double t = tmax * i / (samples - 1);
    const double s = std::sin(t);
    out.push_back({t, apply_step({j, k, s * s}, p, ctx)});
  }
  return out;
}

}  // namespace thermo
