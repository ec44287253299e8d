#include "thermo/majorization.hpp"

#include <cmath>
#include <stdexcept>

namespace thermo {

MajorizationCurve curve(const PopulationVector& p, const GibbsContext& ctx) {
  const BetaOrder order = beta_order(p, ctx);
  MajorizationCurve c;
  c.order = order;
  c.elbows.reserve(p.dim() + 1);
  c.elbows.emplace_back(0.0, 0.0);
  double x = 0.0, y = 0.0;
  for (int level : order.perm) {
    x += ctx.tau(level);
    y += p[level];
    c.elbows.emplace_back(x, y);
  }
  // Pin the endpoint exactly; cumulative rounding is below tol::sum.
  c.elbows.back() = {1.0, 1.0};
  return c;
}

double evaluate(const MajorizationCurve& c, double a) {
  if (a < -tol::sum || a > 1.0 + tol::sum) {
    throw std::domain_error("curve argument outside [0,1]");
  }
  a = std::min(1.0, std::max(0.0, a));
  // Elbow x-coordinates are strictly increasing (tau_i > 0).
  size_t hi = 1;
  while (hi + 1 < c.elbows.size() && c.elbows[hi].first < a) ++hi;
  const auto& [x0, y0] = c.elbows[hi - 1];
  const auto& [x1, y1] = c.elbows[hi];
  if (x1 == x0) return y1;
  const double t = (a - x0) / (x1 - x0);
  return y0 + t * (y1 - y0);
}

bool majorizes(const PopulationVector& p, const PopulationVector& q,
               const GibbsContext& ctx) {
  if (p.dim() != q.dim() || p.dim() != ctx.dim()) {
    throw std::invalid_argument("dimension mismatch in majorizes");
  }
  const MajorizationCurve cp = curve(p, ctx);
  const MajorizationCurve cq = curve(q, ctx);
  for (const auto& [x, y] : cq.elbows) {
    if (evaluate(cp, x) < y - tol::maj) return false;
  }
  return true;
}

bool tightly_majorizes(const PopulationVector& p, const PopulationVector& q,
                       const GibbsContext& ctx) {
  if (p.dim() != q.dim() || p.dim() != ctx.dim()) {
    throw std::invalid_argument("dimension mismatch in tightly_majorizes");
  }
  const MajorizationCurve cp = curve(p, ctx);
  const MajorizationCurve cq = curve(q, ctx);
  for (const auto& [x, y] : cq.elbows) {
    if (std::abs(evaluate(cp, x) - y) > tol::maj) return false;
  }
  return true;
}

}  // namespace thermo
