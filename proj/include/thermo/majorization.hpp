#pragma once

#include <utility>
#include <vector>

#include "thermo/core.hpp"

namespace thermo {

/// Piecewise-linear concave thermo-majorization curve through the cumulative
/// (tau, p) sums taken in beta-order. Elbow 0 is (0,0), elbow d is (1,1).
struct MajorizationCurve {
  std::vector<std::pair<double, double>> elbows;  // d+1 points
  BetaOrder order;                                // order used for construction
};

MajorizationCurve curve(const PopulationVector& p, const GibbsContext& ctx);

/// Linear interpolation of the curve at a in [0,1].
double evaluate(const MajorizationCurve& c, double a);

/// p thermo-majorizes q: L_p >= L_q - tol::maj everywhere. By concavity it
/// suffices to compare at the elbow abscissae of q.
bool majorizes(const PopulationVector& p, const PopulationVector& q,
               const GibbsContext& ctx);

/// Every elbow of L_q lies on L_p within tol::maj.
bool tightly_majorizes(const PopulationVector& p, const PopulationVector& q,
                       const GibbsContext& ctx);

}  // namespace thermo
