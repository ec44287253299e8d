#pragma once

namespace thermo::tol {

// Normalization and positivity checks on probability vectors.
inline constexpr double sum = 1e-12;
inline constexpr double neg = 1e-14;

// Relative tolerance for slope-degeneracy detection in beta-orders.
inline constexpr double slope = 1e-9;

// Curve-domination slack for the majorization pre-order.
inline constexpr double maj = 1e-10;

// Feasibility slack for convex-hull membership programs.
inline constexpr double hull = 1e-9;

// L-infinity distance under which two states are the same point.
inline constexpr double dedup = 1e-10;

// Exact-catalysis contract: catalyst return and residual correlation.
inline constexpr double cat = 1e-9;

}  // namespace thermo::tol
