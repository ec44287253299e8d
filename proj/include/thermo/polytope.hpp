#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "thermo/channels.hpp"
#include "thermo/core.hpp"
#include "thermo/lp.hpp"

namespace thermo {

/// Optional per-point metadata: the swap series that generated the point and
/// its beta-order.
struct PointLabel {
  SwapSeries series;
  BetaOrder order;
};

/// A finite set of states, deduplicated under L-infinity <= tol::dedup.
/// When duplicates merge, the shortest generating series wins (ties broken
/// lexicographically by step order).
struct PointSet {
  std::vector<PopulationVector> points;
  std::vector<PointLabel> labels;  // empty or same size as points

  int size() const { return static_cast<int>(points.size()); }
  bool labelled() const { return !labels.empty(); }

  /// Returns true if the point was new, false if it merged into an existing
  /// entry (possibly replacing that entry's label by a shorter series).
  bool insert(PopulationVector p, std::optional<PointLabel> label = std::nullopt);
};

struct MembershipResult {
  bool inside = false;
  Vec weights;  // convex witness over the point set when inside
};

/// Feasibility program: exists w >= 0, sum w = 1, sum w_i s_i = x within
/// tol::hull. Solver breakdowns surface as LpError, distinct from a clean
/// "not a member".
MembershipResult hull_membership(const PopulationVector& x, const PointSet& s,
                                 const LpSolver& solver = default_lp_solver());

/// Keeps exactly the points not in the convex hull of the others.
PointSet extremal_filter(const PointSet& s,
                         const LpSolver& solver = default_lp_solver());

/// Affine embedding q -> E q used for slicing (for CETO: q tensor c).
struct EmbedMap {
  Mat matrix;   // ambient_dim x sys_dim
  int sys_dim;  // number of free coordinates of q (probability constraint aside)
};

EmbedMap identity_embed(int d);

/// Vertices of R = { q in the simplex : E q in conv(s) }, found by maximizing
/// support directions on a grid (default 720 for 2 intrinsic dimensions) with
/// adaptive bisection refinement; throws EmptySliceError when R is empty.
struct EmptySliceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

PointSet slice_vertices(const PointSet& s, const EmbedMap& embed,
                        int directions = 720,
                        const LpSolver& solver = default_lp_solver());

/// Membership of q in the slice region R without enumerating its vertices.
MembershipResult slice_membership(const PopulationVector& q, const PointSet& s,
                                  const EmbedMap& embed,
                                  const LpSolver& solver = default_lp_solver());

/// Standard 2-simplex embedding for d = 3: x = p2 + p3/2, y = sqrt(3)/2 p3.
std::pair<double, double> barycentric(const PopulationVector& p);

}  // namespace thermo
