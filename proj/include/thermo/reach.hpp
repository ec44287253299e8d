#pragma once

#include <string>

#include "thermo/majorization.hpp"
#include "thermo/polytope.hpp"

namespace thermo {

enum class ReachMethod { To, EtoHull, EtoPrune, EtoQutrit, EtoMonotonic, CetoSlice };

std::string method_name(ReachMethod m);

/// Vertex list of a reachable-state polytope. Every vertex carries the swap
/// series that generated it and its beta-order.
struct ReachableSet {
  PointSet vertices;
  ReachMethod method = ReachMethod::To;
  int lmax_used = 0;    // longest generating series in the result
  bool exhausted = true;  // search stopped because the frontier emptied
  bool superset = false;  // prune method without extremal post-filter

  int size() const { return vertices.size(); }
};

/// Theoretical series-length cap: 3 for d = 3, floor((d!-4)/(d-3)) for d >= 4.
long long lmax_bound(int d);

/// Practical default: min(lmax_bound(d), 3 d^2).
int default_lmax_cap(int d);

/// The d! tight states: for each target order pi', read populations off the
/// majorization curve of p at the cumulative Gibbs weights of pi'. Extremal
/// filter applied after dedup. d <= 8.
ReachableSet to_extremal_points(const PopulationVector& p, const GibbsContext& ctx,
                                const LpSolver& solver = default_lp_solver());

/// Breadth-first beta-swap closure keeping, per depth, only the extremal
/// points of the accumulated set. lmax_cap < 0 selects the default cap.
ReachableSet eto_extremal_hull(const PopulationVector& p, const GibbsContext& ctx,
                               int lmax_cap = -1,
                               const LpSolver& solver = default_lp_solver());

/// Same closure but filtering by same-beta-order majorization domination,
/// which is LP-free and scales further; the survivors may strictly contain
/// the vertex set unless post_filter is set.
ReachableSet eto_extremal_prune(const PopulationVector& p, const GibbsContext& ctx,
                                int lmax_cap = -1, bool post_filter = false,
                                const LpSolver& solver = default_lp_solver());

/// Closed-form qutrit vertex set: the five guaranteed vertices plus up to
/// three more candidates kept only if extremal. At most 8 vertices.
ReachableSet eto_qutrit(const PopulationVector& p, const GibbsContext& ctx,
                        const LpSolver& solver = default_lp_solver());

/// Fast path for states whose beta-order is (1..d) or (d..1): one vertex per
/// target order via the standard formation, series length <= d(d-1)/2.
ReachableSet eto_monotonic(const PopulationVector& p, const GibbsContext& ctx);

/// Membership of a target state in the polytope spanned by rs.vertices.
MembershipResult contains(const PopulationVector& target, const ReachableSet& rs,
                          const LpSolver& solver = default_lp_solver());

}  // namespace thermo
