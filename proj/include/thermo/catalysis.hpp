#pragma once

#include <optional>

#include "thermo/monotones.hpp"
#include "thermo/reach.hpp"

namespace thermo {

/// Degenerate qubit catalyst: populations (c1, 1-c1), both levels at energy 0.
struct CatalystSpec {
  double c1;

  PopulationVector state() const;
};

/// The catalyst's own context (two degenerate levels).
const GibbsContext& catalyst_context();

/// Joint state and product context. Flat index of system level a (1..d) with
/// catalyst level b (1..2) is 2(a-1)+b; product energies inherit the system's.
std::pair<PopulationVector, GibbsContext> tensor(const PopulationVector& p,
                                                 const CatalystSpec& c,
                                                 const GibbsContext& ctx);

/// Linear map q -> q tensor c as an embedding matrix into the product space.
EmbedMap tensor_embed(const CatalystSpec& c, int d_sys);

struct CetoOptions {
  int lmax_cap = -1;        // < 0: default cap for the product dimension
  bool post_filter = true;  // extremal-filter the product vertex superset
  int directions = 720;     // support-direction grid for the slice polygon
};

/// System states q with p tensor c -> q tensor c under swap series: the
/// product reachable set sliced along the exact-catalysis plane. Vertices
/// are system states; generating series live on the product space and are
/// recovered by decompose_transition.
ReachableSet ceto_slice(const PopulationVector& p, const CatalystSpec& c,
                        const GibbsContext& ctx, const CetoOptions& opts = {},
                        const LpSolver& solver = default_lp_solver());

/// One slice per grid value plus the pooled slice vertices and the extreme
/// points of their convex hull. The reachable union itself is the plain
/// union of slices (not assumed convex); membership in it goes through
/// sweep_union_contains using the retained product vertex sets.
struct CetoSweep {
  Vec grid;
  std::vector<ReachableSet> slices;
  std::vector<PointSet> product_vertices;  // per grid value
  PointSet union_points;
  PointSet union_hull;
};

CetoSweep ceto_sweep(const PopulationVector& p, const GibbsContext& ctx, Vec grid,
                     const CetoOptions& opts = {},
                     const LpSolver& solver = default_lp_solver());

/// True if q lies in some slice of the sweep.
bool sweep_union_contains(const CetoSweep& sweep, const PopulationVector& q,
                          const LpSolver& solver = default_lp_solver());

struct OptimalCatalyst {
  CatalystSpec catalyst;
  bool order_applicable;  // closed form derived for beta-order (2,1,3) states
};

/// Closed-form c1 minimizing the reachable ground population for qutrits:
/// c1 = (-p3 + sqrt(p3^2 + 8 D13 p1 p3)) / (4 D13 p1) with D13 = exp(E1-E3).
OptimalCatalyst optimal_catalyst_ground_min(const PopulationVector& p,
                                            const GibbsContext& ctx);

/// An executable catalytic transition p -> q with catalyst c. When
/// `recombined` holds, `series` maps p tensor c to q tensor c exactly (within
/// tolerance); otherwise the transition is only available as the convex
/// family `support`/`weights` over product vertices.
struct CatalyticTransition {
  PopulationVector initial;
  PopulationVector target;
  CatalystSpec catalyst;
  bool recombined = false;
  SwapSeries series;   // valid when recombined
  PointSet support;    // product vertices carrying the decomposition
  Vec weights;         // convex weights over `support`
};

struct NotReachableError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Convex decomposition of q tensor c over the product vertex set, preferring
/// vertices with short series, then recombination of insertion-pattern series
/// into one series with partial swaps at the inserted positions.
CatalyticTransition decompose_transition(const PopulationVector& p,
                                         const PopulationVector& q,
                                         const CatalystSpec& c,
                                         const GibbsContext& ctx,
                                         const LpSolver& solver = default_lp_solver());

struct TrajectoryEntry {
  std::optional<SwapStep> step;  // empty for the initial entry
  PopulationVector joint;
  double f_sys;
  double f_cat;
  double f_total;
  double mutual_info;
  bool system_unchanged;  // system marginal equal to the previous entry's
};

struct Trajectory {
  std::vector<TrajectoryEntry> entries;
};

/// Step-resolved accounting along a recombined transition. Checks that the
/// total free energy never increases and that the catalyst comes back clean.
Trajectory track(const CatalyticTransition& t, const GibbsContext& ctx);

}  // namespace thermo
