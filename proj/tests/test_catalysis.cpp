#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "thermo/catalysis.hpp"
#include "thermo/sampling.hpp"

using namespace thermo;

namespace {

const GibbsContext& qutrit_ctx() {
  static const GibbsContext ctx(Hamiltonian({0.0, 0.2, 0.5}));
  return ctx;
}

const PopulationVector& p1() {
  static const PopulationVector p({0.35, 0.55, 0.1});
  return p;
}

bool close_to(const Vec& a, const Vec& b, double tol) {
  return linf_distance(a, b) <= tol;
}

}  // namespace

TEST_CASE("closed-form catalyst for the worked instance") {
  const OptimalCatalyst oc = optimal_catalyst_ground_min(p1(), qutrit_ctx());
  CHECK(oc.catalyst.c1 == doctest::Approx(0.3816).epsilon(3e-4));
  CHECK(oc.order_applicable);
  const OptimalCatalyst off =
      optimal_catalyst_ground_min(PopulationVector({0.7, 0.2, 0.1}), qutrit_ctx());
  CHECK_FALSE(off.order_applicable);
}

TEST_CASE("catalyst formula vanishes with the top population") {
  GibbsContext ctx(Hamiltonian({0.0, 0.2, 0.5}));
  const OptimalCatalyst oc =
      optimal_catalyst_ground_min(PopulationVector({0.4, 0.6 - 1e-9, 1e-9}), ctx);
  CHECK(oc.catalyst.c1 < 1e-4);
}

TEST_CASE("product state, energies, and order of the worked instance") {
  const CatalystSpec c = optimal_catalyst_ground_min(p1(), qutrit_ctx()).catalyst;
  auto [joint, pctx] = tensor(p1(), c, qutrit_ctx());
  CHECK(close_to(joint.probs, {0.1336, 0.2164, 0.2099, 0.3401, 0.0382, 0.0618}, 1e-4));
  // Product energies repeat the system energies on catalyst pairs.
  CHECK(pctx.energy(1) == pctx.energy(2));
  CHECK(pctx.energy(3) == pctx.energy(4));
  CHECK(pctx.energy(3) == doctest::Approx(0.2));
  // Flat labels a*b -> 2(a-1)+b: order (2*2, 2*1, 1*2, 1*1, 3*2, 3*1).
  CHECK(beta_order(joint, pctx).perm == std::vector<int>{4, 3, 2, 1, 6, 5});
}

TEST_CASE("pure catalyst concentrates the joint on odd flat indices") {
  auto [joint, pctx] = tensor(p1(), CatalystSpec{1.0}, qutrit_ctx());
  CHECK(joint[2] == 0.0);
  CHECK(joint[4] == 0.0);
  CHECK(joint[6] == 0.0);
  CHECK(joint[1] == doctest::Approx(0.35));
}

TEST_CASE("equilibrium stays put under any catalyst") {
  const GibbsContext& ctx = qutrit_ctx();
  const ReachableSet rs = ceto_slice(ctx.gibbs(), CatalystSpec{0.5}, ctx);
  REQUIRE(rs.size() == 1);
  CHECK(close_to(rs.vertices.points[0].probs, ctx.gibbs().probs, 1e-9));
}

TEST_CASE("worked slice reaches the paper's ground-minimal vertex") {
  const GibbsContext& ctx = qutrit_ctx();
  const CatalystSpec c = optimal_catalyst_ground_min(p1(), ctx).catalyst;
  const ReachableSet slice = ceto_slice(p1(), c, ctx);
  bool found = false;
  for (const PopulationVector& v : slice.vertices.points) {
    if (close_to(v.probs, {0.2179, 0.5180, 0.2641}, 1e-3)) found = true;
  }
  CHECK(found);
  // That state escapes both swap-only and general thermal reachability.
  const PopulationVector q({0.2179, 0.5180, 0.2641});
  CHECK_FALSE(contains(q, eto_extremal_hull(p1(), ctx)).inside);
  CHECK_FALSE(contains(q, to_extremal_points(p1(), ctx)).inside);
}

TEST_CASE("idle catalyst keeps the swap-only set reachable") {
  const GibbsContext& ctx = qutrit_ctx();
  const CatalystSpec c{1.0};
  auto [joint, pctx] = tensor(p1(), c, ctx);
  const ReachableSet product = eto_extremal_prune(joint, pctx, -1, true);
  const EmbedMap embed = tensor_embed(c, 3);
  const ReachableSet swap_only = eto_extremal_hull(p1(), ctx);
  for (const PopulationVector& v : swap_only.vertices.points) {
    CHECK(slice_membership(v, product.vertices, embed).inside);
  }
}

TEST_CASE("worked transition recombines into a seven-step series") {
  const GibbsContext& ctx = qutrit_ctx();
  const CatalystSpec c = optimal_catalyst_ground_min(p1(), ctx).catalyst;
  const ReachableSet slice = ceto_slice(p1(), c, ctx);
  // Target: the ground-minimal vertex on the upper boundary (two vertices
  // share the minimal ground population; take the one nearest the worked
  // endpoint).
  const PopulationVector* best = nullptr;
  for (const PopulationVector& v : slice.vertices.points) {
    if (!best || linf_distance(v.probs, {0.2179, 0.5180, 0.2641}) <
                     linf_distance(best->probs, {0.2179, 0.5180, 0.2641})) {
      best = &v;
    }
  }
  REQUIRE(best != nullptr);
  CHECK((*best)[1] == doctest::Approx(0.2179).epsilon(2e-3));

  const CatalyticTransition t = decompose_transition(p1(), *best, c, ctx);
  REQUIRE(t.recombined);
  CHECK(t.series.length() == 7);

  auto [joint, pctx] = tensor(p1(), c, ctx);
  auto [target_joint, pctx2] = tensor(*best, c, ctx);
  PopulationVector cur = joint;
  std::vector<Vec> states{cur.probs};
  for (const SwapStep& s : t.series.steps) {
    cur = apply_step(s, cur, pctx);
    states.push_back(cur.probs);
  }
  CHECK(close_to(states.front(), {0.1336, 0.2164, 0.2099, 0.3401, 0.0382, 0.0618}, 1e-3));
  CHECK(close_to(states[4], {0.1144, 0.1662, 0.1857, 0.3323, 0.0382, 0.1633}, 1e-3));
  CHECK(close_to(states[5], {0.1144, 0.1662, 0.1977, 0.3203, 0.0382, 0.1633}, 1e-3));
  CHECK(close_to(states.back(), {0.0832, 0.1348, 0.1977, 0.3203, 0.1008, 0.1633}, 1e-3));
  CHECK(close_to(cur.probs, target_joint.probs, tol::cat));
}

TEST_CASE("step accounting for the worked transition") {
  const GibbsContext& ctx = qutrit_ctx();
  const CatalystSpec c = optimal_catalyst_ground_min(p1(), ctx).catalyst;
  const ReachableSet slice = ceto_slice(p1(), c, ctx);
  const PopulationVector* best = nullptr;
  for (const PopulationVector& v : slice.vertices.points) {
    if (!best || linf_distance(v.probs, {0.2179, 0.5180, 0.2641}) <
                     linf_distance(best->probs, {0.2179, 0.5180, 0.2641})) {
      best = &v;
    }
  }
  const CatalyticTransition t = decompose_transition(p1(), *best, c, ctx);
  REQUIRE(t.recombined);
  const Trajectory traj = track(t, ctx);
  REQUIRE(traj.entries.size() == 8);

  // Total free energy never increases; endpoints carry no correlation.
  for (size_t i = 1; i < traj.entries.size(); ++i) {
    CHECK(traj.entries[i].f_total <= traj.entries[i - 1].f_total + 1e-9);
  }
  CHECK(traj.entries.front().mutual_info <= 1e-9);
  CHECK(traj.entries.back().mutual_info <= 1e-9);
  // Intermediate entries do correlate system and catalyst.
  CHECK(traj.entries[4].mutual_info > 1e-4);
  // Local mismatch identity at every step.
  for (const TrajectoryEntry& e : traj.entries) {
    CHECK(e.f_total - e.f_sys - e.f_cat ==
          doctest::Approx(e.mutual_info).epsilon(1e-9));
  }
  // System marginal after step 4; step 5 only moves the catalyst within
  // system level 2, so the system marginal stays put.
  const PopulationVector m4 = system_marginal(traj.entries[4].joint, 3, 2);
  CHECK(close_to(m4.probs, {0.2806, 0.5180, 0.2015}, 1e-3));
  CHECK(traj.entries[4].system_unchanged == false);
  CHECK(traj.entries[5].system_unchanged == true);
  const PopulationVector m5 = system_marginal(traj.entries[5].joint, 3, 2);
  CHECK(m5[2] == doctest::Approx(m4[2]).epsilon(1e-12));
  // The last two steps raise the system's local free energy back up.
  CHECK(traj.entries[7].f_sys > traj.entries[5].f_sys);
}

TEST_CASE("identity transition is trivial") {
  const GibbsContext& ctx = qutrit_ctx();
  const CatalyticTransition t = decompose_transition(p1(), p1(), CatalystSpec{0.4}, ctx);
  CHECK(t.recombined);
  CHECK(t.series.length() == 0);
  const Trajectory traj = track(t, ctx);
  CHECK(traj.entries.size() == 1);
}

TEST_CASE("unreachable targets are rejected") {
  const GibbsContext& ctx = qutrit_ctx();
  CHECK_THROWS_AS(decompose_transition(ctx.gibbs(), p1(), CatalystSpec{0.4}, ctx),
                  NotReachableError);
}

TEST_CASE("small sweep keeps the swap-only vertices in the union") {
  const GibbsContext& ctx = qutrit_ctx();
  const CetoSweep sw = ceto_sweep(p1(), ctx, {1.0, 0.3816});
  const ReachableSet swap_only = eto_extremal_hull(p1(), ctx);
  for (const PopulationVector& v : swap_only.vertices.points) {
    CHECK(sweep_union_contains(sw, v));
  }
  CHECK(sw.union_hull.size() >= swap_only.size());
}
