#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "thermo/core.hpp"
#include "thermo/sampling.hpp"

using namespace thermo;

TEST_CASE("gibbs state of a degenerate qubit is uniform") {
  const PopulationVector tau = gibbs_state(Hamiltonian({0.0, 0.0}));
  CHECK(tau[1] == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(tau[2] == doctest::Approx(0.5).epsilon(1e-14));
}

TEST_CASE("gibbs state for betaE = (0, 0.2, 0.5)") {
  const PopulationVector tau = gibbs_state(Hamiltonian({0.0, 0.2, 0.5}));
  // Oracle: exp(-E_i)/Z with Z = 1 + e^-0.2 + e^-0.5.
  const double z = 1.0 + std::exp(-0.2) + std::exp(-0.5);
  CHECK(tau[1] == doctest::Approx(1.0 / z).epsilon(1e-12));
  CHECK(tau[2] == doctest::Approx(std::exp(-0.2) / z).epsilon(1e-12));
  CHECK(tau[3] == doctest::Approx(std::exp(-0.5) / z).epsilon(1e-12));
  CHECK(tau[1] == doctest::Approx(0.4123).epsilon(1e-4));
  CHECK(tau[2] == doctest::Approx(0.3376).epsilon(1e-4));
  CHECK(tau[3] == doctest::Approx(0.2501).epsilon(1e-4));
}

TEST_CASE("large gap pushes all weight to the ground level") {
  const PopulationVector tau = gibbs_state(Hamiltonian({0.0, 50.0}));
  CHECK(tau[1] >= 1.0 - 1e-15);
  CHECK(tau[2] <= 1e-15);
}

TEST_CASE("slopes at the Gibbs point are all ones") {
  GibbsContext ctx(Hamiltonian({0.0, 0.3, 0.7, 1.1}));
  const Vec g = slopes(ctx.gibbs(), ctx);
  for (double x : g) CHECK(x == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("slopes of a pure qubit state") {
  GibbsContext ctx(Hamiltonian({0.0, 0.2}));
  const Vec g = slopes(PopulationVector({1.0, 0.0}), ctx);
  CHECK(g[0] == doctest::Approx(1.0 / ctx.tau(1)).epsilon(1e-12));
  CHECK(g[1] == 0.0);
}

TEST_CASE("slopes of the workhorse qutrit state") {
  GibbsContext ctx(Hamiltonian({0.0, 0.2, 0.5}));
  const Vec g = slopes(PopulationVector({0.35, 0.55, 0.1}), ctx);
  CHECK(g[0] == doctest::Approx(0.849).epsilon(1e-3));
  CHECK(g[1] == doctest::Approx(1.629).epsilon(1e-3));
  CHECK(g[2] == doctest::Approx(0.400).epsilon(1e-3));
}

TEST_CASE("beta-orders of the named qutrit states") {
  GibbsContext ctx(Hamiltonian({0.0, 0.2, 0.5}));
  CHECK(beta_order(PopulationVector({0.35, 0.55, 0.1}), ctx).perm ==
        std::vector<int>{2, 1, 3});
  CHECK(beta_order(PopulationVector({0.7, 0.2, 0.1}), ctx).perm ==
        std::vector<int>{1, 2, 3});
  CHECK(beta_order(ctx.gibbs(), ctx).perm == std::vector<int>{1, 2, 3});
  CHECK(has_degenerate_slopes(ctx.gibbs(), ctx));
}

TEST_CASE("delta table is consistent with the Gibbs ratios") {
  GibbsContext ctx(Hamiltonian({0.0, 0.2, 0.5}));
  for (int j = 1; j <= 3; ++j) {
    for (int k = 1; k <= 3; ++k) {
      CHECK(ctx.delta(j, k) * ctx.delta(k, j) == doctest::Approx(1.0).epsilon(1e-14));
      CHECK(ctx.delta(j, k) ==
            doctest::Approx(ctx.tau(k) / ctx.tau(j)).epsilon(1e-13));
    }
  }
  // Lower-energy first argument gives a ratio below one.
  CHECK(ctx.delta(1, 3) < 1.0);
  CHECK(ctx.delta(1, 3) == doctest::Approx(std::exp(-0.5)).epsilon(1e-14));
}

TEST_CASE("random Hamiltonians: normalization and order validity") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 1000; ++i) {
    const int d = 2 + static_cast<int>(rng() % 7);
    GibbsContext ctx(random_hamiltonian(d, rng));
    double s = 0.0;
    for (double x : ctx.gibbs().probs) s += x;
    CHECK(std::abs(s - 1.0) <= 1e-12);

    const PopulationVector p = random_simplex_state(d, rng);
    const BetaOrder pi = beta_order(p, ctx);
    const Vec g = slopes(p, ctx);
    for (int k = 0; k + 1 < d; ++k) {
      CHECK(g[pi.perm[k] - 1] >= g[pi.perm[k + 1] - 1] - tol::slope);
    }
  }
}

TEST_CASE("beta-order is invariant under uniform energy shifts") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    const int d = 3 + static_cast<int>(rng() % 3);
    const Hamiltonian h = random_hamiltonian(d, rng);
    Vec shifted = h.energies;
    for (double& e : shifted) e += 2.5;
    const PopulationVector p = random_simplex_state(d, rng);
    CHECK(beta_order(p, GibbsContext(h)).perm ==
          beta_order(p, GibbsContext(Hamiltonian(shifted))).perm);
  }
}

TEST_CASE("population vector construction guards") {
  CHECK_THROWS(PopulationVector({0.5, 0.6}));
  CHECK_THROWS(PopulationVector({1.2, -0.2}));
  const PopulationVector p({1.0, -5e-15});  // tiny negative clamps to zero
  CHECK(p[2] == 0.0);
}
