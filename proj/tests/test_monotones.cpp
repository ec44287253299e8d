#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "thermo/channels.hpp"
#include "thermo/monotones.hpp"
#include "thermo/sampling.hpp"

using namespace thermo;

TEST_CASE("divergence from a state to itself vanishes") {
  const PopulationVector tau = gibbs_state(Hamiltonian({0.0, 0.2, 0.5}));
  for (double a : {0.0, 0.5, 1.0, 2.0, 50.0}) {
    CHECK(renyi_divergence(tau, tau, a) == doctest::Approx(0.0).epsilon(1e-12));
  }
}

TEST_CASE("pure versus uniform gives log 2 at alpha = 1") {
  const PopulationVector p({1.0, 0.0});
  const PopulationVector u({0.5, 0.5});
  CHECK(renyi_divergence(p, u, 1.0) == doctest::Approx(std::log(2.0)).epsilon(1e-14));
}

TEST_CASE("alpha = 2 closed form") {
  const PopulationVector p({0.7, 0.3});
  const PopulationVector u({0.5, 0.5});
  CHECK(renyi_divergence(p, u, 2.0) ==
        doctest::Approx(std::log(1.16)).epsilon(1e-13));
}

TEST_CASE("alpha = 0 measures the support weight") {
  const PopulationVector p({0.6, 0.4, 0.0});
  const PopulationVector tau = gibbs_state(Hamiltonian({0.0, 0.2, 0.5}));
  CHECK(renyi_divergence(p, tau, 0.0) ==
        doctest::Approx(-std::log(tau[1] + tau[2])).epsilon(1e-13));
}

TEST_CASE("equilibrium free energy is minus log Z for every alpha") {
  GibbsContext ctx(Hamiltonian({0.0, 0.2, 0.5}));
  for (double a : {0.0, 0.5, 1.0, 2.0, 50.0}) {
    CHECK(free_energy_alpha(ctx.gibbs(), ctx, a) ==
          doctest::Approx(-ctx.partition_log()).epsilon(1e-12));
  }
}

TEST_CASE("alpha = 1 free energy equals energy minus entropy") {
  std::mt19937_64 rng(59);
  for (int i = 0; i < 200; ++i) {
    const int d = 2 + static_cast<int>(rng() % 4);
    GibbsContext ctx(random_hamiltonian(d, rng));
    const PopulationVector p = random_simplex_state(d, rng);
    double mean_e = 0.0;
    for (int l = 1; l <= d; ++l) mean_e += p[l] * ctx.energy(l);
    CHECK(nonequilibrium_free_energy(p, ctx) ==
          doctest::Approx(mean_e - shannon_entropy(p)).epsilon(1e-11));
  }
}

TEST_CASE("pure ground state free energy is its energy") {
  GibbsContext ctx(Hamiltonian({0.3, 0.9}));
  CHECK(nonequilibrium_free_energy(PopulationVector({1.0, 0.0}), ctx) ==
        doctest::Approx(0.3).epsilon(1e-14));
}

TEST_CASE("equilibrium minimizes the free energy family") {
  std::mt19937_64 rng(61);
  for (int i = 0; i < 200; ++i) {
    const int d = 2 + static_cast<int>(rng() % 4);
    GibbsContext ctx(random_hamiltonian(d, rng));
    const PopulationVector p = random_simplex_state(d, rng);
    for (double a : {0.5, 1.0, 2.0}) {
      CHECK(free_energy_alpha(p, ctx, a) >=
            free_energy_alpha(ctx.gibbs(), ctx, a) - 1e-12);
    }
  }
}

TEST_CASE("free energies never increase across a swap") {
  std::mt19937_64 rng(67);
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  for (int i = 0; i < 300; ++i) {
    const int d = 2 + static_cast<int>(rng() % 4);
    GibbsContext ctx(random_hamiltonian(d, rng));
    const PopulationVector p = random_simplex_state(d, rng);
    std::uniform_int_distribution<int> lvl(1, d);
    int j = lvl(rng), k = lvl(rng);
    if (j == k) k = j % d + 1;
    const PopulationVector q = apply_step({j, k, uni(rng)}, p, ctx);
    for (double a : {0.5, 1.0, 2.0}) {
      CHECK(free_energy_alpha(q, ctx, a) <= free_energy_alpha(p, ctx, a) + 1e-10);
    }
  }
}

TEST_CASE("mutual information of product and correlated states") {
  // Product state carries no information.
  Vec prod(4);
  const Vec a = {0.3, 0.7}, b = {0.6, 0.4};
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) prod[2 * i + j] = a[i] * b[j];
  }
  CHECK(mutual_information(PopulationVector(prod), 2, 2) ==
        doctest::Approx(0.0).epsilon(1e-14));
  // Perfect correlation of two fair bits carries log 2.
  CHECK(mutual_information(PopulationVector({0.5, 0.0, 0.0, 0.5}), 2, 2) ==
        doctest::Approx(std::log(2.0)).epsilon(1e-14));
}

TEST_CASE("information equals the free-energy mismatch of the marginals") {
  std::mt19937_64 rng(71);
  GibbsContext sys_ctx(Hamiltonian({0.0, 0.2, 0.5}));
  Vec joint_e(6);
  for (int a = 0; a < 3; ++a) {
    joint_e[2 * a] = sys_ctx.energy(a + 1);
    joint_e[2 * a + 1] = sys_ctx.energy(a + 1);
  }
  GibbsContext joint_ctx{Hamiltonian(joint_e)};
  GibbsContext cat_ctx{Hamiltonian({0.0, 0.0})};
  for (int i = 0; i < 200; ++i) {
    const PopulationVector joint = random_simplex_state(6, rng);
    const double lhs = nonequilibrium_free_energy(joint, joint_ctx) -
                       nonequilibrium_free_energy(system_marginal(joint, 3, 2), sys_ctx) -
                       nonequilibrium_free_energy(catalyst_marginal(joint, 3, 2), cat_ctx);
    CHECK(lhs == doctest::Approx(mutual_information(joint, 3, 2)).epsilon(1e-10));
  }
}

TEST_CASE("report covers the default grid") {
  GibbsContext ctx(Hamiltonian({0.0, 0.2, 0.5}));
  const MonotoneReport r = monotone_report(PopulationVector({0.35, 0.55, 0.1}), ctx);
  REQUIRE(r.alpha_grid.size() == 5);
  REQUIRE(r.values.size() == 5);
  CHECK(r.f1 == doctest::Approx(r.values[2]).epsilon(1e-14));
  for (double v : r.values) CHECK(std::isfinite(v));
}
