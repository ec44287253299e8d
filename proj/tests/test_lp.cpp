#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "thermo/lp.hpp"

using namespace thermo;

TEST_CASE("simple bounded minimum") {
  // min x1 + 2 x2 s.t. x1 + x2 = 1 -> x = (1, 0).
  LpProblem p;
  p.a = {{1.0, 1.0}};
  p.b = {1.0};
  p.c = {1.0, 2.0};
  const LpSolution s = DenseSimplexSolver().solve(p);
  REQUIRE(s.status == LpStatus::Optimal);
  CHECK(s.x[0] == doctest::Approx(1.0));
  CHECK(s.x[1] == doctest::Approx(0.0));
  CHECK(s.objective == doctest::Approx(1.0));
}

TEST_CASE("infeasible system is reported cleanly") {
  LpProblem p;
  p.a = {{1.0, 1.0}, {1.0, 1.0}};
  p.b = {1.0, 2.0};
  p.c = {0.0, 0.0};
  CHECK(DenseSimplexSolver().solve(p).status == LpStatus::Infeasible);
}

TEST_CASE("unbounded objective is reported") {
  // min -x1 with x2 as a slack never blocking.
  LpProblem p;
  p.a = {{1.0, -1.0}};
  p.b = {0.0};
  p.c = {-1.0, 0.0};
  CHECK(DenseSimplexSolver().solve(p).status == LpStatus::Unbounded);
}

TEST_CASE("negative right-hand sides are handled") {
  // -x1 = -0.7 -> x1 = 0.7.
  LpProblem p;
  p.a = {{-1.0, 0.0}, {0.0, 1.0}};
  p.b = {-0.7, 0.3};
  p.c = {1.0, 1.0};
  const LpSolution s = DenseSimplexSolver().solve(p);
  REQUIRE(s.status == LpStatus::Optimal);
  CHECK(s.x[0] == doctest::Approx(0.7));
  CHECK(s.x[1] == doctest::Approx(0.3));
}

TEST_CASE("redundant constraints do not break phase transition") {
  LpProblem p;
  p.a = {{1.0, 1.0}, {2.0, 2.0}};
  p.b = {1.0, 2.0};
  p.c = {3.0, 1.0};
  const LpSolution s = DenseSimplexSolver().solve(p);
  REQUIRE(s.status == LpStatus::Optimal);
  CHECK(s.x[1] == doctest::Approx(1.0));
}

TEST_CASE("random feasibility instances match their construction") {
  // Build A w* = b from a known convex combination; the solver must find
  // some feasible point with objective <= that of w*.
  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  for (int trial = 0; trial < 200; ++trial) {
    const int m = 3 + static_cast<int>(rng() % 3);
    const int n = m + 1 + static_cast<int>(rng() % 5);
    Mat a(m, Vec(n));
    for (auto& row : a) {
      for (double& x : row) x = uni(rng);
    }
    Vec w(n);
    double s = 0.0;
    for (double& x : w) s += x = uni(rng);
    for (double& x : w) x /= s;
    Vec b(m, 0.0);
    for (int r = 0; r < m; ++r) {
      for (int c = 0; c < n; ++c) b[r] += a[r][c] * w[c];
    }
    LpProblem p;
    p.a = a;
    p.b = b;
    p.c.assign(n, 0.0);
    for (double& x : p.c) x = uni(rng);
    const LpSolution sol = DenseSimplexSolver().solve(p);
    REQUIRE(sol.status == LpStatus::Optimal);
    Vec reached(m, 0.0);
    for (int r = 0; r < m; ++r) {
      for (int c = 0; c < n; ++c) reached[r] += a[r][c] * sol.x[c];
    }
    for (int r = 0; r < m; ++r) CHECK(reached[r] == doctest::Approx(b[r]).epsilon(1e-8));
    double ref = 0.0;
    for (int c = 0; c < n; ++c) ref += p.c[c] * w[c];
    CHECK(sol.objective <= ref + 1e-8);
  }
}
