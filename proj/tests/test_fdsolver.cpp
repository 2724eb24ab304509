#include <cmath>

#include "doctest.h"
#include "nlbs/fdsolver.hpp"

using namespace nlbs;
using namespace nlbs::fd;
using catalog::FamilyConstants;
using catalog::FamilyId;
using catalog::Table;

namespace {

const ModelParams kCanon(1.0, 1.0, 0.0);

std::vector<FieldState> run_manufactured(Equation eq, const ModelParams& mp,
                                         const FamilyId& id, const FamilyConstants& fc,
                                         const GridSpec& grid) {
  JetEvaluator exact = catalog::evaluator(id, mp, fc);
  return solve(
      eq, mp, grid, [&](double x) { return exact(grid.t0, x).u; },
      [&](double t, Side side) {
        return exact(t, side == Side::Left ? grid.x_lo : grid.x_hi).u;
      },
      {grid.t1});
}

double max_error(const FieldState& state, const JetEvaluator& exact,
                 const GridSpec& grid) {
  double err = 0.0;
  for (int i = 0; i < grid.nx; ++i) {
    const double x = grid.x_lo + (grid.x_hi - grid.x_lo) * i / (grid.nx - 1);
    err = std::max(err, std::fabs(state.values[i] - exact(state.time, x).u));
  }
  return err;
}

}  // namespace

TEST_CASE("constant solution is a fixed point") {
  FamilyConstants fc;
  fc.c1 = 2.0;
  GridSpec grid{-1.0, 2.0, 41, 0.1, 0.6, 1, 0.4};
  auto states = run_manufactured(Equation::Canonical, kCanon, {Table::T2, 1}, fc, grid);
  REQUIRE(states.size() == 1);
  for (int i = 0; i < grid.nx; ++i)
    CHECK(states[0].values[i] == doctest::Approx(2.0).epsilon(1e-14));
}

TEST_CASE("manufactured T2 row 5 converges at second order") {
  FamilyConstants fc;
  fc.c1 = 1.0;
  fc.c2 = 0.0;
  fc.delta = 1;  // forward-parabolic branch
  GridSpec grid{-1.0, 2.0, 41, 0.1, 0.35, 1, 0.4};
  JetEvaluator exact = catalog::evaluator({Table::T2, 5}, kCanon, fc);

  auto coarse = run_manufactured(Equation::Canonical, kCanon, {Table::T2, 5}, fc, grid);
  const double e41 = max_error(coarse.back(), exact, grid);
  GridSpec fine = grid;
  fine.nx = 81;
  auto fined = run_manufactured(Equation::Canonical, kCanon, {Table::T2, 5}, fc, fine);
  const double e81 = max_error(fined.back(), exact, fine);

  CHECK(e41 < 5e-3);
  CHECK(e41 / e81 > 3.0);  // ~4 for a second-order scheme
  CHECK(e41 / e81 < 5.0);
}

TEST_CASE("anti-diffusive branch blows up and is detected") {
  FamilyConstants fc;
  fc.c1 = 1.0;
  fc.c2 = 0.0;
  fc.delta = -1;  // (u_x + u_xx) > 0: backward-parabolic linearization
  GridSpec grid{-1.0, 2.0, 41, 0.1, 0.6, 1, 0.4};
  CHECK_THROWS_AS(
      run_manufactured(Equation::Canonical, kCanon, {Table::T2, 5}, fc, grid), Blowup);
}

TEST_CASE("corner mismatch is rejected") {
  GridSpec grid{-1.0, 1.0, 16, 0.0, 0.5, 1, 0.4};
  CHECK_THROWS_AS(solve(
                      Equation::Canonical, kCanon, grid,
                      [](double) { return 0.0; },
                      [](double, Side) { return 5.0; }, {0.5}),
                  CornerMismatch);
}

TEST_CASE("discrete x-translation equivariance") {
  FamilyConstants fc;
  fc.c1 = 1.0;
  fc.c2 = 0.0;
  fc.delta = 1;
  const double shift = 0.5;
  GridSpec grid{-1.0, 2.0, 41, 0.1, 0.3, 1, 0.4};
  JetEvaluator exact = catalog::evaluator({Table::T2, 5}, kCanon, fc);

  auto base = solve(
      Equation::Canonical, kCanon, grid, [&](double x) { return exact(grid.t0, x).u; },
      [&](double t, Side side) {
        return exact(t, side == Side::Left ? grid.x_lo : grid.x_hi).u;
      },
      {grid.t1});

  GridSpec moved = grid;
  moved.x_lo += shift;
  moved.x_hi += shift;
  // same data expressed in the shifted window
  auto shifted = solve(
      Equation::Canonical, kCanon, moved,
      [&](double x) { return exact(grid.t0, x - shift).u; },
      [&](double t, Side side) {
        return exact(t, (side == Side::Left ? moved.x_lo : moved.x_hi) - shift).u;
      },
      {grid.t1});

  for (int i = 0; i < grid.nx; ++i)
    CHECK(base.back().values[i] ==
          doctest::Approx(shifted.back().values[i]).epsilon(1e-13));
}

TEST_CASE("halving the time step leaves the solution unchanged") {
  FamilyConstants fc;
  fc.c1 = 1.0;
  fc.c2 = 0.0;
  fc.delta = 1;
  GridSpec grid{-1.0, 2.0, 41, 0.1, 0.3, 1, 0.4};
  auto a = run_manufactured(Equation::Canonical, kCanon, {Table::T2, 5}, fc, grid);
  GridSpec half = grid;
  half.safety = 0.2;
  auto b = run_manufactured(Equation::Canonical, kCanon, {Table::T2, 5}, fc, half);
  double diff = 0.0;
  for (int i = 0; i < grid.nx; ++i)
    diff = std::max(diff, std::fabs(a.back().values[i] - b.back().values[i]));
  CHECK(diff < 1e-9);
}

TEST_CASE("bse manufactured run and snapshots") {
  const ModelParams mp(2.0, 1.0, 1.0);
  FamilyConstants fc;
  fc.c1 = 0.5;
  fc.c2 = 1.0;
  GridSpec grid{0.5, 3.0, 41, 0.1, 0.4, 1, 0.4};
  JetEvaluator exact = catalog::evaluator({Table::T4, 1}, mp, fc);
  auto states = solve(
      Equation::Bse, mp, grid, [&](double x) { return exact(grid.t0, x).u; },
      [&](double t, Side side) {
        return exact(t, side == Side::Left ? grid.x_lo : grid.x_hi).u;
      },
      {0.2, 0.3, grid.t1});
  REQUIRE(states.size() == 3);
  CHECK(states[0].time == doctest::Approx(0.2));
  CHECK(states[2].time == doctest::Approx(0.4));
  CHECK(max_error(states[2], exact, grid) < 5e-3);

  GridSpec bad = grid;
  bad.x_lo = -0.5;
  CHECK_THROWS_AS(solve(
                      Equation::Bse, mp, bad, [](double) { return 0.0; },
                      [](double, Side) { return 0.0; }, {0.4}),
                  DomainViolation);
}

TEST_CASE("convergence order fit and the degenerate flag") {
  SUBCASE("steady row 2 is flagged, not fitted") {
    FamilyConstants fc;
    fc.c1 = 1.0;
    fc.c2 = 1.0;
    GridSpec box{-1.0, 2.0, 0, 0.1, 0.4, 1, 0.4};
    const ConvergenceResult r = convergence_order(
        Equation::Canonical, kCanon, {Table::T2, 2}, fc, box, {21, 41});
    CHECK(r.degenerate);
  }

  SUBCASE("T2 row 5 fits near order two") {
    FamilyConstants fc;
    fc.c1 = 1.0;
    fc.c2 = 0.0;
    fc.delta = 1;
    GridSpec box{-1.0, 2.0, 0, 0.1, 0.3, 1, 0.4};
    const ConvergenceResult r = convergence_order(
        Equation::Canonical, kCanon, {Table::T2, 5}, fc, box, {21, 41, 81});
    CHECK(!r.degenerate);
    CHECK(r.order > 1.7);
    CHECK(r.order < 2.3);
  }
}
