#include <cmath>
#include <random>

#include "doctest.h"
#include "nlbs/catalog.hpp"
#include "nlbs/model.hpp"

using namespace nlbs;

TEST_CASE("model parameter invariants") {
  CHECK_THROWS_AS(ModelParams(0.0, 1.0, 0.0), DomainViolation);
  CHECK_THROWS_AS(ModelParams(1.0, -1.0, 0.0), DomainViolation);
  CHECK_THROWS_AS(ModelParams(1.0, 1.0, -0.1), DomainViolation);
  const ModelParams p(2.0, 1.0, 0.5);
  CHECK(p.sigma() == doctest::Approx(2.0));
  CHECK(p.rho() == doctest::Approx(0.25));
  CHECK(p.rate() == 0.5);
}

TEST_CASE("volatility formulas") {
  using K = VolatilityModelKind;
  CHECK(volatility_sq(K::TransactionCost, 1.0, 0.0, 5.0, 2.0, 3.0) == 1.0);
  CHECK(volatility_sq(K::ReducedForm, 1.0, 0.1, 1.0, 0.0, 1.0) ==
        doctest::Approx(1.0 / 0.81).epsilon(1e-15));
  CHECK(volatility_sq(K::Equilibrium, 2.0, 0.0, 3.0, 1.0, 1.0) == 4.0);

  // perfectly liquid limit: all kinds collapse to sigma^2
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> ud(0.5, 2.0);
  for (int i = 0; i < 100; ++i) {
    const double s = ud(rng), S = ud(rng), uS = ud(rng), uSS = ud(rng);
    for (K k : {K::TransactionCost, K::ReducedForm, K::Equilibrium})
      CHECK(volatility_sq(k, s, 0.0, S, uS, uSS) == s * s);
  }

  CHECK_THROWS_AS(volatility_sq(K::ReducedForm, 1.0, 0.5, 2.0, 0.0, 1.0),
                  DenominatorVanishes);
  // 1 - rho uS - rho S uSS = 1 - 0.5 - 0.5 = 0
  CHECK_THROWS_AS(volatility_sq(K::Equilibrium, 1.0, 0.5, 1.0, 1.0, 1.0),
                  DenominatorVanishes);
}

TEST_CASE("taylor gap is quadratic in rho") {
  using K = VolatilityModelKind;
  CHECK(taylor_gap(K::TransactionCost, 1.3, 0.2, 2.0, 1.0, -1.0) == 0.0);
  CHECK(taylor_gap(K::Equilibrium, 1.0, 1e-3, 1.0, 1.0, 1.0) <= 1e-4);

  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> ud(0.5, 2.0);
  for (K kind : {K::ReducedForm, K::Equilibrium}) {
    for (int i = 0; i < 20; ++i) {
      const double s = ud(rng), S = ud(rng), uS = ud(rng), uSS = ud(rng);
      for (double rho : {1e-2, 5e-3}) {
        const double ratio = taylor_gap(kind, s, rho, S, uS, uSS) /
                             taylor_gap(kind, s, rho / 2.0, S, uS, uSS);
        CHECK(ratio > 3.6);
        CHECK(ratio < 4.4);
      }
    }
  }
}

TEST_CASE("bse residual") {
  const ModelParams p11(1.0, 1.0, 0.0);
  CHECK(bse_residual(p11, 1.0, Jet2{0, 0, 0, 0}) == 0.0);
  CHECK(bse_residual(p11, 1.0, Jet2{0, 1, 0, 0}) == 1.0);
  CHECK_THROWS_AS(bse_residual(p11, 0.0, Jet2{}), DomainError);
  CHECK_THROWS_AS(bse_residual(p11, -1.0, Jet2{}), DomainError);

  // T3 row 1 with c1 = c2 = 0 at t = 0, x = e: u = -(a/2b) x log x
  const ModelParams p(2.0, 1.0, 0.0);
  const double x = std::exp(1.0);
  const Jet2 jet = catalog::evaluate({catalog::Table::T3, 1}, p, {}, 1e-30, x);
  CHECK(jet.u == doctest::Approx(-x).epsilon(1e-14));
  CHECK(jet.u_xx == doctest::Approx(-1.0 / x).epsilon(1e-14));
  CHECK(std::fabs(bse_residual(p, x, jet)) < 1e-14);
}

TEST_CASE("canonical residual") {
  CHECK(canonical_residual(Jet2{0, 0, 0, 0}) == 0.0);
  CHECK(canonical_residual(Jet2{0, -1, 1, 0}) == 0.0);
  const double e = std::exp(-0.37);
  CHECK(canonical_residual(Jet2{e, 0, -e, e}) == 0.0);

  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> ud(-3.0, 3.0);
  for (int i = 0; i < 200; ++i) {
    const Jet2 j{ud(rng), ud(rng), ud(rng), ud(rng)};
    CHECK(canonical_residual(j) >= j.u_t);
  }
}

TEST_CASE("bse residual polynomial structure") {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> ud(-2.0, 2.0);
  std::uniform_real_distribution<double> xp(0.2, 3.0);
  for (int i = 0; i < 200; ++i) {
    const ModelParams p(0.5 + std::fabs(ud(rng)), 0.5 + std::fabs(ud(rng)),
                        std::fabs(ud(rng)));
    const double x = xp(rng);
    const Jet2 j1{ud(rng), ud(rng), ud(rng), ud(rng)};
    const Jet2 j2{ud(rng), ud(rng), ud(rng), ud(rng)};
    const Jet2 sum{j1.u + j2.u, j1.u_t + j2.u_t, j1.u_x + j2.u_x, j1.u_xx + j2.u_xx};
    // superposition defect is exactly the quadratic cross term
    const double lhs = bse_residual(p, x, sum);
    const double rhs = bse_residual(p, x, j1) + bse_residual(p, x, j2) +
                       2.0 * p.b * x * x * x * j1.u_xx * j2.u_xx;
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
  }
}
