#include <cmath>
#include <random>

#include "doctest.h"
#include "nlbs/catalog.hpp"
#include "nlbs/transform.hpp"

using namespace nlbs;

namespace {

double rel(double got, double want) {
  return std::fabs(got - want) / (1.0 + std::fabs(want));
}

}  // namespace

TEST_CASE("forward transform examples") {
  const SpacePoint q1 = to_canonical(ModelParams(2, 1, 0), {0, 1, 0});
  CHECK(q1.t == 0.0);
  CHECK(q1.x == 0.0);
  CHECK(q1.u == 0.0);

  const SpacePoint q2 = to_canonical(ModelParams(2, 1, 1), {0, 1, 1});
  CHECK(q2.t == 0.0);
  CHECK(q2.x == 0.0);
  CHECK(q2.u == doctest::Approx(1.0));

  const SpacePoint q3 = to_canonical(ModelParams(2, 1, 0), {1, 1, 0});
  CHECK(q3.t == 1.0);
  CHECK(q3.x == 0.0);
  CHECK(q3.u == doctest::Approx(-1.0));

  CHECK_THROWS_AS(to_canonical(ModelParams(2, 1, 0), {1, 0, 0}), DomainError);
  CHECK_THROWS_AS(to_canonical(ModelParams(2, 1, 0), {1, -1, 0}), DomainError);
}

TEST_CASE("inverse transform examples") {
  const SpacePoint p1 = from_canonical(ModelParams(2, 1, 0), {0, 0, 0});
  CHECK(p1.t == 0.0);
  CHECK(p1.x == doctest::Approx(1.0));
  CHECK(p1.u == doctest::Approx(0.0));

  // q = (1, 0, 0), c > 0 branch; checked by the forward map
  const ModelParams mp(2, 1, 1);
  const SpacePoint p2 = from_canonical(mp, {1, 0, 0});
  CHECK(p2.t == doctest::Approx(1.0));
  CHECK(p2.x == doctest::Approx(std::exp(1.0)));
  const SpacePoint back = to_canonical(mp, p2);
  CHECK(rel(back.t, 1.0) < 1e-14);
  CHECK(rel(back.x, 0.0) < 1e-14);
  CHECK(rel(back.u, 0.0) < 1e-14);
}

TEST_CASE("round trip identity on 1000 points per branch") {
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> tu(0.05, 3.0);
  std::uniform_real_distribution<double> xu(0.05, 5.0);
  std::uniform_real_distribution<double> uu(-4.0, 4.0);
  std::uniform_real_distribution<double> pu(0.5, 3.0);
  std::uniform_real_distribution<double> cu(0.2, 2.0);

  for (bool zero_c : {true, false}) {
    for (int i = 0; i < 1000; ++i) {
      const ModelParams mp(pu(rng), pu(rng), zero_c ? 0.0 : cu(rng));
      const SpacePoint p{tu(rng), xu(rng), uu(rng)};
      const SpacePoint p2 = from_canonical(mp, to_canonical(mp, p));
      CHECK(rel(p2.t, p.t) < 1e-12);
      CHECK(rel(p2.x, p.x) < 1e-12);
      CHECK(rel(p2.u, p.u) < 1e-12);

      const SpacePoint q{tu(rng), uu(rng), uu(rng)};  // canonical x is free
      const SpacePoint q2 = to_canonical(mp, from_canonical(mp, q));
      CHECK(rel(q2.t, q.t) < 1e-12);
      CHECK(rel(q2.x, q.x) < 1e-12);
      CHECK(rel(q2.u, q.u) < 1e-12);
    }
  }
}

TEST_CASE("x to xbar is strictly increasing at fixed t") {
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> pu(0.5, 3.0);
  for (double c : {0.0, 0.7}) {
    const ModelParams mp(pu(rng), pu(rng), c);
    double prev = to_canonical(mp, {1.0, 0.01, 0.0}).x;
    for (double x = 0.05; x < 6.0; x += 0.05) {
      const double cur = to_canonical(mp, {1.0, x, 0.0}).x;
      CHECK(cur > prev);
      prev = cur;
    }
  }
}

TEST_CASE("pushforward of canonical solutions solves the price equation") {
  using catalog::FamilyConstants;
  using catalog::FamilyId;
  using catalog::Table;

  SUBCASE("T2 row 2 through the c = 0 branch") {
    const ModelParams mp(2, 1, 0);
    FamilyConstants fc;
    fc.c1 = 0.4;
    fc.c2 = 1.3;
    JetEvaluator f = catalog::evaluator({Table::T2, 2}, mp, fc);
    JetEvaluator g = pushforward(mp, f);
    double worst = 0.0;
    for (int i = 0; i < 20; ++i)
      for (int j = 0; j < 20; ++j) {
        const double t = 0.1 + 1.9 * i / 19.0, x = 0.1 + 4.9 * j / 19.0;
        worst = std::max(worst, bse_residual_relative(mp, x, g(t, x)));
      }
    CHECK(worst < 1e-10);
  }

  SUBCASE("zero canonical solution maps to the affine-in-log part") {
    for (const ModelParams& mp : {ModelParams(2, 1, 0), ModelParams(1.4, 0.6, 0.9)}) {
      JetEvaluator g = pushforward(mp, [](double, double) { return Jet2{}; });
      double worst = 0.0;
      for (int i = 0; i < 20; ++i)
        for (int j = 0; j < 20; ++j) {
          const double t = 0.1 + 1.9 * i / 19.0, x = 0.1 + 4.9 * j / 19.0;
          worst = std::max(worst, bse_residual_relative(mp, x, g(t, x)));
        }
      CHECK(worst < 1e-12);
    }
  }

  SUBCASE("T2 row 6 through the c = 1 branch") {
    const ModelParams mp(1, 1, 1);
    FamilyConstants fc;
    fc.c1 = 0.2;
    fc.c2 = 0.7;
    fc.eps = -1;
    fc.delta = 1;
    JetEvaluator g = pushforward(mp, catalog::evaluator({Table::T2, 6}, mp, fc));
    double worst = 0.0;
    for (int i = 0; i < 20; ++i)
      for (int j = 0; j < 20; ++j) {
        const double t = 0.1 + 1.9 * i / 19.0, x = 0.1 + 4.9 * j / 19.0;
        worst = std::max(worst, bse_residual_relative(mp, x, g(t, x)));
      }
    CHECK(worst < 1e-10);
  }

  SUBCASE("pushforward evaluation requires x > 0") {
    JetEvaluator g =
        pushforward(ModelParams(2, 1, 0), [](double, double) { return Jet2{}; });
    CHECK_THROWS_AS((void)g(1.0, 0.0), DomainError);
  }
}
