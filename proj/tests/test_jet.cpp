#include <memory>
#include <random>
#include <vector>

#include "doctest.h"
#include "nlbs/jet.hpp"
#include "oracles.hpp"

using namespace nlbs;

TEST_CASE("jet product rule") {
  const JetValue x3 = jet_space(3.0);
  const JetValue sq = x3 * x3;
  CHECK(sq.v == 9.0);
  CHECK(sq.d_t == 0.0);
  CHECK(sq.d_x == 6.0);
  CHECK(sq.d_xx == 2.0);

  const JetValue mixed = jet_time(2.0) * jet_space(3.0);
  CHECK(mixed.v == 6.0);
  CHECK(mixed.d_t == 3.0);
  CHECK(mixed.d_x == 2.0);
  CHECK(mixed.d_xx == 0.0);
}

TEST_CASE("jet elementary functions at frozen points") {
  const JetValue l = log(jet_space(1.0));
  CHECK(l.v == 0.0);
  CHECK(l.d_x == 1.0);
  CHECK(l.d_xx == -1.0);

  const JetValue s = sqrt(jet_space(4.0));
  CHECK(s.v == 2.0);
  CHECK(s.d_x == 0.25);
  CHECK(s.d_xx == doctest::Approx(-1.0 / 32.0).epsilon(1e-15));

  const JetValue a = atan(jet_space(0.0));
  CHECK(a.v == 0.0);
  CHECK(a.d_x == 1.0);
  CHECK(a.d_xx == 0.0);

  const JetValue e = exp(-jet_space(0.0));
  CHECK(e.v == 1.0);
  CHECK(e.d_t == 0.0);
  CHECK(e.d_x == -1.0);
  CHECK(e.d_xx == 1.0);
  // same values from the independent finite-difference oracle
  oracle::Field f = [](double, double x) { return std::exp(-x); };
  CHECK(oracle::rel_err(e.d_x, oracle::d_x(f, 0.0, 0.0)) < 1e-8);
  CHECK(oracle::rel_err(e.d_xx, oracle::d_xx(f, 0.0, 0.0)) < 1e-8);
}

TEST_CASE("jet domain errors at branch points") {
  CHECK_THROWS_AS((void)log(jet_space(0.0)), DomainError);
  CHECK_THROWS_AS((void)log(jet_space(-1.0)), DomainError);
  CHECK_THROWS_AS((void)sqrt(jet_space(-1e-9)), DomainError);
  CHECK_THROWS_AS((void)(jet_space(1.0) / jet_const(0.0)), DomainError);
  CHECK_THROWS_AS((void)abs(jet_const(0.0)), DomainError);
  CHECK_NOTHROW((void)sqrt(jet_const(0.0)));  // value channel stays exact
  CHECK(sqrt(jet_const(0.0)).v == 0.0);
}

TEST_CASE("jet algebra laws hold exactly") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> ud(-2.0, 2.0);
  for (int i = 0; i < 200; ++i) {
    const JetValue p{ud(rng), ud(rng), ud(rng), ud(rng)};
    const JetValue q{ud(rng), ud(rng), ud(rng), ud(rng)};
    const JetValue r{ud(rng), ud(rng), ud(rng), ud(rng)};

    const JetValue pq = p * q, qp = q * p;
    CHECK(pq.v == qp.v);
    CHECK(pq.d_t == qp.d_t);
    CHECK(pq.d_x == qp.d_x);
    CHECK(pq.d_xx == qp.d_xx);

    const JetValue assoc_l = (p * q) * r, assoc_r = p * (q * r);
    CHECK(assoc_l.d_xx == doctest::Approx(assoc_r.d_xx).epsilon(1e-14));

    const JetValue dist_l = p * (q + r), dist_r = p * q + p * r;
    CHECK(dist_l.v == doctest::Approx(dist_r.v).epsilon(1e-14));
    CHECK(dist_l.d_xx == doctest::Approx(dist_r.d_xx).epsilon(1e-14));

    // Leibniz consistency for the pure square
    const JetValue pp = p * p;
    CHECK(pp.d_xx == doctest::Approx(2.0 * (p.d_x * p.d_x + p.v * p.d_xx)).epsilon(1e-14));
  }
}

namespace {

// Random composite expressions over {+, *, exp, log, sqrt, atan}, evaluated
// both in jet arithmetic and as a plain double field for the FD oracle.
struct Expr {
  int kind;  // 0 t, 1 x, 2 const, 3 add, 4 mul, 5 exp, 6 log, 7 sqrt, 8 atan
  double value = 0.0;
  std::shared_ptr<Expr> lhs, rhs;

  JetValue eval_jet(double t, double x) const {
    switch (kind) {
      case 0: return jet_time(t);
      case 1: return jet_space(x);
      case 2: return jet_const(value);
      case 3: return lhs->eval_jet(t, x) + rhs->eval_jet(t, x);
      case 4: return lhs->eval_jet(t, x) * rhs->eval_jet(t, x);
      case 5: return exp(lhs->eval_jet(t, x));
      case 6: return log(lhs->eval_jet(t, x));
      case 7: return sqrt(lhs->eval_jet(t, x));
      default: return atan(lhs->eval_jet(t, x));
    }
  }

  double eval(double t, double x) const {
    switch (kind) {
      case 0: return t;
      case 1: return x;
      case 2: return value;
      case 3: return lhs->eval(t, x) + rhs->eval(t, x);
      case 4: return lhs->eval(t, x) * rhs->eval(t, x);
      case 5: return std::exp(lhs->eval(t, x));
      case 6: return std::log(lhs->eval(t, x));
      case 7: return std::sqrt(lhs->eval(t, x));
      default: return std::atan(lhs->eval(t, x));
    }
  }
};

std::shared_ptr<Expr> random_expr(std::mt19937_64& rng, int depth) {
  std::uniform_real_distribution<double> ud(0.2, 2.0);
  std::uniform_int_distribution<int> leaf(0, 2);
  std::uniform_int_distribution<int> node(3, 8);
  auto e = std::make_shared<Expr>();
  if (depth <= 0 || rng() % 4 == 0) {
    e->kind = leaf(rng);
    e->value = ud(rng);
    return e;
  }
  e->kind = node(rng);
  e->lhs = random_expr(rng, depth - 1);
  if (e->kind == 3 || e->kind == 4) e->rhs = random_expr(rng, depth - 1);
  return e;
}

}  // namespace

TEST_CASE("jet derivatives agree with the finite-difference oracle") {
  std::mt19937_64 rng(20240811);
  std::uniform_real_distribution<double> pt(0.3, 1.7);
  int accepted = 0;
  while (accepted < 1000) {
    const auto expr = random_expr(rng, 4);
    const double t = pt(rng), x = pt(rng);
    JetValue jet;
    bool ok = true;
    double stencil_max = 0.0;
    try {
      jet = expr->eval_jet(t, x);
      // probe the full FD stencil so the oracle itself stays in-domain
      for (double dt : {-2e-5, 0.0, 2e-5})
        for (double dx : {-2e-4, 0.0, 2e-4})
          stencil_max = std::max(stencil_max, std::fabs(expr->eval(t + dt, x + dx)));
    } catch (const DomainError&) {
      ok = false;
    }
    // keep magnitudes small so the oracle's own truncation and round-off
    // stay well below the 1e-6 comparison
    const double deriv_max =
        std::max({std::fabs(jet.d_t), std::fabs(jet.d_x), std::fabs(jet.d_xx)});
    if (!ok || !std::isfinite(stencil_max) || stencil_max > 3.0 || deriv_max > 10.0)
      continue;
    ++accepted;

    oracle::Field f = [&](double tt, double xx) { return expr->eval(tt, xx); };
    CHECK(oracle::rel_err(jet.v, f(t, x)) < 1e-12);
    CHECK(oracle::rel_err(jet.d_t, oracle::d_t(f, t, x)) < 1e-6);
    CHECK(oracle::rel_err(jet.d_x, oracle::d_x(f, t, x)) < 1e-6);
    CHECK(oracle::rel_err(jet.d_xx, oracle::d_xx(f, t, x)) < 1e-6);
  }
}
