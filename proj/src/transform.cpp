#include "nlbs/transform.hpp"

#include <cmath>

namespace nlbs {

SpacePoint to_canonical(const ModelParams& params, const SpacePoint& p) {
  if (!(p.x > 0.0)) throw DomainError("point transformation requires x > 0");
  const double a = params.a, b = params.b, c = params.c;
  if (c == 0.0) {
    const double xb = std::log(p.x / b);
    return {p.t, xb, b * p.u / p.x + 0.5 * a * xb - 0.25 * a * a * p.t};
  }
  const double xb = std::log(c * p.x / b);
  return {c * p.t, xb - c * p.t,
          b * p.u / (c * p.x) + a / (2.0 * c) * xb -
              0.5 * a * (1.0 + a / (2.0 * c)) * p.t};
}

SpacePoint from_canonical(const ModelParams& params, const SpacePoint& q) {
  const double a = params.a, b = params.b, c = params.c;
  if (c == 0.0) {
    const double x = b * std::exp(q.x);
    const double u = x / b * (q.u - 0.5 * a * q.x + 0.25 * a * a * q.t);
    return {q.t, x, u};
  }
  const double x = b / c * std::exp(q.x + q.t);
  const double u = c * x / b *
                   (q.u - a / (2.0 * c) * (q.x + q.t) +
                    a / (2.0 * c) * (1.0 + a / (2.0 * c)) * q.t);
  return {q.t / c, x, u};
}

JetEvaluator pushforward(const ModelParams& params, JetEvaluator canonical) {
  const double a = params.a, b = params.b, c = params.c;
  return [a, b, c, f = std::move(canonical)](double t, double x) -> Jet2 {
    if (!(x > 0.0)) throw DomainError("pushforward evaluation requires x > 0");

    // Canonical coordinates of the evaluation point and the canonical jet
    // there.  Only first canonical t-derivatives are needed: the coordinate
    // change is linear in t.
    double tb, xb;
    if (c == 0.0) {
      tb = t;
      xb = std::log(x / b);
    } else {
      tb = c * t;
      xb = std::log(c * x / b) - c * t;
    }
    const Jet2 F = f(tb, xb);

    // Chain rule into a (t, x) jet of w(t, x) = F(tbar, xbar).
    JetValue w;
    if (c == 0.0) {
      w = {F.u, F.u_t, F.u_x / x, (F.u_xx - F.u_x) / (x * x)};
    } else {
      w = {F.u, c * (F.u_t - F.u_x), F.u_x / x, (F.u_xx - F.u_x) / (x * x)};
    }

    const JetValue tj = jet_time(t);
    const JetValue xj = jet_space(x);
    if (c == 0.0) {
      const JetValue xbj = log(xj / b);
      return as_jet2((xj / b) * (w - 0.5 * a * xbj + 0.25 * a * a * tj));
    }
    const JetValue tbj = tj * c;
    const JetValue xbj = log(xj * (c / b)) - tbj;
    const double h = a / (2.0 * c);
    return as_jet2((xj * (c / b)) * (w - h * (xbj + tbj) + h * (1.0 + h) * tbj));
  };
}

}  // namespace nlbs
