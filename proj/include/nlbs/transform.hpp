#pragma once

#include <functional>

#include "nlbs/model.hpp"

namespace nlbs {

/// A point in either coordinate system.  In the original (price) variables
/// the economic domain is t > 0, x > 0; in canonical variables x is free.
struct SpacePoint {
  double t = 0.0;
  double x = 0.0;
  double u = 0.0;
};

/// Forward point transformation from (t, x, u) price variables to canonical
/// variables.  Two genuinely distinct branches, selected exactly at c = 0:
///
///   c = 0:  (t,  log(x/b),       b u / x  + (a/2)   log(x/b)  - (a^2/4) t)
///   c > 0:  (ct, log(cx/b) - ct, b u / (cx) + (a/2c) log(cx/b) - (a/2)(1 + a/2c) t)
///
/// Throws DomainError when x <= 0.
SpacePoint to_canonical(const ModelParams& params, const SpacePoint& p);

/// Hard-coded algebraic inverse of to_canonical (total: the price map is an
/// exponential).
SpacePoint from_canonical(const ModelParams& params, const SpacePoint& q);

/// A solution sample with exact derivatives: (t, x) -> (u, u_t, u_x, u_xx).
using JetEvaluator = std::function<Jet2(double t, double x)>;

/// Converts a canonical-space solution evaluator into a price-space solution
/// evaluator with exact jets, by composing the closed-form change of
/// variables in jet arithmetic.  Whenever the input satisfies the canonical
/// equation, the output satisfies the (a, b, c) equation.
JetEvaluator pushforward(const ModelParams& params, JetEvaluator canonical);

}  // namespace nlbs
