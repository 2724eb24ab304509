#pragma once

#include "nlbs/jet.hpp"

namespace nlbs {

/// Volatility structure of the underlying market model.
enum class VolatilityModelKind {
  TransactionCost,
  ReducedForm,
  Equilibrium,
};

/// Coefficients (a, b, c) of the equation
///
///   u_t + a x^2 u_xx + b x^3 u_xx^2 + c (x u_x - u) = 0,  a, b > 0, c >= 0,
///
/// stored as primary; the market parameters sigma = sqrt(2a), rho = b / (2a),
/// r = c are derived views.
struct ModelParams {
  double a;
  double b;
  double c;

  ModelParams(double a, double b, double c);

  double sigma() const;
  double rho() const;
  double rate() const { return c; }
};

/// Squared volatility of the chosen model.  Throws DenominatorVanishes when a
/// model denominator is within 1e-14 of zero (the formula's pole).
double volatility_sq(VolatilityModelKind kind, double sigma, double rho,
                     double S, double u_S, double u_SS);

/// |volatility_sq - first-order Taylor approximation around rho = 0|.
/// Identically zero for the transaction-cost model and O(rho^2) for the
/// other two.
double taylor_gap(VolatilityModelKind kind, double sigma, double rho,
                  double S, double u_S, double u_SS);

/// Residual of the (a, b, c) equation at (x, jet).  Requires x > 0.
double bse_residual(const ModelParams& params, double x, const Jet2& jet);

/// Residual of the canonical equation u_t + (u_x + u_xx)^2 = 0.
double canonical_residual(const Jet2& jet);

/// Scale-free residuals: raw / (1 + max term magnitude).
double bse_residual_relative(const ModelParams& params, double x, const Jet2& jet);
double canonical_residual_relative(const Jet2& jet);

}  // namespace nlbs
