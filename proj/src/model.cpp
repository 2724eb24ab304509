#include "nlbs/model.hpp"

#include <algorithm>
#include <cmath>

namespace nlbs {

namespace {
constexpr double kPoleGuard = 1e-14;
}

ModelParams::ModelParams(double a, double b, double c) : a(a), b(b), c(c) {
  if (!(a > 0.0) || !(b > 0.0) || !(c >= 0.0))
    throw DomainViolation("model parameters require a > 0, b > 0, c >= 0");
  if (!std::isfinite(a) || !std::isfinite(b) || !std::isfinite(c))
    throw DomainViolation("model parameters must be finite");
}

double ModelParams::sigma() const { return std::sqrt(2.0 * a); }
double ModelParams::rho() const { return b / (2.0 * a); }

double volatility_sq(VolatilityModelKind kind, double sigma, double rho,
                     double S, double u_S, double u_SS) {
  const double s2 = sigma * sigma;
  switch (kind) {
    case VolatilityModelKind::TransactionCost:
      return s2 * (1.0 + 2.0 * rho * S * u_SS);
    case VolatilityModelKind::ReducedForm: {
      const double den = 1.0 - rho * S * u_SS;
      if (std::fabs(den) < kPoleGuard)
        throw DenominatorVanishes("reduced-form volatility denominator vanishes");
      return s2 / (den * den);
    }
    case VolatilityModelKind::Equilibrium: {
      const double num = 1.0 - rho * u_S;
      const double den = 1.0 - rho * u_S - rho * S * u_SS;
      if (std::fabs(den) < kPoleGuard)
        throw DenominatorVanishes("equilibrium volatility denominator vanishes");
      return s2 * num * num / (den * den);
    }
  }
  throw Error("unreachable volatility kind");
}

double taylor_gap(VolatilityModelKind kind, double sigma, double rho,
                  double S, double u_S, double u_SS) {
  const double full = volatility_sq(kind, sigma, rho, S, u_S, u_SS);
  const double linear = sigma * sigma * (1.0 + 2.0 * rho * S * u_SS);
  return std::fabs(full - linear);
}

double bse_residual(const ModelParams& params, double x, const Jet2& jet) {
  if (!(x > 0.0)) throw DomainError("bse residual requires x > 0");
  return jet.u_t + params.a * x * x * jet.u_xx +
         params.b * x * x * x * jet.u_xx * jet.u_xx +
         params.c * (x * jet.u_x - jet.u);
}

double canonical_residual(const Jet2& jet) {
  const double s = jet.u_x + jet.u_xx;
  return jet.u_t + s * s;
}

double bse_residual_relative(const ModelParams& params, double x, const Jet2& jet) {
  const double raw = bse_residual(params, x, jet);
  const double scale =
      std::max({std::fabs(jet.u_t), std::fabs(params.a * x * x * jet.u_xx),
                std::fabs(params.b * x * x * x * jet.u_xx * jet.u_xx),
                std::fabs(params.c * x * jet.u_x), std::fabs(params.c * jet.u)});
  return std::fabs(raw) / (1.0 + scale);
}

double canonical_residual_relative(const Jet2& jet) {
  const double s = jet.u_x + jet.u_xx;
  const double scale = std::max(std::fabs(jet.u_t), s * s);
  return std::fabs(canonical_residual(jet)) / (1.0 + scale);
}

}  // namespace nlbs
