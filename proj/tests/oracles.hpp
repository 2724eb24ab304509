#pragma once

#include <cmath>
#include <functional>

// Finite-difference oracles for jet derivatives, kept independent of the jet
// arithmetic they check.  Central stencils; h tuned per derivative order.

namespace oracle {

using Field = std::function<double(double t, double x)>;

inline double d_t(const Field& f, double t, double x, double h = 1e-5) {
  return (f(t + h, x) - f(t - h, x)) / (2.0 * h);
}

inline double d_x(const Field& f, double t, double x, double h = 1e-5) {
  return (f(t, x + h) - f(t, x - h)) / (2.0 * h);
}

inline double d_xx(const Field& f, double t, double x, double h = 1e-4) {
  return (f(t, x + h) - 2.0 * f(t, x) + f(t, x - h)) / (h * h);
}

inline double rel_err(double got, double want) {
  return std::fabs(got - want) / (1.0 + std::fabs(want));
}

}  // namespace oracle
