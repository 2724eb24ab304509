#pragma once

#include <cmath>

#include "nlbs/errors.hpp"

namespace nlbs {

/// Second-order jet of a scalar field at a point: the data both PDE
/// residuals consume.
struct Jet2 {
  double u = 0.0;
  double u_t = 0.0;
  double u_x = 0.0;
  double u_xx = 0.0;
};

/// Truncated jet over the two independent variables (t, x): value, first
/// derivative in t, first and second derivative in x.  The equations under
/// study involve no u_tt or u_tx, so the jet does not carry them.
///
/// Seeding convention: the coordinate t is (t, 1, 0, 0), the coordinate x is
/// (x, 0, 1, 0), a constant is (k, 0, 0, 0).  Arithmetic below propagates
/// exact product/chain rules, so evaluating a closed form once in JetValue
/// arithmetic yields u, u_t, u_x, u_xx up to round-off.
struct JetValue {
  double v = 0.0;
  double d_t = 0.0;
  double d_x = 0.0;
  double d_xx = 0.0;
};

inline JetValue jet_time(double t) { return {t, 1.0, 0.0, 0.0}; }
inline JetValue jet_space(double x) { return {x, 0.0, 1.0, 0.0}; }
inline JetValue jet_const(double k) { return {k, 0.0, 0.0, 0.0}; }

inline Jet2 as_jet2(const JetValue& p) { return {p.v, p.d_t, p.d_x, p.d_xx}; }

inline JetValue operator+(const JetValue& p, const JetValue& q) {
  return {p.v + q.v, p.d_t + q.d_t, p.d_x + q.d_x, p.d_xx + q.d_xx};
}
inline JetValue operator-(const JetValue& p, const JetValue& q) {
  return {p.v - q.v, p.d_t - q.d_t, p.d_x - q.d_x, p.d_xx - q.d_xx};
}
inline JetValue operator-(const JetValue& p) {
  return {-p.v, -p.d_t, -p.d_x, -p.d_xx};
}

// Summands are grouped so the product is bitwise commutative.
inline JetValue operator*(const JetValue& p, const JetValue& q) {
  return {p.v * q.v,
          p.d_t * q.v + p.v * q.d_t,
          p.d_x * q.v + p.v * q.d_x,
          (p.d_xx * q.v + p.v * q.d_xx) + 2.0 * p.d_x * q.d_x};
}

inline JetValue operator+(const JetValue& p, double s) { return {p.v + s, p.d_t, p.d_x, p.d_xx}; }
inline JetValue operator+(double s, const JetValue& p) { return p + s; }
inline JetValue operator-(const JetValue& p, double s) { return {p.v - s, p.d_t, p.d_x, p.d_xx}; }
inline JetValue operator-(double s, const JetValue& p) { return -p + s; }
inline JetValue operator*(const JetValue& p, double s) {
  return {p.v * s, p.d_t * s, p.d_x * s, p.d_xx * s};
}
inline JetValue operator*(double s, const JetValue& p) { return p * s; }
inline JetValue operator/(const JetValue& p, double s) {
  if (s == 0.0) throw DomainError("jet division by zero scalar");
  return p * (1.0 / s);
}

/// Chain rule through a scalar function given f(v), f'(v), f''(v).
inline JetValue jet_chain(const JetValue& p, double f, double f1, double f2) {
  return {f, f1 * p.d_t, f1 * p.d_x, f2 * p.d_x * p.d_x + f1 * p.d_xx};
}

inline JetValue inverse(const JetValue& q) {
  if (q.v == 0.0) throw DomainError("jet division by zero");
  const double iv = 1.0 / q.v;
  return jet_chain(q, iv, -iv * iv, 2.0 * iv * iv * iv);
}
inline JetValue operator/(const JetValue& p, const JetValue& q) { return p * inverse(q); }
inline JetValue operator/(double s, const JetValue& q) { return inverse(q) * s; }

inline JetValue exp(const JetValue& p) {
  const double e = std::exp(p.v);
  return jet_chain(p, e, e, e);
}

inline JetValue log(const JetValue& p) {
  if (!(p.v > 0.0)) throw DomainError("log of nonpositive jet value");
  const double iv = 1.0 / p.v;
  return jet_chain(p, std::log(p.v), iv, -iv * iv);
}

/// sqrt(0) keeps the exact value 0; the derivative channels are infinite at
/// the branch point and propagate as IEEE inf/nan without touching values.
inline JetValue sqrt(const JetValue& p) {
  if (p.v < 0.0) throw DomainError("sqrt of negative jet value");
  const double r = std::sqrt(p.v);
  const double f1 = 0.5 / r;
  return jet_chain(p, r, f1, -0.5 * f1 / p.v);
}

inline JetValue atan(const JetValue& p) {
  const double d = 1.0 + p.v * p.v;
  return jet_chain(p, std::atan(p.v), 1.0 / d, -2.0 * p.v / (d * d));
}

inline JetValue abs(const JetValue& p) {
  if (p.v == 0.0) throw DomainError("abs of jet value at zero");
  return p.v > 0.0 ? p : -p;
}

/// Real power with a strictly positive base.
inline JetValue pow(const JetValue& p, double e) {
  if (!(p.v > 0.0)) throw DomainError("pow of nonpositive jet base");
  const double f = std::pow(p.v, e);
  const double f1 = e * f / p.v;
  const double f2 = e * (e - 1.0) * f / (p.v * p.v);
  return jet_chain(p, f, f1, f2);
}

}  // namespace nlbs
