#pragma once

#include <array>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "nlbs/catalog.hpp"
#include "nlbs/transform.hpp"

namespace nlbs {
namespace symmetry {

/// First-order value-and-gradient over (t, x, u); enough to differentiate
/// generator coefficients for Lie brackets.
struct Grad3 {
  double v = 0.0;
  double d_t = 0.0;
  double d_x = 0.0;
  double d_u = 0.0;
};

inline Grad3 g3_time(double t) { return {t, 1.0, 0.0, 0.0}; }
inline Grad3 g3_space(double x) { return {x, 0.0, 1.0, 0.0}; }
inline Grad3 g3_value(double u) { return {u, 0.0, 0.0, 1.0}; }
inline Grad3 g3_const(double k) { return {k, 0.0, 0.0, 0.0}; }

inline Grad3 operator+(const Grad3& p, const Grad3& q) {
  return {p.v + q.v, p.d_t + q.d_t, p.d_x + q.d_x, p.d_u + q.d_u};
}
inline Grad3 operator-(const Grad3& p) { return {-p.v, -p.d_t, -p.d_x, -p.d_u}; }
inline Grad3 operator-(const Grad3& p, const Grad3& q) { return p + (-q); }
inline Grad3 operator*(const Grad3& p, const Grad3& q) {
  return {p.v * q.v, p.d_t * q.v + p.v * q.d_t, p.d_x * q.v + p.v * q.d_x,
          p.d_u * q.v + p.v * q.d_u};
}
inline Grad3 operator*(double s, const Grad3& p) { return {s * p.v, s * p.d_t, s * p.d_x, s * p.d_u}; }
inline Grad3 exp(const Grad3& p) {
  const double e = std::exp(p.v);
  return {e, e * p.d_t, e * p.d_x, e * p.d_u};
}

/// A point-symmetry generator xi_t d/dt + xi_x d/dx + eta d/du with
/// closed-form coefficients of (t, x, u).
struct VectorField {
  std::string name;
  std::function<Grad3(const Grad3&, const Grad3&, const Grad3&)> xi_t;
  std::function<Grad3(const Grad3&, const Grad3&, const Grad3&)> xi_x;
  std::function<Grad3(const Grad3&, const Grad3&, const Grad3&)> eta;
};

/// Coefficient triple of a field evaluated at a point.
struct FieldValue {
  double xi_t = 0.0;
  double xi_x = 0.0;
  double eta = 0.0;
};

/// The five basis generators of the canonical equation's invariance algebra:
/// X1 = -d/dx, X2 = -e^{-x} d/du, X3 = d/dt, X4 = d/du, X5 = t d/dt - u d/du.
const std::array<VectorField, 5>& mai_basis();

FieldValue eval_field(const VectorField& f, double t, double x, double u);

/// Componentwise [A,B]^i = A(B^i) - B(A^i) at a point, with the directional
/// derivatives of the coefficients taken by Grad3 arithmetic.
FieldValue lie_bracket(const VectorField& A, const VectorField& B,
                       double t, double x, double u);

/// Expansion coefficients of every pairwise bracket in the basis, recovered
/// by sampling lie_bracket at generic points and solving a least-squares
/// system.  coeff[i][j][m] is the X_{m+1} coefficient of [X_{i+1}, X_{j+1}].
/// Throws NotInSpan when a sampled bracket is not in the basis span.
struct CommutatorTable {
  std::array<std::array<std::array<double, 5>, 5>, 5> coeff{};
};
CommutatorTable commutator_table();

/// Commutator table rendered as CSV (rows/cols X1..X5, cells the
/// basis-coefficient 5-tuples).
std::string commutator_table_csv(const CommutatorTable& table);

/// One-parameter group element generated by a real combination of the basis:
/// sum alpha_i X_i flowed for group parameter s.  The flow has closed form
/// because the t- and u-dynamics are linear and the x-dynamics is constant.
struct FlowMap {
  std::array<double, 5> alpha{};
  double s = 0.0;

  /// Flow of a single basis generator (index 1..5).
  static FlowMap basis(int index, double s);
  static FlowMap combination(const std::array<double, 5>& alpha, double s);
};

/// Forward action of the flow on a point (t, x, u).
SpacePoint flow_point(const FlowMap& fm, const SpacePoint& p);

/// Induced action on solution evaluators, with exact jet bookkeeping.
JetEvaluator apply_flow(const FlowMap& fm, JetEvaluator f);

/// One line of Proposition-style optimal-system data: a representative
/// subalgebra, its parameter constraints, and whether it admits
/// non-degenerate invariant solutions.
struct Subalgebra {
  std::string label;
  std::string constraints;
  bool no_invariant_solution = false;
  /// Draws a random admissible coefficient vector for the entry.
  std::function<std::array<double, 5>(std::mt19937_64&)> sample;
};

/// The 14-entry optimal system of one-dimensional subalgebras, with the
/// three degenerate algebras flagged.
std::vector<Subalgebra> optimal_system();

struct CertificateEntry {
  std::string generator;
  catalog::FamilyId family;
  double s = 0.0;
  double max_rel_residual = 0.0;
};

struct CertificateReport {
  std::vector<CertificateEntry> entries;
  double worst = 0.0;
};

/// Flows each sample solution by each flow map and records the worst
/// relative canonical residual of the transformed solution on the grid.
/// Failures are reported, not raised.
CertificateReport invariance_certificate(
    const std::vector<FlowMap>& flows, const std::vector<std::string>& flow_names,
    const std::vector<std::pair<catalog::FamilyId, catalog::FamilyConstants>>& solutions,
    const GridSpec& grid);

}  // namespace symmetry
}  // namespace nlbs
