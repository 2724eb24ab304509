#pragma once

#include <vector>

#include "nlbs/catalog.hpp"
#include "nlbs/grid.hpp"
#include "nlbs/jet.hpp"

namespace nlbs {
namespace reduce {

/// One symmetry reduction of the canonical equation: row 1..11 with its
/// parameters.  Rows 1, 2 and 4 are linear; the others carry a squared
/// second-order term resolved into two explicit sign branches sigma = +-1.
struct ReducedODE {
  int row;
  int eps;    // +1/-1; ignored by rows 1, 2, 9, 10
  double k;   // rows 7, 8, 10

  explicit ReducedODE(int row, int eps = 1, double k = 0.0);
};

/// Square-root argument of the row's explicit form at (xi, phi, phi').
/// Rows 1, 2, 4 return +1 (no radical).
double radicand(const ReducedODE& ode, double xi, double phi, double dphi);

/// phi'' resolved from the reduced equation on the sigma branch; throws
/// NegativeRadicand when the radicand is negative.
double reduced_rhs(const ReducedODE& ode, int sigma, double xi, double phi,
                   double dphi);

/// Free-function form mirroring the row parameters directly.
double reduced_rhs(int row, int eps, double k, int sigma, double xi,
                   double phi, double dphi);

/// Similarity variable xi(t, x) of the row's ansatz.
double similarity(const ReducedODE& ode, double t, double x);

/// Jet of u(t, x) through the row's ansatz given phi, phi', phi'' at the
/// similarity variable.
Jet2 ansatz_jet(const ReducedODE& ode, double t, double x, double phi,
                double dphi, double ddphi);

/// Accepted integration samples of (xi, phi, phi') plus metadata.  phi'' is
/// recomputed from the reduced equation wherever needed, so the stored data
/// stays consistent with the ODE.
struct Trajectory {
  ReducedODE ode;
  int sigma = 1;
  double tol = 0.0;
  std::vector<double> xi;
  std::vector<double> phi;
  std::vector<double> dphi;
  long accepted = 0;
  long rejected = 0;
  /// True when integration halted early because the radicand fell below
  /// 10 * tol (a real-solution boundary), rather than reaching the target.
  bool radicand_stop = false;

  double xi_begin() const { return xi.front(); }
  double xi_end() const { return xi.back(); }
  bool contains(double s) const;

  /// Cubic-Hermite interpolation of phi and phi'; phi'' from the ODE.
  /// Throws RangeExceeded outside the integrated span.
  void sample(double s, double* phi_out, double* dphi_out, double* ddphi_out) const;
};

/// Adaptive embedded Dormand-Prince 5(4) integration of the reduced
/// equation from (xi0, phi0, phi'0) to xi1 (either direction).  Local error
/// is kept below tol; tol must lie in [1e-13, 1e-6].  Requires a strictly
/// positive initial radicand; halts flagged (not failed) when the radicand
/// falls below 10 * tol.
Trajectory integrate(const ReducedODE& ode, int sigma, double xi0, double phi0,
                     double dphi0, double xi1, double tol, double max_step = 0.0);

/// Lifted PDE sample of a trajectory through the ansatz, with the canonical
/// residual measured by 4th-order central differences on interior nodes
/// (two boundary layers excluded).
struct LiftResult {
  std::vector<double> t;  // nt
  std::vector<double> x;  // nx
  std::vector<double> u;  // row-major nt x nx
  double max_abs_fd_residual = 0.0;
  double max_rel_fd_residual = 0.0;
  long interior_nodes = 0;
};

LiftResult lift(const ReducedODE& ode, const Trajectory& traj, const GridSpec& grid);

/// Closed-form profile phi (and derivatives) of a T2 family read through its
/// generating ansatz, used as integration oracle.
struct Profile {
  double phi = 0.0;
  double dphi = 0.0;
  double ddphi = 0.0;
};
Profile closed_form_profile(const catalog::FamilyId& id,
                            const catalog::FamilyConstants& consts, double xi);

/// The reduction that generates a closed-form T2 family (rows 2..10).
/// Note the k sign flip for T2 row 9: its printed constant k in (0,1)
/// corresponds to the row-8 equation with parameter -k.
ReducedODE reduction_for_family(const catalog::FamilyId& id,
                                const catalog::FamilyConstants& consts);

/// Sign branch of the reduced equation matched by a profile at one point.
int matching_sigma(const ReducedODE& ode, const Profile& p);

/// Parametric-form solution samples of the first-order equation
/// w'(z) = 1 - eps k^2 z / w (cases a-d), with the defect of that equation
/// measured through the analytic quotient dw/dz = (dw/dtau)/(dz/dtau).
struct ParametricSamples {
  std::vector<double> tau;
  std::vector<double> z;
  std::vector<double> w;
  double max_defect = 0.0;
};
ParametricSamples parametric_family(char which, double k, double c1,
                                    double tau_lo, double tau_hi, int n);

/// First-order targets of the variable substitutions applied to integrated
/// trajectories of rows 7, 9, 10 and 11.
enum class Substitution { Ode11, Ode12, Ode13, Ode14 };

struct DefectReport {
  double max_defect = 0.0;
  long n_samples = 0;
  /// Substituted variables along the trajectory (z, w) for CSV export.
  std::vector<double> z;
  std::vector<double> w;
};

DefectReport substitution_check(Substitution which, const Trajectory& traj);

}  // namespace reduce
}  // namespace nlbs
