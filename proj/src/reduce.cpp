#include "nlbs/reduce.hpp"

#include <algorithm>
#include <cmath>

namespace nlbs {
namespace reduce {

namespace {

constexpr int kRows = 11;

// Dormand-Prince 5(4) coefficients.
constexpr double kC[7] = {0.0, 1.0 / 5, 3.0 / 10, 4.0 / 5, 8.0 / 9, 1.0, 1.0};
constexpr double kA[7][6] = {
    {},
    {1.0 / 5},
    {3.0 / 40, 9.0 / 40},
    {44.0 / 45, -56.0 / 15, 32.0 / 9},
    {19372.0 / 6561, -25360.0 / 2187, 64448.0 / 6561, -212.0 / 729},
    {9017.0 / 3168, -355.0 / 33, 46732.0 / 5247, 49.0 / 176, -5103.0 / 18656},
    {35.0 / 384, 0.0, 500.0 / 1113, 125.0 / 192, -2187.0 / 6784, 11.0 / 84}};
constexpr double kB5[7] = {35.0 / 384,      0.0,        500.0 / 1113, 125.0 / 192,
                           -2187.0 / 6784, 11.0 / 84,  0.0};
constexpr double kB4[7] = {5179.0 / 57600,    0.0,          7571.0 / 16695,
                           393.0 / 640,       -92097.0 / 339200,
                           187.0 / 2100,      1.0 / 40};

struct State {
  double phi;
  double dphi;
};

}  // namespace

ReducedODE::ReducedODE(int row, int eps, double k) : row(row), eps(eps), k(k) {
  if (row < 1 || row > kRows) throw DomainViolation("reduction row must be 1..11");
  if (eps != 1 && eps != -1) throw DomainViolation("eps must be +1 or -1");
  if (row == 7 && k == 0.0)
    throw DomainViolation("row 7 footnote: k != 0");
  if (row == 8 && !(std::fabs(k) > 0.0 && std::fabs(k) < 1.0))
    throw DomainViolation("row 8 footnote: 0 < |k| < 1");
  if (row == 10 && (k == 0.0 || k == -1.0))
    throw DomainViolation("row 10 footnote: k != 0, -1");
}

double radicand(const ReducedODE& ode, double xi, double phi, double dphi) {
  switch (ode.row) {
    case 1:
    case 2:
    case 4:
      return 1.0;
    case 3:
      return -ode.eps * dphi;
    case 5:
      return ode.eps * std::exp(-xi);
    case 6:
      return -static_cast<double>(ode.eps);
    case 7:
      return -dphi / ode.k - ode.eps;
    case 8:
      return std::exp(-xi) / ode.k - ode.eps;
    case 9:
      return phi;
    case 10:
      return phi - ode.k * dphi;
    case 11:
      return std::exp(xi) * dphi;
  }
  throw Error("unknown reduction row");
}

double reduced_rhs(const ReducedODE& ode, int sigma, double xi, double phi,
                   double dphi) {
  if (sigma != 1 && sigma != -1) throw DomainViolation("sigma must be +1 or -1");
  switch (ode.row) {
    case 1:
    case 4:
      return 0.0;  // phi' is constant on solutions
    case 2:
      return -dphi;
    default:
      break;
  }
  const double r = radicand(ode, xi, phi, dphi);
  if (r < 0.0)
    throw NegativeRadicand("reduced equation radicand negative (row " +
                               std::to_string(ode.row) + ")",
                           r);
  const double root = sigma * std::sqrt(r);
  if (ode.row == 11) return dphi - ode.eps + root;
  return -dphi + root;
}

double reduced_rhs(int row, int eps, double k, int sigma, double xi,
                   double phi, double dphi) {
  return reduced_rhs(ReducedODE(row, eps, k), sigma, xi, phi, dphi);
}

double similarity(const ReducedODE& ode, double t, double x) {
  switch (ode.row) {
    case 1:
    case 4:
      return t;
    case 2:
    case 5:
    case 6:
    case 8:
    case 9:
      return x;
    case 3:
      return x + ode.eps * t;
    case 7:
      return x + t / ode.k;
    case 10:
      if (!(t > 0.0)) throw DomainError("row 10 ansatz requires t > 0");
      return x + ode.k * std::log(t);
    case 11:
      if (!(t > 0.0)) throw DomainError("row 11 ansatz requires t > 0");
      return x - std::log(t);
  }
  throw Error("unknown reduction row");
}

Jet2 ansatz_jet(const ReducedODE& ode, double t, double x, double phi,
                double dphi, double ddphi) {
  const double eps = ode.eps;
  switch (ode.row) {
    case 1:
      return {phi, dphi, 0.0, 0.0};
    case 2:
      return {phi, 0.0, dphi, ddphi};
    case 3:
      return {phi, eps * dphi, dphi, ddphi};
    case 4:
      return {phi - eps * x, dphi, -eps, 0.0};
    case 5: {
      const double E = std::exp(-x);
      return {phi - eps * t * E, -eps * E, dphi + eps * t * E, ddphi - eps * t * E};
    }
    case 6:
      return {phi + eps * t, eps, dphi, ddphi};
    case 7:
      return {phi + eps * t, dphi / ode.k + eps, dphi, ddphi};
    case 8: {
      const double E = std::exp(-x);
      return {phi + (eps - E / ode.k) * t, eps - E / ode.k,
              dphi + t / ode.k * E, ddphi - t / ode.k * E};
    }
    case 9:
      if (!(t != 0.0)) throw DomainError("row 9 ansatz requires t != 0");
      return {phi / t, -phi / (t * t), dphi / t, ddphi / t};
    case 10:
      return {phi / t, (ode.k * dphi - phi) / (t * t), dphi / t, ddphi / t};
    case 11: {
      const double E = std::exp(-x);
      const double g = phi - eps * x;
      return {E * g, -E * dphi / t, E * (dphi - eps - g),
              E * (g - 2.0 * (dphi - eps) + ddphi)};
    }
  }
  throw Error("unknown reduction row");
}

bool Trajectory::contains(double s) const {
  const double slack = 1e-12 * (1.0 + std::fabs(xi.back() - xi.front()));
  return s >= xi.front() - slack && s <= xi.back() + slack;
}

void Trajectory::sample(double s, double* phi_out, double* dphi_out,
                        double* ddphi_out) const {
  if (!contains(s))
    throw RangeExceeded("similarity value outside the integrated trajectory");
  s = std::clamp(s, xi.front(), xi.back());
  const auto it = std::upper_bound(xi.begin(), xi.end(), s);
  size_t i = it == xi.begin() ? 0 : static_cast<size_t>(it - xi.begin()) - 1;
  i = std::min(i, xi.size() - 2);

  const double h = xi[i + 1] - xi[i];
  const double tau = (s - xi[i]) / h;
  const double t2 = tau * tau, t3 = t2 * tau;
  const double h00 = 2 * t3 - 3 * t2 + 1, h10 = t3 - 2 * t2 + tau;
  const double h01 = -2 * t3 + 3 * t2, h11 = t3 - t2;

  const double dd0 = reduced_rhs(ode, sigma, xi[i], phi[i], dphi[i]);
  const double dd1 = reduced_rhs(ode, sigma, xi[i + 1], phi[i + 1], dphi[i + 1]);

  const double p = h00 * phi[i] + h10 * h * dphi[i] + h01 * phi[i + 1] +
                   h11 * h * dphi[i + 1];
  const double dp = h00 * dphi[i] + h10 * h * dd0 + h01 * dphi[i + 1] + h11 * h * dd1;
  if (phi_out) *phi_out = p;
  if (dphi_out) *dphi_out = dp;
  if (ddphi_out) *ddphi_out = reduced_rhs(ode, sigma, s, p, dp);
}

Trajectory integrate(const ReducedODE& ode, int sigma, double xi0, double phi0,
                     double dphi0, double xi1, double tol, double max_step) {
  if (!(tol >= 1e-13 && tol <= 1e-6))
    throw DomainViolation("integration tolerance must lie in [1e-13, 1e-6]");
  if (xi0 == xi1) throw DomainViolation("empty integration interval");
  const bool has_radical = !(ode.row == 1 || ode.row == 2 || ode.row == 4);
  if (has_radical && !(radicand(ode, xi0, phi0, dphi0) > 0.0))
    throw NegativeRadicand("initial radicand must be strictly positive",
                           radicand(ode, xi0, phi0, dphi0));

  Trajectory traj{ode, sigma, tol, {}, {}, {}};
  traj.xi.push_back(xi0);
  traj.phi.push_back(phi0);
  traj.dphi.push_back(dphi0);

  const double span = std::fabs(xi1 - xi0);
  const double dir = xi1 > xi0 ? 1.0 : -1.0;
  if (max_step <= 0.0) max_step = span / 20.0;
  const double h_min = std::max(1e-14 * span, 1e-300);

  auto rhs = [&](double s, const State& y) -> State {
    return {y.dphi, reduced_rhs(ode, sigma, s, y.phi, y.dphi)};
  };

  double s = xi0;
  State y{phi0, dphi0};
  double h = std::min(span / 100.0, max_step) * dir;

  while ((xi1 - s) * dir > 1e-14 * span) {
    if ((s + h - xi1) * dir > 0.0) h = xi1 - s;

    State k[7];
    bool stage_ok = true;
    State ynew{}, ylow{};
    try {
      for (int i = 0; i < 7; ++i) {
        State yi = y;
        for (int j = 0; j < i; ++j) {
          yi.phi += h * kA[i][j] * k[j].phi;
          yi.dphi += h * kA[i][j] * k[j].dphi;
        }
        k[i] = rhs(s + kC[i] * h, yi);
      }
      ynew = y;
      ylow = y;
      for (int i = 0; i < 7; ++i) {
        ynew.phi += h * kB5[i] * k[i].phi;
        ynew.dphi += h * kB5[i] * k[i].dphi;
        ylow.phi += h * kB4[i] * k[i].phi;
        ylow.dphi += h * kB4[i] * k[i].dphi;
      }
    } catch (const NegativeRadicand&) {
      stage_ok = false;  // stepped across a real-solution boundary
    }

    double err = 0.0;
    if (stage_ok) {
      const double sc_phi = tol * (1.0 + std::max(std::fabs(y.phi), std::fabs(ynew.phi)));
      const double sc_dphi =
          tol * (1.0 + std::max(std::fabs(y.dphi), std::fabs(ynew.dphi)));
      const double e_phi = (ynew.phi - ylow.phi) / sc_phi;
      const double e_dphi = (ynew.dphi - ylow.dphi) / sc_dphi;
      err = std::sqrt(0.5 * (e_phi * e_phi + e_dphi * e_dphi));
    }

    if (!stage_ok || err > 1.0) {
      ++traj.rejected;
      const double shrink = stage_ok ? std::max(0.2, 0.9 * std::pow(err, -0.2)) : 0.5;
      h *= shrink;
      if (std::fabs(h) < h_min) {
        // A collapsing step right at a radicand zero is the same
        // real-solution boundary as the flagged stop below.
        if (has_radical && radicand(ode, s, y.phi, y.dphi) < 1e3 * tol) {
          traj.radicand_stop = true;
          break;
        }
        throw StepSizeUnderflow("step size underflow near xi = " + std::to_string(s));
      }
      continue;
    }

    s += h;
    y = ynew;
    ++traj.accepted;
    traj.xi.push_back(s);
    traj.phi.push_back(y.phi);
    traj.dphi.push_back(y.dphi);

    if (has_radical && radicand(ode, s, y.phi, y.dphi) < 10.0 * tol) {
      traj.radicand_stop = true;
      break;
    }

    const double grow = err > 0.0 ? std::min(5.0, 0.9 * std::pow(err, -0.2)) : 5.0;
    h *= grow;
    if (std::fabs(h) > max_step) h = max_step * dir;
  }

  if (traj.xi.size() < 2)
    throw StepSizeUnderflow("integration produced no accepted step");
  if (dir < 0.0) {  // keep xi ascending for interpolation
    std::reverse(traj.xi.begin(), traj.xi.end());
    std::reverse(traj.phi.begin(), traj.phi.end());
    std::reverse(traj.dphi.begin(), traj.dphi.end());
  }
  return traj;
}

LiftResult lift(const ReducedODE& ode, const Trajectory& traj, const GridSpec& grid) {
  if (grid.nt < 5 || grid.nx < 5)
    throw DomainViolation("lift grid needs at least 5 nodes per direction");
  LiftResult out;
  out.t.resize(grid.nt);
  out.x.resize(grid.nx);
  out.u.resize(static_cast<size_t>(grid.nt) * grid.nx);
  const double ht = (grid.t1 - grid.t0) / (grid.nt - 1);
  const double hx = (grid.x_hi - grid.x_lo) / (grid.nx - 1);
  for (int i = 0; i < grid.nt; ++i) out.t[i] = grid.t0 + ht * i;
  for (int j = 0; j < grid.nx; ++j) out.x[j] = grid.x_lo + hx * j;

  for (int i = 0; i < grid.nt; ++i) {
    for (int j = 0; j < grid.nx; ++j) {
      const double s = similarity(ode, out.t[i], out.x[j]);
      double p, dp, ddp;
      traj.sample(s, &p, &dp, &ddp);
      out.u[static_cast<size_t>(i) * grid.nx + j] =
          ansatz_jet(ode, out.t[i], out.x[j], p, dp, ddp).u;
    }
  }

  auto U = [&](int i, int j) { return out.u[static_cast<size_t>(i) * grid.nx + j]; };
  for (int i = 2; i < grid.nt - 2; ++i) {
    for (int j = 2; j < grid.nx - 2; ++j) {
      const double u_t =
          (-U(i + 2, j) + 8 * U(i + 1, j) - 8 * U(i - 1, j) + U(i - 2, j)) / (12 * ht);
      const double u_x =
          (-U(i, j + 2) + 8 * U(i, j + 1) - 8 * U(i, j - 1) + U(i, j - 2)) / (12 * hx);
      const double u_xx = (-U(i, j + 2) + 16 * U(i, j + 1) - 30 * U(i, j) +
                           16 * U(i, j - 1) - U(i, j - 2)) /
                          (12 * hx * hx);
      const double sq = (u_x + u_xx) * (u_x + u_xx);
      const double res = u_t + sq;
      out.max_abs_fd_residual = std::max(out.max_abs_fd_residual, std::fabs(res));
      out.max_rel_fd_residual =
          std::max(out.max_rel_fd_residual,
                   std::fabs(res) / (1.0 + std::max(std::fabs(u_t), sq)));
      ++out.interior_nodes;
    }
  }
  return out;
}

Profile closed_form_profile(const catalog::FamilyId& id,
                            const catalog::FamilyConstants& consts, double xi) {
  if (id.table != catalog::Table::T2 || id.row < 2 || id.row > 10)
    throw DomainViolation("profile extraction supports T2 rows 2..10");
  // At t = 0 every such ansatz collapses to u(0, x) = phi(x).
  const ModelParams dummy(1.0, 1.0, 0.0);
  const Jet2 jet = catalog::evaluate(id, dummy, consts, 0.0, xi);
  return {jet.u, jet.u_x, jet.u_xx};
}

ReducedODE reduction_for_family(const catalog::FamilyId& id,
                                const catalog::FamilyConstants& consts) {
  if (id.table != catalog::Table::T2)
    throw DomainViolation("only T2 families map to canonical reductions");
  switch (id.row) {
    case 1: return ReducedODE(1);
    case 2: return ReducedODE(2);
    case 3: return ReducedODE(3, consts.eps);
    case 4: return ReducedODE(4, consts.eps);
    case 5: return ReducedODE(5, 1);
    case 6: return ReducedODE(6, -1);
    case 7: return ReducedODE(7, consts.eps, consts.k);
    case 8: return ReducedODE(8, -1, consts.k);
    // The printed row 9 carries k in (0,1) but is generated by the row-8
    // equation with parameter -k (the t-coefficients match only then).
    case 9: return ReducedODE(8, -1, -consts.k);
    case 10: return ReducedODE(8, 1, consts.k);
  }
  throw DomainViolation("unknown T2 row");
}

int matching_sigma(const ReducedODE& ode, const Profile& p) {
  const double s = ode.row == 11 ? p.ddphi - p.dphi + ode.eps : p.ddphi + p.dphi;
  return s >= 0.0 ? 1 : -1;
}

ParametricSamples parametric_family(char which, double k, double c1,
                                    double tau_lo, double tau_hi, int n) {
  if (c1 == 0.0)
    throw DomainViolation("c1 = 0 gives the degenerate z == 0 scale factor");
  if (n < 2) throw DomainViolation("need at least 2 tau samples");
  if (!(tau_hi > tau_lo)) throw DomainViolation("empty tau range");

  double eps;
  double r = 0.0;
  switch (which) {
    case 'a':
      if (k == 0.0) throw DomainViolation("case a requires k != 0");
      eps = -1.0;
      r = std::sqrt(4.0 * k * k + 1.0);
      break;
    case 'b':
      if (!(std::fabs(k) > 0.0 && std::fabs(k) < 0.5))
        throw DomainViolation("case b requires 0 < |k| < 1/2");
      eps = 1.0;
      r = std::sqrt(1.0 - 4.0 * k * k);
      break;
    case 'c':
      if (std::fabs(std::fabs(k) - 0.5) > 1e-12)
        throw DomainViolation("case c requires k = +-1/2");
      eps = 1.0;
      break;
    case 'd':
      if (!(std::fabs(k) > 0.5)) throw DomainViolation("case d requires |k| > 1/2");
      eps = 1.0;
      r = std::sqrt(4.0 * k * k - 1.0);
      break;
    default:
      throw DomainViolation("parametric case must be one of a, b, c, d");
  }

  auto z_of = [&](const JetValue& tau) -> JetValue {
    const JetValue g = 2.0 * tau - 1.0;
    switch (which) {
      case 'a':
      case 'b': {
        const double p = 1.0 - 1.0 / r;
        const double q = 1.0 + 1.0 / r;
        return c1 * pow(pow(abs(g + r), p) * pow(abs(g - r), q), -0.5);
      }
      case 'c':
        return (c1 / g) * exp(inverse(g));
      default: {
        const JetValue quad = tau * tau - tau + k * k;
        return c1 * pow(quad, -0.5) * exp((-1.0 / r) * atan(g / r));
      }
    }
  };

  // the printed singular tau values must lie outside the requested range
  const double margin = 1e-6 * (1.0 + std::fabs(r));
  auto inside = [&](double tau_star) {
    return tau_star > tau_lo - margin && tau_star < tau_hi + margin;
  };
  if (which == 'c') {
    if (inside(0.5)) throw SingularTau("tau range touches tau = 1/2");
  } else if (which != 'd') {
    if (inside(0.5 * (1.0 + r)) || inside(0.5 * (1.0 - r)))
      throw SingularTau("tau range touches |2 tau - 1| = radical");
  }
  if (inside(0.0)) throw SingularTau("tau = 0 gives w = 0 in the defect quotient");

  ParametricSamples out;
  out.tau.reserve(n);
  for (int i = 0; i < n; ++i) {
    const double tau = tau_lo + (tau_hi - tau_lo) * i / (n - 1);

    const JetValue zj = z_of(jet_space(tau));
    const JetValue wj = jet_space(tau) * zj;
    if (std::fabs(zj.d_x) < 1e-12 * (1.0 + std::fabs(zj.v)))
      throw SingularTau("dz/dtau vanishes inside the tau range");
    const double dwdz = wj.d_x / zj.d_x;
    const double defect = std::fabs(dwdz - (1.0 - eps * k * k * zj.v / wj.v));
    out.max_defect = std::max(out.max_defect, defect);
    out.tau.push_back(tau);
    out.z.push_back(zj.v);
    out.w.push_back(wj.v);
  }
  return out;
}

DefectReport substitution_check(Substitution which, const Trajectory& traj) {
  const ReducedODE& ode = traj.ode;
  const int need_row = which == Substitution::Ode11   ? 7
                       : which == Substitution::Ode12 ? 9
                       : which == Substitution::Ode13 ? 10
                                                      : 11;
  if (ode.row != need_row)
    throw DomainViolation("substitution expects a row-" + std::to_string(need_row) +
                          " trajectory, got row " + std::to_string(ode.row));

  DefectReport report;
  for (size_t i = 0; i < traj.xi.size(); ++i) {
    const double xi = traj.xi[i];
    const double phi = traj.phi[i];
    const double dphi = traj.dphi[i];
    const double ddphi = reduced_rhs(ode, traj.sigma, xi, phi, dphi);
    double z, w, defect;
    switch (which) {
      case Substitution::Ode11: {
        const double R = -(ode.eps + dphi / ode.k);
        if (!(R > 0.0))
          throw SubstitutionDomain("ode11 substitution needs eps + phi'/k < 0");
        const double ehalf = std::exp(0.5 * xi);
        z = -ehalf / ode.k;
        w = ehalf * std::sqrt(R);
        const double dz = 0.5 * z;
        const double dw = 0.5 * w + ehalf * (-ddphi / ode.k) / (2.0 * std::sqrt(R));
        defect = std::fabs(dw / dz - (1.0 - ode.eps * ode.k * ode.k * z / w));
        break;
      }
      case Substitution::Ode12: {
        if (!(phi > 0.0 && dphi > 0.0))
          throw SubstitutionDomain("ode12 substitution needs phi > 0 and phi' > 0");
        z = std::sqrt(phi * phi * phi) / 6.0;
        w = 0.5 * dphi;
        const double dwdz = 2.0 * ddphi / (std::sqrt(phi) * dphi);
        defect = std::fabs(dwdz - (1.0 / w - std::cbrt(4.0 / (3.0 * z))));
        break;
      }
      case Substitution::Ode13: {
        if (dphi == 0.0)
          throw SubstitutionDomain("ode13 substitution needs phi' != 0");
        const double rad = phi - ode.k * dphi;
        if (rad < 0.0)
          throw SubstitutionDomain("ode13 substitution needs phi - k phi' >= 0");
        z = phi;  // the target equation is w'(phi)
        w = dphi;
        defect = std::fabs(ddphi / dphi - (std::sqrt(rad) / dphi - 1.0));
        break;
      }
      case Substitution::Ode14: {
        if (!(dphi > 0.0))
          throw SubstitutionDomain("ode14 substitution needs phi' > 0");
        z = 0.5 * xi;
        w = std::exp(-0.5 * xi) * std::sqrt(dphi);
        const double lhs = std::exp(-0.5 * xi) * (ddphi - dphi) / std::sqrt(dphi);
        defect = std::fabs(lhs - (1.0 - ode.eps * std::exp(-2.0 * z) / w));
        break;
      }
      default:
        throw Error("unknown substitution");
    }
    report.max_defect = std::max(report.max_defect, defect);
    report.z.push_back(z);
    report.w.push_back(w);
    ++report.n_samples;
  }
  return report;
}

}  // namespace reduce
}  // namespace nlbs
