#include "nlbs/fdsolver.hpp"

#include <algorithm>
#include <cmath>

namespace nlbs {
namespace fd {

namespace {

constexpr double kBlowup = 1e12;

struct Operator {
  Equation eq;
  const ModelParams* params;
  double dx;
  Eigen::ArrayXd x;

  /// Semi-discrete spatial operator: du/dt = F(u) on interior nodes.
  /// The state's boundary entries are assumed to already hold the boundary
  /// data at the evaluation time.
  void apply(const Eigen::ArrayXd& u, Eigen::ArrayXd& dudt) const {
    const Eigen::Index n = u.size();
    dudt.setZero(n);
    for (Eigen::Index i = 1; i + 1 < n; ++i) {
      const double u_x = (u[i + 1] - u[i - 1]) / (2.0 * dx);
      const double u_xx = (u[i + 1] - 2.0 * u[i] + u[i - 1]) / (dx * dx);
      if (eq == Equation::Canonical) {
        const double s = u_x + u_xx;
        dudt[i] = -s * s;
      } else {
        const double xv = x[i];
        dudt[i] = -(params->a * xv * xv * u_xx +
                    params->b * xv * xv * xv * u_xx * u_xx +
                    params->c * (xv * u_x - u[i]));
      }
    }
  }

  /// Parabolic step bound from the linearization dF/du_xx of the current
  /// state, with an advective bound as a backstop where diffusion degenerates.
  double stable_dt(const Eigen::ArrayXd& u, double safety) const {
    const Eigen::Index n = u.size();
    double diff = 0.0, adv = 0.0;
    for (Eigen::Index i = 1; i + 1 < n; ++i) {
      const double u_x = (u[i + 1] - u[i - 1]) / (2.0 * dx);
      const double u_xx = (u[i + 1] - 2.0 * u[i] + u[i - 1]) / (dx * dx);
      if (eq == Equation::Canonical) {
        const double s = u_x + u_xx;
        diff = std::max(diff, std::fabs(2.0 * s));
        adv = std::max(adv, std::fabs(2.0 * s));
      } else {
        const double xv = x[i];
        diff = std::max(diff, std::fabs(xv * xv * (params->a + 2.0 * params->b * xv * u_xx)));
        adv = std::max(adv, std::fabs(params->c * xv));
      }
    }
    double dt = safety * dx * dx / (2.0 * std::max(diff, 1e-12));
    dt = std::min(dt, safety * dx / std::max(adv, 1e-12));
    return std::min(dt, 0.25);
  }
};

}  // namespace

std::vector<FieldState> solve(Equation eq, const ModelParams& params,
                              const GridSpec& grid, const InitialFn& initial,
                              const BoundaryFn& boundary,
                              const std::vector<double>& snapshot_times) {
  if (grid.nx < 8) throw DomainViolation("fd grid needs nx >= 8");
  if (!(grid.x_lo < grid.x_hi && grid.t0 < grid.t1))
    throw DomainViolation("fd grid box is empty");
  if (eq == Equation::Bse && !(grid.x_lo > 0.0))
    throw DomainViolation("bse runs require x_lo > 0");
  if (!(grid.safety > 0.0 && grid.safety <= 1.0))
    throw DomainViolation("safety factor must lie in (0, 1]");

  const double dx = (grid.x_hi - grid.x_lo) / (grid.nx - 1);
  Operator op{eq, &params, dx, Eigen::ArrayXd::LinSpaced(grid.nx, grid.x_lo, grid.x_hi)};

  Eigen::ArrayXd u(grid.nx);
  for (int i = 0; i < grid.nx; ++i) u[i] = initial(op.x[i]);

  if (std::fabs(u[0] - boundary(grid.t0, Side::Left)) > 1e-10 ||
      std::fabs(u[grid.nx - 1] - boundary(grid.t0, Side::Right)) > 1e-10)
    throw CornerMismatch("initial and boundary data disagree at a grid corner");

  std::vector<double> snaps = snapshot_times;
  if (snaps.empty()) snaps.push_back(grid.t1);
  std::sort(snaps.begin(), snaps.end());
  for (double s : snaps)
    if (s < grid.t0 - 1e-14 || s > grid.t1 + 1e-14)
      throw DomainViolation("snapshot time outside [t0, t1]");

  std::vector<FieldState> out;
  double t = grid.t0;
  size_t next_snap = 0;
  Eigen::ArrayXd k1(grid.nx), k2(grid.nx), k3(grid.nx), k4(grid.nx), stage(grid.nx);

  auto impose = [&](Eigen::ArrayXd& v, double time) {
    v[0] = boundary(time, Side::Left);
    v[grid.nx - 1] = boundary(time, Side::Right);
  };
  impose(u, t);

  while (next_snap < snaps.size() && snaps[next_snap] <= t + 1e-14) {
    out.push_back({snaps[next_snap], u});
    ++next_snap;
  }

  while (next_snap < snaps.size()) {
    double dt = op.stable_dt(u, grid.safety);
    dt = std::min(dt, snaps[next_snap] - t);

    // Classic RK4; each stage sees the Dirichlet data at its own time.
    stage = u;
    impose(stage, t);
    op.apply(stage, k1);
    stage = u + 0.5 * dt * k1;
    impose(stage, t + 0.5 * dt);
    op.apply(stage, k2);
    stage = u + 0.5 * dt * k2;
    impose(stage, t + 0.5 * dt);
    op.apply(stage, k3);
    stage = u + dt * k3;
    impose(stage, t + dt);
    op.apply(stage, k4);

    u += dt / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    t += dt;
    impose(u, t);

    if (!u.isFinite().all() || u.abs().maxCoeff() > kBlowup)
      throw Blowup("fd solution exceeded the blowup threshold at t = " +
                   std::to_string(t));

    while (next_snap < snaps.size() && snaps[next_snap] <= t + 1e-14) {
      out.push_back({snaps[next_snap], u});
      ++next_snap;
    }
  }
  return out;
}

ConvergenceResult convergence_order(Equation eq, const ModelParams& params,
                                    const catalog::FamilyId& family,
                                    const catalog::FamilyConstants& consts,
                                    const GridSpec& box,
                                    const std::vector<int>& ladder) {
  if (ladder.size() < 2) throw DomainViolation("convergence ladder needs >= 2 levels");
  JetEvaluator exact = catalog::evaluator(family, params, consts);

  ConvergenceResult result;
  double scale = 1.0;
  for (int nx : ladder) {
    GridSpec grid = box;
    grid.nx = nx;
    auto states = solve(
        eq, params, grid, [&](double x) { return exact(grid.t0, x).u; },
        [&](double t, Side side) {
          return exact(t, side == Side::Left ? grid.x_lo : grid.x_hi).u;
        },
        {grid.t1});
    const Eigen::ArrayXd& u = states.back().values;
    const double dx = (grid.x_hi - grid.x_lo) / (nx - 1);
    double err = 0.0;
    for (int i = 0; i < nx; ++i) {
      const double x = grid.x_lo + dx * i;
      const double ref = exact(grid.t1, x).u;
      err = std::max(err, std::fabs(u[i] - ref));
      scale = std::max(scale, std::fabs(ref));
    }
    result.levels.push_back({nx, dx, err});
  }

  // Exact steady states of the semi-discrete system leave nothing but the
  // scheme's tiny defect to measure; flag those instead of fitting.
  if (result.levels.front().max_error / scale < 1e-5) {
    result.degenerate = true;
    result.order = 0.0;
    return result;
  }

  const int n = static_cast<int>(result.levels.size());
  Eigen::MatrixXd A(n, 2);
  Eigen::VectorXd rhs(n);
  for (int i = 0; i < n; ++i) {
    A(i, 0) = std::log(result.levels[i].dx);
    A(i, 1) = 1.0;
    rhs(i) = std::log(std::max(result.levels[i].max_error, 1e-300));
  }
  const Eigen::Vector2d fit = A.colPivHouseholderQr().solve(rhs);
  result.order = fit(0);
  return result;
}

}  // namespace fd
}  // namespace nlbs
