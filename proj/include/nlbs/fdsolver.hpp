#pragma once

#include <Eigen/Dense>
#include <functional>
#include <vector>

#include "nlbs/catalog.hpp"
#include "nlbs/grid.hpp"
#include "nlbs/model.hpp"

namespace nlbs {
namespace fd {

enum class Equation { Canonical, Bse };
enum class Side { Left, Right };

/// Solution snapshot on the uniform grid.
struct FieldState {
  double time = 0.0;
  Eigen::ArrayXd values;
};

using InitialFn = std::function<double(double x)>;
using BoundaryFn = std::function<double(double t, Side side)>;

/// Method-of-lines initial-boundary-value solve: 2nd-order central
/// differences in space, explicit RK4 in time with a parabolic step bound
/// estimated from the current state, Dirichlet boundaries.
///
/// Throws CornerMismatch when initial and boundary data disagree at the
/// corners (tolerance 1e-10) and Blowup when max|u| exceeds 1e12.
std::vector<FieldState> solve(Equation eq, const ModelParams& params,
                              const GridSpec& grid, const InitialFn& initial,
                              const BoundaryFn& boundary,
                              const std::vector<double>& snapshot_times);

/// Manufactured-solution convergence study: the family supplies initial and
/// boundary data and the reference values.
struct ConvergenceLevel {
  int nx = 0;
  double dx = 0.0;
  double max_error = 0.0;
};

struct ConvergenceResult {
  std::vector<ConvergenceLevel> levels;
  double order = 0.0;
  /// Errors already at the size of the scheme's tiny defect on this family;
  /// the order fit is meaningless there and is flagged instead of asserted.
  bool degenerate = false;
};

ConvergenceResult convergence_order(Equation eq, const ModelParams& params,
                                    const catalog::FamilyId& family,
                                    const catalog::FamilyConstants& consts,
                                    const GridSpec& box,
                                    const std::vector<int>& ladder);

}  // namespace fd
}  // namespace nlbs
