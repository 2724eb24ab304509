#pragma once

namespace nlbs {

/// Uniform space-time box shared by residual scans and the finite-difference
/// solver.  `safety` scales the parabolic time-step bound; `nt` is the number
/// of time nodes used by grid scans (the FD solver picks its own steps).
struct GridSpec {
  double x_lo = 0.0;
  double x_hi = 1.0;
  int nx = 8;
  double t0 = 0.0;
  double t1 = 1.0;
  int nt = 8;
  double safety = 0.5;
};

/// Outcome of evaluating an equation residual over the in-domain nodes of a
/// grid.  Relative residuals are raw / (1 + max term magnitude), so tolerance
/// statements are scale-free.
struct ResidualStats {
  double max_abs = 0.0;
  double max_rel = 0.0;
  long n_evaluated = 0;
  long n_excluded = 0;
};

}  // namespace nlbs
