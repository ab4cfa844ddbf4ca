#pragma once

namespace apeuler {

/// Fixed time step used for a leading number of steps before the CFL rule
/// takes over (start-up relaxation for strong discontinuities).
struct DtOverride {
  int steps = 0;
  double value = 0.0;

  bool active() const { return steps > 0 && value > 0.0; }
};

struct SolverConfig {
  double epsilon = 1.0;   // reference Mach number, 0 < epsilon <= 1
  double gamma = 1.4;     // ratio of specific heats
  double k_cfl = 0.475;
  double theta = 1.3;     // generalized minmod parameter, [1, 2]
  double delta = 1e-15;   // floor on one-sided speeds

  // Mach-dependent switching between the primitive and conservative branch.
  double eps0 = 0.15;
  double eps1 = 0.4;
  double alpha = 14.0;

  double elliptic_tol = 1e-10;  // relative to the right-hand-side norm
  int elliptic_max_iter = 0;    // 0 selects 10 * (nx + ny)
  bool elliptic_jacobi = false;

  int order = 2;  // 1: single semi-implicit stage, 2: two-stage deferred correction
  DtOverride dt_override;

  /// Throws ConfigError on any out-of-range parameter.
  void validate() const;

  int max_iterations_for(int nx, int ny) const {
    return elliptic_max_iter > 0 ? elliptic_max_iter : 10 * (nx + ny);
  }
};

}  // namespace apeuler
