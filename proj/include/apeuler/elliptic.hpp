#pragma once

#include "apeuler/config.hpp"
#include "apeuler/grid.hpp"
#include "apeuler/nonstiff.hpp"
#include "apeuler/state.hpp"

namespace apeuler {

/// (I - sigma Lap_h) q = rhs with the compact five-point Laplacian; the
/// boundary kind comes from the grid (periodic wrap or Neumann mirror).
struct HelmholtzSystem {
  double sigma = 0.0;
  ScalarField rhs;
};

struct SolveStats {
  int iterations = 0;
  double rhs_norm = 0.0;
  /// Explicitly recomputed residual of the solved increment, divided by rhs_norm.
  double relative_residual = 0.0;
  double tol = 0.0;

  bool contract_holds() const { return relative_residual <= tol; }
};

/// Five-point Laplacian on interior cells. Refills the ghosts of `p` first.
ScalarField compact_laplacian(ScalarField& p, const GridSpec& grid);

/// Applies I - sigma Lap_h to q (whose ghosts are refilled) on interior cells.
void apply_helmholtz(ScalarField& q, double sigma, const GridSpec& grid, ScalarField& out);

/// Smallest sigma for which I - sigma Lap_h is still positive definite.
double helmholtz_sigma_floor(const GridSpec& grid);

/// Pressure system of the first stage:
/// sigma = dt^2 gamma p_min / (eps^2 rho_max),
/// rhs = p - dt R^p - dt gamma p_min div u + dt^2 gamma p_min div R^u.
HelmholtzSystem assemble_stage1_system(const PrimitiveField& Vn, const OperatorField& Rn, const SplitScalars& sn,
                                       double dt, const SolverConfig& cfg, const GridSpec& grid);

/// Pressure system of the correction stage, with the starred split scalars:
/// rhs = p^n - dt/2 (R^p_n + R^p_*) - dt/2 (L^p_nn - L^p_**) - dt gamma p*_min div u^n
///       + dt^2 gamma p*_min / 2 div (R^u_n + R^u_*) + dt^2 gamma p*_min / 2 div (L^u_nn - L^u_**).
HelmholtzSystem assemble_stage2_system(const PrimitiveField& Vn, const PrimitiveField& Vs, const OperatorField& Rn,
                                       const OperatorField& Rs, const OperatorField& Lnn, const OperatorField& Lss,
                                       const SplitScalars& ss, double dt, const SolverConfig& cfg,
                                       const GridSpec& grid);

/// Conjugate gradients (optionally Jacobi preconditioned) on the increment
/// q - guess, warm-started from `guess`. Stops once the increment residual is
/// at most tol * ||rhs||_2. Throws NoConvergence after max_iter iterations and
/// NonPhysicalState if sigma makes the operator indefinite.
ScalarField solve_helmholtz(const HelmholtzSystem& sys, const ScalarField& guess, double tol, int max_iter,
                            const GridSpec& grid, SolveStats* stats = nullptr, bool jacobi = false);

/// Discrete 2-norm over interior cells.
double interior_norm(const ScalarField& f, const GridSpec& grid);

}  // namespace apeuler
