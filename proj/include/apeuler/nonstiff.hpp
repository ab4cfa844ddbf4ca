#pragma once

#include "apeuler/config.hpp"
#include "apeuler/grid.hpp"
#include "apeuler/reconstruction.hpp"
#include "apeuler/state.hpp"

namespace apeuler {

enum class Axis { X, Y };

/// Global splitting quantities of one stage, shifted by eps^4 so that the
/// modified sound speed stays positive when eps is not small.
struct SplitScalars {
  double rho_max = 0.0;
  double p_min = 0.0;
};

SplitScalars split_scalars(const PrimitiveField& V, const GridSpec& grid, double eps);

/// Sound speed of the nonstiff subsystem,
/// (1/eps) sqrt(gamma (rho_max - rho)(p - p_min) / (rho rho_max)).
/// Roundoff-sized negative factors are clamped to zero; anything larger means
/// the scalars are stale and raises NonPhysicalState.
double modified_sound_speed(double rho, double p, const SplitScalars& s, double eps, double gamma);

struct SpeedPair {
  double minus;
  double plus;
};

/// a- = min(u- - c-, u+ - c+, -delta), a+ = max(u- + c-, u+ + c+, delta).
inline SpeedPair one_sided_speeds(double u_m, double c_m, double u_p, double c_p, double delta) {
  double lo = u_m - c_m < u_p - c_p ? u_m - c_m : u_p - c_p;
  double hi = u_m + c_m > u_p + c_p ? u_m + c_m : u_p + c_p;
  if (lo > -delta) lo = -delta;
  if (hi < delta) hi = delta;
  return {lo, hi};
}

struct InterfaceSpeeds {
  FaceField a_minus, a_plus;  // x-faces
  FaceField b_minus, b_plus;  // y-faces
};

InterfaceSpeeds nonstiff_speeds(const InterfaceValues& iv, const SplitScalars& s, const SolverConfig& cfg);

/// (rho u, u^2/2, 0, 0) along x, (rho v, 0, v^2/2, 0) along y.
State4 nonstiff_flux(const State4& v, Axis axis);

/// Built-in anti-diffusion of the central-upwind flux:
/// minmod(w_int - w_minus, w_plus - w_int) with the intermediate state
/// w_int = (a+ w+ - a- w- - f(w+) + f(w-)) / (a+ - a-). Componentwise.
State4 antidiffusion(const State4& w_minus, const State4& w_plus, const State4& f_minus, const State4& f_plus,
                     double a_minus, double a_plus);

/// Central-upwind numerical flux
/// (a+ f- - a- f+)/(a+ - a-) + a+ a-/(a+ - a-) (w+ - w- - anti).
State4 cu_flux(const State4& w_minus, const State4& w_plus, const State4& f_minus, const State4& f_plus,
               double a_minus, double a_plus, const State4& anti);

/// Product of the nonstiff nonconservative matrix (B along x, C along y),
/// evaluated at `at`, with `jump`. The matrices carry their leading minus sign.
State4 nonstiff_matrix_times(const State4& at, const State4& jump, Axis axis, const SplitScalars& s, double eps,
                             double gamma);

struct NonstiffFluxes {
  FaceState4 x;  // on x-faces
  FaceState4 y;  // on y-faces
};

NonstiffFluxes cu_flux_primitive(const InterfaceValues& iv, const InterfaceSpeeds& speeds);

/// Path-conservative pieces: in-cell terms B(V_jk)(V-_{j+1/2} - V+_{j-1/2})
/// and interface fluctuations B((V+ + V-)/2)(V+ - V-) along a straight path.
struct NonconservativeTerms {
  Field4 cell_x;
  Field4 cell_y;
  FaceState4 fluct_x;
  FaceState4 fluct_y;
};

NonconservativeTerms nonconservative_terms(const InterfaceValues& iv, const PrimitiveField& V, const GridSpec& grid,
                                           const SplitScalars& s, const SolverConfig& cfg);

/// Explicit operator of the primitive system on interior cells, ghosts filled.
OperatorField assemble_R(const PrimitiveField& V, const InterfaceValues& iv, const GridSpec& grid,
                         const SolverConfig& cfg, const SplitScalars& s);

/// Same, reconstructing V internally.
OperatorField assemble_R(const PrimitiveField& V, const GridSpec& grid, const SolverConfig& cfg,
                         const SplitScalars& s);

/// Largest |u| + c~ and |v| + c~ over interior cell averages.
struct CellSpeeds {
  double max_x = 0.0;
  double max_y = 0.0;
  double max_ctilde = 0.0;
};

CellSpeeds max_cell_speeds(const PrimitiveField& V, const GridSpec& grid, const SplitScalars& s,
                           const SolverConfig& cfg);

}  // namespace apeuler
