#pragma once

#include "apeuler/config.hpp"
#include "apeuler/grid.hpp"
#include "apeuler/nonstiff.hpp"
#include "apeuler/reconstruction.hpp"
#include "apeuler/state.hpp"

namespace apeuler {

/// Physical flux of the conservative system for a primitive state:
/// (rho u, rho u^2 + p/eps^2, rho u v, u (E + p)) along x, analogous along y.
State4 conservative_flux(const State4& prim, const SolverConfig& cfg, Axis axis);

/// Full sound speed (1/eps) sqrt(gamma p / rho).
double sound_speed(double rho, double p, double eps, double gamma);

struct ConsInterfaceSpeeds {
  FaceField a_minus, a_plus;  // x-faces
  FaceField b_minus, b_plus;  // y-faces
};

ConsInterfaceSpeeds conservative_speeds(const InterfaceValues& iv, const SolverConfig& cfg);

struct ConservativeFluxes {
  FaceState4 x;
  FaceState4 y;
};

/// Central-upwind fluxes with anti-diffusion; face values of U come from the
/// reconstructed primitive face values.
ConservativeFluxes cu_flux_conservative(const InterfaceValues& iv, const ConsInterfaceSpeeds& speeds,
                                        const SolverConfig& cfg);

/// -(F_{j+1/2} - F_{j-1/2})/dx - (G_{k+1/2} - G_{k-1/2})/dy on interior cells.
OperatorField assemble_conservative_rhs(const InterfaceValues& iv, const GridSpec& grid, const SolverConfig& cfg);

/// Same, reconstructing V (ghosts filled) internally.
OperatorField assemble_conservative_rhs(const PrimitiveField& V, const GridSpec& grid, const SolverConfig& cfg);

/// Largest |u| + c, |v| + c over interior cells (full acoustic speed).
double max_full_speed(const PrimitiveField& V, const GridSpec& grid, const SolverConfig& cfg);

}  // namespace apeuler
