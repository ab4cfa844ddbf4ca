#pragma once

#include "apeuler/grid.hpp"
#include "apeuler/nonstiff.hpp"
#include "apeuler/state.hpp"

namespace apeuler {

/// Coefficients of the linear acoustic operator, frozen at one stage.
struct StiffScalars {
  double inv_eps2_rhomax = 0.0;  // 1 / (eps^2 rho_max)
  double gamma_pmin = 0.0;       // gamma p_min
};

StiffScalars stiff_scalars(const SplitScalars& s, double eps, double gamma);

struct Gradient {
  ScalarField px;
  ScalarField py;
};

/// Central differences (f_{j+1} - f_{j-1}) / (2 dx) on interior cells; ghosts refilled.
Gradient central_gradient(const ScalarField& p, const GridSpec& grid);

/// (u_{j+1,k} - u_{j-1,k}) / (2 dx) + (v_{j,k+1} - v_{j,k-1}) / (2 dy) on interior cells; ghosts refilled.
ScalarField discrete_divergence(const ScalarField& u, const ScalarField& v, const GridSpec& grid);

/// (0, grad p_b / (eps^2 rho_max_a), gamma p_min_a div u_b) with the scalars of
/// stage a and the fields of stage b. Ghosts of the result are filled.
OperatorField assemble_L(const StiffScalars& a, const PrimitiveField& b, const GridSpec& grid);

}  // namespace apeuler
