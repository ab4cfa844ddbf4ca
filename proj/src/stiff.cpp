#include "apeuler/stiff.hpp"

namespace apeuler {

StiffScalars stiff_scalars(const SplitScalars& s, double eps, double gamma) {
  return {1.0 / (eps * eps * s.rho_max), gamma * s.p_min};
}

Gradient central_gradient(const ScalarField& p, const GridSpec& grid) {
  Gradient g{ScalarField(grid), ScalarField(grid)};
  const double hx = 0.5 / grid.dx();
  const double hy = 0.5 / grid.dy();
  for (int k = 0; k < grid.ny; ++k) {
    const double* c = p.row(k);
    const double* s = p.row(k - 1);
    const double* n = p.row(k + 1);
    double* gx = g.px.row(k);
    double* gy = g.py.row(k);
    for (int j = 0; j < grid.nx; ++j) {
      gx[j] = (c[j + 1] - c[j - 1]) * hx;
      gy[j] = (n[j] - s[j]) * hy;
    }
  }
  fill_ghosts(g.px, grid);
  fill_ghosts(g.py, grid);
  return g;
}

ScalarField discrete_divergence(const ScalarField& u, const ScalarField& v, const GridSpec& grid) {
  ScalarField d(grid);
  const double hx = 0.5 / grid.dx();
  const double hy = 0.5 / grid.dy();
  for (int k = 0; k < grid.ny; ++k) {
    const double* uc = u.row(k);
    const double* vs = v.row(k - 1);
    const double* vn = v.row(k + 1);
    double* out = d.row(k);
    for (int j = 0; j < grid.nx; ++j) out[j] = (uc[j + 1] - uc[j - 1]) * hx + (vn[j] - vs[j]) * hy;
  }
  fill_ghosts(d, grid);
  return d;
}

OperatorField assemble_L(const StiffScalars& a, const PrimitiveField& b, const GridSpec& grid) {
  OperatorField L(grid);
  const Gradient g = central_gradient(b.p(), grid);
  const ScalarField div = discrete_divergence(b.u(), b.v(), grid);
  for (int k = 0; k < grid.ny; ++k) {
    for (int j = 0; j < grid.nx; ++j) {
      L[1](j, k) = a.inv_eps2_rhomax * g.px(j, k);
      L[2](j, k) = a.inv_eps2_rhomax * g.py(j, k);
      L[3](j, k) = a.gamma_pmin * div(j, k);
    }
  }
  fill_ghosts(L, grid);
  return L;
}

}  // namespace apeuler
