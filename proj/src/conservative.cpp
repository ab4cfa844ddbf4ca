#include "apeuler/conservative.hpp"

#include <algorithm>
#include <cmath>

#include "apeuler/errors.hpp"

namespace apeuler {

State4 conservative_flux(const State4& prim, const SolverConfig& cfg, Axis axis) {
  const double rho = prim[0], u = prim[1], v = prim[2], p = prim[3];
  if (!(p > 0.0) || !(rho > 0.0)) throw NonPhysicalState("conservative flux: non-positive density or pressure");
  const State4 U = prim_to_cons(prim, cfg.epsilon, cfg.gamma);
  const double inv_eps2 = 1.0 / (cfg.epsilon * cfg.epsilon);
  if (axis == Axis::X) return {U[1], U[1] * u + p * inv_eps2, U[1] * v, u * (U[3] + p)};
  return {U[2], U[2] * u, U[2] * v + p * inv_eps2, v * (U[3] + p)};
}

double sound_speed(double rho, double p, double eps, double gamma) { return std::sqrt(gamma * p / rho) / eps; }

ConsInterfaceSpeeds conservative_speeds(const InterfaceValues& iv, const SolverConfig& cfg) {
  const double eps = cfg.epsilon, gam = cfg.gamma;
  ConsInterfaceSpeeds sp;
  const int ni = iv.x_minus[0].ni(), nk = iv.x_minus[0].nk();
  sp.a_minus = FaceField(ni, nk);
  sp.a_plus = FaceField(ni, nk);
  for (int k = 0; k < nk; ++k) {
    for (int i = 0; i < ni; ++i) {
      const State4 m = iv.xm(i, k), p = iv.xp(i, k);
      const SpeedPair a = one_sided_speeds(m[1], sound_speed(m[0], m[3], eps, gam), p[1],
                                           sound_speed(p[0], p[3], eps, gam), cfg.delta);
      sp.a_minus(i, k) = a.minus;
      sp.a_plus(i, k) = a.plus;
    }
  }
  const int nj = iv.y_minus[0].ni(), nl = iv.y_minus[0].nk();
  sp.b_minus = FaceField(nj, nl);
  sp.b_plus = FaceField(nj, nl);
  for (int k = 0; k < nl; ++k) {
    for (int j = 0; j < nj; ++j) {
      const State4 m = iv.ym(j, k), p = iv.yp(j, k);
      const SpeedPair b = one_sided_speeds(m[2], sound_speed(m[0], m[3], eps, gam), p[2],
                                           sound_speed(p[0], p[3], eps, gam), cfg.delta);
      sp.b_minus(j, k) = b.minus;
      sp.b_plus(j, k) = b.plus;
    }
  }
  return sp;
}

ConservativeFluxes cu_flux_conservative(const InterfaceValues& iv, const ConsInterfaceSpeeds& sp,
                                        const SolverConfig& cfg) {
  ConservativeFluxes out;
  const int ni = iv.x_minus[0].ni(), nk = iv.x_minus[0].nk();
  const int nj = iv.y_minus[0].ni(), nl = iv.y_minus[0].nk();
  for (int m = 0; m < 4; ++m) {
    out.x[m] = FaceField(ni, nk);
    out.y[m] = FaceField(nj, nl);
  }
  auto face = [&](const State4& vm, const State4& vp, double am, double ap, Axis axis) {
    const State4 um = prim_to_cons(vm, cfg.epsilon, cfg.gamma);
    const State4 up = prim_to_cons(vp, cfg.epsilon, cfg.gamma);
    const State4 fm = conservative_flux(vm, cfg, axis);
    const State4 fp = conservative_flux(vp, cfg, axis);
    return cu_flux(um, up, fm, fp, am, ap, antidiffusion(um, up, fm, fp, am, ap));
  };
  for (int k = 0; k < nk; ++k) {
    for (int i = 0; i < ni; ++i) {
      const State4 f = face(iv.xm(i, k), iv.xp(i, k), sp.a_minus(i, k), sp.a_plus(i, k), Axis::X);
      for (int m = 0; m < 4; ++m) out.x[m](i, k) = f[m];
    }
  }
  for (int k = 0; k < nl; ++k) {
    for (int j = 0; j < nj; ++j) {
      const State4 g = face(iv.ym(j, k), iv.yp(j, k), sp.b_minus(j, k), sp.b_plus(j, k), Axis::Y);
      for (int m = 0; m < 4; ++m) out.y[m](j, k) = g[m];
    }
  }
  return out;
}

OperatorField assemble_conservative_rhs(const InterfaceValues& iv, const GridSpec& grid, const SolverConfig& cfg) {
  const ConservativeFluxes fl = cu_flux_conservative(iv, conservative_speeds(iv, cfg), cfg);
  const double inv_dx = 1.0 / grid.dx();
  const double inv_dy = 1.0 / grid.dy();
  OperatorField rhs(grid);
  for (int m = 0; m < 4; ++m) {
    for (int k = 0; k < grid.ny; ++k) {
      for (int j = 0; j < grid.nx; ++j) {
        rhs[m](j, k) = -(fl.x[m](j + 1, k) - fl.x[m](j, k)) * inv_dx - (fl.y[m](j, k + 1) - fl.y[m](j, k)) * inv_dy;
      }
    }
  }
  fill_ghosts(rhs, grid);
  return rhs;
}

OperatorField assemble_conservative_rhs(const PrimitiveField& V, const GridSpec& grid, const SolverConfig& cfg) {
  return assemble_conservative_rhs(reconstruct(V, grid, cfg.theta), grid, cfg);
}

double max_full_speed(const PrimitiveField& V, const GridSpec& grid, const SolverConfig& cfg) {
  double out = 0.0;
  for (int k = 0; k < grid.ny; ++k) {
    for (int j = 0; j < grid.nx; ++j) {
      const double c = sound_speed(V.rho()(j, k), V.p()(j, k), cfg.epsilon, cfg.gamma);
      out = std::max({out, std::abs(V.u()(j, k)) + c, std::abs(V.v()(j, k)) + c});
    }
  }
  return out;
}

}  // namespace apeuler
