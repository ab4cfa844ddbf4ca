#include "apeuler/nonstiff.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "apeuler/errors.hpp"

namespace apeuler {

SplitScalars split_scalars(const PrimitiveField& V, const GridSpec& grid, double eps) {
  double rho_max = -std::numeric_limits<double>::infinity();
  double p_min = std::numeric_limits<double>::infinity();
  for (int k = 0; k < grid.ny; ++k) {
    const double* r = V.rho().row(k);
    const double* p = V.p().row(k);
    for (int j = 0; j < grid.nx; ++j) {
      rho_max = std::max(rho_max, r[j]);
      p_min = std::min(p_min, p[j]);
    }
  }
  const double eps4 = eps * eps * eps * eps;
  return {rho_max + eps4, p_min - eps4};
}

namespace {

// Differences below this multiple of the operand's ulp are rounding, not staleness.
constexpr double kRoundoffSlack = 64.0 * std::numeric_limits<double>::epsilon();

double clamp_gap(double gap, double scale, const char* what) {
  if (gap >= 0.0) return gap;
  if (gap >= -kRoundoffSlack * std::abs(scale)) return 0.0;
  std::ostringstream os;
  os << "modified sound speed: " << what << " gap " << gap << " is negative (stale split scalars)";
  throw NonPhysicalState(os.str());
}

}  // namespace

double modified_sound_speed(double rho, double p, const SplitScalars& s, double eps, double gamma) {
  const double drho = clamp_gap(s.rho_max - rho, s.rho_max, "density");
  const double dp = clamp_gap(p - s.p_min, std::max(std::abs(p), std::abs(s.p_min)), "pressure");
  return std::sqrt(gamma * drho * dp / (rho * s.rho_max)) / eps;
}

InterfaceSpeeds nonstiff_speeds(const InterfaceValues& iv, const SplitScalars& s, const SolverConfig& cfg) {
  const double eps = cfg.epsilon;
  const double gam = cfg.gamma;
  InterfaceSpeeds sp;
  const int ni = iv.x_minus[0].ni();
  const int nk = iv.x_minus[0].nk();
  sp.a_minus = FaceField(ni, nk);
  sp.a_plus = FaceField(ni, nk);
  for (int k = 0; k < nk; ++k) {
    for (int i = 0; i < ni; ++i) {
      const double cm = modified_sound_speed(iv.x_minus[0](i, k), iv.x_minus[3](i, k), s, eps, gam);
      const double cp = modified_sound_speed(iv.x_plus[0](i, k), iv.x_plus[3](i, k), s, eps, gam);
      const SpeedPair a = one_sided_speeds(iv.x_minus[1](i, k), cm, iv.x_plus[1](i, k), cp, cfg.delta);
      sp.a_minus(i, k) = a.minus;
      sp.a_plus(i, k) = a.plus;
    }
  }
  const int nj = iv.y_minus[0].ni();
  const int nl = iv.y_minus[0].nk();
  sp.b_minus = FaceField(nj, nl);
  sp.b_plus = FaceField(nj, nl);
  for (int k = 0; k < nl; ++k) {
    for (int j = 0; j < nj; ++j) {
      const double cm = modified_sound_speed(iv.y_minus[0](j, k), iv.y_minus[3](j, k), s, eps, gam);
      const double cp = modified_sound_speed(iv.y_plus[0](j, k), iv.y_plus[3](j, k), s, eps, gam);
      const SpeedPair b = one_sided_speeds(iv.y_minus[2](j, k), cm, iv.y_plus[2](j, k), cp, cfg.delta);
      sp.b_minus(j, k) = b.minus;
      sp.b_plus(j, k) = b.plus;
    }
  }
  return sp;
}

State4 nonstiff_flux(const State4& v, Axis axis) {
  if (axis == Axis::X) return {v[0] * v[1], 0.5 * v[1] * v[1], 0.0, 0.0};
  return {v[0] * v[2], 0.0, 0.5 * v[2] * v[2], 0.0};
}

State4 antidiffusion(const State4& wm, const State4& wp, const State4& fm, const State4& fp, double am, double ap) {
  const double inv = 1.0 / (ap - am);
  State4 d{};
  for (int m = 0; m < 4; ++m) {
    const double w_int = (ap * wp[m] - am * wm[m] - fp[m] + fm[m]) * inv;
    d[m] = minmod(w_int - wm[m], wp[m] - w_int);
  }
  return d;
}

State4 cu_flux(const State4& wm, const State4& wp, const State4& fm, const State4& fp, double am, double ap,
               const State4& anti) {
  const double inv = 1.0 / (ap - am);
  const double diss = ap * am * inv;
  State4 f{};
  for (int m = 0; m < 4; ++m) f[m] = (ap * fm[m] - am * fp[m]) * inv + diss * (wp[m] - wm[m] - anti[m]);
  return f;
}

State4 nonstiff_matrix_times(const State4& at, const State4& jump, Axis axis, const SplitScalars& s, double eps,
                             double gamma) {
  const double rho = at[0];
  const double u = at[1];
  const double v = at[2];
  const double p = at[3];
  const double press_coef = (s.rho_max - rho) / (eps * eps * rho * s.rho_max);
  const double div_coef = gamma * (p - s.p_min);
  if (axis == Axis::X) {
    // -[0; a p_x; u v_x; g u_x + u p_x]
    return {0.0, -press_coef * jump[3], -u * jump[2], -(div_coef * jump[1] + u * jump[3])};
  }
  // -[0; v u_y; a p_y; g v_y + v p_y]
  return {0.0, -v * jump[1], -press_coef * jump[3], -(div_coef * jump[2] + v * jump[3])};
}

NonstiffFluxes cu_flux_primitive(const InterfaceValues& iv, const InterfaceSpeeds& sp) {
  NonstiffFluxes out;
  const int ni = iv.x_minus[0].ni();
  const int nk = iv.x_minus[0].nk();
  const int nj = iv.y_minus[0].ni();
  const int nl = iv.y_minus[0].nk();
  for (int m = 0; m < 4; ++m) {
    out.x[m] = FaceField(ni, nk);
    out.y[m] = FaceField(nj, nl);
  }
  for (int k = 0; k < nk; ++k) {
    for (int i = 0; i < ni; ++i) {
      const State4 wm = iv.xm(i, k);
      const State4 wp = iv.xp(i, k);
      const State4 fm = nonstiff_flux(wm, Axis::X);
      const State4 fp = nonstiff_flux(wp, Axis::X);
      const double am = sp.a_minus(i, k);
      const double ap = sp.a_plus(i, k);
      const State4 f = cu_flux(wm, wp, fm, fp, am, ap, antidiffusion(wm, wp, fm, fp, am, ap));
      for (int m = 0; m < 4; ++m) out.x[m](i, k) = f[m];
    }
  }
  for (int k = 0; k < nl; ++k) {
    for (int j = 0; j < nj; ++j) {
      const State4 wm = iv.ym(j, k);
      const State4 wp = iv.yp(j, k);
      const State4 fm = nonstiff_flux(wm, Axis::Y);
      const State4 fp = nonstiff_flux(wp, Axis::Y);
      const double bm = sp.b_minus(j, k);
      const double bp = sp.b_plus(j, k);
      const State4 f = cu_flux(wm, wp, fm, fp, bm, bp, antidiffusion(wm, wp, fm, fp, bm, bp));
      for (int m = 0; m < 4; ++m) out.y[m](j, k) = f[m];
    }
  }
  return out;
}

namespace {

State4 diff(const State4& a, const State4& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2], a[3] - b[3]}; }
State4 mid(const State4& a, const State4& b) {
  return {0.5 * (a[0] + b[0]), 0.5 * (a[1] + b[1]), 0.5 * (a[2] + b[2]), 0.5 * (a[3] + b[3])};
}

}  // namespace

NonconservativeTerms nonconservative_terms(const InterfaceValues& iv, const PrimitiveField& V, const GridSpec& grid,
                                           const SplitScalars& s, const SolverConfig& cfg) {
  const double eps = cfg.epsilon;
  const double gam = cfg.gamma;
  NonconservativeTerms t{Field4(grid), Field4(grid), {}, {}};
  for (int m = 0; m < 4; ++m) {
    t.fluct_x[m] = make_x_faces(grid);
    t.fluct_y[m] = make_y_faces(grid);
  }
  for (int k = 0; k < grid.ny; ++k) {
    for (int i = 0; i <= grid.nx; ++i) {
      const State4 wm = iv.xm(i, k);
      const State4 wp = iv.xp(i, k);
      const State4 f = nonstiff_matrix_times(mid(wm, wp), diff(wp, wm), Axis::X, s, eps, gam);
      for (int m = 0; m < 4; ++m) t.fluct_x[m](i, k) = f[m];
    }
  }
  for (int k = 0; k <= grid.ny; ++k) {
    for (int j = 0; j < grid.nx; ++j) {
      const State4 wm = iv.ym(j, k);
      const State4 wp = iv.yp(j, k);
      const State4 f = nonstiff_matrix_times(mid(wm, wp), diff(wp, wm), Axis::Y, s, eps, gam);
      for (int m = 0; m < 4; ++m) t.fluct_y[m](j, k) = f[m];
    }
  }
  for (int k = 0; k < grid.ny; ++k) {
    for (int j = 0; j < grid.nx; ++j) {
      const State4 c = V.at(j, k);
      // In-cell jump of the linear reconstruction: right face minus left face.
      const State4 bx = nonstiff_matrix_times(c, diff(iv.xm(j + 1, k), iv.xp(j, k)), Axis::X, s, eps, gam);
      const State4 by = nonstiff_matrix_times(c, diff(iv.ym(j, k + 1), iv.yp(j, k)), Axis::Y, s, eps, gam);
      t.cell_x.set(j, k, bx);
      t.cell_y.set(j, k, by);
    }
  }
  return t;
}

OperatorField assemble_R(const PrimitiveField& V, const InterfaceValues& iv, const GridSpec& grid,
                         const SolverConfig& cfg, const SplitScalars& s) {
  const InterfaceSpeeds sp = nonstiff_speeds(iv, s, cfg);
  const NonstiffFluxes fl = cu_flux_primitive(iv, sp);
  const NonconservativeTerms nc = nonconservative_terms(iv, V, grid, s, cfg);
  const double inv_dx = 1.0 / grid.dx();
  const double inv_dy = 1.0 / grid.dy();

  OperatorField R(grid);
  for (int k = 0; k < grid.ny; ++k) {
    for (int j = 0; j < grid.nx; ++j) {
      const double wl = sp.a_plus(j, k) / (sp.a_plus(j, k) - sp.a_minus(j, k));
      const double wr = sp.a_minus(j + 1, k) / (sp.a_plus(j + 1, k) - sp.a_minus(j + 1, k));
      const double ws = sp.b_plus(j, k) / (sp.b_plus(j, k) - sp.b_minus(j, k));
      const double wn = sp.b_minus(j, k + 1) / (sp.b_plus(j, k + 1) - sp.b_minus(j, k + 1));
      for (int m = 0; m < 4; ++m) {
        const double x_part = fl.x[m](j + 1, k) - fl.x[m](j, k) - nc.cell_x[m](j, k) - wl * nc.fluct_x[m](j, k) +
                              wr * nc.fluct_x[m](j + 1, k);
        const double y_part = fl.y[m](j, k + 1) - fl.y[m](j, k) - nc.cell_y[m](j, k) - ws * nc.fluct_y[m](j, k) +
                              wn * nc.fluct_y[m](j, k + 1);
        R[m](j, k) = x_part * inv_dx + y_part * inv_dy;
      }
    }
  }
  fill_ghosts(R, grid);
  return R;
}

OperatorField assemble_R(const PrimitiveField& V, const GridSpec& grid, const SolverConfig& cfg,
                         const SplitScalars& s) {
  return assemble_R(V, reconstruct(V, grid, cfg.theta), grid, cfg, s);
}

CellSpeeds max_cell_speeds(const PrimitiveField& V, const GridSpec& grid, const SplitScalars& s,
                           const SolverConfig& cfg) {
  CellSpeeds out;
  for (int k = 0; k < grid.ny; ++k) {
    for (int j = 0; j < grid.nx; ++j) {
      const double c = modified_sound_speed(V.rho()(j, k), V.p()(j, k), s, cfg.epsilon, cfg.gamma);
      out.max_ctilde = std::max(out.max_ctilde, c);
      out.max_x = std::max(out.max_x, std::abs(V.u()(j, k)) + c);
      out.max_y = std::max(out.max_y, std::abs(V.v()(j, k)) + c);
    }
  }
  return out;
}

}  // namespace apeuler
