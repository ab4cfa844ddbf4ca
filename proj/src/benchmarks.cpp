#include "apeuler/benchmarks.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <sstream>

#include "apeuler/errors.hpp"

namespace apeuler {

namespace {
constexpr double pi = std::numbers::pi;
}

const std::vector<BenchmarkCase>& all_cases() {
  static const std::vector<BenchmarkCase> cases = {
      {CaseId::Vortex, "vortex", 2.0, 0.475, Boundary::Periodic, 64, true},
      {CaseId::Gresho, "gresho", 1.4, 0.475, Boundary::Periodic, 128, true},
      {CaseId::Baroclinic, "baroclinic", 1.4, 0.475, Boundary::Periodic, 200, false},
      {CaseId::DoubleShear, "double-shear", 1.4, 0.1, Boundary::Periodic, 64, false},
      {CaseId::Explosion, "explosion", 1.4, 0.475, Boundary::Outflow, 100, false},
  };
  return cases;
}

const BenchmarkCase& find_case(std::string_view name) {
  for (const auto& c : all_cases())
    if (c.name == name) return c;
  throw ConfigError("unknown case '" + std::string(name) + "'");
}

GridSpec case_grid(const BenchmarkCase& c, int nx, int ny, double eps) {
  GridSpec g;
  g.nx = nx;
  g.ny = ny;
  g.bc_x = g.bc_y = c.bc;
  switch (c.id) {
    case CaseId::Vortex:
      g.x_lo = g.y_lo = -10.0;
      g.x_hi = g.y_hi = 10.0;
      break;
    case CaseId::Gresho:
      g.x_lo = g.y_lo = 0.0;
      g.x_hi = g.y_hi = 1.0;
      break;
    case CaseId::Baroclinic:
      g.x_lo = -1.0 / eps;
      g.x_hi = 1.0 / eps;
      g.y_lo = 0.0;
      g.y_hi = 2.0 / (5.0 * eps);
      break;
    case CaseId::DoubleShear:
      g.x_lo = g.y_lo = 0.0;
      g.x_hi = g.y_hi = 2.0 * pi;
      break;
    case CaseId::Explosion:
      g.x_lo = g.y_lo = -1.0;
      g.x_hi = g.y_hi = 1.0;
      break;
  }
  g.validate();
  return g;
}

SolverConfig case_config(const BenchmarkCase& c, double eps) {
  SolverConfig cfg;
  cfg.epsilon = eps;
  cfg.gamma = c.gamma;
  cfg.k_cfl = c.k_cfl;
  if (c.id == CaseId::Explosion && eps <= 0.6) cfg.dt_override = {10, 1e-4};
  return cfg;
}

double case_final_time(const BenchmarkCase& c, double eps) {
  switch (c.id) {
    case CaseId::Vortex: return 0.1;
    case CaseId::Gresho: return 1.0;
    case CaseId::Baroclinic: return 20.0;
    case CaseId::DoubleShear: return 10.0;
    case CaseId::Explosion:
      if (eps > 0.95) return 0.25;
      if (eps > 0.75) return 0.2;
      if (eps > 0.45) return 0.15;
      return 0.08;
  }
  return 0.0;
}

State4 vortex_point(double x, double y, double t, double eps) {
  auto wrap = [](double s) { return s - 20.0 * std::round(s / 20.0); };
  const double xr = wrap(x - t);
  const double yr = wrap(y - t);
  const double r2 = xr * xr + yr * yr;
  const double rho = 1.0 - eps * eps / (16.0 * pi * pi) * std::exp(1.0 - r2);
  const double e = std::exp(0.5 * (1.0 - r2));
  const double u = 1.0 - eps * yr / (2.0 * pi) * e;
  const double v = 1.0 + eps * xr / (2.0 * pi) * e;
  // Energy 1 + eps^2 (rho^2 + rho |u|^2 / 2) with gamma = 2.
  const double gamma = 2.0;
  const double E = 1.0 + eps * eps * (rho * rho + 0.5 * rho * (u * u + v * v));
  const double p = (gamma - 1.0) * (E - 0.5 * eps * eps * rho * (u * u + v * v));
  return {rho, u, v, p};
}

State4 gresho_point(double x, double y, double eps) {
  const double xr = x - 0.5;
  const double yr = y - 0.5;
  const double r = std::sqrt(xr * xr + yr * yr);
  const double e2 = eps * eps;
  double psi_over_r, p;
  if (r < 0.2) {
    psi_over_r = 5.0;
    p = 1.0 + 12.5 * e2 * r * r;
  } else if (r < 0.4) {
    psi_over_r = (2.0 - 5.0 * r) / r;
    p = 1.0 + e2 * (4.0 * std::log(5.0 * r) + 4.0 - 20.0 * r + 12.5 * r * r);
  } else {
    psi_over_r = 0.0;
    p = 1.0 + e2 * (4.0 * std::log(2.0) - 2.0);
  }
  return {1.0, -yr * psi_over_r, xr * psi_over_r, p};
}

State4 baroclinic_point(double x, double y, double eps, double gamma) {
  const double c = 1.0 + std::cos(eps * pi * x);
  const double layer = y <= 1.0 / (5.0 * eps) ? 0.0 : 1.8;
  const double rho = 1.0 + eps / 2000.0 * c + 4.5 * eps * y - layer;
  return {rho, 0.5 * std::sqrt(gamma) * c, 0.0, 1.0 + 0.5 * eps * gamma * c};
}

State4 double_shear_point(double x, double y, double gamma) {
  const double u = y <= pi ? std::tanh(15.0 * (y / pi - 0.5)) : std::tanh(15.0 * (1.5 - y / pi));
  return {pi / 15.0, u, 0.05 * std::sin(x), 1.0 / gamma};
}

State4 explosion_point(double x, double y) {
  if (std::sqrt(x * x + y * y) < 0.4) return {1.0, 0.0, 0.0, 1.0};
  return {0.125, 0.0, 0.0, 0.1};
}

namespace {

template <class F>
PrimitiveField sample(const GridSpec& grid, F&& f) {
  PrimitiveField V(grid);
  for (int k = 0; k < grid.ny; ++k)
    for (int j = 0; j < grid.nx; ++j) V.set(j, k, f(grid.xc(j), grid.yc(k)));
  fill_ghosts(V, grid);
  return V;
}

}  // namespace

PrimitiveField initial_state(const BenchmarkCase& c, const GridSpec& grid, double eps) {
  switch (c.id) {
    case CaseId::Vortex: return sample(grid, [&](double x, double y) { return vortex_point(x, y, 0.0, eps); });
    case CaseId::Gresho: return sample(grid, [&](double x, double y) { return gresho_point(x, y, eps); });
    case CaseId::Baroclinic:
      return sample(grid, [&](double x, double y) { return baroclinic_point(x, y, eps, c.gamma); });
    case CaseId::DoubleShear:
      return sample(grid, [&](double x, double y) { return double_shear_point(x, y, c.gamma); });
    case CaseId::Explosion: return sample(grid, [](double x, double y) { return explosion_point(x, y); });
  }
  throw ConfigError("unhandled case");
}

std::optional<PrimitiveField> exact_state(const BenchmarkCase& c, const GridSpec& grid, double eps, double t) {
  if (c.id == CaseId::Vortex) return sample(grid, [&](double x, double y) { return vortex_point(x, y, t, eps); });
  if (c.id == CaseId::Gresho) return sample(grid, [&](double x, double y) { return gresho_point(x, y, eps); });
  return std::nullopt;
}

std::array<double, 4> l1_error(const Field4& a, const Field4& b, const GridSpec& grid) {
  std::array<double, 4> e{};
  for (int m = 0; m < 4; ++m) {
    double s = 0.0;
    for (int k = 0; k < grid.ny; ++k)
      for (int j = 0; j < grid.nx; ++j) s += std::abs(a[m](j, k) - b[m](j, k));
    e[m] = s * grid.cell_area();
  }
  return e;
}

PrimitiveField restrict_2x2(const PrimitiveField& fine, const GridSpec& fg, const GridSpec& cg) {
  if (fg.nx != 2 * cg.nx || fg.ny != 2 * cg.ny) throw ConfigError("restrict_2x2 needs a grid with twice the cells");
  PrimitiveField out(cg);
  for (int m = 0; m < 4; ++m) {
    for (int k = 0; k < cg.ny; ++k) {
      for (int j = 0; j < cg.nx; ++j) {
        out[m](j, k) = 0.25 * ((fine[m](2 * j, 2 * k) + fine[m](2 * j + 1, 2 * k)) +
                               (fine[m](2 * j, 2 * k + 1) + fine[m](2 * j + 1, 2 * k + 1)));
      }
    }
  }
  fill_ghosts(out, cg);
  return out;
}

ScalarField local_mach(const PrimitiveField& V, const GridSpec& grid, double gamma) {
  ScalarField m(grid);
  const double inv = 1.0 / std::sqrt(gamma);
  for (int k = 0; k < grid.ny; ++k)
    for (int j = 0; j < grid.nx; ++j) m(j, k) = std::hypot(V.u()(j, k), V.v()(j, k)) * inv;
  fill_ghosts(m, grid);
  return m;
}

ScalarField vorticity(const PrimitiveField& V, const GridSpec& grid) {
  ScalarField w(grid);
  const double hx = 0.5 / grid.dx();
  const double hy = 0.5 / grid.dy();
  for (int k = 0; k < grid.ny; ++k) {
    for (int j = 0; j < grid.nx; ++j) {
      w(j, k) = (V.v()(j + 1, k) - V.v()(j - 1, k)) * hx - (V.u()(j, k + 1) - V.u()(j, k - 1)) * hy;
    }
  }
  fill_ghosts(w, grid);
  return w;
}

double observed_rate(double e_coarse, double e_fine) { return std::log2(e_coarse / e_fine); }

std::string ErrorTable::to_text() const {
  std::ostringstream os;
  char buf[256];
  std::snprintf(buf, sizeof buf, "%6s %10s %13s %6s %13s %6s %13s %6s %13s %6s  %s\n", "N", "eps", "L1(rho)", "rate",
                "L1(u)", "rate", "L1(v)", "rate", "L1(p)", "rate", "status");
  os << buf;
  for (const auto& r : rows) {
    std::snprintf(buf, sizeof buf, "%6d %10.3g", r.n, r.eps);
    os << buf;
    for (int m = 0; m < 4; ++m) {
      if (std::isnan(r.rate[m]))
        std::snprintf(buf, sizeof buf, " %13.6e %6s", r.error[m], "-");
      else
        std::snprintf(buf, sizeof buf, " %13.6e %6.2f", r.error[m], r.rate[m]);
      os << buf;
    }
    os << "  " << r.status << '\n';
  }
  return os.str();
}

std::string ErrorTable::to_delimited() const {
  std::ostringstream os;
  os << "n,eps,l1_rho,l1_u,l1_v,l1_p,rate_rho,rate_u,rate_v,rate_p,status\n";
  char buf[64];
  for (const auto& r : rows) {
    os << r.n;
    std::snprintf(buf, sizeof buf, ",%.17g", r.eps);
    os << buf;
    for (double e : r.error) {
      std::snprintf(buf, sizeof buf, ",%.17g", e);
      os << buf;
    }
    for (double q : r.rate) {
      std::snprintf(buf, sizeof buf, ",%.17g", q);
      os << buf;
    }
    os << ',' << r.status << '\n';
  }
  return os.str();
}

ErrorTable convergence_study(const BenchmarkCase& c, const ConvergenceOptions& opt) {
  if (!c.has_exact) throw ConfigError("case '" + c.name + "' has no exact solution");
  ErrorTable table;
  const double nan = std::numeric_limits<double>::quiet_NaN();
  for (double eps : opt.eps_list) {
    std::optional<std::size_t> prev;
    for (int n : opt.n_list) {
      ErrorRow row;
      row.n = n;
      row.eps = eps;
      row.error.fill(nan);
      row.rate.fill(nan);
      try {
        const GridSpec grid = case_grid(c, n, n, eps);
        SolverConfig cfg = case_config(c, eps);
        if (opt.k_cfl) cfg.k_cfl = *opt.k_cfl;
        if (opt.theta) cfg.theta = *opt.theta;
        cfg.order = opt.order;
        cfg.elliptic_tol = opt.elliptic_tol;
        cfg.validate();
        DualState st = make_dual_state(initial_state(c, grid, eps), grid, cfg);
        RunOptions ro;
        ro.t_final = opt.t_final.value_or(case_final_time(c, eps));
        ro.keep_history = false;
        const RunReport rr = run(st, grid, cfg, ro);
        if (rr.status != RunStatus::Completed) {
          row.status = to_string(rr.status);
        } else {
          row.error = l1_error(st.V, *exact_state(c, grid, eps, st.t), grid);
          if (prev && table.rows[*prev].status == "ok" && table.rows[*prev].n * 2 == n) {
            const ErrorRow& coarse = table.rows[*prev];
            for (int m = 0; m < 4; ++m) row.rate[m] = observed_rate(coarse.error[m], row.error[m]);
          }
        }
      } catch (const std::exception& e) {
        row.status = e.what();
      }
      table.rows.push_back(row);
      prev = table.rows.size() - 1;
    }
  }
  return table;
}

}  // namespace apeuler
