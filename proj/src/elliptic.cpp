#include "apeuler/elliptic.hpp"

#include <cmath>
#include <sstream>

#include "apeuler/errors.hpp"
#include "apeuler/simd/kernels.hpp"
#include "apeuler/stiff.hpp"

namespace apeuler {

namespace {

double interior_dot(const ScalarField& a, const ScalarField& b, const GridSpec& grid) {
  const auto& kt = simd::active_kernels();
  double s = 0.0;
  for (int k = 0; k < grid.ny; ++k) s += kt.dot(a.row(k), b.row(k), static_cast<std::size_t>(grid.nx));
  return s;
}

// Interior-only copies so ghost entries never leak into the vector updates.
void zero_ghosts(ScalarField& f, const GridSpec& grid) {
  for (int k = -GridSpec::ghost; k < grid.ny + GridSpec::ghost; ++k) {
    for (int j = -GridSpec::ghost; j < grid.nx + GridSpec::ghost; ++j) {
      if (j < 0 || j >= grid.nx || k < 0 || k >= grid.ny) f(j, k) = 0.0;
    }
  }
}

}  // namespace

double interior_norm(const ScalarField& f, const GridSpec& grid) { return std::sqrt(interior_dot(f, f, grid)); }

ScalarField compact_laplacian(ScalarField& p, const GridSpec& grid) {
  fill_ghosts(p, grid);
  ScalarField lap(grid);
  const double ix2 = 1.0 / (grid.dx() * grid.dx());
  const double iy2 = 1.0 / (grid.dy() * grid.dy());
  for (int k = 0; k < grid.ny; ++k) {
    const double* c = p.row(k);
    const double* s = p.row(k - 1);
    const double* n = p.row(k + 1);
    double* out = lap.row(k);
    for (int j = 0; j < grid.nx; ++j) {
      out[j] = ((c[j - 1] - 2.0 * c[j]) + c[j + 1]) * ix2 + ((s[j] - 2.0 * c[j]) + n[j]) * iy2;
    }
  }
  return lap;
}

void apply_helmholtz(ScalarField& q, double sigma, const GridSpec& grid, ScalarField& out) {
  fill_ghosts(q, grid);
  const auto& kt = simd::active_kernels();
  const double ix2 = 1.0 / (grid.dx() * grid.dx());
  const double iy2 = 1.0 / (grid.dy() * grid.dy());
  for (int k = 0; k < grid.ny; ++k) {
    kt.helmholtz_row(q.row(k - 1), q.row(k), q.row(k + 1), out.row(k), static_cast<std::size_t>(grid.nx), sigma,
                     ix2, iy2);
  }
}

double helmholtz_sigma_floor(const GridSpec& grid) {
  const double lmax = 4.0 / (grid.dx() * grid.dx()) + 4.0 / (grid.dy() * grid.dy());
  return -1.0 / lmax;
}

HelmholtzSystem assemble_stage1_system(const PrimitiveField& Vn, const OperatorField& Rn, const SplitScalars& sn,
                                       double dt, const SolverConfig& cfg, const GridSpec& grid) {
  const double eps2 = cfg.epsilon * cfg.epsilon;
  const double gp = cfg.gamma * sn.p_min;
  HelmholtzSystem sys{dt * dt * gp / (eps2 * sn.rho_max), ScalarField(grid)};
  const ScalarField div_u = discrete_divergence(Vn.u(), Vn.v(), grid);
  const ScalarField div_Ru = discrete_divergence(Rn[1], Rn[2], grid);
  for (int k = 0; k < grid.ny; ++k) {
    for (int j = 0; j < grid.nx; ++j) {
      sys.rhs(j, k) = Vn.p()(j, k) - dt * Rn[3](j, k) - dt * gp * div_u(j, k) + dt * dt * gp * div_Ru(j, k);
    }
  }
  return sys;
}

HelmholtzSystem assemble_stage2_system(const PrimitiveField& Vn, const PrimitiveField& /*Vs*/,
                                       const OperatorField& Rn, const OperatorField& Rs, const OperatorField& Lnn,
                                       const OperatorField& Lss, const SplitScalars& ss, double dt,
                                       const SolverConfig& cfg, const GridSpec& grid) {
  const double eps2 = cfg.epsilon * cfg.epsilon;
  const double gp = cfg.gamma * ss.p_min;
  HelmholtzSystem sys{dt * dt * gp / (eps2 * ss.rho_max), ScalarField(grid)};

  ScalarField wx(grid), wy(grid);
  for (int k = 0; k < grid.ny; ++k) {
    for (int j = 0; j < grid.nx; ++j) {
      wx(j, k) = (Rn[1](j, k) + Rs[1](j, k)) + (Lnn[1](j, k) - Lss[1](j, k));
      wy(j, k) = (Rn[2](j, k) + Rs[2](j, k)) + (Lnn[2](j, k) - Lss[2](j, k));
    }
  }
  fill_ghosts(wx, grid);
  fill_ghosts(wy, grid);
  const ScalarField div_w = discrete_divergence(wx, wy, grid);
  const ScalarField div_u = discrete_divergence(Vn.u(), Vn.v(), grid);
  const double half_dt = 0.5 * dt;
  for (int k = 0; k < grid.ny; ++k) {
    for (int j = 0; j < grid.nx; ++j) {
      sys.rhs(j, k) = Vn.p()(j, k) - half_dt * (Rn[3](j, k) + Rs[3](j, k)) -
                      half_dt * (Lnn[3](j, k) - Lss[3](j, k)) - dt * gp * div_u(j, k) +
                      0.5 * dt * dt * gp * div_w(j, k);
    }
  }
  return sys;
}

ScalarField solve_helmholtz(const HelmholtzSystem& sys, const ScalarField& guess, double tol, int max_iter,
                            const GridSpec& grid, SolveStats* stats, bool jacobi) {
  if (!(sys.sigma > helmholtz_sigma_floor(grid)) || !std::isfinite(sys.sigma)) {
    std::ostringstream os;
    os << "Helmholtz coefficient " << sys.sigma << " makes the pressure operator indefinite";
    throw NonPhysicalState(os.str());
  }
  const auto& kt = simd::active_kernels();
  const std::size_t len = guess.raw().size();
  const double sigma = sys.sigma;

  ScalarField q = guess;
  ScalarField rhs = sys.rhs;
  zero_ghosts(rhs, grid);
  const double rhs_norm = interior_norm(rhs, grid);
  const double target = tol * rhs_norm;
  if (rhs_norm == 0.0) {
    if (stats != nullptr) *stats = {0, 0.0, 0.0, tol};
    return ScalarField(grid);
  }

  // Right-hand side of the increment equation: b0 = rhs - A guess.
  ScalarField Aq(grid);
  apply_helmholtz(q, sigma, grid, Aq);
  ScalarField b0 = rhs;
  kt.axpy(-1.0, Aq.raw().data(), b0.raw().data(), len);
  zero_ghosts(b0, grid);

  ScalarField diag_inv;
  if (jacobi) {
    diag_inv = ScalarField(grid);
    const double ix2 = 1.0 / (grid.dx() * grid.dx());
    const double iy2 = 1.0 / (grid.dy() * grid.dy());
    for (int k = 0; k < grid.ny; ++k) {
      for (int j = 0; j < grid.nx; ++j) {
        // Mirrored boundary neighbours cancel against the centre term.
        double cx = 2.0, cy = 2.0;
        if (grid.bc_x == Boundary::Outflow) cx -= (j == 0) + (j == grid.nx - 1);
        if (grid.bc_y == Boundary::Outflow) cy -= (k == 0) + (k == grid.ny - 1);
        diag_inv(j, k) = 1.0 / (1.0 + sigma * (cx * ix2 + cy * iy2));
      }
    }
  }
  auto precondition = [&](const ScalarField& r, ScalarField& z) {
    if (!jacobi) {
      z = r;
      return;
    }
    const auto rs = r.raw();
    const auto ds = diag_inv.raw();
    auto zs = z.raw();
    for (std::size_t i = 0; i < len; ++i) zs[i] = rs[i] * ds[i];
  };

  ScalarField delta(grid);
  ScalarField r = b0;
  ScalarField z(grid), p(grid), Ap(grid);
  int it = 0;
  double rnorm = interior_norm(r, grid);

  // Outer loop restarts from the explicitly recomputed residual whenever the
  // recursive one has drifted below the target.
  while (true) {
    const int it_before = it;
    precondition(r, z);
    p = z;
    double rz = interior_dot(r, z, grid);
    while (rnorm > target && it < max_iter) {
      apply_helmholtz(p, sigma, grid, Ap);
      const double pAp = interior_dot(p, Ap, grid);
      if (!(pAp > 0.0)) break;
      const double alpha = rz / pAp;
      kt.axpy(alpha, p.raw().data(), delta.raw().data(), len);
      kt.axpy(-alpha, Ap.raw().data(), r.raw().data(), len);
      ++it;
      rnorm = interior_norm(r, grid);
      if (rnorm <= target) break;
      precondition(r, z);
      const double rz_new = interior_dot(r, z, grid);
      kt.xpby(z.raw().data(), rz_new / rz, p.raw().data(), len);
      rz = rz_new;
    }
    // Explicit residual of the increment.
    apply_helmholtz(delta, sigma, grid, Ap);
    r = b0;
    kt.axpy(-1.0, Ap.raw().data(), r.raw().data(), len);
    zero_ghosts(r, grid);
    rnorm = interior_norm(r, grid);
    if (rnorm <= target || it >= max_iter || it == it_before) break;
  }

  const double rel = rhs_norm > 0.0 ? rnorm / rhs_norm : rnorm;
  if (stats != nullptr) *stats = {it, rhs_norm, rel, tol};
  if (rnorm > target) throw NoConvergence(it, rel);

  kt.axpy(1.0, delta.raw().data(), q.raw().data(), len);
  fill_ghosts(q, grid);
  return q;
}

}  // namespace apeuler
