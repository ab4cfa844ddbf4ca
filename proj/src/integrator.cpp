#include "apeuler/integrator.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "apeuler/conservative.hpp"
#include "apeuler/errors.hpp"
#include "apeuler/reconstruction.hpp"
#include "apeuler/stiff.hpp"

namespace apeuler {

DualState make_dual_state(PrimitiveField V, const GridSpec& grid, const SolverConfig& cfg, double t) {
  fill_ghosts(V, grid);
  check_physical(V, grid, "initial state");
  DualState s;
  s.U = prim_to_cons(V, grid, cfg);
  s.V = std::move(V);
  s.t = t;
  return s;
}

double compute_dt(const PrimitiveField& V, const SplitScalars& s, const GridSpec& grid, const SolverConfig& cfg) {
  const CellSpeeds c = max_cell_speeds(V, grid, s, cfg);
  const double sx = std::max(c.max_x, cfg.delta);
  const double sy = std::max(c.max_y, cfg.delta);
  return cfg.k_cfl * std::min(grid.dx() / sx, grid.dy() / sy);
}

double switching_function(double eps, const SolverConfig& cfg) {
  const double a = cfg.alpha;
  if (eps <= cfg.eps0) return 1.0 - std::pow(eps, a);
  if (eps >= cfg.eps1) return std::pow(1.0 - eps, a);
  const double xi = (eps - cfg.eps0) / (cfg.eps1 - cfg.eps0);
  const double lo = std::pow(1.0 - cfg.eps1, a);
  const double hi = 1.0 - std::pow(cfg.eps0, a);
  return std::exp(1.0 - 1.0 / (1.0 - xi * xi)) * (hi - lo) + lo;
}

PrimitiveField post_process(const PrimitiveField& V_raw, const ConservativeField& U, const GridSpec& grid,
                            const SolverConfig& cfg) {
  const double s = switching_function(cfg.epsilon, cfg);
  const double w = 1.0 - s;
  if (w == 0.0) return V_raw;
  if (s == 0.0) return cons_to_prim(U, grid, cfg);
  // Only the blend has to be physical: the explicit conservative branch may
  // drift to p <= 0 where its weight is negligible.
  PrimitiveField out(grid);
  for (int k = 0; k < grid.ny; ++k) {
    for (int j = 0; j < grid.nx; ++j) {
      const State4 q = U.at(j, k);
      if (!(q[0] > 0.0)) throw NonPhysicalState("non-positive density in the conservative branch");
      const State4 vc{q[0], q[1] / q[0], q[2] / q[0], pressure_from_cons(q, cfg.epsilon, cfg.gamma)};
      const State4 vr = V_raw.at(j, k);
      State4 b;
      for (int m = 0; m < 4; ++m) b[m] = w * vc[m] + s * vr[m];
      out.set(j, k, b);
    }
  }
  check_physical(out, grid, "post-processing");
  fill_ghosts(out, grid);
  return out;
}

double max_abs_divergence(const PrimitiveField& V, const GridSpec& grid) {
  const ScalarField d = discrete_divergence(V.u(), V.v(), grid);
  double m = 0.0;
  for (int k = 0; k < grid.ny; ++k)
    for (int j = 0; j < grid.nx; ++j) m = std::max(m, std::abs(d(j, k)));
  return m;
}

double pressure_fluctuation(const PrimitiveField& V, const GridSpec& grid) {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (int k = 0; k < grid.ny; ++k) {
    for (int j = 0; j < grid.nx; ++j) {
      lo = std::min(lo, V.p()(j, k));
      hi = std::max(hi, V.p()(j, k));
    }
  }
  return hi - lo;
}

namespace {

// U + c * D on interior cells.
ConservativeField explicit_update(const ConservativeField& U, double c, const OperatorField& D1,
                                  const OperatorField* D2, const GridSpec& grid) {
  ConservativeField out(grid);
  for (int m = 0; m < 4; ++m) {
    for (int k = 0; k < grid.ny; ++k) {
      for (int j = 0; j < grid.nx; ++j) {
        const double d = D2 != nullptr ? D1[m](j, k) + (*D2)[m](j, k) : D1[m](j, k);
        out[m](j, k) = U[m](j, k) + c * d;
      }
    }
  }
  fill_ghosts(out, grid);
  return out;
}

}  // namespace

StepReport si_dec_step(DualState& state, const GridSpec& grid, const SolverConfig& cfg, double dt) {
  const double eps = cfg.epsilon;
  const double gam = cfg.gamma;
  const int max_iter = cfg.max_iterations_for(grid.nx, grid.ny);
  const PrimitiveField& Vn = state.V;
  const ConservativeField& Un = state.U;
  StepReport rep;
  rep.dt = dt;

  // Stage 1.
  const SplitScalars sn = split_scalars(Vn, grid, eps);
  const StiffScalars kn = stiff_scalars(sn, eps, gam);
  rep.max_ctilde = max_cell_speeds(Vn, grid, sn, cfg).max_ctilde;
  rep.max_c = max_full_speed(Vn, grid, cfg);
  const InterfaceValues ivn = reconstruct(Vn, grid, cfg.theta);
  const OperatorField Rn = assemble_R(Vn, ivn, grid, cfg, sn);
  const OperatorField Dn = assemble_conservative_rhs(ivn, grid, cfg);

  PrimitiveField Vs(grid);
  const HelmholtzSystem sys1 = assemble_stage1_system(Vn, Rn, sn, dt, cfg, grid);
  Vs.p() = solve_helmholtz(sys1, Vn.p(), cfg.elliptic_tol, max_iter, grid, &rep.stage1, cfg.elliptic_jacobi);
  {
    const Gradient gp = central_gradient(Vs.p(), grid);
    for (int k = 0; k < grid.ny; ++k) {
      for (int j = 0; j < grid.nx; ++j) {
        Vs.rho()(j, k) = Vn.rho()(j, k) - dt * Rn[0](j, k);
        Vs.u()(j, k) = Vn.u()(j, k) - dt * Rn[1](j, k) - dt * kn.inv_eps2_rhomax * gp.px(j, k);
        Vs.v()(j, k) = Vn.v()(j, k) - dt * Rn[2](j, k) - dt * kn.inv_eps2_rhomax * gp.py(j, k);
      }
    }
  }
  fill_ghosts(Vs, grid);
  ConservativeField Us = explicit_update(Un, dt, Dn, nullptr, grid);
  Vs = post_process(Vs, Us, grid, cfg);
  check_physical(Vs, grid, "stage 1");

  if (cfg.order == 1) {
    state.V = std::move(Vs);
    state.U = std::move(Us);
    state.t += dt;
    rep.max_divergence = max_abs_divergence(state.V, grid);
    rep.pressure_fluctuation = pressure_fluctuation(state.V, grid);
    return rep;
  }

  // Stage 2: correction with the starred scalars.
  const SplitScalars ss = split_scalars(Vs, grid, eps);
  const StiffScalars ks = stiff_scalars(ss, eps, gam);
  const InterfaceValues ivs = reconstruct(Vs, grid, cfg.theta);
  const OperatorField Rs = assemble_R(Vs, ivs, grid, cfg, ss);
  const OperatorField Ds = assemble_conservative_rhs(ivs, grid, cfg);
  const OperatorField Lnn = assemble_L(kn, Vn, grid);
  const OperatorField Lss = assemble_L(ks, Vs, grid);

  PrimitiveField Vnew(grid);
  const HelmholtzSystem sys2 = assemble_stage2_system(Vn, Vs, Rn, Rs, Lnn, Lss, ss, dt, cfg, grid);
  Vnew.p() = solve_helmholtz(sys2, Vs.p(), cfg.elliptic_tol, max_iter, grid, &rep.stage2, cfg.elliptic_jacobi);
  {
    const Gradient gp = central_gradient(Vnew.p(), grid);
    const double h = 0.5 * dt;
    for (int k = 0; k < grid.ny; ++k) {
      for (int j = 0; j < grid.nx; ++j) {
        Vnew.rho()(j, k) = Vn.rho()(j, k) - h * (Rn[0](j, k) + Rs[0](j, k));
        Vnew.u()(j, k) = Vn.u()(j, k) - h * (Rn[1](j, k) + Rs[1](j, k)) - h * (Lnn[1](j, k) - Lss[1](j, k)) -
                         dt * ks.inv_eps2_rhomax * gp.px(j, k);
        Vnew.v()(j, k) = Vn.v()(j, k) - h * (Rn[2](j, k) + Rs[2](j, k)) - h * (Lnn[2](j, k) - Lss[2](j, k)) -
                         dt * ks.inv_eps2_rhomax * gp.py(j, k);
      }
    }
  }
  fill_ghosts(Vnew, grid);
  ConservativeField Unew = explicit_update(Un, 0.5 * dt, Dn, &Ds, grid);
  Vnew = post_process(Vnew, Unew, grid, cfg);
  check_physical(Vnew, grid, "stage 2");

  state.V = std::move(Vnew);
  state.U = std::move(Unew);
  state.t += dt;
  rep.max_divergence = max_abs_divergence(state.V, grid);
  rep.pressure_fluctuation = pressure_fluctuation(state.V, grid);
  return rep;
}

const char* to_string(RunStatus s) {
  switch (s) {
    case RunStatus::Completed: return "completed";
    case RunStatus::Stopped: return "stopped";
    case RunStatus::NonPhysical: return "non-physical state";
    case RunStatus::NoConvergence: return "no convergence";
  }
  return "unknown";
}

RunReport run(DualState& state, const GridSpec& grid, const SolverConfig& cfg, const RunOptions& opt) {
  RunReport rep;
  rep.t = state.t;
  std::vector<double> snaps = opt.snapshot_times;
  std::sort(snaps.begin(), snaps.end());
  // Landing tolerance relative to the time scale.
  const double tiny = 1e-12 * std::max(1.0, std::abs(opt.t_final));
  std::size_t next_snap = 0;
  auto fire_snapshots = [&](const StepReport* last) {
    while (next_snap < snaps.size() && snaps[next_snap] <= state.t + tiny) {
      if (opt.on_snapshot && std::abs(snaps[next_snap] - state.t) <= tiny) opt.on_snapshot(state, last);
      ++next_snap;
    }
  };
  fire_snapshots(nullptr);

  while (state.t < opt.t_final - tiny) {
    if (opt.max_steps >= 0 && rep.steps >= opt.max_steps) break;
    try {
      double dt;
      if (cfg.dt_override.active() && rep.steps < cfg.dt_override.steps) {
        dt = cfg.dt_override.value;
      } else {
        dt = compute_dt(state.V, split_scalars(state.V, grid, cfg.epsilon), grid, cfg);
      }
      double stop = opt.t_final;
      if (next_snap < snaps.size()) stop = std::min(stop, snaps[next_snap]);
      if (state.t + dt >= stop - tiny) dt = stop - state.t;

      StepReport sr = si_dec_step(state, grid, cfg, dt);
      if (std::abs(state.t - stop) <= tiny) state.t = stop;
      ++rep.steps;
      rep.t = state.t;
      for (const SolveStats* st : {&sr.stage1, &sr.stage2}) {
        if (st->tol == 0.0) continue;
        rep.worst_relative_residual = std::max(rep.worst_relative_residual, st->relative_residual);
        rep.residual_contract = rep.residual_contract && st->contract_holds();
      }
      if (opt.keep_history) rep.history.push_back(sr);
      fire_snapshots(&sr);
      if (opt.on_step && !opt.on_step(state, sr)) {
        rep.status = RunStatus::Stopped;
        return rep;
      }
    } catch (const NonPhysicalState& e) {
      rep.status = RunStatus::NonPhysical;
      rep.message = e.what();
      return rep;
    } catch (const NoConvergence& e) {
      rep.status = RunStatus::NoConvergence;
      rep.message = e.what();
      rep.residual_contract = false;
      return rep;
    }
  }
  return rep;
}

}  // namespace apeuler
