#pragma once

#include <functional>
#include <string>
#include <vector>

#include "apeuler/config.hpp"
#include "apeuler/elliptic.hpp"
#include "apeuler/grid.hpp"
#include "apeuler/nonstiff.hpp"
#include "apeuler/state.hpp"

namespace apeuler {

/// Primitive and conservative solutions evolved side by side.
struct DualState {
  PrimitiveField V;
  ConservativeField U;
  double t = 0.0;
};

/// Builds a dual state from primitive cell averages (ghosts are filled).
DualState make_dual_state(PrimitiveField V, const GridSpec& grid, const SolverConfig& cfg, double t = 0.0);

struct StepReport {
  double dt = 0.0;
  SolveStats stage1;
  SolveStats stage2;  // iterations == 0 in first-order mode
  double max_ctilde = 0.0;
  double max_c = 0.0;
  double max_divergence = 0.0;
  double pressure_fluctuation = 0.0;  // max p - min p
};

/// K min(dx / max(|u| + c~), dy / max(|v| + c~)), denominators floored at delta.
double compute_dt(const PrimitiveField& V, const SplitScalars& s, const GridSpec& grid, const SolverConfig& cfg);

/// Mach-dependent weight of the primitive branch: 1 - eps^alpha below eps0,
/// (1 - eps)^alpha above eps1 and a smooth bump blend in between.
double switching_function(double eps, const SolverConfig& cfg);

/// (1 - s) V(U) + s V_raw cellwise. When the conservative weight is exactly 0,
/// V(U) is not evaluated. U is never modified.
PrimitiveField post_process(const PrimitiveField& V_raw, const ConservativeField& U, const GridSpec& grid,
                            const SolverConfig& cfg);

/// One semi-implicit step of size dt (one stage for order 1, two for order 2).
/// On error the state is left untouched.
StepReport si_dec_step(DualState& state, const GridSpec& grid, const SolverConfig& cfg, double dt);

/// max |div u| and max p - min p over interior cells.
double max_abs_divergence(const PrimitiveField& V, const GridSpec& grid);
double pressure_fluctuation(const PrimitiveField& V, const GridSpec& grid);

enum class RunStatus { Completed, Stopped, NonPhysical, NoConvergence };

const char* to_string(RunStatus s);

struct RunReport {
  RunStatus status = RunStatus::Completed;
  std::string message;
  int steps = 0;
  double t = 0.0;
  std::vector<StepReport> history;
  /// True while every elliptic solve met its residual target.
  bool residual_contract = true;
  double worst_relative_residual = 0.0;
};

struct RunOptions {
  double t_final = 0.0;
  /// Times at which on_snapshot fires; steps are shortened to land on them.
  std::vector<double> snapshot_times;
  int max_steps = -1;  // negative: unlimited
  bool keep_history = true;
  /// Called after every accepted step; returning false stops the run.
  std::function<bool(const DualState&, const StepReport&)> on_step;
  std::function<void(const DualState&, const StepReport*)> on_snapshot;
};

/// Steps until t_final (the last step is clipped to land on it). Step errors
/// are caught and reported through the status; the state holds the last
/// accepted solution.
RunReport run(DualState& state, const GridSpec& grid, const SolverConfig& cfg, const RunOptions& opt);

}  // namespace apeuler
