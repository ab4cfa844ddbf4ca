// Command-line driver: run a benchmark, run a convergence study, or probe
// the low-Mach behaviour of the solver.

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "apeuler/benchmarks.hpp"
#include "apeuler/cli_support.hpp"
#include "apeuler/errors.hpp"
#include "apeuler/integrator.hpp"
#include "apeuler/snapshot.hpp"

namespace fs = std::filesystem;
using namespace apeuler;

namespace {

struct RunArgs {
  std::string case_name;
  std::optional<double> eps;
  std::optional<int> nx, ny;
  std::optional<double> cfl, t_final, theta, elliptic_tol;
  int order = 2;
  std::string snap_times;
  std::string out_dir = ".";
  std::string dt_override;
};

struct ConvArgs {
  std::string case_name = "vortex";
  std::string eps_list = "1,0.01";
  std::string n_list = "64,128,256";
  std::optional<double> t_final, cfl, theta;
  double elliptic_tol = 1e-10;
  int order = 2;
  std::string out_dir = ".";
};

struct DiagArgs {
  std::string eps_list = "1e-2,1e-4,1e-6";
  int n = 64;
  int steps = 20;
};

double default_eps(const BenchmarkCase& c) { return c.id == CaseId::Baroclinic ? 0.05 : 1.0; }

std::string snapshot_name(const std::string& case_name, double t) {
  char buf[128];
  std::snprintf(buf, sizeof buf, "%s_t%.6f.csv", case_name.c_str(), t);
  return buf;
}

int do_run(const RunArgs& a) {
  const BenchmarkCase& c = find_case(a.case_name);
  const double eps = a.eps.value_or(default_eps(c));
  const int nx = a.nx.value_or(c.default_n);
  const int ny = a.ny.value_or(c.id == CaseId::Baroclinic ? nx / 5 : nx);
  const GridSpec grid = case_grid(c, nx, ny, eps);
  SolverConfig cfg = case_config(c, eps);
  if (a.cfl) cfg.k_cfl = *a.cfl;
  if (a.theta) cfg.theta = *a.theta;
  if (a.elliptic_tol) cfg.elliptic_tol = *a.elliptic_tol;
  cfg.order = a.order;
  if (!a.dt_override.empty()) cfg.dt_override = cli::parse_dt_override(a.dt_override);
  cfg.validate();

  fs::create_directories(a.out_dir);
  DualState st = make_dual_state(initial_state(c, grid, eps), grid, cfg);
  RunOptions ro;
  ro.t_final = a.t_final.value_or(case_final_time(c, eps));
  if (!a.snap_times.empty()) ro.snapshot_times = cli::parse_double_list(a.snap_times);
  ro.keep_history = false;
  ro.on_snapshot = [&](const DualState& s, const StepReport*) {
    const std::string path = (fs::path(a.out_dir) / snapshot_name(c.name, s.t)).string();
    write_snapshot_file(path, make_snapshot(s, grid, cfg));
    std::cout << "snapshot " << path << '\n';
  };
  int iters = 0;
  ro.on_step = [&](const DualState&, const StepReport& r) {
    iters += r.stage1.iterations + r.stage2.iterations;
    return true;
  };
  const RunReport rr = run(st, grid, cfg, ro);

  const std::string final_path = (fs::path(a.out_dir) / snapshot_name(c.name, st.t)).string();
  write_snapshot_file(final_path, make_snapshot(st, grid, cfg));
  std::printf("case=%s eps=%g grid=%dx%d t=%.6g steps=%d cg_iterations=%d status=%s\n", c.name.c_str(), eps, nx, ny,
              st.t, rr.steps, iters, to_string(rr.status));
  std::printf("final snapshot %s\n", final_path.c_str());
  if (!rr.message.empty()) std::fprintf(stderr, "error: %s\n", rr.message.c_str());
  return cli::exit_code_for(rr.status);
}

int do_convergence(const ConvArgs& a) {
  const BenchmarkCase& c = find_case(a.case_name);
  ConvergenceOptions opt;
  opt.eps_list = cli::parse_double_list(a.eps_list);
  opt.n_list = cli::parse_int_list(a.n_list);
  opt.t_final = a.t_final;
  opt.k_cfl = a.cfl;
  opt.theta = a.theta;
  opt.elliptic_tol = a.elliptic_tol;
  opt.order = a.order;
  const ErrorTable table = convergence_study(c, opt);
  std::cout << table.to_text();
  fs::create_directories(a.out_dir);
  const fs::path path = fs::path(a.out_dir) / (c.name + "_convergence.csv");
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot write " + path.string());
  f << table.to_delimited();
  std::cout << "table " << path.string() << '\n';
  for (const auto& r : table.rows) {
    if (r.status == to_string(RunStatus::NonPhysical)) return cli::kNonPhysical;
    if (r.status == to_string(RunStatus::NoConvergence)) return cli::kNoConvergence;
  }
  return cli::kOk;
}

// Gresho vortex probes: first time step, divergence growth and pressure
// fluctuation per Mach number.
int do_diagnose(const DiagArgs& a) {
  const BenchmarkCase& c = find_case("gresho");
  std::printf("%10s %12s %12s %12s %12s %12s %8s\n", "eps", "dt0", "div0", "div_max", "dp_final", "ctilde0",
              "cg_avg");
  int code = cli::kOk;
  for (double eps : cli::parse_double_list(a.eps_list)) {
    const GridSpec grid = case_grid(c, a.n, a.n, eps);
    const SolverConfig cfg = case_config(c, eps);
    DualState st = make_dual_state(initial_state(c, grid, eps), grid, cfg);
    const SplitScalars s0 = split_scalars(st.V, grid, eps);
    const double dt0 = compute_dt(st.V, s0, grid, cfg);
    const double div0 = max_abs_divergence(st.V, grid);
    const double c0 = max_cell_speeds(st.V, grid, s0, cfg).max_ctilde;
    RunOptions ro;
    ro.t_final = 1e30;
    ro.max_steps = a.steps;
    const RunReport rr = run(st, grid, cfg, ro);
    double div_max = div0;
    long iters = 0;
    for (const auto& h : rr.history) {
      div_max = std::max(div_max, h.max_divergence);
      iters += h.stage1.iterations + h.stage2.iterations;
    }
    const double avg = rr.history.empty() ? 0.0 : static_cast<double>(iters) / (2.0 * rr.history.size());
    std::printf("%10.3g %12.5e %12.5e %12.5e %12.5e %12.5e %8.1f %s\n", eps, dt0, div0, div_max,
                pressure_fluctuation(st.V, grid), c0, avg, to_string(rr.status));
    if (rr.status != RunStatus::Completed && rr.status != RunStatus::Stopped) code = cli::exit_code_for(rr.status);
  }
  return code;
}

// The config file's arguments go first so that explicit flags override them
// under the take-last policy.
std::vector<std::string> expand_config(int argc, char** argv) {
  std::vector<std::string> in(argv + 1, argv + argc);
  std::optional<std::string> path;
  for (std::size_t i = 0; i < in.size(); ++i) {
    if (in[i] == "--config" && i + 1 < in.size()) path = in[i + 1];
    else if (in[i].rfind("--config=", 0) == 0) path = in[i].substr(9);
  }
  if (!path || in.empty()) return in;
  std::vector<std::string> out;
  out.push_back(in[0]);  // subcommand
  for (auto& s : cli::config_to_args(cli::read_config_file(*path))) out.push_back(std::move(s));
  out.insert(out.end(), in.begin() + 1, in.end());
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"All-Mach finite-volume solver for the 2-D Euler equations", "apeuler"};
  app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  app.require_subcommand(1);
  std::string config_path;

  RunArgs ra;
  auto* run_cmd = app.add_subcommand("run", "Run one benchmark case");
  run_cmd->add_option("--config", config_path, "key=value file; flags win over it");
  run_cmd->add_option("--case", ra.case_name, "vortex | gresho | baroclinic | double-shear | explosion")->required();
  run_cmd->add_option("--eps", ra.eps, "Reference Mach number");
  run_cmd->add_option("--nx", ra.nx);
  run_cmd->add_option("--ny", ra.ny);
  run_cmd->add_option("--cfl", ra.cfl);
  run_cmd->add_option("--t-final", ra.t_final);
  run_cmd->add_option("--order", ra.order)->check(CLI::IsMember({1, 2}));
  run_cmd->add_option("--theta", ra.theta);
  run_cmd->add_option("--snap-times", ra.snap_times, "Comma-separated output times");
  run_cmd->add_option("--out-dir", ra.out_dir);
  run_cmd->add_option("--dt-override", ra.dt_override, "N:VALUE, fixed step for the first N steps");
  run_cmd->add_option("--elliptic-tol", ra.elliptic_tol);

  ConvArgs ca;
  auto* conv_cmd = app.add_subcommand("convergence", "Mesh convergence against the exact solution");
  conv_cmd->add_option("--config", config_path);
  conv_cmd->add_option("--case", ca.case_name);
  conv_cmd->add_option("--eps-list", ca.eps_list);
  conv_cmd->add_option("--n-list", ca.n_list);
  conv_cmd->add_option("--t-final", ca.t_final);
  conv_cmd->add_option("--cfl", ca.cfl);
  conv_cmd->add_option("--theta", ca.theta);
  conv_cmd->add_option("--elliptic-tol", ca.elliptic_tol);
  conv_cmd->add_option("--order", ca.order)->check(CLI::IsMember({1, 2}));
  conv_cmd->add_option("--out-dir", ca.out_dir);

  DiagArgs da;
  auto* diag_cmd = app.add_subcommand("diagnose", "Low-Mach probes on the Gresho vortex");
  diag_cmd->add_option("--config", config_path);
  diag_cmd->add_option("--eps-list", da.eps_list);
  diag_cmd->add_option("--n", da.n);
  diag_cmd->add_option("--steps", da.steps);

  std::vector<std::string> args;
  try {
    args = expand_config(argc, argv);
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return cli::kBadConfig;
  }
  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return cli::kBadConfig;
  }

  try {
    if (*run_cmd) return do_run(ra);
    if (*conv_cmd) return do_convergence(ca);
    if (*diag_cmd) return do_diagnose(da);
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return cli::kBadConfig;
  } catch (const NonPhysicalState& e) {
    std::cerr << "error: " << e.what() << '\n';
    return cli::kNonPhysical;
  } catch (const NoConvergence& e) {
    std::cerr << "error: " << e.what() << '\n';
    return cli::kNoConvergence;
  }
  return cli::kOk;
}
