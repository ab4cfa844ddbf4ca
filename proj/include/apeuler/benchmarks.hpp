#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "apeuler/config.hpp"
#include "apeuler/grid.hpp"
#include "apeuler/integrator.hpp"
#include "apeuler/state.hpp"

namespace apeuler {

enum class CaseId { Vortex, Gresho, Baroclinic, DoubleShear, Explosion };

struct BenchmarkCase {
  CaseId id;
  std::string name;
  double gamma;
  double k_cfl;
  Boundary bc;
  int default_n;
  bool has_exact;
};

const std::vector<BenchmarkCase>& all_cases();
/// Throws ConfigError for unknown names.
const BenchmarkCase& find_case(std::string_view name);

/// Domain for the case; the baroclinic box scales with 1/eps.
GridSpec case_grid(const BenchmarkCase& c, int nx, int ny, double eps);
/// gamma, CFL number, epsilon and, for strong explosions, the start-up override.
SolverConfig case_config(const BenchmarkCase& c, double eps);
/// Final time used when none is given.
double case_final_time(const BenchmarkCase& c, double eps);

/// Point values of the initial data (rho, u, v, p).
State4 vortex_point(double x, double y, double t, double eps);
State4 gresho_point(double x, double y, double eps);
State4 baroclinic_point(double x, double y, double eps, double gamma);
State4 double_shear_point(double x, double y, double gamma);
State4 explosion_point(double x, double y);

/// Cell averages by midpoint evaluation, ghosts filled.
PrimitiveField initial_state(const BenchmarkCase& c, const GridSpec& grid, double eps);
/// Exact solution at time t; nullopt for cases without one.
std::optional<PrimitiveField> exact_state(const BenchmarkCase& c, const GridSpec& grid, double eps, double t);

/// dx dy sum |a - b| per component.
std::array<double, 4> l1_error(const Field4& a, const Field4& b, const GridSpec& grid);

/// Averages 2x2 blocks of a fine field onto the grid with half the cells.
PrimitiveField restrict_2x2(const PrimitiveField& fine, const GridSpec& fine_grid, const GridSpec& coarse_grid);

/// ||u||_2 / sqrt(gamma) per interior cell.
ScalarField local_mach(const PrimitiveField& V, const GridSpec& grid, double gamma);
/// v_x - u_y with central differences, interior cells; V needs filled ghosts.
ScalarField vorticity(const PrimitiveField& V, const GridSpec& grid);

struct ErrorRow {
  int n = 0;
  double eps = 0.0;
  std::array<double, 4> error{};
  std::array<double, 4> rate{};  // NaN when there is no coarser row
  std::string status = "ok";
};

struct ErrorTable {
  std::vector<ErrorRow> rows;

  /// Aligned human-readable table.
  std::string to_text() const;
  /// Comma-separated, one header line.
  std::string to_delimited() const;
};

/// log2(e_coarse / e_fine).
double observed_rate(double e_coarse, double e_fine);

struct ConvergenceOptions {
  std::vector<double> eps_list;
  std::vector<int> n_list;
  std::optional<double> t_final;
  std::optional<double> k_cfl;
  std::optional<double> theta;
  int order = 2;
  double elliptic_tol = 1e-10;
};

/// Runs the case for every (eps, N) pair against the exact solution. Failed
/// runs are kept as rows with their status and NaN errors.
ErrorTable convergence_study(const BenchmarkCase& c, const ConvergenceOptions& opt);

}  // namespace apeuler
