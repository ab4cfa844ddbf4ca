#include "apeuler/state.hpp"

#include <cmath>
#include <sstream>

#include "apeuler/errors.hpp"

namespace apeuler {

void SolverConfig::validate() const {
  auto fail = [](const std::string& msg) { throw ConfigError(msg); };
  if (!(epsilon > 0.0 && epsilon <= 1.0)) fail("epsilon must lie in (0, 1]");
  if (!(gamma > 1.0)) fail("gamma must exceed 1");
  if (!(k_cfl > 0.0)) fail("CFL number must be positive");
  if (!(theta >= 1.0 && theta <= 2.0)) fail("theta must lie in [1, 2]");
  if (!(delta > 0.0)) fail("delta must be positive");
  if (!(eps0 > 0.0 && eps0 < eps1 && eps1 < 1.0)) fail("switching parameters need 0 < eps0 < eps1 < 1");
  if (!(alpha > 0.0)) fail("alpha must be positive");
  if (!(elliptic_tol > 0.0)) fail("elliptic tolerance must be positive");
  if (elliptic_max_iter < 0) fail("elliptic iteration cap must be non-negative");
  if (order != 1 && order != 2) fail("order must be 1 or 2");
  if (dt_override.steps < 0 || (dt_override.steps > 0 && !(dt_override.value > 0.0))) {
    fail("dt override needs a positive value");
  }
}

double pressure_from_cons(const State4& q, double eps, double gamma) {
  const double kinetic = 0.5 * eps * eps * (q[1] * q[1] + q[2] * q[2]) / q[0];
  return (gamma - 1.0) * (q[3] - kinetic);
}

State4 prim_to_cons(const State4& w, double eps, double gamma) {
  const double rho = w[0];
  const double E = w[3] / (gamma - 1.0) + 0.5 * eps * eps * rho * (w[1] * w[1] + w[2] * w[2]);
  return {rho, rho * w[1], rho * w[2], E};
}

State4 cons_to_prim(const State4& q, double eps, double gamma) {
  if (!(q[0] > 0.0)) {
    std::ostringstream os;
    os << "non-positive density " << q[0];
    throw NonPhysicalState(os.str());
  }
  const double p = pressure_from_cons(q, eps, gamma);
  if (!(p > 0.0) || !std::isfinite(p)) {
    std::ostringstream os;
    os << "non-positive pressure " << p << " recovered from conservative state";
    throw NonPhysicalState(os.str());
  }
  return {q[0], q[1] / q[0], q[2] / q[0], p};
}

ConservativeField prim_to_cons(const PrimitiveField& V, const GridSpec& grid, double eps, double gamma) {
  ConservativeField U(grid);
  for (int k = 0; k < grid.ny; ++k) {
    for (int j = 0; j < grid.nx; ++j) U.set(j, k, prim_to_cons(V.at(j, k), eps, gamma));
  }
  fill_ghosts(U, grid);
  return U;
}

ConservativeField prim_to_cons(const PrimitiveField& V, const GridSpec& grid, const SolverConfig& cfg) {
  return prim_to_cons(V, grid, cfg.epsilon, cfg.gamma);
}

PrimitiveField cons_to_prim(const ConservativeField& U, const GridSpec& grid, const SolverConfig& cfg) {
  PrimitiveField V(grid);
  for (int k = 0; k < grid.ny; ++k) {
    for (int j = 0; j < grid.nx; ++j) V.set(j, k, cons_to_prim(U.at(j, k), cfg.epsilon, cfg.gamma));
  }
  fill_ghosts(V, grid);
  return V;
}

void fill_ghosts(Field4& field, const GridSpec& grid) {
  for (auto& f : field.c) fill_ghosts(f, grid);
}

void check_physical(const PrimitiveField& V, const GridSpec& grid, const char* where) {
  for (int k = 0; k < grid.ny; ++k) {
    for (int j = 0; j < grid.nx; ++j) {
      const State4 w = V.at(j, k);
      const bool finite = std::isfinite(w[0]) && std::isfinite(w[1]) && std::isfinite(w[2]) && std::isfinite(w[3]);
      if (!finite || !(w[0] > 0.0) || !(w[3] > 0.0)) {
        std::ostringstream os;
        os << where << ": non-physical state at cell (" << j << ", " << k << "): rho=" << w[0] << " u=" << w[1]
           << " v=" << w[2] << " p=" << w[3];
        throw NonPhysicalState(os.str());
      }
    }
  }
}

}  // namespace apeuler
