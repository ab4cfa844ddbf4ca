#pragma once

#include <array>

#include "apeuler/config.hpp"
#include "apeuler/grid.hpp"

namespace apeuler {

/// A four-component point value, either (rho, u, v, p) or (rho, mx, my, E).
using State4 = std::array<double, 4>;

/// Four ghost-padded scalar fields sharing one grid.
struct Field4 {
  std::array<ScalarField, 4> c;

  Field4() = default;
  explicit Field4(const GridSpec& grid, double value = 0.0)
      : c{ScalarField(grid, value), ScalarField(grid, value), ScalarField(grid, value), ScalarField(grid, value)} {}

  ScalarField& operator[](int i) { return c[i]; }
  const ScalarField& operator[](int i) const { return c[i]; }

  State4 at(int j, int k) const { return {c[0](j, k), c[1](j, k), c[2](j, k), c[3](j, k)}; }
  void set(int j, int k, const State4& s) {
    for (int m = 0; m < 4; ++m) c[m](j, k) = s[m];
  }
};

/// Cell averages of (rho, u, v, p).
struct PrimitiveField : Field4 {
  using Field4::Field4;
  ScalarField& rho() { return c[0]; }
  ScalarField& u() { return c[1]; }
  ScalarField& v() { return c[2]; }
  ScalarField& p() { return c[3]; }
  const ScalarField& rho() const { return c[0]; }
  const ScalarField& u() const { return c[1]; }
  const ScalarField& v() const { return c[2]; }
  const ScalarField& p() const { return c[3]; }
};

/// Cell averages of (rho, rho*u, rho*v, E).
struct ConservativeField : Field4 {
  using Field4::Field4;
  ScalarField& rho() { return c[0]; }
  ScalarField& mx() { return c[1]; }
  ScalarField& my() { return c[2]; }
  ScalarField& E() { return c[3]; }
  const ScalarField& rho() const { return c[0]; }
  const ScalarField& mx() const { return c[1]; }
  const ScalarField& my() const { return c[2]; }
  const ScalarField& E() const { return c[3]; }
};

/// Cell values of a spatial operator (state per unit time).
struct OperatorField : Field4 {
  using Field4::Field4;
};

State4 prim_to_cons(const State4& prim, double eps, double gamma);
/// Throws NonPhysicalState if rho <= 0 or the recovered pressure is <= 0.
State4 cons_to_prim(const State4& cons, double eps, double gamma);

/// Pressure from the ideal-gas closure E = p/(gamma-1) + eps^2/2 rho |u|^2.
double pressure_from_cons(const State4& cons, double eps, double gamma);

/// Interior cells only; ghosts are refilled from the grid's boundary kinds.
ConservativeField prim_to_cons(const PrimitiveField& V, const GridSpec& grid, const SolverConfig& cfg);
ConservativeField prim_to_cons(const PrimitiveField& V, const GridSpec& grid, double eps, double gamma);
PrimitiveField cons_to_prim(const ConservativeField& U, const GridSpec& grid, const SolverConfig& cfg);

void fill_ghosts(Field4& field, const GridSpec& grid);

/// Throws NonPhysicalState unless rho > 0, p > 0 and every entry is finite on
/// the interior. `where` is included in the message.
void check_physical(const PrimitiveField& V, const GridSpec& grid, const char* where);

}  // namespace apeuler
