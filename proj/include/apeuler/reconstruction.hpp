#pragma once

#include <array>
#include <initializer_list>

#include "apeuler/grid.hpp"
#include "apeuler/state.hpp"

namespace apeuler {

/// min if all arguments are positive, max if all are negative, else 0.
double minmod(std::initializer_list<double> z);

inline double minmod(double a, double b) {
  if (a > 0.0 && b > 0.0) return a < b ? a : b;
  if (a < 0.0 && b < 0.0) return a > b ? a : b;
  return 0.0;
}

/// Limited slopes of each primitive component, defined on the interior and
/// the first ghost layer.
struct SlopeField {
  Field4 vx;
  Field4 vy;
};

/// Four components on one family of faces.
using FaceState4 = std::array<FaceField, 4>;

/// One-sided reconstructions at the interface midpoints. `x_minus(i, k)` is
/// the value from cell i-1 and `x_plus(i, k)` the value from cell i at the
/// face x_{i-1/2}; the y-faces follow the same convention in k.
struct InterfaceValues {
  FaceState4 x_minus, x_plus, y_minus, y_plus;

  State4 xm(int i, int k) const { return {x_minus[0](i, k), x_minus[1](i, k), x_minus[2](i, k), x_minus[3](i, k)}; }
  State4 xp(int i, int k) const { return {x_plus[0](i, k), x_plus[1](i, k), x_plus[2](i, k), x_plus[3](i, k)}; }
  State4 ym(int j, int k) const { return {y_minus[0](j, k), y_minus[1](j, k), y_minus[2](j, k), y_minus[3](j, k)}; }
  State4 yp(int j, int k) const { return {y_plus[0](j, k), y_plus[1](j, k), y_plus[2](j, k), y_plus[3](j, k)}; }
};

/// Generalized minmod slopes; V must have its ghosts filled.
SlopeField compute_slopes(const PrimitiveField& V, const GridSpec& grid, double theta);

/// Per-cell positivity fallback: a cell whose reconstructed density or
/// pressure is non-positive at any of its four faces gets its slopes
/// recomputed with theta = 1, and zeroed if that still fails.
/// Returns the number of cells that were modified.
int enforce_positive_faces(const PrimitiveField& V, SlopeField& slopes, const GridSpec& grid);

/// Face values from cell averages and slopes. Throws NonPhysicalState if a
/// reconstructed density or pressure is non-positive.
InterfaceValues reconstruct_interfaces(const PrimitiveField& V, const SlopeField& slopes, const GridSpec& grid);

/// Slopes, positivity fallback and face values in one pass.
InterfaceValues reconstruct(const PrimitiveField& V, const GridSpec& grid, double theta);

}  // namespace apeuler
