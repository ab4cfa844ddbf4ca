#pragma once

#include <cmath>
#include <functional>
#include <random>

#include "apeuler/grid.hpp"
#include "apeuler/state.hpp"

namespace testing_support {

inline apeuler::GridSpec square(int n, double lo = 0.0, double hi = 1.0,
                                apeuler::Boundary bc = apeuler::Boundary::Periodic) {
  apeuler::GridSpec g;
  g.nx = g.ny = n;
  g.x_lo = g.y_lo = lo;
  g.x_hi = g.y_hi = hi;
  g.bc_x = g.bc_y = bc;
  return g;
}

inline apeuler::ScalarField sample(const apeuler::GridSpec& g, const std::function<double(double, double)>& f) {
  apeuler::ScalarField s(g);
  for (int k = 0; k < g.ny; ++k)
    for (int j = 0; j < g.nx; ++j) s(j, k) = f(g.xc(j), g.yc(k));
  apeuler::fill_ghosts(s, g);
  return s;
}

inline apeuler::PrimitiveField sample4(const apeuler::GridSpec& g,
                                       const std::function<apeuler::State4(double, double)>& f) {
  apeuler::PrimitiveField V(g);
  for (int k = 0; k < g.ny; ++k)
    for (int j = 0; j < g.nx; ++j) V.set(j, k, f(g.xc(j), g.yc(k)));
  apeuler::fill_ghosts(V, g);
  return V;
}

/// Smooth positive state on the unit-periodic square.
inline apeuler::State4 smooth_state(double x, double y) {
  const double tp = 2.0 * M_PI;
  return {1.0 + 0.2 * std::sin(tp * x) * std::cos(tp * y), 0.5 + 0.3 * std::cos(tp * y),
          -0.2 + 0.25 * std::sin(tp * x), 1.0 + 0.1 * std::cos(tp * (x + y))};
}

inline apeuler::PrimitiveField random_state(const apeuler::GridSpec& g, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> pos(0.5, 2.0), vel(-1.0, 1.0);
  apeuler::PrimitiveField V(g);
  for (int k = 0; k < g.ny; ++k)
    for (int j = 0; j < g.nx; ++j) V.set(j, k, {pos(rng), vel(rng), vel(rng), pos(rng)});
  apeuler::fill_ghosts(V, g);
  return V;
}

inline double max_interior_diff(const apeuler::ScalarField& a, const apeuler::ScalarField& b,
                                const apeuler::GridSpec& g) {
  double m = 0.0;
  for (int k = 0; k < g.ny; ++k)
    for (int j = 0; j < g.nx; ++j) m = std::max(m, std::abs(a(j, k) - b(j, k)));
  return m;
}

}  // namespace testing_support
