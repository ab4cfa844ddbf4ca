#include "apeuler/grid.hpp"

#include <string>

#include "apeuler/errors.hpp"

namespace apeuler {

void GridSpec::validate() const {
  if (nx <= 0 || ny <= 0) {
    throw ConfigError("grid needs positive cell counts, got " + std::to_string(nx) + "x" + std::to_string(ny));
  }
  if (!(x_hi > x_lo) || !(y_hi > y_lo)) {
    throw ConfigError("grid extents must be positive");
  }
}

void fill_ghosts(ScalarField& f, const GridSpec& grid) {
  constexpr int g = GridSpec::ghost;
  const int nx = f.nx();
  const int ny = f.ny();

  for (int k = 0; k < ny; ++k) {
    for (int m = 1; m <= g; ++m) {
      if (grid.bc_x == Boundary::Periodic) {
        f(-m, k) = f(nx - m, k);
        f(nx - 1 + m, k) = f(m - 1, k);
      } else {
        f(-m, k) = f(0, k);
        f(nx - 1 + m, k) = f(nx - 1, k);
      }
    }
  }
  // Full rows, so the corners pick up the x-ghosts just written.
  for (int m = 1; m <= g; ++m) {
    for (int j = -g; j < nx + g; ++j) {
      if (grid.bc_y == Boundary::Periodic) {
        f(j, -m) = f(j, ny - m);
        f(j, ny - 1 + m) = f(j, m - 1);
      } else {
        f(j, -m) = f(j, 0);
        f(j, ny - 1 + m) = f(j, ny - 1);
      }
    }
  }
}

}  // namespace apeuler
