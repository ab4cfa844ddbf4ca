#include "apeuler/reconstruction.hpp"

#include <algorithm>
#include <sstream>

#include "apeuler/errors.hpp"
#include "apeuler/simd/kernels.hpp"

namespace apeuler {

double minmod(std::initializer_list<double> z) {
  bool all_pos = true;
  bool all_neg = true;
  for (double v : z) {
    all_pos = all_pos && v > 0.0;
    all_neg = all_neg && v < 0.0;
  }
  if (all_pos) return std::min(z);
  if (all_neg) return std::max(z);
  return 0.0;
}

namespace {

// Slopes for rows k in [-1, ny], cells j in [-1, nx].
void limited_slopes(const ScalarField& f, ScalarField& sx, ScalarField& sy, const GridSpec& grid, double theta) {
  const auto& kern = simd::active_kernels();
  const std::size_t n = static_cast<std::size_t>(grid.nx) + 2;
  const double inv_dx = 1.0 / grid.dx();
  const double inv_dy = 1.0 / grid.dy();
  for (int k = -1; k <= grid.ny; ++k) {
    const double* r = f.row(k) - 1;
    kern.minmod_slope(r - 1, r, r + 1, sx.row(k) - 1, n, theta, inv_dx);
    kern.minmod_slope(f.row(k - 1) - 1, r, f.row(k + 1) - 1, sy.row(k) - 1, n, theta, inv_dy);
  }
}

double slope_at(const ScalarField& f, int j, int k, int dj, int dk, double h, double theta) {
  const double m = f(j - dj, k - dk);
  const double c = f(j, k);
  const double p = f(j + dj, k + dk);
  return minmod({theta * ((c - m) / h), (p - m) / (2.0 * h), theta * ((p - c) / h)});
}

bool faces_positive(const PrimitiveField& V, const SlopeField& s, int j, int k, double hx, double hy) {
  for (int m : {0, 3}) {
    const double c = V[m](j, k);
    const double ex = 0.5 * hx * s.vx[m](j, k);
    const double ey = 0.5 * hy * s.vy[m](j, k);
    if (!(c - ex > 0.0) || !(c + ex > 0.0) || !(c - ey > 0.0) || !(c + ey > 0.0)) return false;
  }
  return true;
}

}  // namespace

SlopeField compute_slopes(const PrimitiveField& V, const GridSpec& grid, double theta) {
  SlopeField s{Field4(grid), Field4(grid)};
  for (int m = 0; m < 4; ++m) limited_slopes(V[m], s.vx[m], s.vy[m], grid, theta);
  return s;
}

int enforce_positive_faces(const PrimitiveField& V, SlopeField& s, const GridSpec& grid) {
  const double hx = grid.dx();
  const double hy = grid.dy();
  int modified = 0;
  for (int k = -1; k <= grid.ny; ++k) {
    for (int j = -1; j <= grid.nx; ++j) {
      if (faces_positive(V, s, j, k, hx, hy)) continue;
      ++modified;
      for (int m = 0; m < 4; ++m) {
        s.vx[m](j, k) = slope_at(V[m], j, k, 1, 0, hx, 1.0);
        s.vy[m](j, k) = slope_at(V[m], j, k, 0, 1, hy, 1.0);
      }
      if (faces_positive(V, s, j, k, hx, hy)) continue;
      for (int m = 0; m < 4; ++m) {
        s.vx[m](j, k) = 0.0;
        s.vy[m](j, k) = 0.0;
      }
    }
  }
  return modified;
}

InterfaceValues reconstruct_interfaces(const PrimitiveField& V, const SlopeField& s, const GridSpec& grid) {
  const int nx = grid.nx;
  const int ny = grid.ny;
  const double hx = 0.5 * grid.dx();
  const double hy = 0.5 * grid.dy();

  InterfaceValues iv;
  for (int m = 0; m < 4; ++m) {
    iv.x_minus[m] = make_x_faces(grid);
    iv.x_plus[m] = make_x_faces(grid);
    iv.y_minus[m] = make_y_faces(grid);
    iv.y_plus[m] = make_y_faces(grid);
    const ScalarField& f = V[m];
    const ScalarField& sx = s.vx[m];
    const ScalarField& sy = s.vy[m];
    for (int k = 0; k < ny; ++k) {
      for (int i = 0; i <= nx; ++i) {
        iv.x_minus[m](i, k) = f(i - 1, k) + hx * sx(i - 1, k);
        iv.x_plus[m](i, k) = f(i, k) - hx * sx(i, k);
      }
    }
    for (int k = 0; k <= ny; ++k) {
      for (int j = 0; j < nx; ++j) {
        iv.y_minus[m](j, k) = f(j, k - 1) + hy * sy(j, k - 1);
        iv.y_plus[m](j, k) = f(j, k) - hy * sy(j, k);
      }
    }
  }

  auto check = [](const FaceState4& side, const char* name) {
    for (int m : {0, 3}) {
      for (double v : side[m].raw()) {
        if (!(v > 0.0)) {
          std::ostringstream os;
          os << "reconstructed " << (m == 0 ? "density" : "pressure") << ' ' << v << " on " << name << " faces";
          throw NonPhysicalState(os.str());
        }
      }
    }
  };
  check(iv.x_minus, "x-");
  check(iv.x_plus, "x+");
  check(iv.y_minus, "y-");
  check(iv.y_plus, "y+");
  return iv;
}

InterfaceValues reconstruct(const PrimitiveField& V, const GridSpec& grid, double theta) {
  SlopeField s = compute_slopes(V, grid, theta);
  enforce_positive_faces(V, s, grid);
  return reconstruct_interfaces(V, s, grid);
}

}  // namespace apeuler
