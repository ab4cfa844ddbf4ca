#pragma once

#include <algorithm>
#include <cstddef>
#include <span>
#include <vector>

namespace apeuler {

enum class Boundary { Periodic, Outflow };

/// Uniform Cartesian grid with a fixed two-cell ghost layer on every side.
struct GridSpec {
  static constexpr int ghost = 2;

  int nx = 0;
  int ny = 0;
  double x_lo = 0.0;
  double x_hi = 1.0;
  double y_lo = 0.0;
  double y_hi = 1.0;
  Boundary bc_x = Boundary::Periodic;
  Boundary bc_y = Boundary::Periodic;

  double dx() const { return (x_hi - x_lo) / nx; }
  double dy() const { return (y_hi - y_lo) / ny; }
  double cell_area() const { return dx() * dy(); }
  /// Cell-center coordinates; valid for ghost indices as well.
  double xc(int j) const { return x_lo + (j + 0.5) * dx(); }
  double yc(int k) const { return y_lo + (k + 0.5) * dy(); }

  /// Throws ConfigError unless nx, ny > 0 and both extents are positive.
  void validate() const;
};

/// One scalar quantity stored row-major (x fastest) including ghost cells.
/// Indices run over [-ghost, n + ghost) in each direction.
class ScalarField {
 public:
  ScalarField() = default;
  ScalarField(int nx, int ny, double value = 0.0)
      : nx_(nx), ny_(ny), stride_(nx + 2 * GridSpec::ghost),
        data_(static_cast<std::size_t>(stride_) * (ny + 2 * GridSpec::ghost), value) {}
  explicit ScalarField(const GridSpec& grid, double value = 0.0) : ScalarField(grid.nx, grid.ny, value) {}

  int nx() const { return nx_; }
  int ny() const { return ny_; }
  int stride() const { return stride_; }

  double& operator()(int j, int k) { return data_[index(j, k)]; }
  double operator()(int j, int k) const { return data_[index(j, k)]; }

  /// Pointer to cell (0, k); the row extends ghost cells to either side.
  double* row(int k) { return data_.data() + index(0, k); }
  const double* row(int k) const { return data_.data() + index(0, k); }

  std::span<double> raw() { return data_; }
  std::span<const double> raw() const { return data_; }

  void fill(double value) { std::fill(data_.begin(), data_.end(), value); }

  std::size_t index(int j, int k) const {
    return static_cast<std::size_t>(k + GridSpec::ghost) * stride_ + (j + GridSpec::ghost);
  }

 private:
  int nx_ = 0;
  int ny_ = 0;
  int stride_ = 0;
  std::vector<double> data_;
};

/// Periodic: wrap interior values. Outflow: copy the nearest interior cell
/// (zero-order extrapolation). Idempotent.
void fill_ghosts(ScalarField& field, const GridSpec& grid);

/// Values living on cell interfaces. For x-faces `ni = nx + 1`, `nk = ny` and
/// face i separates cells i-1 and i; for y-faces `ni = nx`, `nk = ny + 1`.
class FaceField {
 public:
  FaceField() = default;
  FaceField(int ni, int nk, double value = 0.0)
      : ni_(ni), nk_(nk), data_(static_cast<std::size_t>(ni) * nk, value) {}

  int ni() const { return ni_; }
  int nk() const { return nk_; }
  double& operator()(int i, int k) { return data_[static_cast<std::size_t>(k) * ni_ + i]; }
  double operator()(int i, int k) const { return data_[static_cast<std::size_t>(k) * ni_ + i]; }
  std::span<const double> raw() const { return data_; }

 private:
  int ni_ = 0;
  int nk_ = 0;
  std::vector<double> data_;
};

inline FaceField make_x_faces(const GridSpec& g, double value = 0.0) { return FaceField(g.nx + 1, g.ny, value); }
inline FaceField make_y_faces(const GridSpec& g, double value = 0.0) { return FaceField(g.nx, g.ny + 1, value); }

}  // namespace apeuler
