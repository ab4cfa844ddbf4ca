#pragma once

#include <cstddef>
#include <string_view>

namespace apeuler::simd {

/// Hot inner loops of the solver. Every backend implements the same
/// arithmetic in the same order, so the elementwise kernels agree bit for
/// bit with the scalar reference; only `dot` may differ in the last bits
/// because of its reduction order.
struct KernelTable {
  const char* name;

  /// out[j] = q[j] - sigma * (lap_x + lap_y) for j in [0, n), where row
  /// pointers address cell 0 of the rows k-1 (`south`), k and k+1 (`north`),
  /// and q[-1], q[n] are valid ghost entries.
  void (*helmholtz_row)(const double* south, const double* q, const double* north, double* out, std::size_t n,
                        double sigma, double inv_dx2, double inv_dy2);

  /// Sum of a[i] * b[i].
  double (*dot)(const double* a, const double* b, std::size_t n);

  /// y[i] += alpha * x[i].
  void (*axpy)(double alpha, const double* x, double* y, std::size_t n);

  /// y[i] = x[i] + beta * y[i].
  void (*xpby)(const double* x, double beta, double* y, std::size_t n);

  /// Generalized minmod slope from three consecutive values per lane:
  /// minmod(theta*(c-m)/h, (p-m)/(2h), theta*(p-c)/h).
  void (*minmod_slope)(const double* m, const double* c, const double* p, double* out, std::size_t n, double theta,
                       double inv_h);
};

const KernelTable& scalar_kernels();

/// AVX2 kernels, or nullptr when they were not compiled in or the CPU lacks AVX2.
const KernelTable* avx2_kernels();

/// The table used by the solver. Picks AVX2 when available unless the
/// environment variable APEULER_SIMD is set to "scalar".
const KernelTable& active_kernels();

/// Override the runtime choice ("scalar", "avx2" or "auto"). Returns false if
/// the requested backend is unavailable; the selection is then unchanged.
bool select_kernels(std::string_view name);

}  // namespace apeuler::simd
