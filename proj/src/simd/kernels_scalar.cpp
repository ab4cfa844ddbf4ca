#include <algorithm>

#include "apeuler/simd/kernels.hpp"

namespace apeuler::simd {
namespace {

void helmholtz_row(const double* south, const double* q, const double* north, double* out, std::size_t n,
                   double sigma, double inv_dx2, double inv_dy2) {
  for (std::size_t j = 0; j < n; ++j) {
    const double c = q[j];
    const double two_c = 2.0 * c;
    const double lx = ((q[j - 1] - two_c) + q[j + 1]) * inv_dx2;
    const double ly = ((south[j] - two_c) + north[j]) * inv_dy2;
    out[j] = c - sigma * (lx + ly);
  }
}

double dot(const double* a, const double* b, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s += a[i] * b[i];
  return s;
}

void axpy(double alpha, const double* x, double* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] += alpha * x[i];
}

void xpby(const double* x, double beta, double* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] = x[i] + beta * y[i];
}

void minmod_slope(const double* m, const double* c, const double* p, double* out, std::size_t n, double theta,
                  double inv_h) {
  const double half_inv_h = 0.5 * inv_h;
  for (std::size_t i = 0; i < n; ++i) {
    const double a = theta * ((c[i] - m[i]) * inv_h);
    const double b = (p[i] - m[i]) * half_inv_h;
    const double d = theta * ((p[i] - c[i]) * inv_h);
    const double lo = std::min(a, std::min(b, d));
    const double hi = std::max(a, std::max(b, d));
    out[i] = lo > 0.0 ? lo : (hi < 0.0 ? hi : 0.0);
  }
}

}  // namespace

const KernelTable& scalar_kernels() {
  static const KernelTable table{"scalar", helmholtz_row, dot, axpy, xpby, minmod_slope};
  return table;
}

}  // namespace apeuler::simd
