#include <immintrin.h>

#include <algorithm>

#include "apeuler/simd/kernels.hpp"

namespace apeuler::simd {
namespace {

void helmholtz_row(const double* south, const double* q, const double* north, double* out, std::size_t n,
                   double sigma, double inv_dx2, double inv_dy2) {
  const __m256d vsig = _mm256_set1_pd(sigma);
  const __m256d vix = _mm256_set1_pd(inv_dx2);
  const __m256d viy = _mm256_set1_pd(inv_dy2);
  const __m256d two = _mm256_set1_pd(2.0);
  std::size_t j = 0;
  for (; j + 4 <= n; j += 4) {
    const __m256d c = _mm256_loadu_pd(q + j);
    const __m256d w = _mm256_loadu_pd(q + j - 1);
    const __m256d e = _mm256_loadu_pd(q + j + 1);
    const __m256d s = _mm256_loadu_pd(south + j);
    const __m256d nn = _mm256_loadu_pd(north + j);
    const __m256d two_c = _mm256_mul_pd(two, c);
    const __m256d lx = _mm256_mul_pd(_mm256_add_pd(_mm256_sub_pd(w, two_c), e), vix);
    const __m256d ly = _mm256_mul_pd(_mm256_add_pd(_mm256_sub_pd(s, two_c), nn), viy);
    _mm256_storeu_pd(out + j, _mm256_sub_pd(c, _mm256_mul_pd(vsig, _mm256_add_pd(lx, ly))));
  }
  for (; j < n; ++j) {
    const double c = q[j];
    const double two_c = 2.0 * c;
    const double lx = ((q[j - 1] - two_c) + q[j + 1]) * inv_dx2;
    const double ly = ((south[j] - two_c) + north[j]) * inv_dy2;
    out[j] = c - sigma * (lx + ly);
  }
}

double dot(const double* a, const double* b, std::size_t n) {
  __m256d acc0 = _mm256_setzero_pd();
  __m256d acc1 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    acc0 = _mm256_add_pd(acc0, _mm256_mul_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i)));
    acc1 = _mm256_add_pd(acc1, _mm256_mul_pd(_mm256_loadu_pd(a + i + 4), _mm256_loadu_pd(b + i + 4)));
  }
  for (; i + 4 <= n; i += 4) {
    acc0 = _mm256_add_pd(acc0, _mm256_mul_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i)));
  }
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, _mm256_add_pd(acc0, acc1));
  double s = (lanes[0] + lanes[1]) + (lanes[2] + lanes[3]);
  for (; i < n; ++i) s += a[i] * b[i];
  return s;
}

void axpy(double alpha, const double* x, double* y, std::size_t n) {
  const __m256d va = _mm256_set1_pd(alpha);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    _mm256_storeu_pd(y + i, _mm256_add_pd(_mm256_loadu_pd(y + i), _mm256_mul_pd(va, _mm256_loadu_pd(x + i))));
  }
  for (; i < n; ++i) y[i] += alpha * x[i];
}

void xpby(const double* x, double beta, double* y, std::size_t n) {
  const __m256d vb = _mm256_set1_pd(beta);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    _mm256_storeu_pd(y + i, _mm256_add_pd(_mm256_loadu_pd(x + i), _mm256_mul_pd(vb, _mm256_loadu_pd(y + i))));
  }
  for (; i < n; ++i) y[i] = x[i] + beta * y[i];
}

void minmod_slope(const double* m, const double* c, const double* p, double* out, std::size_t n, double theta,
                  double inv_h) {
  const double half_inv_h = 0.5 * inv_h;
  const __m256d vt = _mm256_set1_pd(theta);
  const __m256d vih = _mm256_set1_pd(inv_h);
  const __m256d vhh = _mm256_set1_pd(half_inv_h);
  const __m256d zero = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d vm = _mm256_loadu_pd(m + i);
    const __m256d vc = _mm256_loadu_pd(c + i);
    const __m256d vp = _mm256_loadu_pd(p + i);
    const __m256d a = _mm256_mul_pd(vt, _mm256_mul_pd(_mm256_sub_pd(vc, vm), vih));
    const __m256d b = _mm256_mul_pd(_mm256_sub_pd(vp, vm), vhh);
    const __m256d d = _mm256_mul_pd(vt, _mm256_mul_pd(_mm256_sub_pd(vp, vc), vih));
    const __m256d lo = _mm256_min_pd(a, _mm256_min_pd(b, d));
    const __m256d hi = _mm256_max_pd(a, _mm256_max_pd(b, d));
    const __m256d pos = _mm256_cmp_pd(lo, zero, _CMP_GT_OQ);
    const __m256d neg = _mm256_cmp_pd(hi, zero, _CMP_LT_OQ);
    const __m256d r = _mm256_or_pd(_mm256_and_pd(pos, lo), _mm256_and_pd(neg, hi));
    _mm256_storeu_pd(out + i, r);
  }
  for (; i < n; ++i) {
    const double a = theta * ((c[i] - m[i]) * inv_h);
    const double b = (p[i] - m[i]) * half_inv_h;
    const double d = theta * ((p[i] - c[i]) * inv_h);
    const double lo = std::min(a, std::min(b, d));
    const double hi = std::max(a, std::max(b, d));
    out[i] = lo > 0.0 ? lo : (hi < 0.0 ? hi : 0.0);
  }
}

}  // namespace

const KernelTable* avx2_kernels_impl() {
  static const KernelTable table{"avx2", helmholtz_row, dot, axpy, xpby, minmod_slope};
  return &table;
}

}  // namespace apeuler::simd
