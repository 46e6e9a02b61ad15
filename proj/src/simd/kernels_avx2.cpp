// Compiled with -mavx2 -mfma; only reached after a CPUID check.

#include "rabipat/simd.hpp"

#include <immintrin.h>

#include <algorithm>
#include <cmath>
#include <vector>

namespace rabipat::simd {
namespace {

inline double hsum(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d s = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

inline double hmax(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d m = _mm_max_pd(lo, hi);
  return std::max(_mm_cvtsd_f64(m), _mm_cvtsd_f64(_mm_unpackhi_pd(m, m)));
}

// Two complex values per 256-bit lane group: [re0, im0, re1, im1].
//   re += xr*yr + xi*yi   -> lanewise x*y, summed over all lanes
//   im += xr*yi - xi*yr   -> x * swap(y), even lanes minus odd lanes
Complex cdot_avx2(const Complex* x, const Complex* y, std::size_t n) {
  const double* xp = reinterpret_cast<const double*>(x);
  const double* yp = reinterpret_cast<const double*>(y);
  __m256d re0 = _mm256_setzero_pd();
  __m256d re1 = _mm256_setzero_pd();
  __m256d im0 = _mm256_setzero_pd();
  __m256d im1 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d xa = _mm256_loadu_pd(xp + 2 * i);
    const __m256d ya = _mm256_loadu_pd(yp + 2 * i);
    const __m256d xb = _mm256_loadu_pd(xp + 2 * i + 4);
    const __m256d yb = _mm256_loadu_pd(yp + 2 * i + 4);
    re0 = _mm256_fmadd_pd(xa, ya, re0);
    re1 = _mm256_fmadd_pd(xb, yb, re1);
    im0 = _mm256_fmadd_pd(xa, _mm256_permute_pd(ya, 0b0101), im0);
    im1 = _mm256_fmadd_pd(xb, _mm256_permute_pd(yb, 0b0101), im1);
  }
  for (; i + 2 <= n; i += 2) {
    const __m256d xa = _mm256_loadu_pd(xp + 2 * i);
    const __m256d ya = _mm256_loadu_pd(yp + 2 * i);
    re0 = _mm256_fmadd_pd(xa, ya, re0);
    im0 = _mm256_fmadd_pd(xa, _mm256_permute_pd(ya, 0b0101), im0);
  }
  const __m256d re = _mm256_add_pd(re0, re1);
  const __m256d im = _mm256_add_pd(im0, im1);
  // even lanes carry +xr*yi, odd lanes carry xi*yr
  const __m256d sign = _mm256_set_pd(-1.0, 1.0, -1.0, 1.0);
  double re_s = hsum(re);
  double im_s = hsum(_mm256_mul_pd(im, sign));
  for (; i < n; ++i) {
    re_s += x[i].real() * y[i].real() + x[i].imag() * y[i].imag();
    im_s += x[i].real() * y[i].imag() - x[i].imag() * y[i].real();
  }
  return {re_s, im_s};
}

double norm2_avx2(const Complex* x, std::size_t n) {
  const double* xp = reinterpret_cast<const double*>(x);
  const std::size_t m = 2 * n;
  __m256d acc0 = _mm256_setzero_pd();
  __m256d acc1 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 8 <= m; i += 8) {
    const __m256d a = _mm256_loadu_pd(xp + i);
    const __m256d b = _mm256_loadu_pd(xp + i + 4);
    acc0 = _mm256_fmadd_pd(a, a, acc0);
    acc1 = _mm256_fmadd_pd(b, b, acc1);
  }
  double s = hsum(_mm256_add_pd(acc0, acc1));
  for (; i < m; ++i) s += xp[i] * xp[i];
  return s;
}

void axpy_avx2(Complex alpha, const Complex* x, Complex* y, std::size_t n) {
  const double* xp = reinterpret_cast<const double*>(x);
  double* yp = reinterpret_cast<double*>(y);
  const __m256d ar = _mm256_set1_pd(alpha.real());
  // alpha.imag * swap(x) gives [ai*xi, ai*xr]; the sign vector turns it into [-ai*xi, +ai*xr]
  const __m256d ai = _mm256_set_pd(alpha.imag(), -alpha.imag(), alpha.imag(), -alpha.imag());
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d xv = _mm256_loadu_pd(xp + 2 * i);
    __m256d yv = _mm256_loadu_pd(yp + 2 * i);
    yv = _mm256_fmadd_pd(ar, xv, yv);
    yv = _mm256_fmadd_pd(ai, _mm256_permute_pd(xv, 0b0101), yv);
    _mm256_storeu_pd(yp + 2 * i, yv);
  }
  for (; i < n; ++i) {
    const double xr = x[i].real();
    const double xi = x[i].imag();
    y[i] = Complex(y[i].real() + alpha.real() * xr - alpha.imag() * xi,
                   y[i].imag() + alpha.real() * xi + alpha.imag() * xr);
  }
}

double max_abs_diff_avx2(const Complex* a, const Complex* b, std::size_t n) {
  const double* ap = reinterpret_cast<const double*>(a);
  const double* bp = reinterpret_cast<const double*>(b);
  __m256d best = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d d = _mm256_sub_pd(_mm256_loadu_pd(ap + 2 * i), _mm256_loadu_pd(bp + 2 * i));
    const __m256d sq = _mm256_mul_pd(d, d);
    // [dr^2 + di^2] in both halves of each complex pair
    const __m256d mag = _mm256_add_pd(sq, _mm256_permute_pd(sq, 0b0101));
    best = _mm256_max_pd(best, mag);
  }
  double m = hmax(best);
  for (; i < n; ++i) {
    const double dr = a[i].real() - b[i].real();
    const double di = a[i].imag() - b[i].imag();
    m = std::max(m, dr * dr + di * di);
  }
  return std::sqrt(m);
}

double hermiticity_residual_avx2(const Complex* a, std::size_t n) {
  // Column j of A against row j of A (strided); the strided side is gathered
  // into a conjugated scratch column so the comparison vectorizes.
  double best = 0.0;
  std::vector<Complex> row(n);
  for (std::size_t j = 0; j < n; ++j) {
    const std::size_t len = n - j;
    for (std::size_t i = j; i < n; ++i) row[i - j] = std::conj(a[j + i * n]);
    best = std::max(best, max_abs_diff_avx2(a + j + j * n, row.data(), len));
  }
  return best;
}

}  // namespace

namespace detail {
const KernelTable avx2_table = {
    cdot_avx2, norm2_avx2, axpy_avx2, max_abs_diff_avx2, hermiticity_residual_avx2,
};
}  // namespace detail

}  // namespace rabipat::simd
