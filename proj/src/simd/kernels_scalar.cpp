#include "rabipat/simd.hpp"

#include <algorithm>
#include <cmath>

namespace rabipat::simd {
namespace {

Complex cdot_scalar(const Complex* x, const Complex* y, std::size_t n) {
  double re = 0.0;
  double im = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    re += x[i].real() * y[i].real() + x[i].imag() * y[i].imag();
    im += x[i].real() * y[i].imag() - x[i].imag() * y[i].real();
  }
  return {re, im};
}

double norm2_scalar(const Complex* x, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    acc += x[i].real() * x[i].real() + x[i].imag() * x[i].imag();
  }
  return acc;
}

void axpy_scalar(Complex alpha, const Complex* x, Complex* y, std::size_t n) {
  const double ar = alpha.real();
  const double ai = alpha.imag();
  for (std::size_t i = 0; i < n; ++i) {
    const double xr = x[i].real();
    const double xi = x[i].imag();
    y[i] = Complex(y[i].real() + ar * xr - ai * xi, y[i].imag() + ar * xi + ai * xr);
  }
}

// Squared magnitudes are compared and the root taken once, so the AVX2
// variant can reproduce the result exactly.
double max_abs_diff_scalar(const Complex* a, const Complex* b, std::size_t n) {
  double best = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double dr = a[i].real() - b[i].real();
    const double di = a[i].imag() - b[i].imag();
    best = std::max(best, dr * dr + di * di);
  }
  return std::sqrt(best);
}

double hermiticity_residual_scalar(const Complex* a, std::size_t n) {
  double best = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = j; i < n; ++i) {
      const Complex aij = a[i + j * n];
      const Complex aji = a[j + i * n];
      const double dr = aij.real() - aji.real();
      const double di = aij.imag() + aji.imag();
      best = std::max(best, dr * dr + di * di);
    }
  }
  return std::sqrt(best);
}

}  // namespace

namespace detail {
const KernelTable scalar_table = {
    cdot_scalar, norm2_scalar, axpy_scalar, max_abs_diff_scalar, hermiticity_residual_scalar,
};
}  // namespace detail

}  // namespace rabipat::simd
