#pragma once

// Inner-loop kernels over interleaved complex<double> arrays.
//
// Every kernel has a portable scalar reference and, on x86-64, an AVX2+FMA
// variant. The variant is chosen once at runtime from CPUID; setting
// RABIPAT_SIMD=scalar in the environment forces the reference path.
// Results agree with the reference to a few ulps (summation order differs);
// max_abs_diff is exact.

#include <complex>
#include <cstddef>
#include <string_view>

namespace rabipat::simd {

using Complex = std::complex<double>;

enum class Isa { Scalar, Avx2 };

struct KernelTable {
  // sum_i conj(x_i) y_i
  Complex (*cdot)(const Complex* x, const Complex* y, std::size_t n);
  // sum_i |x_i|^2
  double (*norm2)(const Complex* x, std::size_t n);
  // y += alpha x
  void (*axpy)(Complex alpha, const Complex* x, Complex* y, std::size_t n);
  // max_i |a_i - b_i|
  double (*max_abs_diff)(const Complex* a, const Complex* b, std::size_t n);
  // max_ij |A_ij - conj(A_ji)| over a column-major n x n matrix
  double (*hermiticity_residual)(const Complex* a, std::size_t n);
};

bool isa_supported(Isa isa);
Isa active_isa();
std::string_view isa_name(Isa isa);

// Table for a specific ISA; throws if the CPU lacks it.
const KernelTable& kernels_for(Isa isa);
const KernelTable& kernels();

// y = A x for a column-major n x n matrix (dispatched axpy per column).
void matvec(const Complex* a, const Complex* x, Complex* y, std::size_t n);
// x^dagger A x
Complex hermitian_form(const Complex* a, const Complex* x, std::size_t n);

namespace detail {
extern const KernelTable scalar_table;
#if defined(RABIPAT_HAVE_AVX2_KERNELS)
extern const KernelTable avx2_table;
#endif
}  // namespace detail

}  // namespace rabipat::simd
