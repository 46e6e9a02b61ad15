#include <cstdlib>
#include <stdexcept>
#include <string>

#include "rabipat/simd.hpp"

namespace rabipat::simd {

bool isa_supported(Isa isa) {
  switch (isa) {
    case Isa::Scalar:
      return true;
    case Isa::Avx2:
#if defined(RABIPAT_HAVE_AVX2_KERNELS)
      return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
      return false;
#endif
  }
  return false;
}

std::string_view isa_name(Isa isa) {
  return isa == Isa::Avx2 ? "avx2" : "scalar";
}

namespace {

Isa select_isa() {
  if (const char* forced = std::getenv("RABIPAT_SIMD")) {
    if (std::string(forced) == "scalar") return Isa::Scalar;
  }
  return isa_supported(Isa::Avx2) ? Isa::Avx2 : Isa::Scalar;
}

}  // namespace

Isa active_isa() {
  static const Isa isa = select_isa();
  return isa;
}

const KernelTable& kernels_for(Isa isa) {
  if (!isa_supported(isa)) {
    throw std::runtime_error("SIMD kernels not supported on this CPU: " + std::string(isa_name(isa)));
  }
#if defined(RABIPAT_HAVE_AVX2_KERNELS)
  if (isa == Isa::Avx2) return detail::avx2_table;
#endif
  return detail::scalar_table;
}

const KernelTable& kernels() {
  static const KernelTable& table = kernels_for(active_isa());
  return table;
}

void matvec(const Complex* a, const Complex* x, Complex* y, std::size_t n) {
  const auto& k = kernels();
  for (std::size_t i = 0; i < n; ++i) y[i] = Complex(0.0, 0.0);
  for (std::size_t j = 0; j < n; ++j) {
    if (x[j] == Complex(0.0, 0.0)) continue;
    k.axpy(x[j], a + j * n, y, n);
  }
}

Complex hermitian_form(const Complex* a, const Complex* x, std::size_t n) {
  const auto& k = kernels();
  Complex acc(0.0, 0.0);
  for (std::size_t j = 0; j < n; ++j) {
    if (x[j] == Complex(0.0, 0.0)) continue;
    acc += k.cdot(x, a + j * n, n) * x[j];
  }
  return acc;
}

}  // namespace rabipat::simd
