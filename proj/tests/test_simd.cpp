#include <gtest/gtest.h>

#include <vector>

#include "oracles.hpp"
#include "rabipat/simd.hpp"

using namespace rabipat::simd;

namespace {

std::vector<Complex> random_vector(Gen& gen, std::size_t n) {
  std::vector<Complex> v(n);
  for (auto& z : v) z = Complex(gen.uniform(-1, 1), gen.uniform(-1, 1));
  return v;
}

const KernelTable* avx2_or_skip() {
  if (!isa_supported(Isa::Avx2)) return nullptr;
  return &kernels_for(Isa::Avx2);
}

}  // namespace

TEST(Simd, ActiveIsaIsSupported) {
  EXPECT_TRUE(isa_supported(Isa::Scalar));
  EXPECT_TRUE(isa_supported(active_isa()));
  EXPECT_EQ(isa_name(Isa::Scalar), "scalar");
  EXPECT_EQ(&kernels(), &kernels_for(active_isa()));
}

TEST(Simd, ScalarReferenceAgainstNaiveLoops) {
  Gen gen(1);
  const auto& s = kernels_for(Isa::Scalar);
  for (std::size_t n : {0u, 1u, 5u, 64u}) {
    const auto x = random_vector(gen, n);
    const auto y = random_vector(gen, n);
    Complex dot = 0;
    double nn = 0;
    for (std::size_t i = 0; i < n; ++i) {
      dot += std::conj(x[i]) * y[i];
      nn += std::norm(x[i]);
    }
    EXPECT_LT(std::abs(s.cdot(x.data(), y.data(), n) - dot), 1e-13);
    EXPECT_NEAR(s.norm2(x.data(), n), nn, 1e-13);
  }
}

TEST(Simd, Avx2MatchesScalar) {
  const auto* v = avx2_or_skip();
  if (!v) GTEST_SKIP() << "no AVX2 on this CPU";
  const auto& s = kernels_for(Isa::Scalar);
  Gen gen(2);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = std::size_t(gen.integer(0, 67));
    const auto x = random_vector(gen, n);
    const auto y = random_vector(gen, n);
    const double tol = 1e-15 * (double(n) + 1) * 4;

    EXPECT_LT(std::abs(v->cdot(x.data(), y.data(), n) - s.cdot(x.data(), y.data(), n)), tol) << "n=" << n;
    EXPECT_NEAR(v->norm2(x.data(), n), s.norm2(x.data(), n), tol) << "n=" << n;

    const Complex alpha(gen.uniform(-2, 2), gen.uniform(-2, 2));
    auto ya = y, yb = y;
    v->axpy(alpha, x.data(), ya.data(), n);
    s.axpy(alpha, x.data(), yb.data(), n);
    for (std::size_t i = 0; i < n; ++i) EXPECT_LT(std::abs(ya[i] - yb[i]), 1e-15 * 8);

    EXPECT_EQ(v->max_abs_diff(x.data(), y.data(), n), s.max_abs_diff(x.data(), y.data(), n));

    const std::size_t m = std::size_t(gen.integer(0, 13));
    const auto a = random_vector(gen, m * m);
    EXPECT_EQ(v->hermiticity_residual(a.data(), m), s.hermiticity_residual(a.data(), m)) << "m=" << m;
  }
}

TEST(Simd, MatvecAndHermitianForm) {
  Gen gen(3);
  const std::size_t n = 11;
  auto a = random_vector(gen, n * n);
  for (std::size_t i = 0; i < n; ++i) {
    a[i * n + i] = a[i * n + i].real();
    for (std::size_t j = i + 1; j < n; ++j) a[j * n + i] = std::conj(a[i * n + j]);
  }
  const auto x = random_vector(gen, n);
  std::vector<Complex> y(n);
  matvec(a.data(), x.data(), y.data(), n);
  for (std::size_t i = 0; i < n; ++i) {
    Complex want = 0;
    for (std::size_t j = 0; j < n; ++j) want += a[j * n + i] * x[j];
    EXPECT_LT(std::abs(y[i] - want), 1e-13);
  }
  const Complex f = hermitian_form(a.data(), x.data(), n);
  EXPECT_LT(std::abs(f.imag()), 1e-13);
  EXPECT_LT(std::abs(f - kernels_for(Isa::Scalar).cdot(x.data(), y.data(), n)), 1e-13);
  EXPECT_EQ(kernels().hermiticity_residual(a.data(), n), 0.0);
}
