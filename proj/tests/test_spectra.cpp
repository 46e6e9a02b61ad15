#include <gtest/gtest.h>

#include <cmath>

#include "oracles.hpp"
#include "rabipat/errors.hpp"
#include "rabipat/models.hpp"
#include "rabipat/phases.hpp"
#include "rabipat/spectra.hpp"

using namespace rabipat;

namespace {

HamiltonianBuilder anisotropic(AnisotropicRabiParams p) {
  return [p](const HilbertConfig& c) { return build_anisotropic_rabi(p, c); };
}

AnisotropicRabiParams fig2_at(double k_over_kc) {
  // k_c = (sqrt(w0 W) - xi1)/xi1 at xi1 = 0.1, W = 100
  const double kc = (std::sqrt(100.0) - 0.1) / 0.1;
  return AnisotropicRabiParams::with_ratio(1.0, 100.0, 0.1, k_over_kc * kc);
}

}  // namespace

TEST(Spectra, DiagonalInput) {
  CMatrix m = CMatrix::Zero(4, 4);
  m.diagonal() << 3.0, -1.0, 2.0, 0.5;
  const auto s = diagonalize(OperatorMatrix(m, true), 4);
  EXPECT_EQ(s.eigenvalues, (std::vector<double>{-1.0, 0.5, 2.0, 3.0}));
}

TEST(Spectra, JCLadder) {
  for (double xi : {0.05, 0.3, 1.2}) {
    AnisotropicRabiParams p{1.0, 2.5, xi, 0.0};
    HilbertConfig cfg(30);
    const auto want = oracle::jc_ladder(1.0, 2.5, xi, 30);
    const auto got = diagonalize(build_anisotropic_rabi(p, cfg), 10).eigenvalues;
    for (int i = 0; i < 10; ++i) EXPECT_NEAR(got[i], want[i], 1e-10) << xi;
  }
}

TEST(Spectra, ComplexPathAgainstRealEmbedding) {
  Gen gen(3);
  for (int t = 0; t < 10; ++t) {
    const int n = gen.integer(2, 12);
    CMatrix h(n, n);
    for (int i = 0; i < n; ++i) {
      h(i, i) = gen.uniform(-2, 2);
      for (int j = i + 1; j < n; ++j) {
        h(i, j) = Complex(gen.uniform(-1, 1), gen.uniform(-1, 1));
        h(j, i) = std::conj(h(i, j));
      }
    }
    // [[Re, -Im], [Im, Re]] carries each eigenvalue twice
    oracle::Dense emb(2 * n, std::vector<double>(2 * n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        emb[i][j] = emb[i + n][j + n] = h(i, j).real();
        emb[i][j + n] = -h(i, j).imag();
        emb[i + n][j] = h(i, j).imag();
      }
    const auto want = oracle::jacobi_eigenvalues(emb);
    const auto s = diagonalize(OperatorMatrix(h, true), n);
    for (int i = 0; i < n; ++i) EXPECT_NEAR(s.eigenvalues[i], want[2 * i], 1e-12) << "case " << t;
    const CMatrix gram = s.eigenvectors.adjoint() * s.eigenvectors;
    EXPECT_LT((gram - CMatrix::Identity(n, n)).cwiseAbs().maxCoeff(), 1e-12);
  }
}

TEST(Spectra, RejectsNonHermitian) {
  CMatrix m = CMatrix::Zero(3, 3);
  m(0, 1) = 1.0;
  EXPECT_THROW(diagonalize(OperatorMatrix(m), 2), NotHermitian);
  EXPECT_THROW(diagonalize(OperatorMatrix::identity(3), 0), InvalidArgument);
}

TEST(Spectra, ParityResolvedMatchesPlain) {
  const auto p = fig2_at(0.6);
  HilbertConfig cfg(24);
  const auto h = build_anisotropic_rabi(p, cfg);
  const auto plain = diagonalize(h, 6);
  const auto res = diagonalize_parity_resolved(h, cfg, 6);
  ASSERT_EQ(res.parities.size(), 6u);
  const auto pi = parity_op(cfg);
  for (int i = 0; i < 6; ++i) {
    EXPECT_NEAR(plain.eigenvalues[i], res.eigenvalues[i], 1e-11);
    const CVector psi = res.state(i);
    EXPECT_LT((pi.entries() * psi - double(res.parities[i]) * psi).norm(), 1e-13);
    EXPECT_NEAR(psi.norm(), 1.0, 1e-13);
  }
  EXPECT_EQ(parity_sector(cfg, 1).size() + parity_sector(cfg, -1).size(), std::size_t(cfg.dim()));
}

TEST(Spectra, ParityResolvedRejectsBrokenSymmetry) {
  HilbertConfig cfg(3);
  const auto h = build_anisotropic_rabi({1.0, 2.0, 0.1, 0.1}, cfg) + spin_ops(cfg).x;
  EXPECT_THROW(diagonalize_parity_resolved(h, cfg, 2), InvalidArgument);
}

TEST(Spectra, PolicyValidation) {
  CutoffPolicy p;
  EXPECT_EQ(p.tol_E, 1e-8);
  EXPECT_EQ(p.tol_n, 1e-6);
  EXPECT_EQ(p.n_start, 32);
  EXPECT_EQ(p.n_max, 512);
  p.n_start = 0;
  EXPECT_THROW(p.validate(), InvalidArgument);
  p = {};
  p.n_max = 16;
  EXPECT_THROW(p.validate(), InvalidArgument);
  p = {};
  p.tol_E = -1;
  EXPECT_THROW(p.validate(), InvalidArgument);
}

TEST(Spectra, UncoupledConvergesAtTheStart) {
  CutoffPolicy policy;
  const auto s = converge_cutoff(anisotropic({1.0, 100.0, 0.0, 0.0}), policy);
  EXPECT_TRUE(s.converged);
  EXPECT_EQ(s.cutoff_used, policy.n_start);
  EXPECT_NEAR(s.eigenvalues[0], -50.0, 1e-12);
}

TEST(Spectra, SuperradiantSideNeedsMorePhotons) {
  CutoffPolicy policy;
  policy.n_start = 8;
  const auto below = converge_cutoff(anisotropic(fig2_at(0.5)), policy);
  const auto above = converge_cutoff(anisotropic(fig2_at(1.05)), policy);
  ASSERT_TRUE(below.converged);
  ASSERT_TRUE(above.converged);
  EXPECT_GE(above.cutoff_used, 2 * below.cutoff_used);
  HilbertConfig cfg(above.cutoff_used);
  EXPECT_GT(ground_photon_number(above, cfg), 1.0);
}

TEST(Spectra, HittingTheCeilingIsFlagged) {
  CutoffPolicy policy;
  policy.n_start = 4;
  policy.n_max = 8;
  const auto s = converge_cutoff(anisotropic(fig2_at(1.3)), policy);
  EXPECT_FALSE(s.converged);
  EXPECT_GT(s.convergence_residual, 0.0);
}

TEST(Spectra, SecondDerivativeOfKnownFunctions) {
  EXPECT_NEAR(second_derivative([](double x) { return x * x; }, 0.7), 2.0, 1e-6);
  EXPECT_NEAR(second_derivative([](double x) { return std::sin(x); }, 0.3), -std::sin(0.3), 1e-6);
  const double plain = second_derivative([](double x) { return std::exp(x); }, 0.0, {1e-2, false});
  const double rich = second_derivative([](double x) { return std::exp(x); }, 0.0, {1e-2, true});
  EXPECT_LT(std::abs(rich - 1.0), std::abs(plain - 1.0) / 100.0);
  EXPECT_THROW(second_derivative([](double x) { return x; }, 0.0, {0.0, false}), InvalidArgument);
  EXPECT_THROW(second_derivative([](double) -> double { throw NumericalFailure("x"); }, 0.0), NumericalFailure);
  EXPECT_DOUBLE_EQ(second_difference(1.0, 0.0, 1.0, 1.0), 2.0);
}

TEST(Spectra, SecondDerivativeOfTheNormalGroundEnergy) {
  // closed form of d^2/dx^2 [(sqrt(F) - A)/2 + C] with couplings scaled by x
  const auto jc = ParametricJCParams::from_squeeze(1.0, 23.56, 0.0, std::sqrt(2.0));
  const auto dir = effective_couplings(jc.with_coupling(1.0));
  const auto unit = dir.at_coupling(1.0);
  const double w = unit.omega, W = unit.Omega;
  const double a = (unit.xi1 * unit.xi1 + unit.xi2 * unit.xi2) / W;
  const double b = unit.xi1 * unit.xi2 / W;
  const double c = unit.xi2 * unit.xi2 / W;
  const double x = 0.5;
  const double F = w * w - 2 * w * a * x * x + (a * a - 4 * b * b) * std::pow(x, 4);
  const double F1 = -4 * w * a * x + 4 * (a * a - 4 * b * b) * std::pow(x, 3);
  const double F2 = -4 * w * a + 12 * (a * a - 4 * b * b) * x * x;
  const double eps2 = F2 / (2 * std::sqrt(F)) - F1 * F1 / (4 * std::pow(F, 1.5));
  const double want = (eps2 + 2 * a) / 2 - 2 * c;

  const double got = second_derivative([&](double t) { return analytic_ground_energy(dir, t); }, x);
  EXPECT_NEAR(got, want, 1e-5 * std::abs(want));
  EXPECT_NEAR(phase_point(dir, x).d2E_G, want, 1e-5 * std::abs(want));
}
