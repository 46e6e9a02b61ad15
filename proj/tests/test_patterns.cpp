#include <gtest/gtest.h>

#include <cmath>

#include "oracles.hpp"
#include "rabipat/errors.hpp"
#include "rabipat/patterns.hpp"
#include "rabipat/spectra.hpp"

using namespace rabipat;

namespace {

AnisotropicRabiParams fig2(double k) { return AnisotropicRabiParams::with_ratio(1.0, 100.0, 0.1, k); }

AnisotropicRabiParams random_draw(Gen& gen) {
  AnisotropicRabiParams p;
  p.omega0 = 1.0;
  p.Omega = gen.coin() ? 10.0 : 100.0;
  const double top = std::sqrt(p.omega0 * p.Omega);
  p.xi1 = gen.uniform(0.0, top);
  p.xi2 = gen.uniform(0.0, top);
  return p;
}

double orthonormality_residual(const PatternDecomposition& d) {
  return (d.vectors.transpose() * d.vectors - Eigen::Matrix3d::Identity()).cwiseAbs().maxCoeff();
}

PatternMatrix rotated_family(double t) {
  // eigenvalues 1 - t, 0.5, t on a fixed rotated frame: they cross at t = 0.5
  Eigen::Matrix3d q = Eigen::AngleAxisd(0.4, Eigen::Vector3d(1, 2, 3).normalized()).toRotationMatrix();
  PatternMatrix m;
  m.m = q * Eigen::Vector3d(1.0 - t, 0.5 + 0.1 * t, t).asDiagonal() * q.transpose();
  return m;
}

}  // namespace

TEST(Patterns, MatrixEntries) {
  const auto m = pattern_matrix({1.0, 100.0, 0.1, 0.09}).m;
  Eigen::Matrix3d want;
  want << 0, 25, -0.095, 25, 0, -0.005, -0.095, -0.005, 1;
  EXPECT_LT((m - want).cwiseAbs().maxCoeff(), 1e-15);
  EXPECT_EQ(m, m.transpose());
  EXPECT_DOUBLE_EQ(m.trace(), 1.0);
  EXPECT_EQ(pattern_matrix({1.0, 7.0, 0.4, 0.4}).m(1, 2), 0.0);
}

TEST(Patterns, DecoupledEigenvalues) {
  const auto d = decompose(pattern_matrix({1.0, 100.0, 0.0, 0.0}));
  EXPECT_NEAR(d.lambda(0), -25.0, 1e-13);
  EXPECT_NEAR(d.lambda(1), 1.0, 1e-13);
  EXPECT_NEAR(d.lambda(2), 25.0, 1e-13);
}

TEST(Patterns, EigenvaluesAgainstCardano) {
  for (double k : {0.0, 0.5, 1.0, 1.5}) {
    const auto pm = pattern_matrix(fig2(k));
    double m[3][3];
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) m[i][j] = pm.m(i, j);
    const auto want = oracle::cardano_symmetric3(m);
    const auto d = decompose(pm);
    for (int n = 0; n < 3; ++n) EXPECT_NEAR(d.lambda(n), want[n], 1e-12) << "k=" << k;
  }
}

TEST(Patterns, DecoupledReconstructionIsExact) {
  AnisotropicRabiParams p{1.0, 100.0, 0.0, 0.0};
  HilbertConfig cfg(6);
  const auto d = decompose(pattern_matrix(p));
  const auto rep = compare_reconstruction(reconstruct(d, cfg), build_anisotropic_rabi(p, cfg), cfg);
  EXPECT_LT(rep.max_residual, 1e-13);
  EXPECT_NEAR(rep.identity_shift, identity_shift(d), 1e-13);
}

TEST(Patterns, Fig2Reconstruction) {
  const auto p = fig2(0.5);
  HilbertConfig cfg(40);
  const auto d = decompose(pattern_matrix(p));
  const auto h = build_anisotropic_rabi(p, cfg);
  const auto rep = compare_reconstruction(reconstruct(d, cfg), h, cfg);
  EXPECT_LT(rep.max_residual, 1e-10 * rep.max_abs_hamiltonian);
  EXPECT_LT(rep.diagonal_spread, 1e-10 * rep.max_abs_hamiltonian);
  EXPECT_NEAR(rep.identity_shift, identity_shift(d), 1e-10);
}

TEST(Patterns, PrintedAssemblyFailsReconstruction) {
  const auto p = fig2(0.5);
  HilbertConfig cfg(10);
  const auto d = decompose(pattern_matrix(p));
  const auto rep =
      compare_reconstruction(reconstruct(d, cfg, PatternAssembly::Printed), build_anisotropic_rabi(p, cfg), cfg);
  EXPECT_GT(rep.max_residual, 1.0);
}

TEST(Patterns, DecoupledGroundAttribution) {
  AnisotropicRabiParams p{1.0, 100.0, 0.0, 0.0};
  HilbertConfig cfg(4);
  const auto d = decompose(pattern_matrix(p));
  const CVector ground = basis_state(cfg, Spin::Down, 0);
  const auto at = attribute(d, cfg, ground);
  const auto ops = pattern_operators(d, cfg);
  for (int n = 0; n < 3; ++n) {
    EXPECT_EQ(at.photons[n], 0.0);
    EXPECT_NEAR(at.energy[n], d.lambda(n) * squared_norm_after(ops[n], ground), 1e-15);
  }
  EXPECT_NEAR(at.energy_sum(), -50.0 + identity_shift(d), 1e-12);
  EXPECT_THROW(attribute(d, cfg, CVector(2.0 * ground)), NotNormalized);
}

TEST(Patterns, TrackLabelsIdentity) {
  const auto d = decompose(pattern_matrix(fig2(0.7)));
  const auto t = track_labels(d, d);
  EXPECT_EQ(t.labeling.source_index, (std::array<int, 3>{0, 1, 2}));
  EXPECT_FALSE(t.labeling.ambiguous);
  EXPECT_NEAR(t.labeling.overlap_score, 3.0, 1e-14);
}

TEST(Patterns, TrackLabelsFollowVectorsThroughACrossing) {
  // before the crossing the (1 - t) pattern is the largest, after it the smallest
  PatternDecomposition prev = decompose(rotated_family(0.0));
  const Eigen::Vector3d start = prev.u(2);
  for (int i = 1; i <= 20; ++i) {
    prev = track_labels(prev, decompose(rotated_family(i * 0.05)));
  }
  EXPECT_NEAR(prev.lambda(2), 0.0, 1e-12);
  EXPECT_NEAR(std::abs(prev.u(2).dot(start)), 1.0, 1e-12);
  EXPECT_EQ(prev.labeling.source_index[2], 0);
}

TEST(Patterns, Fig2SweepLabelsAreContinuous) {
  PatternDecomposition prev = decompose(pattern_matrix(fig2(0.0)));
  double max_slope = 0.0;
  const double dk = 0.01;
  for (int i = 1; i <= 200; ++i) {
    const auto next = track_labels(prev, decompose(pattern_matrix(fig2(i * dk))));
    EXPECT_EQ(next.labeling.source_index, (std::array<int, 3>{0, 1, 2})) << "k=" << i * dk;
    EXPECT_FALSE(next.labeling.ambiguous);
    for (int n = 0; n < 3; ++n) max_slope = std::max(max_slope, std::abs(next.lambda(n) - prev.lambda(n)) / dk);
    prev = next;
  }
  // the couplings are O(0.1), so no eigenvalue moves faster than that
  EXPECT_LT(max_slope, 0.1);
}

TEST(PatternsProperty, OrthonormalWithSignConvention) {
  Gen gen(1000);
  for (int t = 0; t < 1000; ++t) {
    const auto d = decompose(pattern_matrix(random_draw(gen)));
    EXPECT_LT(orthonormality_residual(d), 1e-14) << "case " << t;
    EXPECT_NEAR(d.vectors.row(2).squaredNorm(), 1.0, 1e-14) << "case " << t;
    for (int n = 0; n < 3; ++n) {
      Eigen::Index arg;
      d.u(n).cwiseAbs().maxCoeff(&arg);
      EXPECT_GT(d.u(n)(arg), 0.0) << "case " << t;
    }
  }
}

TEST(PatternsProperty, ReconstructionIdentity) {
  Gen gen(100);
  HilbertConfig cfg(20);
  for (int t = 0; t < 100; ++t) {
    const auto p = random_draw(gen);
    const auto d = decompose(pattern_matrix(p));
    const auto rep = compare_reconstruction(reconstruct(d, cfg), build_anisotropic_rabi(p, cfg), cfg);
    EXPECT_LT(rep.max_residual, 1e-10 * rep.max_abs_hamiltonian) << "case " << t;
    EXPECT_NEAR(rep.identity_shift, identity_shift(d), 1e-10 * rep.max_abs_hamiltonian) << "case " << t;
  }
}

TEST(PatternsProperty, AttributionCompleteness) {
  Gen gen(7);
  int checked = 0;
  for (int t = 0; t < 20; ++t) {
    const auto p = random_draw(gen);
    CutoffPolicy policy;
    policy.k_levels = 6;
    policy.n_max = 1024;
    const auto s = converge_cutoff([&](const HilbertConfig& c) { return build_anisotropic_rabi(p, c); }, policy);
    ASSERT_TRUE(s.converged) << "case " << t;
    HilbertConfig cfg(s.cutoff_used);
    const auto d = decompose(pattern_matrix(p));
    const auto ops = pattern_operators(d, cfg);
    const auto a = annihilation(cfg);
    const double c = identity_shift(d);
    for (int i = 0; i < s.levels(); ++i) {
      const CVector psi = s.state(i);
      const auto at = attribute(d, ops, a, psi);
      ++checked;
      EXPECT_LT(std::abs(at.energy_sum() - (s.eigenvalues[i] + c)), 1e-9 * (std::abs(s.eigenvalues[i]) + 1))
          << "case " << t << " level " << i;
      const double n = expectation(number_op(cfg), psi).real();
      EXPECT_LT(std::abs(at.photon_sum() - n), 1e-10 * (n + 1)) << "case " << t << " level " << i;
    }
  }
  EXPECT_EQ(checked, 120);
}
