#include "rabipat/patterns.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "rabipat/errors.hpp"

namespace rabipat {

PatternMatrix pattern_matrix(const AnisotropicRabiParams& p) {
  p.validate();
  PatternMatrix out;
  auto& m = out.m;
  const double sum = -0.5 * (p.xi1 + p.xi2);
  const double diff = 0.5 * (p.xi2 - p.xi1);
  m(0, 1) = m(1, 0) = 0.25 * p.Omega;
  m(0, 2) = m(2, 0) = sum;
  m(1, 2) = m(2, 1) = diff;
  m(2, 2) = p.omega0;
  return out;
}

namespace {

void fix_sign(Eigen::Ref<Eigen::Vector3d> v) {
  int arg = 0;
  for (int i = 1; i < 3; ++i) {
    if (std::abs(v(i)) > std::abs(v(arg))) arg = i;
  }
  if (v(arg) < 0.0) v = -v;
}

}  // namespace

PatternDecomposition decompose(const PatternMatrix& m) {
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> solver(m.m);
  if (solver.info() != Eigen::Success) {
    throw NumericalFailure("3x3 symmetric eigensolve did not converge");
  }
  PatternDecomposition d;
  d.lambdas = solver.eigenvalues();
  d.vectors = solver.eigenvectors();
  for (int n = 0; n < 3; ++n) fix_sign(d.vectors.col(n));
  return d;
}

OperatorMatrix pattern_operator(const PatternDecomposition& d, int n, const HilbertConfig& cfg,
                                PatternAssembly assembly) {
  if (n < 0 || n > 2) throw InvalidArgument("pattern index must be 0, 1 or 2");
  const Eigen::Vector3d u = d.u(n);
  CMatrix a = CMatrix::Zero(cfg.dim(), cfg.dim());
  for (int m = 0; m < cfg.fock_dim(); ++m) {
    const int up = cfg.index(Spin::Up, m);
    const int down = cfg.index(Spin::Down, m);
    if (assembly == PatternAssembly::Resolved) {
      // u1 sx + u2 (s- - s+)
      a(up, down) = u(0) - u(1);
      a(down, up) = u(0) + u(1);
    } else {
      // u1 (s+ - s-) + u2 sz
      a(up, down) = u(0);
      a(down, up) = -u(0);
      a(up, up) = u(1);
      a(down, down) = -u(1);
    }
  }
  for (Spin s : {Spin::Up, Spin::Down}) {
    for (int m = 1; m <= cfg.fock_cutoff(); ++m) {
      a(cfg.index(s, m - 1), cfg.index(s, m)) += u(2) * std::sqrt(double(m));
    }
  }
  return OperatorMatrix(std::move(a), false);
}

std::array<OperatorMatrix, 3> pattern_operators(const PatternDecomposition& d, const HilbertConfig& cfg,
                                                PatternAssembly assembly) {
  return {pattern_operator(d, 0, cfg, assembly), pattern_operator(d, 1, cfg, assembly),
          pattern_operator(d, 2, cfg, assembly)};
}

OperatorMatrix reconstruct(const PatternDecomposition& d, const HilbertConfig& cfg, PatternAssembly assembly) {
  CMatrix sum = CMatrix::Zero(cfg.dim(), cfg.dim());
  for (int n = 0; n < 3; ++n) {
    const OperatorMatrix a = pattern_operator(d, n, cfg, assembly);
    sum.noalias() += d.lambda(n) * (a.entries().adjoint() * a.entries());
  }
  return OperatorMatrix(std::move(sum), false);
}

double identity_shift(const PatternDecomposition& d) {
  double c = 0.0;
  for (int n = 0; n < 3; ++n) {
    c += d.lambda(n) * (d.vectors(0, n) * d.vectors(0, n) + d.vectors(1, n) * d.vectors(1, n));
  }
  return c;
}

ReconstructionReport compare_reconstruction(const OperatorMatrix& recon, const OperatorMatrix& h,
                                            const HilbertConfig& cfg) {
  if (recon.dim() != cfg.dim() || h.dim() != cfg.dim()) {
    throw DimensionMismatch("compare_reconstruction: operators do not match the Hilbert config");
  }
  const CMatrix diff = recon.entries() - h.entries();
  ReconstructionReport report;
  report.max_abs_hamiltonian = h.max_abs();

  double diag_sum = 0.0;
  int diag_count = 0;
  for (int i = 0; i < cfg.dim(); ++i) {
    if (cfg.on_truncation_edge(i)) continue;
    diag_sum += diff(i, i).real();
    ++diag_count;
  }
  const double c = diag_count > 0 ? diag_sum / diag_count : 0.0;
  report.identity_shift = c;

  for (int j = 0; j < cfg.dim(); ++j) {
    if (cfg.on_truncation_edge(j)) continue;
    for (int i = 0; i < cfg.dim(); ++i) {
      if (cfg.on_truncation_edge(i)) continue;
      Complex r = diff(i, j);
      if (i == j) {
        report.diagonal_spread = std::max(report.diagonal_spread, std::abs(r.real() - c));
        r -= c;
      }
      report.max_residual = std::max(report.max_residual, std::abs(r));
    }
  }
  return report;
}

PatternAttribution attribute(const PatternDecomposition& d, const std::array<OperatorMatrix, 3>& ops,
                             const OperatorMatrix& annihilator, const CVector& state) {
  PatternAttribution out;
  out.photon_total = squared_norm_after(annihilator, state);
  for (int n = 0; n < 3; ++n) {
    out.energy[n] = d.lambda(n) * squared_norm_after(ops[n], state);
    const double u3 = d.vectors(2, n);
    out.photons[n] = u3 * u3 * out.photon_total;
  }
  return out;
}

PatternAttribution attribute(const PatternDecomposition& d, const HilbertConfig& cfg, const CVector& state) {
  return attribute(d, pattern_operators(d, cfg), annihilation(cfg), state);
}

PatternDecomposition permute_patterns(const PatternDecomposition& d, const std::array<int, 3>& perm) {
  PatternDecomposition out = d;
  for (int n = 0; n < 3; ++n) {
    out.lambdas(n) = d.lambdas(perm[n]);
    out.vectors.col(n) = d.vectors.col(perm[n]);
    out.labeling.source_index[n] = d.labeling.source_index[perm[n]];
  }
  return out;
}

PatternDecomposition track_labels(const PatternDecomposition& prev, const PatternDecomposition& next) {
  std::array<int, 3> perm{0, 1, 2};
  std::array<int, 3> best_perm = perm;
  double best = -1.0;
  double second = -1.0;
  do {
    double score = 0.0;
    for (int n = 0; n < 3; ++n) score += std::abs(prev.u(n).dot(next.u(perm[n])));
    if (score > best) {
      second = best;
      best = score;
      best_perm = perm;
    } else if (score > second) {
      second = score;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));

  PatternDecomposition out = permute_patterns(next, best_perm);
  for (int n = 0; n < 3; ++n) {
    if (prev.u(n).dot(out.u(n)) < 0.0) out.vectors.col(n) = -out.vectors.col(n);
  }
  out.labeling.overlap_score = best;
  out.labeling.ambiguous = best - second < 1e-6;
  return out;
}

}  // namespace rabipat
