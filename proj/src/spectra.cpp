#include "rabipat/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "eigensolver.hpp"
#include "rabipat/errors.hpp"

namespace rabipat {

namespace {

// Rotate each eigenvector so its largest-magnitude component is real and
// positive; makes outputs reproducible regardless of solver phase choices.
void normalize_phases(CMatrix& vectors) {
  for (Eigen::Index c = 0; c < vectors.cols(); ++c) {
    Eigen::Index arg = 0;
    double best = -1.0;
    for (Eigen::Index r = 0; r < vectors.rows(); ++r) {
      const double mag = std::abs(vectors(r, c));
      if (mag > best * (1.0 + 1e-12)) {
        best = mag;
        arg = r;
      }
    }
    if (best > 0.0) {
      const Complex phase = std::conj(vectors(arg, c)) / best;
      vectors.col(c) *= phase;
      vectors(arg, c) = Complex(best, 0.0);
    }
  }
}

void require_hermitian(const OperatorMatrix& h) {
  const double residual = hermiticity_residual(h);
  if (residual > 1e-14 * h.max_abs()) {
    throw NotHermitian("matrix is not Hermitian (max|H - H'| = " + std::to_string(residual) + ")");
  }
}

struct Eigenblock {
  Eigen::VectorXd values;
  CMatrix vectors;
};

Eigenblock solve_block(const CMatrix& entries, bool real, int k) {
  Eigenblock out;
  if (real) {
    auto pairs = detail::lowest_symmetric(entries.real(), k);
    out.values = std::move(pairs.values);
    out.vectors = pairs.vectors.cast<Complex>();
  } else {
    auto pairs = detail::lowest_hermitian(entries, k);
    out.values = std::move(pairs.values);
    out.vectors = std::move(pairs.vectors);
  }
  return out;
}

}  // namespace

SpectrumResult diagonalize(const OperatorMatrix& h, int k_levels) {
  if (k_levels < 1) throw InvalidArgument("k_levels must be >= 1");
  require_hermitian(h);
  Eigenblock block = solve_block(h.entries(), h.is_real(), std::min(k_levels, h.dim()));
  SpectrumResult out;
  out.eigenvalues.assign(block.values.data(), block.values.data() + block.values.size());
  out.eigenvectors = std::move(block.vectors);
  normalize_phases(out.eigenvectors);
  return out;
}

std::vector<int> parity_sector(const HilbertConfig& cfg, int parity) {
  const auto signs = parity_signs(cfg);
  std::vector<int> idx;
  idx.reserve(signs.size() / 2 + 1);
  for (int i = 0; i < cfg.dim(); ++i) {
    if (signs[static_cast<std::size_t>(i)] == parity) idx.push_back(i);
  }
  return idx;
}

SpectrumResult diagonalize_parity_resolved(const OperatorMatrix& h, const HilbertConfig& cfg, int k_levels) {
  if (k_levels < 1) throw InvalidArgument("k_levels must be >= 1");
  if (h.dim() != cfg.dim()) throw DimensionMismatch("Hamiltonian does not match the Hilbert config");
  require_hermitian(h);

  const auto signs = parity_signs(cfg);
  for (int j = 0; j < cfg.dim(); ++j) {
    for (int i = 0; i < cfg.dim(); ++i) {
      if (signs[std::size_t(i)] != signs[std::size_t(j)] && h(i, j) != Complex(0.0, 0.0)) {
        throw InvalidArgument("Hamiltonian does not commute with parity");
      }
    }
  }

  struct Level {
    double value;
    int parity;
    CVector vector;
  };
  std::vector<Level> levels;
  const bool real = h.is_real();
  for (int parity : {1, -1}) {
    const auto idx = parity_sector(cfg, parity);
    const int n = static_cast<int>(idx.size());
    CMatrix sub(n, n);
    for (int c = 0; c < n; ++c) {
      for (int r = 0; r < n; ++r) sub(r, c) = h(idx[std::size_t(r)], idx[std::size_t(c)]);
    }
    Eigenblock block = solve_block(sub, real, std::min(k_levels, n));
    for (Eigen::Index l = 0; l < block.values.size(); ++l) {
      CVector full = CVector::Zero(cfg.dim());
      for (int r = 0; r < n; ++r) full(idx[std::size_t(r)]) = block.vectors(r, l);
      levels.push_back({block.values(l), parity, std::move(full)});
    }
  }
  std::stable_sort(levels.begin(), levels.end(),
                   [](const Level& a, const Level& b) { return a.value < b.value; });
  const int k = std::min<int>(k_levels, static_cast<int>(levels.size()));

  SpectrumResult out;
  out.eigenvectors.resize(cfg.dim(), k);
  for (int i = 0; i < k; ++i) {
    out.eigenvalues.push_back(levels[std::size_t(i)].value);
    out.parities.push_back(levels[std::size_t(i)].parity);
    out.eigenvectors.col(i) = levels[std::size_t(i)].vector;
  }
  normalize_phases(out.eigenvectors);
  return out;
}

void CutoffPolicy::validate() const {
  if (!(tol_E > 0.0) || !(tol_n > 0.0)) throw InvalidArgument("cutoff tolerances must be > 0");
  if (n_start < 1) throw InvalidArgument("n_start must be >= 1");
  if (n_max < n_start) throw InvalidArgument("n_max must be >= n_start");
  if (!(energy_scale > 0.0)) throw InvalidArgument("energy_scale must be > 0");
  if (levels_checked < 1 || levels_checked > k_levels) {
    throw InvalidArgument("levels_checked must lie in [1, k_levels]");
  }
}

SpectrumResult solve_at_cutoff(const HamiltonianBuilder& builder, int fock_cutoff, int k_levels,
                               bool parity_resolved) {
  const HilbertConfig cfg(fock_cutoff);
  const OperatorMatrix h = builder(cfg);
  SpectrumResult s = parity_resolved ? diagonalize_parity_resolved(h, cfg, k_levels) : diagonalize(h, k_levels);
  s.cutoff_used = fock_cutoff;
  return s;
}

double ground_photon_number(const SpectrumResult& s, const HilbertConfig& cfg) {
  double n = 0.0;
  for (int i = 0; i < cfg.dim(); ++i) n += cfg.photons_of(i) * std::norm(s.eigenvectors(i, 0));
  return n;
}

std::vector<double> photon_numbers(const SpectrumResult& s, const HilbertConfig& cfg) {
  std::vector<double> out(std::size_t(s.levels()), 0.0);
  for (int l = 0; l < s.levels(); ++l) {
    double n = 0.0;
    for (int i = 0; i < cfg.dim(); ++i) n += cfg.photons_of(i) * std::norm(s.eigenvectors(i, l));
    out[std::size_t(l)] = n;
  }
  return out;
}

SpectrumResult converge_cutoff(const HamiltonianBuilder& builder, const CutoffPolicy& policy) {
  policy.validate();
  int n = policy.n_start;
  SpectrumResult current = solve_at_cutoff(builder, n, policy.k_levels, policy.parity_resolved);
  double last_residual = std::numeric_limits<double>::infinity();
  while (2 * n <= policy.n_max) {
    SpectrumResult next = solve_at_cutoff(builder, 2 * n, policy.k_levels, policy.parity_resolved);
    const int checked = std::min({policy.levels_checked, current.levels(), next.levels()});
    double de = 0.0;
    for (int i = 0; i < checked; ++i) {
      de = std::max(de, std::abs(current.eigenvalues[std::size_t(i)] - next.eigenvalues[std::size_t(i)]));
    }
    const double n_cur = ground_photon_number(current, HilbertConfig(n));
    const double n_next = ground_photon_number(next, HilbertConfig(2 * n));
    const double dn = std::abs(n_next - n_cur) / std::max(std::abs(n_next), 1.0);
    last_residual = std::abs(current.eigenvalues[0] - next.eigenvalues[0]);
    if (de < policy.tol_E * policy.energy_scale && dn < policy.tol_n) {
      current.converged = true;
      current.convergence_residual = last_residual;
      return current;
    }
    current = std::move(next);
    n *= 2;
  }
  current.converged = false;
  current.convergence_residual = last_residual;
  return current;
}

double second_difference(double f_minus, double f_0, double f_plus, double h) {
  return (f_plus - 2.0 * f_0 + f_minus) / (h * h);
}

double second_derivative(const std::function<double(double)>& f, double x0, const SecondDerivativeOptions& opts) {
  if (!(opts.h > 0.0)) throw InvalidArgument("finite-difference step must be > 0");
  const double f0 = f(x0);
  const double coarse = second_difference(f(x0 - opts.h), f0, f(x0 + opts.h), opts.h);
  if (!opts.richardson) return coarse;
  const double half = 0.5 * opts.h;
  const double fine = second_difference(f(x0 - half), f0, f(x0 + half), half);
  return (4.0 * fine - coarse) / 3.0;
}

}  // namespace rabipat
