#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "rabipat/hilbert.hpp"

namespace rabipat {

struct SpectrumResult {
  std::vector<double> eigenvalues;  // ascending
  CMatrix eigenvectors;             // column i pairs with eigenvalues[i]
  std::vector<int> parities;        // +-1 per level; empty unless parity-resolved
  int cutoff_used = 0;
  bool converged = true;
  double convergence_residual = 0.0;

  int levels() const { return static_cast<int>(eigenvalues.size()); }
  CVector state(int i) const { return eigenvectors.col(i); }
  double gap() const { return levels() > 1 ? eigenvalues[1] - eigenvalues[0] : 0.0; }
};

// Lowest k_levels eigenpairs of a dense Hermitian matrix (LAPACK MRRR with an
// index range). Real matrices go through the real symmetric driver.
// Throws NotHermitian when max|H - H'| exceeds 1e-14 max|H|.
SpectrumResult diagonalize(const OperatorMatrix& h, int k_levels);

// Diagonalizes the two parity sectors of Pi = sz (-1)^{a'a} separately and
// merges them. Near-degenerate parity doublets therefore come back as parity
// eigenstates instead of arbitrary mixtures. Only valid when [H, Pi] = 0,
// which is checked.
SpectrumResult diagonalize_parity_resolved(const OperatorMatrix& h, const HilbertConfig& cfg, int k_levels);

// Sector of the spin-major basis with the given parity, in basis order.
std::vector<int> parity_sector(const HilbertConfig& cfg, int parity);

struct CutoffPolicy {
  double tol_E = 1e-8;   // in units of energy_scale
  double tol_n = 1e-6;   // relative change of ground <a'a>
  int n_start = 32;
  int n_max = 512;
  double energy_scale = 1.0;
  int levels_checked = 1;  // how many of the lowest levels must agree
  int k_levels = 4;        // levels returned
  bool parity_resolved = true;

  void validate() const;
};

using HamiltonianBuilder = std::function<OperatorMatrix(const HilbertConfig&)>;

// Lowest levels at a fixed cutoff, through the same solver path the
// convergence controller uses.
SpectrumResult solve_at_cutoff(const HamiltonianBuilder& builder, int fock_cutoff, int k_levels,
                               bool parity_resolved = true);

// Doubles N from n_start until the lowest levels and the ground-state photon
// number agree between N and 2N; returns the result at the smallest such N.
// Hitting n_max returns the last result with converged = false.
SpectrumResult converge_cutoff(const HamiltonianBuilder& builder, const CutoffPolicy& policy);

double ground_photon_number(const SpectrumResult& s, const HilbertConfig& cfg);
std::vector<double> photon_numbers(const SpectrumResult& s, const HilbertConfig& cfg);

struct SecondDerivativeOptions {
  double h = 1e-3;
  bool richardson = false;  // combine h and h/2: (4 D(h/2) - D(h)) / 3
};

// Central difference (f(x+h) - 2 f(x) + f(x-h)) / h^2. Throws InvalidArgument
// for h <= 0; evaluation errors propagate.
double second_derivative(const std::function<double(double)>& f, double x0,
                         const SecondDerivativeOptions& opts = {});

// Same stencil from three already-sampled values.
double second_difference(double f_minus, double f_0, double f_plus, double h);

}  // namespace rabipat
