#pragma once

// Operator-space pattern decomposition of the anisotropic Rabi Hamiltonian.
//
// With the operator row v' = (sx, i sy, a') and column v = (sx, -i sy, a),
// the Hamiltonian is the quadratic form v' M v for the real symmetric
//
//        [    0          W/4     -(xi1+xi2)/2 ]
//   M =  [   W/4          0       (xi2-xi1)/2 ]
//        [ -(xi1+xi2)/2 (xi2-xi1)/2    w0     ]
//
// Diagonalizing M = sum_n lambda_n u_n u_n^T gives H = sum_n lambda_n A_n' A_n
// with pattern operators A_n = u_n1 sx + u_n2 (-i sy) + u_n3 a.

#include <array>

#include <Eigen/Dense>

#include "rabipat/hilbert.hpp"
#include "rabipat/models.hpp"

namespace rabipat {

struct PatternMatrix {
  Eigen::Matrix3d m = Eigen::Matrix3d::Zero();
};

PatternMatrix pattern_matrix(const AnisotropicRabiParams& p);

struct PatternLabeling {
  // labels[n] = index the pattern held in the raw ascending decomposition
  std::array<int, 3> source_index{0, 1, 2};
  bool ambiguous = false;
  double overlap_score = 3.0;  // sum_n |u_n^prev . u_n|
};

struct PatternDecomposition {
  Eigen::Vector3d lambdas = Eigen::Vector3d::Zero();
  // column n is u_n; orthonormal, largest-|component| positive
  Eigen::Matrix3d vectors = Eigen::Matrix3d::Identity();
  PatternLabeling labeling;

  double lambda(int n) const { return lambdas(n); }
  Eigen::Vector3d u(int n) const { return vectors.col(n); }
};

// Ascending eigenvalues; vector sign fixed so the largest-magnitude component
// is positive.
PatternDecomposition decompose(const PatternMatrix& m);

enum class PatternAssembly {
  Resolved,  // u1 sx + u2 (-i sy) + u3 a
  Printed,   // u1 (i sy) + u2 sz + u3 a; fails reconstruction, kept as a negative control
};

OperatorMatrix pattern_operator(const PatternDecomposition& d, int n, const HilbertConfig& cfg,
                                PatternAssembly assembly = PatternAssembly::Resolved);

std::array<OperatorMatrix, 3> pattern_operators(const PatternDecomposition& d, const HilbertConfig& cfg,
                                                PatternAssembly assembly = PatternAssembly::Resolved);

// sum_n lambda_n A_n' A_n
OperatorMatrix reconstruct(const PatternDecomposition& d, const HilbertConfig& cfg,
                           PatternAssembly assembly = PatternAssembly::Resolved);

// Scalar c in reconstruct(d) = H + c*I, from the spin identities
// sx^2 = (i sy)'(i sy) = 1: c = sum_n lambda_n (u_n1^2 + u_n2^2).
double identity_shift(const PatternDecomposition& d);

struct ReconstructionReport {
  double identity_shift = 0.0;      // mean diagonal of (recon - H) off the truncation edge
  double diagonal_spread = 0.0;     // max deviation of that diagonal from its mean
  double max_residual = 0.0;        // max |recon - H - c I| off the truncation edge
  double max_abs_hamiltonian = 0.0;
};

// Compares a reconstruction against H, excluding rows/columns on the last
// Fock level of each spin block.
ReconstructionReport compare_reconstruction(const OperatorMatrix& recon, const OperatorMatrix& h,
                                            const HilbertConfig& cfg);

struct PatternAttribution {
  std::array<double, 3> energy{};   // lambda_n <A_n' A_n>
  std::array<double, 3> photons{};  // u_n3^2 <a' a>
  double photon_total = 0.0;        // <a' a>

  double energy_sum() const { return energy[0] + energy[1] + energy[2]; }
  double photon_sum() const { return photons[0] + photons[1] + photons[2]; }
};

// Throws NotNormalized for states with | |psi|^2 - 1 | > 1e-10.
PatternAttribution attribute(const PatternDecomposition& d, const HilbertConfig& cfg, const CVector& state);

// Same, reusing operators already built for cfg.
PatternAttribution attribute(const PatternDecomposition& d, const std::array<OperatorMatrix, 3>& ops,
                             const OperatorMatrix& annihilator, const CVector& state);

// Relabels next so that each pattern continues the one in prev with the
// largest eigenvector overlap (brute force over the six permutations), then
// flips signs so u_n^prev . u_n^next > 0. Ties within 1e-6 are flagged.
PatternDecomposition track_labels(const PatternDecomposition& prev, const PatternDecomposition& next);

// Reorders by an explicit permutation: result pattern n = d pattern perm[n].
PatternDecomposition permute_patterns(const PatternDecomposition& d, const std::array<int, 3>& perm);

}  // namespace rabipat
