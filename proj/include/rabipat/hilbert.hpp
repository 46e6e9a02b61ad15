#pragma once

// Truncated Fock (x) spin operator algebra.
//
// Basis ordering is spin-major, Fock-minor:
//   |up,0>, |up,1>, ..., |up,N>, |down,0>, ..., |down,N>
// so the total dimension is 2(N+1). Every other module inherits this layout.

#include <complex>
#include <vector>

#include <Eigen/Dense>

namespace rabipat {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

enum class Spin { Up = 0, Down = 1 };

class HilbertConfig {
 public:
  // Throws InvalidArgument unless fock_cutoff >= 1.
  explicit HilbertConfig(int fock_cutoff);

  int fock_cutoff() const { return fock_cutoff_; }
  int fock_dim() const { return fock_cutoff_ + 1; }
  int dim() const { return 2 * (fock_cutoff_ + 1); }

  int index(Spin s, int m) const { return static_cast<int>(s) * fock_dim() + m; }
  Spin spin_of(int index) const { return index < fock_dim() ? Spin::Up : Spin::Down; }
  int photons_of(int index) const { return index % fock_dim(); }

  // Last retained Fock level, where a a^dagger and a^dagger a disagree.
  bool on_truncation_edge(int index) const { return photons_of(index) == fock_cutoff_; }

  friend bool operator==(const HilbertConfig&, const HilbertConfig&) = default;

 private:
  int fock_cutoff_;
};

// Dense complex operator. The hermitian flag is only ever set by code paths
// that assemble X and X^dagger symmetrically, so a flagged matrix is exactly
// Hermitian (not merely to rounding).
class OperatorMatrix {
 public:
  OperatorMatrix() = default;
  explicit OperatorMatrix(CMatrix entries, bool hermitian = false);

  static OperatorMatrix zero(int dim);
  static OperatorMatrix identity(int dim);

  int dim() const { return static_cast<int>(entries_.rows()); }
  const CMatrix& entries() const { return entries_; }
  bool hermitian() const { return hermitian_; }
  Complex operator()(int i, int j) const { return entries_(i, j); }

  double max_abs() const;
  bool is_real() const;

 private:
  CMatrix entries_;
  bool hermitian_ = false;
};

OperatorMatrix op_compose(const OperatorMatrix& a, const OperatorMatrix& b);
OperatorMatrix op_add(const OperatorMatrix& a, const OperatorMatrix& b);
OperatorMatrix op_sub(const OperatorMatrix& a, const OperatorMatrix& b);
OperatorMatrix op_scale(const OperatorMatrix& a, Complex s);
OperatorMatrix op_adjoint(const OperatorMatrix& a);
OperatorMatrix op_commutator(const OperatorMatrix& a, const OperatorMatrix& b);

inline OperatorMatrix operator*(const OperatorMatrix& a, const OperatorMatrix& b) { return op_compose(a, b); }
inline OperatorMatrix operator+(const OperatorMatrix& a, const OperatorMatrix& b) { return op_add(a, b); }
inline OperatorMatrix operator-(const OperatorMatrix& a, const OperatorMatrix& b) { return op_sub(a, b); }
inline OperatorMatrix operator*(Complex s, const OperatorMatrix& a) { return op_scale(a, s); }
inline OperatorMatrix operator*(double s, const OperatorMatrix& a) { return op_scale(a, Complex(s, 0.0)); }

// <psi|O|psi>. Throws NotNormalized when | |psi|^2 - 1 | > 1e-10 and
// DimensionMismatch when sizes disagree.
Complex expectation(const OperatorMatrix& op, const CVector& state);

// |O psi|^2, i.e. <psi|O^dagger O|psi> without forming the product.
double squared_norm_after(const OperatorMatrix& op, const CVector& state);

// max_ij |O_ij - conj(O_ji)|.
double hermiticity_residual(const OperatorMatrix& op);
double max_abs_difference(const OperatorMatrix& a, const OperatorMatrix& b);

OperatorMatrix annihilation(const HilbertConfig& cfg);
OperatorMatrix creation(const HilbertConfig& cfg);
OperatorMatrix number_op(const HilbertConfig& cfg);
OperatorMatrix identity_op(const HilbertConfig& cfg);

struct SpinOperators {
  OperatorMatrix x;
  OperatorMatrix y;
  OperatorMatrix z;
  OperatorMatrix plus;
  OperatorMatrix minus;
};

SpinOperators spin_ops(const HilbertConfig& cfg);

// Pi = sigma_z (-1)^{a^dagger a}; diagonal in the product basis.
OperatorMatrix parity_op(const HilbertConfig& cfg);
std::vector<int> parity_signs(const HilbertConfig& cfg);

CVector basis_state(const HilbertConfig& cfg, Spin s, int m);

// Accumulates matrix entries in Hermitian pairs: add(i, j, v) writes v at
// (i, j) and conj(v) at (j, i), so the result is Hermitian bit-for-bit.
class HermitianAssembler {
 public:
  explicit HermitianAssembler(int dim) : entries_(CMatrix::Zero(dim, dim)) {}

  void add(int i, int j, Complex v);
  void add_diagonal(int i, double v) { entries_(i, i) += v; }

  OperatorMatrix finish() &&;

 private:
  CMatrix entries_;
};

}  // namespace rabipat
