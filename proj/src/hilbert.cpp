#include "rabipat/hilbert.hpp"

#include <cmath>
#include <string>

#include "rabipat/errors.hpp"
#include "rabipat/simd.hpp"

namespace rabipat {

HilbertConfig::HilbertConfig(int fock_cutoff) : fock_cutoff_(fock_cutoff) {
  if (fock_cutoff < 1) {
    throw InvalidArgument("fock_cutoff must be >= 1, got " + std::to_string(fock_cutoff));
  }
}

OperatorMatrix::OperatorMatrix(CMatrix entries, bool hermitian)
    : entries_(std::move(entries)), hermitian_(hermitian) {
  if (entries_.rows() != entries_.cols()) {
    throw DimensionMismatch("operator matrix must be square");
  }
}

OperatorMatrix OperatorMatrix::zero(int dim) { return OperatorMatrix(CMatrix::Zero(dim, dim), true); }

OperatorMatrix OperatorMatrix::identity(int dim) {
  return OperatorMatrix(CMatrix::Identity(dim, dim), true);
}

double OperatorMatrix::max_abs() const {
  return entries_.size() == 0 ? 0.0 : entries_.cwiseAbs().maxCoeff();
}

bool OperatorMatrix::is_real() const {
  return entries_.size() == 0 || entries_.imag().cwiseAbs().maxCoeff() == 0.0;
}

namespace {

void require_same_dim(const OperatorMatrix& a, const OperatorMatrix& b, const char* what) {
  if (a.dim() != b.dim()) {
    throw DimensionMismatch(std::string(what) + ": dimension mismatch " + std::to_string(a.dim()) +
                            " vs " + std::to_string(b.dim()));
  }
}

}  // namespace

OperatorMatrix op_compose(const OperatorMatrix& a, const OperatorMatrix& b) {
  require_same_dim(a, b, "op_compose");
  return OperatorMatrix(a.entries() * b.entries(), false);
}

OperatorMatrix op_add(const OperatorMatrix& a, const OperatorMatrix& b) {
  require_same_dim(a, b, "op_add");
  return OperatorMatrix(a.entries() + b.entries(), a.hermitian() && b.hermitian());
}

OperatorMatrix op_sub(const OperatorMatrix& a, const OperatorMatrix& b) {
  require_same_dim(a, b, "op_sub");
  return OperatorMatrix(a.entries() - b.entries(), a.hermitian() && b.hermitian());
}

OperatorMatrix op_scale(const OperatorMatrix& a, Complex s) {
  return OperatorMatrix(a.entries() * s, a.hermitian() && s.imag() == 0.0);
}

OperatorMatrix op_adjoint(const OperatorMatrix& a) {
  return OperatorMatrix(a.entries().adjoint(), a.hermitian());
}

OperatorMatrix op_commutator(const OperatorMatrix& a, const OperatorMatrix& b) {
  return op_sub(op_compose(a, b), op_compose(b, a));
}

namespace {

void require_state(const OperatorMatrix& op, const CVector& state) {
  if (state.size() != op.dim()) {
    throw DimensionMismatch("state of size " + std::to_string(state.size()) +
                            " applied to operator of dimension " + std::to_string(op.dim()));
  }
  const double n2 = simd::kernels().norm2(state.data(), static_cast<std::size_t>(state.size()));
  if (std::abs(n2 - 1.0) > 1e-10) {
    throw NotNormalized("state norm^2 = " + std::to_string(n2));
  }
}

}  // namespace

Complex expectation(const OperatorMatrix& op, const CVector& state) {
  require_state(op, state);
  return simd::hermitian_form(op.entries().data(), state.data(), static_cast<std::size_t>(op.dim()));
}

double squared_norm_after(const OperatorMatrix& op, const CVector& state) {
  require_state(op, state);
  const auto n = static_cast<std::size_t>(op.dim());
  CVector image(op.dim());
  simd::matvec(op.entries().data(), state.data(), image.data(), n);
  return simd::kernels().norm2(image.data(), n);
}

double hermiticity_residual(const OperatorMatrix& op) {
  return simd::kernels().hermiticity_residual(op.entries().data(), static_cast<std::size_t>(op.dim()));
}

double max_abs_difference(const OperatorMatrix& a, const OperatorMatrix& b) {
  require_same_dim(a, b, "max_abs_difference");
  return simd::kernels().max_abs_diff(a.entries().data(), b.entries().data(),
                                      static_cast<std::size_t>(a.entries().size()));
}

void HermitianAssembler::add(int i, int j, Complex v) {
  if (i == j) {
    entries_(i, i) += Complex(v.real(), 0.0);
    return;
  }
  entries_(i, j) += v;
  entries_(j, i) += std::conj(v);
}

OperatorMatrix HermitianAssembler::finish() && { return OperatorMatrix(std::move(entries_), true); }

OperatorMatrix annihilation(const HilbertConfig& cfg) {
  CMatrix m = CMatrix::Zero(cfg.dim(), cfg.dim());
  for (Spin s : {Spin::Up, Spin::Down}) {
    for (int n = 1; n <= cfg.fock_cutoff(); ++n) {
      m(cfg.index(s, n - 1), cfg.index(s, n)) = std::sqrt(static_cast<double>(n));
    }
  }
  return OperatorMatrix(std::move(m), false);
}

OperatorMatrix creation(const HilbertConfig& cfg) { return op_adjoint(annihilation(cfg)); }

OperatorMatrix number_op(const HilbertConfig& cfg) {
  HermitianAssembler h(cfg.dim());
  for (int i = 0; i < cfg.dim(); ++i) h.add_diagonal(i, cfg.photons_of(i));
  return std::move(h).finish();
}

OperatorMatrix identity_op(const HilbertConfig& cfg) { return OperatorMatrix::identity(cfg.dim()); }

SpinOperators spin_ops(const HilbertConfig& cfg) {
  const int d = cfg.dim();
  HermitianAssembler x(d);
  HermitianAssembler y(d);
  HermitianAssembler z(d);
  CMatrix plus = CMatrix::Zero(d, d);
  for (int m = 0; m < cfg.fock_dim(); ++m) {
    const int up = cfg.index(Spin::Up, m);
    const int down = cfg.index(Spin::Down, m);
    x.add(up, down, 1.0);
    // sigma_y = [[0, -i], [i, 0]] in (up, down)
    y.add(up, down, Complex(0.0, -1.0));
    z.add_diagonal(up, 1.0);
    z.add_diagonal(down, -1.0);
    plus(up, down) = 1.0;
  }
  OperatorMatrix raise(std::move(plus), false);
  OperatorMatrix lower = op_adjoint(raise);
  return {std::move(x).finish(), std::move(y).finish(), std::move(z).finish(), std::move(raise),
          std::move(lower)};
}

std::vector<int> parity_signs(const HilbertConfig& cfg) {
  std::vector<int> signs(static_cast<std::size_t>(cfg.dim()));
  for (int i = 0; i < cfg.dim(); ++i) {
    const int spin = cfg.spin_of(i) == Spin::Up ? 1 : -1;
    const int boson = cfg.photons_of(i) % 2 == 0 ? 1 : -1;
    signs[static_cast<std::size_t>(i)] = spin * boson;
  }
  return signs;
}

OperatorMatrix parity_op(const HilbertConfig& cfg) {
  HermitianAssembler h(cfg.dim());
  const auto signs = parity_signs(cfg);
  for (int i = 0; i < cfg.dim(); ++i) h.add_diagonal(i, signs[static_cast<std::size_t>(i)]);
  return std::move(h).finish();
}

CVector basis_state(const HilbertConfig& cfg, Spin s, int m) {
  if (m < 0 || m > cfg.fock_cutoff()) {
    throw InvalidArgument("photon number " + std::to_string(m) + " outside truncated basis");
  }
  CVector v = CVector::Zero(cfg.dim());
  v(cfg.index(s, m)) = 1.0;
  return v;
}

}  // namespace rabipat
