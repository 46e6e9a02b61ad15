#pragma once

// Hamiltonian builders.
//
//   anisotropic Rabi      w0 a'a + (W/2) sz - xi1 (a s+ + a' s-) - xi2 (a s- + a' s+)
//   parametric JC (lab)   dc a'a + (dq/2) sz - (eta/2)(a'^2 + a^2) + g (a' s- + a s+)
//   squeezed frame        dc sech(2r) a'a + (dq/2) sz + g1 (a s+ + a' s-) + g2 (a s- + a' s+)
//   dispersive            dc sech(2r) a'a + ((g1^2+g2^2)/dq) a'a sz + (g1^2/dq + dq/2) sz
//                         + (g1 g2/dq)(a'^2 + a^2) sz + ((g1^2-g2^2)/dq) s- s+
//
// with tanh(2r) = eta/dc. All builders assemble matrix elements directly in
// Hermitian pairs, so outputs are exactly Hermitian and carry the flag.

#include <optional>

#include "rabipat/hilbert.hpp"

namespace rabipat {

struct AnisotropicRabiParams {
  double omega0 = 1.0;  // oscillator frequency
  double Omega = 1.0;   // qubit splitting
  double xi1 = 0.0;     // rotating-wave coupling
  double xi2 = 0.0;     // counter-rotating coupling

  void validate() const;
  // xi2/xi1; throws when xi1 == 0
  double k() const;

  static AnisotropicRabiParams with_ratio(double omega0, double Omega, double xi1, double k);
};

// Exactly one of eta / r is the primary drive parameter; the other follows
// from tanh(2r) = eta / delta_c.
class ParametricJCParams {
 public:
  static ParametricJCParams from_eta(double delta_c, double delta_q, double g, double eta);
  static ParametricJCParams from_squeeze(double delta_c, double delta_q, double g, double r);

  double delta_c() const { return delta_c_; }
  double delta_q() const { return delta_q_; }
  double g() const { return g_; }
  double eta() const { return eta_; }
  double r() const { return r_; }

  ParametricJCParams with_coupling(double g) const;

  // delta_c sech(2r)
  double omega_eff() const;

 private:
  ParametricJCParams(double delta_c, double delta_q, double g, double eta, double r);
  void validate() const;

  double delta_c_;
  double delta_q_;
  double g_;
  double eta_;
  double r_;
};

double squeeze_from_eta(double delta_c, double eta);
double eta_from_squeeze(double delta_c, double r);

// Which rotating / counter-rotating couplings the squeezing transformation is
// taken to induce. Resolved is the one whose spectrum matches the lab frame;
// DoubleAngle is kept so that mismatch can be demonstrated.
enum class CouplingConvention {
  Resolved,     // g1 = g cosh r,  g2 = g sinh r
  DoubleAngle,  // g1 = g cosh 2r, g2 = g sinh 2r
};

struct SqueezedCouplings {
  double g1;
  double g2;
};

SqueezedCouplings squeeze_couplings(const ParametricJCParams& p,
                                    CouplingConvention convention = CouplingConvention::Resolved);

// Constant separating the lab-frame spectrum from the squeezed-frame one:
// S H S^dagger = H_AR + (dc/2)(sech 2r - 1).
double squeeze_vacuum_shift(const ParametricJCParams& p);

// Order of the spin product multiplying (g1^2 - g2^2)/dq in the dispersive
// Hamiltonian.
enum class DispersiveOrdering {
  LowerRaise,  // s- s+ (projects on spin down)
  RaiseLower,  // s+ s- (projects on spin up)
};

OperatorMatrix build_anisotropic_rabi(const AnisotropicRabiParams& p, const HilbertConfig& cfg);
OperatorMatrix build_parametric_jc(const ParametricJCParams& p, const HilbertConfig& cfg);
OperatorMatrix build_squeezed_frame(const ParametricJCParams& p, const HilbertConfig& cfg,
                                    CouplingConvention convention = CouplingConvention::Resolved);
OperatorMatrix build_dispersive(const ParametricJCParams& p, const HilbertConfig& cfg,
                                DispersiveOrdering ordering = DispersiveOrdering::LowerRaise,
                                CouplingConvention convention = CouplingConvention::Resolved);

}  // namespace rabipat
