#pragma once

// Low-energy effective descriptions of the normal and superradiant phases.
//
// Both the generic anisotropic Rabi model and the squeezed-frame simulator are
// mapped onto one set of effective couplings (w, W, xi1, xi2):
//   generic     (w0, W, xi1, xi2)
//   simulated   (dc sech 2r, dq, g1, g2)
// Every phase quantity is then derived from the projected boson Hamiltonian
//   A a'a - B (a'^2 + a^2) + C,
// whose Bogoliubov solution gives eps = sqrt(A^2 - 4B^2),
// E_G = (eps - A)/2 + C and tanh 2r' = 2B/A.

#include <string_view>

#include "rabipat/models.hpp"
#include "rabipat/spectra.hpp"

namespace rabipat {

enum class Regime { Normal, Superradiant, Critical };

std::string_view regime_name(Regime r);

struct EffectiveCouplings {
  double omega = 1.0;  // boson frequency
  double Omega = 1.0;  // qubit splitting
  double xi1 = 0.0;    // rotating
  double xi2 = 0.0;    // counter-rotating

  // Same model with both couplings rescaled so that xi_critical() == x.
  EffectiveCouplings at_coupling(double x) const;
};

EffectiveCouplings effective_couplings(const AnisotropicRabiParams& p);
EffectiveCouplings effective_couplings(const ParametricJCParams& p,
                                       CouplingConvention convention = CouplingConvention::Resolved);

// (xi1 + xi2)/sqrt(w W)
double xi_critical(const AnisotropicRabiParams& p);
double xi_critical(const EffectiveCouplings& c);

// g0 = sqrt(dc sech(2r) dq) / e^r; g/g0 is the simulator's coupling coordinate.
double g_critical(const ParametricJCParams& p);

struct QuadraticBoson {
  double A = 0.0;
  double B = 0.0;
  double C = 0.0;

  bool stable() const { return A > 2.0 * std::abs(B); }
  double epsilon() const;         // NaN when unstable
  double ground_energy() const;   // (eps - A)/2 + C
  double squeeze() const;         // (1/4) ln((A + 2B)/(A - 2B))
};

QuadraticBoson normal_form(const EffectiveCouplings& c);
// Expanded around the displaced minimum; requires xi_critical > 0.
QuadraticBoson superradiant_form(const EffectiveCouplings& c);

// Lower spin branch of the Hamiltonian with a -> alpha (real):
//   w alpha^2 - sqrt(W^2/4 + (xi1 + xi2)^2 alpha^2).
double semiclassical_energy(const EffectiveCouplings& c, double alpha);

// Golden-section minimum of semiclassical_energy on [0, 10 sqrt(W/w)].
double semiclassical_alpha0(const EffectiveCouplings& c, double tol = 1e-10);

struct PhasePoint {
  Regime regime = Regime::Normal;
  double coupling = 0.0;  // xi_c (generic) or g/g0 (simulated)
  double eps_np = 0.0;    // NaN outside the normal phase
  double eps_sp = 0.0;    // NaN outside the superradiant phase
  double E_G = 0.0;
  double E_G_offset_subtracted = 0.0;  // E_G + W/2
  double d2E_G = 0.0;                  // w.r.t. coupling; NaN unless requested
  double N_c = 0.0;                    // alpha0^2, zero in the normal phase
  double r_np = 0.0;
  double r_sp = 0.0;
  double alpha0 = 0.0;  // the displacement is +-alpha0; alpha0 >= 0 is stored
  // |down+-> = -+ spin_up |up> + spin_down |down>
  double spin_up = 0.0;
  double spin_down = 1.0;
};

// Throw RegimeError outside their regime.
PhasePoint normal_phase(const EffectiveCouplings& c);
PhasePoint superradiant_phase(const EffectiveCouplings& c);

// Analytic ground energy at coupling x along the direction of `direction`
// (its couplings rescaled), on the branch selected by x (normal for x <= 1).
double analytic_ground_energy(const EffectiveCouplings& direction, double x);

struct PhaseOptions {
  bool with_second_derivative = true;
  SecondDerivativeOptions fd{};
};

// Dispatches on the coupling. At exactly 1 the regime is Critical and both
// excitation energies are 0. The second derivative is taken along the
// coupling coordinate on the analytic branch of the point itself; within h of
// the boundary a one-sided stencil keeps the samples on that branch.
PhasePoint phase_point(const EffectiveCouplings& direction, double x, const PhaseOptions& opts = {});
// At the model's own coupling; no second derivative when that coupling is 0.
PhasePoint phase_point(const EffectiveCouplings& c, const PhaseOptions& opts = {});

}  // namespace rabipat
