#include "rabipat/phases.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "rabipat/errors.hpp"

namespace rabipat {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

void check(const EffectiveCouplings& c) {
  if (!(c.omega > 0.0) || !(c.Omega > 0.0)) throw InvalidArgument("effective frequencies must be > 0");
  if (!(c.xi1 >= 0.0) || !(c.xi2 >= 0.0)) throw InvalidArgument("effective couplings must be >= 0");
}

}  // namespace

std::string_view regime_name(Regime r) {
  switch (r) {
    case Regime::Normal:
      return "normal";
    case Regime::Superradiant:
      return "superradiant";
    case Regime::Critical:
      return "critical";
  }
  return "unknown";
}

EffectiveCouplings EffectiveCouplings::at_coupling(double x) const {
  const double now = xi_critical(*this);
  if (!(now > 0.0)) throw InvalidArgument("cannot rescale a model with zero coupling");
  EffectiveCouplings out = *this;
  out.xi1 *= x / now;
  out.xi2 *= x / now;
  return out;
}

EffectiveCouplings effective_couplings(const AnisotropicRabiParams& p) {
  p.validate();
  return {p.omega0, p.Omega, p.xi1, p.xi2};
}

EffectiveCouplings effective_couplings(const ParametricJCParams& p, CouplingConvention convention) {
  const auto g = squeeze_couplings(p, convention);
  return {p.omega_eff(), p.delta_q(), g.g1, g.g2};
}

double xi_critical(const EffectiveCouplings& c) {
  check(c);
  return (c.xi1 + c.xi2) / std::sqrt(c.omega * c.Omega);
}

double xi_critical(const AnisotropicRabiParams& p) { return xi_critical(effective_couplings(p)); }

double g_critical(const ParametricJCParams& p) {
  return std::sqrt(p.omega_eff() * p.delta_q()) / std::exp(p.r());
}

double QuadraticBoson::epsilon() const {
  const double rad = A * A - 4.0 * B * B;
  if (rad >= 0.0) return std::sqrt(rad);
  // at the critical point A = 2B holds only up to rounding
  return rad > -1e-13 * A * A ? 0.0 : kNaN;
}

double QuadraticBoson::ground_energy() const { return 0.5 * (epsilon() - A) + C; }

double QuadraticBoson::squeeze() const { return 0.25 * std::log((A + 2.0 * B) / (A - 2.0 * B)); }

QuadraticBoson normal_form(const EffectiveCouplings& c) {
  check(c);
  QuadraticBoson q;
  q.A = c.omega - (c.xi1 * c.xi1 + c.xi2 * c.xi2) / c.Omega;
  q.B = c.xi1 * c.xi2 / c.Omega;
  q.C = -c.xi2 * c.xi2 / c.Omega - 0.5 * c.Omega;
  return q;
}

QuadraticBoson superradiant_form(const EffectiveCouplings& c) {
  const double x = xi_critical(c);
  if (!(x > 0.0)) throw RegimeError("superradiant expansion needs nonzero coupling");
  const double x2 = x * x;
  const double W = c.Omega * x2;
  const double s = (c.xi1 + c.xi2) / x2;
  const double d = c.xi1 - c.xi2;
  QuadraticBoson q;
  q.A = c.omega - (s * s + d * d) / (2.0 * W);
  q.B = (s * s - d * d) / (4.0 * W);
  q.C = -(s - d) * (s - d) / (4.0 * W) - 0.25 * c.Omega * (x2 + 1.0 / x2);
  return q;
}

double semiclassical_energy(const EffectiveCouplings& c, double alpha) {
  const double G = c.xi1 + c.xi2;
  return c.omega * alpha * alpha - std::sqrt(0.25 * c.Omega * c.Omega + G * G * alpha * alpha);
}

double semiclassical_alpha0(const EffectiveCouplings& c, double tol) {
  check(c);
  const double inv_phi = 0.5 * (std::sqrt(5.0) - 1.0);
  double lo = 0.0;
  double hi = 10.0 * std::sqrt(c.Omega / c.omega);
  double x1 = hi - inv_phi * (hi - lo);
  double x2 = lo + inv_phi * (hi - lo);
  double f1 = semiclassical_energy(c, x1);
  double f2 = semiclassical_energy(c, x2);
  while (hi - lo > tol) {
    if (f1 < f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - inv_phi * (hi - lo);
      f1 = semiclassical_energy(c, x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + inv_phi * (hi - lo);
      f2 = semiclassical_energy(c, x2);
    }
  }
  return 0.5 * (lo + hi);
}

namespace {

PhasePoint normal_values(const EffectiveCouplings& c, double x) {
  const QuadraticBoson q = normal_form(c);
  PhasePoint out;
  out.regime = Regime::Normal;
  out.coupling = x;
  out.eps_np = q.epsilon();
  out.eps_sp = kNaN;
  out.E_G = q.ground_energy();
  out.E_G_offset_subtracted = out.E_G + 0.5 * c.Omega;
  out.d2E_G = kNaN;
  out.r_np = q.squeeze();
  out.r_sp = kNaN;
  return out;
}

PhasePoint superradiant_values(const EffectiveCouplings& c, double x) {
  const QuadraticBoson q = superradiant_form(c);
  PhasePoint out;
  out.regime = Regime::Superradiant;
  out.coupling = x;
  out.eps_np = kNaN;
  out.eps_sp = q.epsilon();
  out.E_G = q.ground_energy();
  out.E_G_offset_subtracted = out.E_G + 0.5 * c.Omega;
  out.d2E_G = kNaN;
  out.r_np = kNaN;
  out.r_sp = q.squeeze();
  out.alpha0 = semiclassical_alpha0(c);
  out.N_c = out.alpha0 * out.alpha0;
  const double inv2 = 1.0 / (x * x);
  out.spin_up = std::sqrt(0.5 * (1.0 - inv2));
  out.spin_down = std::sqrt(0.5 * (1.0 + inv2));
  return out;
}

}  // namespace

PhasePoint normal_phase(const EffectiveCouplings& c) {
  const double x = xi_critical(c);
  if (!(x < 1.0)) throw RegimeError("normal phase requires coupling < 1 (got " + std::to_string(x) + ")");
  return normal_values(c, x);
}

PhasePoint superradiant_phase(const EffectiveCouplings& c) {
  const double x = xi_critical(c);
  if (!(x > 1.0)) {
    throw RegimeError("superradiant phase requires coupling > 1 (got " + std::to_string(x) + ")");
  }
  return superradiant_values(c, x);
}

double analytic_ground_energy(const EffectiveCouplings& direction, double x) {
  if (!std::isfinite(x)) throw InvalidArgument("coupling coordinate must be finite");
  // E_G is even in the overall coupling sign, which lets stencils straddle 0
  x = std::abs(x);
  if (x == 0.0) return normal_form(EffectiveCouplings{direction.omega, direction.Omega, 0.0, 0.0}).ground_energy();
  const EffectiveCouplings at = direction.at_coupling(x);
  return x <= 1.0 ? normal_form(at).ground_energy() : superradiant_form(at).ground_energy();
}

PhasePoint phase_point(const EffectiveCouplings& direction, double x, const PhaseOptions& opts) {
  if (!(x >= 0.0) || !std::isfinite(x)) throw InvalidArgument("coupling coordinate must be finite and >= 0");
  const EffectiveCouplings c =
      x == 0.0 ? EffectiveCouplings{direction.omega, direction.Omega, 0.0, 0.0} : direction.at_coupling(x);
  PhasePoint out;
  if (x < 1.0) {
    out = normal_values(c, x);
  } else if (x > 1.0) {
    out = superradiant_values(c, x);
  } else {
    const QuadraticBoson q = normal_form(c);
    out.regime = Regime::Critical;
    out.coupling = x;
    out.eps_np = 0.0;
    out.eps_sp = 0.0;
    out.E_G = -0.5 * q.A + q.C;
    out.E_G_offset_subtracted = out.E_G + 0.5 * c.Omega;
    out.d2E_G = kNaN;
    out.r_np = kNaN;
    out.r_sp = kNaN;
  }
  if (!opts.with_second_derivative) return out;

  const double h = opts.fd.h;
  if (!(h > 0.0)) throw InvalidArgument("finite-difference step must be > 0");
  auto f = [&](double t) { return analytic_ground_energy(direction, t); };
  const bool normal_side = x <= 1.0;
  const bool central = normal_side ? (x + h <= 1.0) : (x - h > 1.0);
  if (central) {
    out.d2E_G = second_derivative(f, x, opts.fd);
  } else if (normal_side) {
    out.d2E_G = second_difference(f(x - 2.0 * h), f(x - h), f(x), h);
  } else {
    out.d2E_G = second_difference(f(x), f(x + h), f(x + 2.0 * h), h);
  }
  return out;
}

PhasePoint phase_point(const EffectiveCouplings& c, const PhaseOptions& opts) {
  const double x = xi_critical(c);
  if (x == 0.0) {
    PhaseOptions plain = opts;
    plain.with_second_derivative = false;
    return phase_point(c, 0.0, plain);
  }
  return phase_point(c, x, opts);
}

}  // namespace rabipat
