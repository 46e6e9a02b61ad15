#include "rabipat/models.hpp"

#include <cmath>
#include <string>

#include "rabipat/errors.hpp"

namespace rabipat {

void AnisotropicRabiParams::validate() const {
  if (!(omega0 > 0.0)) throw InvalidArgument("omega0 must be > 0");
  if (!(Omega > 0.0)) throw InvalidArgument("Omega must be > 0");
  if (!(xi1 >= 0.0)) throw InvalidArgument("xi1 must be >= 0");
  if (!(xi2 >= 0.0)) throw InvalidArgument("xi2 must be >= 0");
  if (!std::isfinite(omega0 + Omega + xi1 + xi2)) throw InvalidArgument("parameters must be finite");
}

double AnisotropicRabiParams::k() const {
  if (xi1 == 0.0) throw InvalidArgument("k = xi2/xi1 undefined for xi1 = 0");
  return xi2 / xi1;
}

AnisotropicRabiParams AnisotropicRabiParams::with_ratio(double omega0, double Omega, double xi1, double k) {
  AnisotropicRabiParams p{omega0, Omega, xi1, k * xi1};
  p.validate();
  return p;
}

double squeeze_from_eta(double delta_c, double eta) { return 0.5 * std::atanh(eta / delta_c); }

double eta_from_squeeze(double delta_c, double r) { return delta_c * std::tanh(2.0 * r); }

ParametricJCParams::ParametricJCParams(double delta_c, double delta_q, double g, double eta, double r)
    : delta_c_(delta_c), delta_q_(delta_q), g_(g), eta_(eta), r_(r) {
  validate();
}

void ParametricJCParams::validate() const {
  if (!(delta_c_ > 0.0)) throw InvalidArgument("delta_c must be > 0");
  if (!(delta_q_ > 0.0)) throw InvalidArgument("delta_q must be > 0");
  if (!(g_ >= 0.0)) throw InvalidArgument("g must be >= 0");
  if (!(std::abs(eta_) < delta_c_)) {
    throw InvalidArgument("|eta| must be < delta_c (squeeze parameter undefined otherwise)");
  }
  if (!std::isfinite(r_) || !std::isfinite(g_) || !std::isfinite(delta_q_)) {
    throw InvalidArgument("parameters must be finite");
  }
}

ParametricJCParams ParametricJCParams::from_eta(double delta_c, double delta_q, double g, double eta) {
  if (!(delta_c > 0.0)) throw InvalidArgument("delta_c must be > 0");
  if (!(std::abs(eta) < delta_c)) {
    throw InvalidArgument("|eta| must be < delta_c (squeeze parameter undefined otherwise)");
  }
  return ParametricJCParams(delta_c, delta_q, g, eta, squeeze_from_eta(delta_c, eta));
}

ParametricJCParams ParametricJCParams::from_squeeze(double delta_c, double delta_q, double g, double r) {
  if (!std::isfinite(r)) throw InvalidArgument("r must be finite");
  if (!(delta_c > 0.0)) throw InvalidArgument("delta_c must be > 0");
  const double eta = eta_from_squeeze(delta_c, r);
  if (!(std::abs(eta) < delta_c)) {
    // tanh saturates to 1 in double precision for |r| >~ 9.5
    throw InvalidArgument("squeeze parameter too large for a representable drive amplitude");
  }
  return ParametricJCParams(delta_c, delta_q, g, eta, r);
}

ParametricJCParams ParametricJCParams::with_coupling(double g) const {
  return ParametricJCParams(delta_c_, delta_q_, g, eta_, r_);
}

double ParametricJCParams::omega_eff() const { return delta_c_ / std::cosh(2.0 * r_); }

SqueezedCouplings squeeze_couplings(const ParametricJCParams& p, CouplingConvention convention) {
  const double angle = convention == CouplingConvention::Resolved ? p.r() : 2.0 * p.r();
  return {p.g() * std::cosh(angle), p.g() * std::sinh(angle)};
}

double squeeze_vacuum_shift(const ParametricJCParams& p) {
  return 0.5 * p.delta_c() * (1.0 / std::cosh(2.0 * p.r()) - 1.0);
}

namespace {

double spin_sign(Spin s) { return s == Spin::Up ? 1.0 : -1.0; }

// coefficient * (a s+ + a' s-): <up, m-1| a s+ |down, m> = sqrt(m)
void add_rotating(HermitianAssembler& h, const HilbertConfig& cfg, double coefficient) {
  if (coefficient == 0.0) return;
  for (int m = 1; m <= cfg.fock_cutoff(); ++m) {
    h.add(cfg.index(Spin::Up, m - 1), cfg.index(Spin::Down, m), coefficient * std::sqrt(double(m)));
  }
}

// coefficient * (a s- + a' s+): <down, m-1| a s- |up, m> = sqrt(m)
void add_counter_rotating(HermitianAssembler& h, const HilbertConfig& cfg, double coefficient) {
  if (coefficient == 0.0) return;
  for (int m = 1; m <= cfg.fock_cutoff(); ++m) {
    h.add(cfg.index(Spin::Down, m - 1), cfg.index(Spin::Up, m), coefficient * std::sqrt(double(m)));
  }
}

// (a'^2 + a^2) weighted per spin block.
void add_two_photon(HermitianAssembler& h, const HilbertConfig& cfg, double up_coefficient,
                    double down_coefficient) {
  for (Spin s : {Spin::Up, Spin::Down}) {
    const double c = s == Spin::Up ? up_coefficient : down_coefficient;
    if (c == 0.0) continue;
    for (int m = 2; m <= cfg.fock_cutoff(); ++m) {
      h.add(cfg.index(s, m - 2), cfg.index(s, m), c * std::sqrt(double(m) * double(m - 1)));
    }
  }
}

}  // namespace

OperatorMatrix build_anisotropic_rabi(const AnisotropicRabiParams& p, const HilbertConfig& cfg) {
  p.validate();
  HermitianAssembler h(cfg.dim());
  for (int i = 0; i < cfg.dim(); ++i) {
    h.add_diagonal(i, p.omega0 * cfg.photons_of(i) + 0.5 * p.Omega * spin_sign(cfg.spin_of(i)));
  }
  add_rotating(h, cfg, -p.xi1);
  add_counter_rotating(h, cfg, -p.xi2);
  return std::move(h).finish();
}

OperatorMatrix build_parametric_jc(const ParametricJCParams& p, const HilbertConfig& cfg) {
  HermitianAssembler h(cfg.dim());
  for (int i = 0; i < cfg.dim(); ++i) {
    h.add_diagonal(i, p.delta_c() * cfg.photons_of(i) + 0.5 * p.delta_q() * spin_sign(cfg.spin_of(i)));
  }
  add_two_photon(h, cfg, -0.5 * p.eta(), -0.5 * p.eta());
  add_rotating(h, cfg, p.g());
  return std::move(h).finish();
}

OperatorMatrix build_squeezed_frame(const ParametricJCParams& p, const HilbertConfig& cfg,
                                    CouplingConvention convention) {
  const auto [g1, g2] = squeeze_couplings(p, convention);
  const double w = p.omega_eff();
  HermitianAssembler h(cfg.dim());
  for (int i = 0; i < cfg.dim(); ++i) {
    h.add_diagonal(i, w * cfg.photons_of(i) + 0.5 * p.delta_q() * spin_sign(cfg.spin_of(i)));
  }
  add_rotating(h, cfg, g1);
  add_counter_rotating(h, cfg, g2);
  return std::move(h).finish();
}

OperatorMatrix build_dispersive(const ParametricJCParams& p, const HilbertConfig& cfg,
                                DispersiveOrdering ordering, CouplingConvention convention) {
  const auto [g1, g2] = squeeze_couplings(p, convention);
  const double dq = p.delta_q();
  const double w = p.omega_eff();
  const double chi = (g1 * g1 + g2 * g2) / dq;
  const double shift = g1 * g1 / dq + 0.5 * dq;
  const double projector = (g1 * g1 - g2 * g2) / dq;
  const Spin projected = ordering == DispersiveOrdering::LowerRaise ? Spin::Down : Spin::Up;

  HermitianAssembler h(cfg.dim());
  for (int i = 0; i < cfg.dim(); ++i) {
    const Spin s = cfg.spin_of(i);
    const double sz = spin_sign(s);
    const double m = cfg.photons_of(i);
    double d = w * m + chi * m * sz + shift * sz;
    if (s == projected) d += projector;
    h.add_diagonal(i, d);
  }
  const double squeeze = g1 * g2 / dq;
  add_two_photon(h, cfg, squeeze, -squeeze);
  return std::move(h).finish();
}

}  // namespace rabipat
