#include <algorithm>
#include <cmath>
#include <iomanip>
#include <limits>
#include <ostream>
#include <random>
#include <sstream>

#include "commands.hpp"
#include "rabipat/errata.hpp"
#include "rabipat/patterns.hpp"
#include "rabipat/phases.hpp"
#include "rabipat/sweep.hpp"

namespace rabipat::cli {

namespace {

struct Check {
  std::string suite;
  std::string name;
  double tolerance;
  double observed;
  bool passed;
  std::string detail;
};

struct ValidateOptions {
  int draws = 100;
  int cutoff = 40;
  int attribution_points = 16;
  std::vector<std::pair<double, double>> equivalence_points = {{0.0, 0.5}, {0.5, 0.9}, {0.5, 1.2}};
  bool inject_printed = false;
  std::uint64_t seed = 0;
};

const std::vector<std::string> kSuites = {"reconstruction",      "negative-control",   "attribution",
                                          "unitary-equivalence", "branch-consistency", "coupling-convention",
                                          "dispersive-ordering"};

constexpr double kDeltaQ = 23.56;

double reconstruction_residual(const AnisotropicRabiParams& p, int cutoff, PatternAssembly assembly,
                               double* relative, double* shift_error) {
  const HilbertConfig cfg(cutoff);
  const OperatorMatrix h = build_anisotropic_rabi(p, cfg);
  const PatternDecomposition d = decompose(pattern_matrix(p));
  const ReconstructionReport rep = compare_reconstruction(reconstruct(d, cfg, assembly), h, cfg);
  *relative = rep.max_residual / rep.max_abs_hamiltonian;
  *shift_error = std::max(std::abs(rep.identity_shift - identity_shift(d)), rep.diagonal_spread);
  return rep.max_residual;
}

std::vector<AnisotropicRabiParams> random_draws(const ValidateOptions& o) {
  std::mt19937_64 rng(o.seed);
  std::vector<AnisotropicRabiParams> out;
  for (int i = 0; i < o.draws; ++i) {
    const double Omega = std::uniform_int_distribution<int>(0, 1)(rng) ? 100.0 : 10.0;
    std::uniform_real_distribution<double> xi(0.0, std::sqrt(Omega));
    const double xi1 = xi(rng);
    const double xi2 = xi(rng);
    out.push_back({1.0, Omega, xi1, xi2});
  }
  return out;
}

void suite_reconstruction(const ValidateOptions& o, std::vector<Check>& out) {
  const auto assembly = o.inject_printed ? PatternAssembly::Printed : PatternAssembly::Resolved;
  double worst = 0.0;
  double worst_shift = 0.0;
  for (const auto& p : random_draws(o)) {
    double rel = 0.0;
    double shift = 0.0;
    reconstruction_residual(p, o.cutoff, assembly, &rel, &shift);
    worst = std::max(worst, rel);
    const double scale = build_anisotropic_rabi(p, HilbertConfig(1)).max_abs();
    worst_shift = std::max(worst_shift, shift / std::max(scale, 1.0));
  }
  const std::string detail = o.inject_printed ? "printed assembly injected" : "resolved assembly";
  out.push_back({"reconstruction", "max_residual_over_max_H", 1e-10, worst, worst < 1e-10, detail});
  out.push_back({"reconstruction", "identity_shift_constant", 1e-10, worst_shift, worst_shift < 1e-10, detail});
}

void suite_negative_control(const ValidateOptions& o, std::vector<Check>& out) {
  double smallest = std::numeric_limits<double>::infinity();
  for (const auto& p : random_draws(o)) {
    double rel = 0.0;
    double shift = 0.0;
    smallest = std::min(smallest, reconstruction_residual(p, o.cutoff, PatternAssembly::Printed, &rel, &shift));
  }
  out.push_back({"negative-control", "printed_assembly_residual_exceeds_omega0", 1.0, smallest, smallest > 1.0,
                 "reconstruction must fail for the printed assembly"});
  const Erratum& e = erratum("pattern-assembly");
  out.push_back({"negative-control", "ledger_entry_" + e.id, 0.0, 0.0, true, e.implemented});
}

void suite_attribution(const ValidateOptions& o, std::vector<Check>& out) {
  SweepSpec spec;
  spec.model = ModelKind::Anisotropic;
  spec.fixed = {{"omega0", 1.0}, {"Omega", 100.0}, {"xi1", 0.1}};
  spec.axes = {AxisSpec::linspace("k_over_kc", 0.0, 1.5, std::max(2, o.attribution_points))};
  spec.observables.patterns = true;
  const auto results = run_sweep(spec, 1);
  double e_err = 0.0;
  double n_err = 0.0;
  bool all_ok = true;
  for (const auto& r : results) {
    all_ok = all_ok && r.converged();
    for (std::size_t i = 0; i < r.attribution.size(); ++i) {
      const double E = r.spectrum.eigenvalues[i];
      const auto& a = r.attribution[i];
      e_err = std::max(e_err, std::abs(a.energy_sum() - (E + r.identity_shift)) / (std::abs(E) + 1.0));
      n_err = std::max(n_err, std::abs(a.photon_sum() - r.photons[i]) / (r.photons[i] + 1.0));
    }
  }
  out.push_back({"attribution", "energy_sum_matches_ed", 1e-9, e_err, all_ok && e_err < 1e-9, "levels 0-3"});
  out.push_back({"attribution", "photon_sum_matches_ed", 1e-10, n_err, all_ok && n_err < 1e-10, "levels 0-3"});
}

SpectrumResult converged_levels(const HamiltonianBuilder& b, int n_max) {
  CutoffPolicy p;
  p.levels_checked = 4;
  p.k_levels = 4;
  p.n_max = n_max;
  return converge_cutoff(b, p);
}

double frame_mismatch(const ParametricJCParams& p, CouplingConvention conv, bool* converged) {
  const auto lab = converged_levels([&](const HilbertConfig& c) { return build_parametric_jc(p, c); }, 4096);
  const auto sq = converged_levels([&](const HilbertConfig& c) { return build_squeezed_frame(p, c, conv); }, 4096);
  *converged = lab.converged && sq.converged;
  const double shift = squeeze_vacuum_shift(p);
  double worst = 0.0;
  for (int i = 0; i < 4; ++i) {
    worst = std::max(worst, std::abs(lab.eigenvalues[std::size_t(i)] - (sq.eigenvalues[std::size_t(i)] + shift)));
  }
  return worst;
}

void suite_equivalence(const ValidateOptions& o, std::vector<Check>& out) {
  for (const auto& [r, x] : o.equivalence_points) {
    const auto base = ParametricJCParams::from_squeeze(1.0, kDeltaQ, 0.0, r);
    const auto p = base.with_coupling(x * g_critical(base));
    bool conv = false;
    const double d = frame_mismatch(p, CouplingConvention::Resolved, &conv);
    std::ostringstream name;
    name << "lowest4_r=" << r << "_g/g0=" << x;
    out.push_back({"unitary-equivalence", name.str(), 1e-6, d, conv && d < 1e-6, conv ? "" : "unconverged"});
  }
}

void suite_branches(std::vector<Check>& out) {
  struct Case {
    std::string name;
    EffectiveCouplings direction;
  };
  std::vector<Case> cases;
  for (double k : {0.5, 1.0}) {
    AnisotropicRabiParams p = AnisotropicRabiParams::with_ratio(1.0, 200.0, 1.0, k);
    cases.push_back({"generic_k=" + std::to_string(k).substr(0, 3), effective_couplings(p).at_coupling(1.0)});
  }
  for (double r : {0.5, std::sqrt(2.0)}) {
    const auto p = ParametricJCParams::from_squeeze(1.0, kDeltaQ, 1.0, r);
    cases.push_back({"simulated_r=" + std::to_string(r).substr(0, 4), effective_couplings(p).at_coupling(1.0)});
  }
  PhaseOptions plain;
  plain.with_second_derivative = false;
  for (const auto& c : cases) {
    const double scale = c.direction.omega;
    double np_last = 0.0;
    double sp_last = 0.0;
    bool np_mono = true;
    bool sp_mono = true;
    double np_prev = std::numeric_limits<double>::infinity();
    double sp_prev = std::numeric_limits<double>::infinity();
    for (int i = 0; i <= 100; ++i) {
      const double t = 0.1 * (1.0 - i / 100.0);
      if (t > 0.0) {
        const double e_np = phase_point(c.direction, 1.0 - t, plain).eps_np;
        const double e_sp = phase_point(c.direction, 1.0 + t, plain).eps_sp;
        np_mono = np_mono && e_np < np_prev;
        sp_mono = sp_mono && e_sp < sp_prev;
        np_prev = e_np;
        sp_prev = e_sp;
      }
    }
    for (int j = 4; j <= 8; ++j) {
      const double t = std::pow(10.0, -j);
      const double e_np = phase_point(c.direction, 1.0 - t, plain).eps_np;
      const double e_sp = phase_point(c.direction, 1.0 + t, plain).eps_sp;
      np_mono = np_mono && e_np < np_prev;
      sp_mono = sp_mono && e_sp < sp_prev;
      np_prev = np_last = e_np;
      sp_prev = sp_last = e_sp;
    }
    out.push_back({"branch-consistency", c.name + "_eps_np_to_zero", 1e-3 * scale, np_last,
                   np_mono && np_last < 1e-3 * scale, "limit 1-1e-8, monotone on [0.9,1)"});
    out.push_back({"branch-consistency", c.name + "_eps_sp_to_zero", 1e-3 * scale, sp_last,
                   sp_mono && sp_last < 1e-3 * scale, "limit 1+1e-8, monotone on (1,1.1]"});
    // Both excitation energies vanish at the threshold, so the one-sided
    // limits are -A/2 + C of each branch; evaluating eps there would only
    // amplify rounding of the rescaled couplings through the square root.
    const EffectiveCouplings at = c.direction.at_coupling(1.0);
    const QuadraticBoson left = normal_form(at);
    const QuadraticBoson right = superradiant_form(at);
    const double jump = std::abs((-0.5 * left.A + left.C) - (-0.5 * right.A + right.C));
    out.push_back({"branch-consistency", c.name + "_E_G_continuous", 1e-8 * scale, jump, jump < 1e-8 * scale, ""});
  }
}

void suite_convention(std::vector<Check>& out) {
  const auto p = ParametricJCParams::from_squeeze(1.0, kDeltaQ, 0.01, std::sqrt(2.0));
  bool c1 = false;
  bool c2 = false;
  const double resolved = frame_mismatch(p, CouplingConvention::Resolved, &c1);
  const double doubled = frame_mismatch(p, CouplingConvention::DoubleAngle, &c2);
  out.push_back({"coupling-convention", "resolved_cosh_r_matches_lab", 1e-6, resolved, c1 && resolved < 1e-6,
                 "r=sqrt2 g=0.01"});
  out.push_back({"coupling-convention", "printed_cosh_2r_mismatches_lab", 1e-6, doubled, c2 && doubled > 1e-6,
                 "r=sqrt2 g=0.01"});
}

// The dispersive Hamiltonian drops terms of relative order w/dq as well as
// fourth order in the couplings, so the ground-energy bound combines
// g1^2 g^2/dq^2 with the leading (g1^2 + g2^2) w/dq^2 correction.
void suite_dispersive(std::vector<Check>& out) {
  const auto base = ParametricJCParams::from_squeeze(1.0, kDeltaQ, 0.0, std::sqrt(2.0));
  const auto p = base.with_coupling(0.2 * g_critical(base));
  const auto g = squeeze_couplings(p);
  const double dq2 = p.delta_q() * p.delta_q();
  const double quartic = g.g1 * g.g1 * p.g() * p.g() / dq2;
  const double tol = quartic + (g.g1 * g.g1 + g.g2 * g.g2) * p.omega_eff() / dq2;
  CutoffPolicy policy;
  const auto ar = converge_cutoff([&](const HilbertConfig& c) { return build_squeezed_frame(p, c); }, policy);
  double err[2] = {0.0, 0.0};
  bool conv = ar.converged;
  for (int i = 0; i < 2; ++i) {
    const auto ord = i == 0 ? DispersiveOrdering::LowerRaise : DispersiveOrdering::RaiseLower;
    const auto hi = converge_cutoff([&](const HilbertConfig& c) { return build_dispersive(p, c, ord); }, policy);
    conv = conv && hi.converged;
    err[i] = std::abs(hi.eigenvalues[0] - ar.eigenvalues[0]);
  }
  out.push_back({"dispersive-ordering", "s-s+_ground_within_neglected_order", tol, err[0], conv && err[0] < tol,
                 "printed ordering; r=sqrt2 g=0.2g0"});
  out.push_back({"dispersive-ordering", "s-s+_closer_than_s+s-", err[1], err[0], conv && err[0] < err[1],
                 "tolerance column holds the s+s- error"});
  out.push_back({"dispersive-ordering", "s-s+_error_over_quartic_scale", 1.0, err[0] / quartic, true,
                 "informational: ratio to g1^2 g^2/dq^2"});
}

ValidateOptions read_options(const ObjectReader& r, const Invocation& inv, std::vector<std::string>* suites) {
  ValidateOptions o;
  o.seed = inv.seed;
  const Json& s = r.raw("suites");
  if (s.is_string() && s.get<std::string>() == "all") {
    *suites = kSuites;
  } else if (s.is_array() && !s.empty()) {
    for (const auto& v : s) {
      if (!v.is_string() || std::find(kSuites.begin(), kSuites.end(), v.get<std::string>()) == kSuites.end()) {
        throw ConfigError("config.suites entries must be suite names");
      }
      suites->push_back(v.get<std::string>());
    }
  } else {
    throw ConfigError("config.suites must be \"all\" or a nonempty array of suite names");
  }
  o.draws = r.integer("draws", o.draws);
  o.cutoff = r.integer("cutoff", o.cutoff);
  o.attribution_points = r.integer("attribution_points", o.attribution_points);
  o.inject_printed = r.boolean("inject_printed_assembly", o.inject_printed);
  if (r.has("equivalence_points")) {
    const Json& pts = r.raw("equivalence_points");
    if (!pts.is_array()) throw ConfigError("config.equivalence_points must be an array of [r, g_over_g0]");
    o.equivalence_points.clear();
    for (const auto& pt : pts) {
      if (!pt.is_array() || pt.size() != 2 || !pt[0].is_number() || !pt[1].is_number()) {
        throw ConfigError("config.equivalence_points must be an array of [r, g_over_g0]");
      }
      o.equivalence_points.emplace_back(pt[0].get<double>(), pt[1].get<double>());
    }
  }
  r.finish();
  if (o.draws < 1) throw ConfigError("config.draws must be >= 1");
  if (o.cutoff < 2) throw ConfigError("config.cutoff must be >= 2");
  if (o.attribution_points < 2) throw ConfigError("config.attribution_points must be >= 2");
  return o;
}

}  // namespace

Table cmd_validate(const Json& config, const Invocation& inv, std::ostream& report) {
  const ObjectReader r(config, "config");
  std::vector<std::string> suites;
  const ValidateOptions o = read_options(r, inv, &suites);

  std::vector<Check> checks;
  for (const auto& s : suites) {
    if (s == "reconstruction") suite_reconstruction(o, checks);
    if (s == "negative-control") suite_negative_control(o, checks);
    if (s == "attribution") suite_attribution(o, checks);
    if (s == "unitary-equivalence") suite_equivalence(o, checks);
    if (s == "branch-consistency") suite_branches(checks);
    if (s == "coupling-convention") suite_convention(checks);
    if (s == "dispersive-ordering") suite_dispersive(checks);
  }

  Table t;
  t.header = {"suite", "check", "tolerance", "observed", "passed", "detail"};
  bool all = true;
  report << std::setprecision(6);
  for (const auto& c : checks) {
    all = all && c.passed;
    report << (c.passed ? "PASS " : "FAIL ") << c.suite << "/" << c.name << "  observed=" << c.observed
           << "  tolerance=" << c.tolerance << (c.detail.empty() ? "" : "  (" + c.detail + ")") << "\n";
    std::string detail = c.detail;
    std::replace(detail.begin(), detail.end(), ',', ';');
    t.add_row({c.suite, c.name, c.tolerance, c.observed, c.passed ? 1.0 : 0.0, detail});
  }
  report << "\nerrata ledger:\n";
  for (const auto& e : errata()) {
    report << "  " << e.id << ": printed [" << e.printed << "] implemented [" << e.implemented << "]\n";
  }
  add_preamble(t, "validate", config, "");
  if (!all) throw InternalInvariant("one or more validation checks failed", std::move(t));
  return t;
}

}  // namespace rabipat::cli
