#include "rabipat/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <set>
#include <thread>

#include "rabipat/errors.hpp"

namespace rabipat {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

const std::vector<std::string> kAnisotropicNames = {"omega0", "Omega",        "xi1",      "xi1_over_xi1c",
                                                    "xi2",    "k",            "k_over_kc"};
const std::vector<std::string> kParametricNames = {"delta_c", "delta_q", "delta_q_over_omega_eff", "g",
                                                   "g_over_g0", "r",     "eta"};

const std::vector<std::string> kAnisotropicContext = {"omega0", "Omega", "xi1",  "xi2",           "k",
                                                      "k_c",    "k_over_kc", "xi1c", "xi1_over_xi1c", "xi_c"};
const std::vector<std::string> kParametricContext = {"delta_c", "delta_q", "g",  "eta",        "r",
                                                     "omega_eff", "g1",    "g2", "g0",         "g_over_g0",
                                                     "vacuum_shift"};

const std::vector<std::string>& context_names(ModelKind m) {
  return m == ModelKind::Anisotropic ? kAnisotropicContext : kParametricContext;
}

class Lookup {
 public:
  Lookup(const ParamMap& params, const std::vector<std::string>& allowed) : params_(params) {
    for (const auto& [key, value] : params) {
      if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
        throw InvalidArgument("unknown parameter '" + key + "' for this model");
      }
      if (!std::isfinite(value)) throw InvalidArgument("parameter '" + key + "' must be finite");
    }
  }

  double need(const std::string& key) const {
    auto it = params_.find(key);
    if (it == params_.end()) throw InvalidArgument("missing parameter '" + key + "'");
    return it->second;
  }

  bool has(const std::string& key) const { return params_.count(key) != 0; }

  // Name of the single key present from the group.
  std::string one_of(std::initializer_list<const char*> group) const {
    std::string found;
    std::string names;
    for (const char* key : group) {
      names += names.empty() ? key : std::string(" | ") + key;
      if (!has(key)) continue;
      if (!found.empty()) throw InvalidArgument("parameters '" + found + "' and '" + key + "' are exclusive");
      found = key;
    }
    if (found.empty()) throw InvalidArgument("exactly one of " + names + " is required");
    return found;
  }

 private:
  const ParamMap& params_;
};

ModelPoint resolve_anisotropic(const ParamMap& params) {
  const Lookup in(params, kAnisotropicNames);
  const double omega0 = in.need("omega0");
  const double Omega = in.need("Omega");
  if (!(omega0 > 0.0) || !(Omega > 0.0)) throw InvalidArgument("omega0 and Omega must be > 0");
  const double s = std::sqrt(omega0 * Omega);
  const std::string xi1_key = in.one_of({"xi1", "xi1_over_xi1c"});
  const std::string xi2_key = in.one_of({"xi2", "k", "k_over_kc"});

  double xi1 = 0.0;
  if (xi1_key == "xi1") {
    xi1 = in.need("xi1");
  } else {
    if (xi2_key != "k") throw InvalidArgument("xi1_over_xi1c needs the ratio k");
    xi1 = in.need("xi1_over_xi1c") * s / (1.0 + in.need("k"));
  }
  double xi2 = 0.0;
  if (xi2_key == "xi2") {
    xi2 = in.need("xi2");
  } else if (xi2_key == "k") {
    xi2 = in.need("k") * xi1;
  } else {
    if (!(xi1 > 0.0)) throw InvalidArgument("k_over_kc needs xi1 > 0");
    xi2 = in.need("k_over_kc") * (s / xi1 - 1.0) * xi1;
  }
  ModelPoint p;
  p.kind = ModelKind::Anisotropic;
  p.anisotropic = AnisotropicRabiParams{omega0, Omega, xi1, xi2};
  p.anisotropic.validate();
  return p;
}

ModelPoint resolve_parametric(ModelKind kind, const ParamMap& params) {
  const Lookup in(params, kParametricNames);
  const double dc = in.need("delta_c");
  if (!(dc > 0.0)) throw InvalidArgument("delta_c must be > 0");
  const std::string drive = in.one_of({"r", "eta"});
  const std::string qubit = in.one_of({"delta_q", "delta_q_over_omega_eff"});
  const std::string coupling = in.one_of({"g", "g_over_g0"});

  // The drive fixes the effective frequency, which the ratio-style keys need.
  const ParametricJCParams probe = drive == "r" ? ParametricJCParams::from_squeeze(dc, 1.0, 0.0, in.need("r"))
                                                : ParametricJCParams::from_eta(dc, 1.0, 0.0, in.need("eta"));
  const double dq = qubit == "delta_q" ? in.need("delta_q") : in.need("delta_q_over_omega_eff") * probe.omega_eff();
  double g = 0.0;
  if (coupling == "g") {
    g = in.need("g");
  } else {
    const auto shaped = drive == "r" ? ParametricJCParams::from_squeeze(dc, dq, 0.0, probe.r())
                                     : ParametricJCParams::from_eta(dc, dq, 0.0, probe.eta());
    g = in.need("g_over_g0") * g_critical(shaped);
  }
  ModelPoint p;
  p.kind = kind;
  p.jc = drive == "r" ? ParametricJCParams::from_squeeze(dc, dq, g, probe.r())
                      : ParametricJCParams::from_eta(dc, dq, g, probe.eta());
  return p;
}

std::string sanitize(std::string s) {
  for (char& c : s) {
    if (c == ',' || c == '"' || c == '\n' || c == '\r') c = ';';
  }
  return s;
}

std::vector<double> context_values(const SweepSpec& spec, const PointResult& r) {
  if (r.point) {
    std::vector<double> out;
    for (const auto& kv : r.point->context()) out.push_back(kv.second);
    return out;
  }
  ParamMap params = spec.fixed;
  for (std::size_t a = 0; a < spec.axes.size() && a < r.coordinates.size(); ++a) {
    params[spec.axes[a].name] = r.coordinates[a];
  }
  std::vector<double> out;
  for (const auto& name : context_names(spec.model)) {
    auto it = params.find(name);
    out.push_back(it == params.end() ? kNaN : it->second);
  }
  return out;
}

int level_count(const SweepSpec& spec) { return spec.policy.k_levels; }

template <typename T>
T at_or(const std::vector<T>& v, std::size_t i, T fallback) {
  return i < v.size() ? v[i] : fallback;
}

}  // namespace

std::string_view model_name(ModelKind m) {
  switch (m) {
    case ModelKind::Anisotropic:
      return "anisotropic";
    case ModelKind::ParametricJC:
      return "parametric-jc";
    case ModelKind::SqueezedFrame:
      return "squeezed-frame";
    case ModelKind::Dispersive:
      return "dispersive";
  }
  return "unknown";
}

ModelKind parse_model(std::string_view name) {
  for (ModelKind m : {ModelKind::Anisotropic, ModelKind::ParametricJC, ModelKind::SqueezedFrame,
                      ModelKind::Dispersive}) {
    if (model_name(m) == name) return m;
  }
  throw InvalidArgument("unknown model '" + std::string(name) + "'");
}

const std::vector<std::string>& parameter_names(ModelKind m) {
  return m == ModelKind::Anisotropic ? kAnisotropicNames : kParametricNames;
}

ModelPoint resolve_point(ModelKind kind, const ParamMap& params, CouplingConvention convention,
                         DispersiveOrdering ordering) {
  ModelPoint p = kind == ModelKind::Anisotropic ? resolve_anisotropic(params) : resolve_parametric(kind, params);
  p.convention = convention;
  p.ordering = ordering;
  return p;
}

HamiltonianBuilder ModelPoint::builder() const {
  switch (kind) {
    case ModelKind::Anisotropic: {
      const auto p = anisotropic;
      return [p](const HilbertConfig& cfg) { return build_anisotropic_rabi(p, cfg); };
    }
    case ModelKind::ParametricJC: {
      const auto p = *jc;
      return [p](const HilbertConfig& cfg) { return build_parametric_jc(p, cfg); };
    }
    case ModelKind::SqueezedFrame: {
      const auto p = *jc;
      const auto conv = convention;
      return [p, conv](const HilbertConfig& cfg) { return build_squeezed_frame(p, cfg, conv); };
    }
    case ModelKind::Dispersive: {
      const auto p = *jc;
      const auto conv = convention;
      const auto ord = ordering;
      return [p, conv, ord](const HilbertConfig& cfg) { return build_dispersive(p, cfg, ord, conv); };
    }
  }
  throw InvalidArgument("unknown model kind");
}

double ModelPoint::energy_scale() const {
  return kind == ModelKind::Anisotropic ? anisotropic.omega0 : jc->delta_c();
}

EffectiveCouplings ModelPoint::effective() const {
  return kind == ModelKind::Anisotropic ? effective_couplings(anisotropic) : effective_couplings(*jc, convention);
}

std::vector<std::pair<std::string, double>> ModelPoint::context() const {
  std::vector<std::pair<std::string, double>> out;
  if (kind == ModelKind::Anisotropic) {
    const auto& p = anisotropic;
    const double s = std::sqrt(p.omega0 * p.Omega);
    const double k = p.xi1 > 0.0 ? p.xi2 / p.xi1 : kNaN;
    const double kc = p.xi1 > 0.0 ? s / p.xi1 - 1.0 : kNaN;
    const double xi1c = s / (1.0 + k);
    out = {{"omega0", p.omega0}, {"Omega", p.Omega}, {"xi1", p.xi1},   {"xi2", p.xi2},
           {"k", k},             {"k_c", kc},        {"k_over_kc", k / kc},
           {"xi1c", xi1c},       {"xi1_over_xi1c", p.xi1 / xi1c},      {"xi_c", xi_critical(p)}};
  } else {
    const auto& p = *jc;
    const auto g = squeeze_couplings(p, convention);
    const double g0 = g_critical(p);
    out = {{"delta_c", p.delta_c()}, {"delta_q", p.delta_q()}, {"g", p.g()},   {"eta", p.eta()},
           {"r", p.r()},             {"omega_eff", p.omega_eff()}, {"g1", g.g1}, {"g2", g.g2},
           {"g0", g0},               {"g_over_g0", p.g() / g0},    {"vacuum_shift", squeeze_vacuum_shift(p)}};
  }
  return out;
}

AxisSpec AxisSpec::linspace(std::string name, double lo, double hi, int points) {
  if (points < 2) throw InvalidArgument("linspace needs at least 2 points");
  if (!std::isfinite(lo) || !std::isfinite(hi)) throw InvalidArgument("axis range must be finite");
  AxisSpec a{std::move(name), {}};
  a.values.resize(std::size_t(points));
  for (int i = 0; i < points; ++i) {
    a.values[std::size_t(i)] = i == points - 1 ? hi : lo + (hi - lo) * double(i) / double(points - 1);
  }
  return a;
}

void SweepSpec::validate() const {
  if (axes.empty() || axes.size() > 2) throw InvalidArgument("a sweep needs one or two axes");
  std::set<std::string> seen;
  const auto& allowed = parameter_names(model);
  for (const auto& a : axes) {
    if (std::find(allowed.begin(), allowed.end(), a.name) == allowed.end()) {
      throw InvalidArgument("axis '" + a.name + "' is not a parameter of model " + std::string(model_name(model)));
    }
    if (!seen.insert(a.name).second) throw InvalidArgument("axes must be distinct");
    if (a.values.empty()) throw InvalidArgument("axis '" + a.name + "' has no points");
    for (double v : a.values) {
      if (!std::isfinite(v)) throw InvalidArgument("axis '" + a.name + "' has a non-finite value");
    }
    if (fixed.count(a.name)) throw InvalidArgument("'" + a.name + "' is both fixed and swept");
  }
  policy.validate();
  if (fixed_cutoff < 0) throw InvalidArgument("fixed cutoff must be >= 0");
  if (observables.patterns && model != ModelKind::Anisotropic) {
    throw InvalidArgument("pattern attribution is defined for the anisotropic model only");
  }
  if (!(fd.h > 0.0)) throw InvalidArgument("finite-difference step must be > 0");
  if (!(gap_floor > 0.0)) throw InvalidArgument("gap floor must be > 0");
}

std::size_t SweepSpec::point_count() const {
  std::size_t n = 1;
  for (const auto& a : axes) n *= a.values.size();
  return n;
}

namespace {

struct Sampled {
  std::vector<double> levels;
  std::vector<std::array<double, 3>> pattern_energy;
};

// Levels (and pattern energies relabeled to match `center`) at a shifted
// primary coordinate, solved at the same cutoff as the central point.
Sampled sample_shifted(const SweepSpec& spec, ParamMap params, double x, int cutoff,
                       const PatternDecomposition* center) {
  params[spec.axes[0].name] = x;
  const ModelPoint pt = resolve_point(spec.model, params, spec.convention, spec.ordering);
  const HilbertConfig cfg(cutoff);
  const SpectrumResult s = solve_at_cutoff(pt.builder(), cutoff, spec.policy.k_levels, spec.policy.parity_resolved);
  Sampled out;
  out.levels = s.eigenvalues;
  if (center) {
    const PatternDecomposition d = track_labels(*center, decompose(pattern_matrix(pt.anisotropic)));
    const auto ops = pattern_operators(d, cfg);
    const auto a = annihilation(cfg);
    for (int i = 0; i < s.levels(); ++i) out.pattern_energy.push_back(attribute(d, ops, a, s.state(i)).energy);
  }
  return out;
}

}  // namespace

PointResult evaluate_point(const SweepSpec& spec, const std::vector<double>& coordinates) {
  PointResult r;
  r.coordinates = coordinates;
  ParamMap params = spec.fixed;
  for (std::size_t a = 0; a < spec.axes.size(); ++a) params[spec.axes[a].name] = coordinates.at(a);
  try {
    r.point = resolve_point(spec.model, params, spec.convention, spec.ordering);
    const auto builder = r.point->builder();
    if (spec.fixed_cutoff > 0) {
      r.spectrum = solve_at_cutoff(builder, spec.fixed_cutoff, spec.policy.k_levels, spec.policy.parity_resolved);
    } else {
      CutoffPolicy policy = spec.policy;
      policy.energy_scale = r.point->energy_scale();
      r.spectrum = converge_cutoff(builder, policy);
    }
    const HilbertConfig cfg(r.spectrum.cutoff_used);
    r.photons = photon_numbers(r.spectrum, cfg);

    if (spec.observables.patterns) {
      r.patterns = decompose(pattern_matrix(r.point->anisotropic));
      r.identity_shift = identity_shift(r.patterns);
      const auto ops = pattern_operators(r.patterns, cfg);
      const auto a = annihilation(cfg);
      for (int i = 0; i < r.spectrum.levels(); ++i) {
        r.attribution.push_back(attribute(r.patterns, ops, a, r.spectrum.state(i)));
      }
    }

    if (spec.observables.d2) {
      const double x = coordinates.at(0);
      const PatternDecomposition* center = spec.observables.patterns ? &r.patterns : nullptr;
      auto stencil = [&](double h) {
        const Sampled lo = sample_shifted(spec, params, x - h, r.spectrum.cutoff_used, center);
        const Sampled hi = sample_shifted(spec, params, x + h, r.spectrum.cutoff_used, center);
        std::pair<std::vector<double>, std::vector<std::array<double, 3>>> d;
        for (int i = 0; i < r.spectrum.levels(); ++i) {
          d.first.push_back(second_difference(lo.levels[std::size_t(i)], r.spectrum.eigenvalues[std::size_t(i)],
                                              hi.levels[std::size_t(i)], h));
          if (center) {
            std::array<double, 3> e{};
            for (int n = 0; n < 3; ++n) {
              e[std::size_t(n)] = second_difference(lo.pattern_energy[std::size_t(i)][std::size_t(n)],
                                                    r.attribution[std::size_t(i)].energy[std::size_t(n)],
                                                    hi.pattern_energy[std::size_t(i)][std::size_t(n)], h);
            }
            d.second.push_back(e);
          }
        }
        return d;
      };
      auto coarse = stencil(spec.fd.h);
      if (spec.fd.richardson) {
        auto fine = stencil(0.5 * spec.fd.h);
        for (std::size_t i = 0; i < coarse.first.size(); ++i) {
          coarse.first[i] = (4.0 * fine.first[i] - coarse.first[i]) / 3.0;
        }
        for (std::size_t i = 0; i < coarse.second.size(); ++i) {
          for (std::size_t n = 0; n < 3; ++n) {
            coarse.second[i][n] = (4.0 * fine.second[i][n] - coarse.second[i][n]) / 3.0;
          }
        }
      }
      r.d2_levels = std::move(coarse.first);
      r.d2_pattern_energy = std::move(coarse.second);
    }
  } catch (const Error& e) {
    r.error = e.what();
    r.spectrum.converged = false;
  }
  r.spectrum.eigenvectors.resize(0, 0);
  return r;
}

std::vector<PointResult> run_sweep(const SweepSpec& spec, int threads) {
  spec.validate();
  const std::size_t n0 = spec.axes[0].values.size();
  const std::size_t n1 = spec.axes.size() > 1 ? spec.axes[1].values.size() : 1;
  std::vector<PointResult> results(n0 * n1);

  auto coordinates = [&](std::size_t index) {
    std::vector<double> c{spec.axes[0].values[index / n1]};
    if (spec.axes.size() > 1) c.push_back(spec.axes[1].values[index % n1]);
    return c;
  };

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < results.size(); i = next++) results[i] = evaluate_point(spec, coordinates(i));
  };
  const int workers = std::clamp(threads, 1, static_cast<int>(results.size()));
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < workers; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  if (spec.observables.patterns) {
    for (std::size_t i1 = 0; i1 < n1; ++i1) {
      const PatternDecomposition* prev = nullptr;
      for (std::size_t i0 = 0; i0 < n0; ++i0) {
        PointResult& r = results[i0 * n1 + i1];
        if (!r.ok()) continue;
        if (prev) {
          PatternDecomposition tracked = track_labels(*prev, r.patterns);
          const auto perm = tracked.labeling.source_index;
          for (auto& att : r.attribution) {
            const auto e = att.energy;
            const auto n = att.photons;
            for (std::size_t k = 0; k < 3; ++k) {
              att.energy[k] = e[std::size_t(perm[k])];
              att.photons[k] = n[std::size_t(perm[k])];
            }
          }
          for (auto& d : r.d2_pattern_energy) {
            const auto old = d;
            for (std::size_t k = 0; k < 3; ++k) d[k] = old[std::size_t(perm[k])];
          }
          r.patterns = std::move(tracked);
        }
        prev = &r.patterns;
      }
    }
  }
  return results;
}

Table point_table(const SweepSpec& spec, const std::vector<PointResult>& results) {
  const int k = level_count(spec);
  Table t;
  t.header.push_back("model");
  for (const auto& name : context_names(spec.model)) t.header.push_back(name);
  for (const char* h : {"cutoff_used", "converged", "convergence_residual"}) t.header.push_back(h);
  for (int i = 0; i < k; ++i) t.header.push_back("E_" + std::to_string(i));
  for (int i = 0; i < k; ++i) t.header.push_back("n_" + std::to_string(i));
  for (int i = 0; i < k; ++i) t.header.push_back("parity_" + std::to_string(i));
  t.header.push_back("gap");
  t.header.push_back("log10_gap");
  if (spec.observables.d2) {
    for (int i = 0; i < k; ++i) t.header.push_back("d2_E_" + std::to_string(i));
  }
  t.header.push_back("status");

  for (const auto& r : results) {
    std::vector<Cell> row{std::string(model_name(spec.model))};
    for (double v : context_values(spec, r)) row.emplace_back(v);
    const auto& s = r.spectrum;
    row.emplace_back(r.ok() ? double(s.cutoff_used) : kNaN);
    row.emplace_back(r.converged() ? 1.0 : 0.0);
    row.emplace_back(r.ok() ? s.convergence_residual : kNaN);
    for (int i = 0; i < k; ++i) row.emplace_back(at_or(s.eigenvalues, std::size_t(i), kNaN));
    for (int i = 0; i < k; ++i) row.emplace_back(at_or(r.photons, std::size_t(i), kNaN));
    for (int i = 0; i < k; ++i) row.emplace_back(double(at_or(s.parities, std::size_t(i), 0)));
    const double gap = s.levels() > 1 ? s.gap() : kNaN;
    row.emplace_back(gap);
    row.emplace_back(std::isnan(gap) ? kNaN : std::log10(std::max(gap, spec.gap_floor)));
    if (spec.observables.d2) {
      for (int i = 0; i < k; ++i) row.emplace_back(at_or(r.d2_levels, std::size_t(i), kNaN));
    }
    row.emplace_back(r.ok() ? std::string(r.converged() ? "ok" : "unconverged") : "error: " + sanitize(r.error));
    t.add_row(std::move(row));
  }
  return t;
}

Table level_table(const SweepSpec& spec, const std::vector<PointResult>& results) {
  const int k = level_count(spec);
  const bool pat = spec.observables.patterns;
  const bool d2 = spec.observables.d2;
  Table t;
  t.header.push_back("model");
  for (const auto& name : context_names(spec.model)) t.header.push_back(name);
  for (const char* h : {"cutoff_used", "converged", "convergence_residual", "level", "energy", "photons", "parity",
                        "gap"}) {
    t.header.push_back(h);
  }
  if (pat) {
    t.header.push_back("identity_shift");
    for (int n = 1; n <= 3; ++n) t.header.push_back("lambda_" + std::to_string(n));
    for (int n = 1; n <= 3; ++n) {
      for (int j = 1; j <= 3; ++j) t.header.push_back("u_" + std::to_string(n) + "_" + std::to_string(j));
    }
    for (int n = 1; n <= 3; ++n) t.header.push_back("label_source_" + std::to_string(n));
    t.header.push_back("label_ambiguous");
    t.header.push_back("label_overlap");
    for (int n = 1; n <= 3; ++n) t.header.push_back("E_lambda_" + std::to_string(n));
    t.header.push_back("E_lambda_sum");
    t.header.push_back("energy_plus_shift");
    for (int n = 1; n <= 3; ++n) t.header.push_back("n_lambda_" + std::to_string(n));
    t.header.push_back("n_lambda_sum");
  }
  if (d2) {
    t.header.push_back("d2_energy");
    if (pat) {
      for (int n = 1; n <= 3; ++n) t.header.push_back("d2_E_lambda_" + std::to_string(n));
    }
  }
  t.header.push_back("status");

  for (const auto& r : results) {
    const auto ctx = context_values(spec, r);
    const auto& s = r.spectrum;
    for (int i = 0; i < k; ++i) {
      const std::size_t li = std::size_t(i);
      std::vector<Cell> row{std::string(model_name(spec.model))};
      for (double v : ctx) row.emplace_back(v);
      row.emplace_back(r.ok() ? double(s.cutoff_used) : kNaN);
      row.emplace_back(r.converged() ? 1.0 : 0.0);
      row.emplace_back(r.ok() ? s.convergence_residual : kNaN);
      row.emplace_back(double(i));
      row.emplace_back(at_or(s.eigenvalues, li, kNaN));
      row.emplace_back(at_or(r.photons, li, kNaN));
      row.emplace_back(double(at_or(s.parities, li, 0)));
      row.emplace_back(s.levels() > 1 ? s.gap() : kNaN);
      if (pat) {
        const bool have = r.ok() && li < r.attribution.size();
        const auto& d = r.patterns;
        row.emplace_back(r.ok() ? r.identity_shift : kNaN);
        for (int n = 0; n < 3; ++n) row.emplace_back(r.ok() ? d.lambda(n) : kNaN);
        for (int n = 0; n < 3; ++n) {
          for (int j = 0; j < 3; ++j) row.emplace_back(r.ok() ? d.vectors(j, n) : kNaN);
        }
        for (int n = 0; n < 3; ++n) row.emplace_back(r.ok() ? double(d.labeling.source_index[std::size_t(n)]) : kNaN);
        row.emplace_back(r.ok() ? (d.labeling.ambiguous ? 1.0 : 0.0) : kNaN);
        row.emplace_back(r.ok() ? d.labeling.overlap_score : kNaN);
        const PatternAttribution att = have ? r.attribution[li] : PatternAttribution{};
        for (int n = 0; n < 3; ++n) row.emplace_back(have ? att.energy[std::size_t(n)] : kNaN);
        row.emplace_back(have ? att.energy_sum() : kNaN);
        row.emplace_back(have ? s.eigenvalues[li] + r.identity_shift : kNaN);
        for (int n = 0; n < 3; ++n) row.emplace_back(have ? att.photons[std::size_t(n)] : kNaN);
        row.emplace_back(have ? att.photon_sum() : kNaN);
      }
      if (d2) {
        row.emplace_back(at_or(r.d2_levels, li, kNaN));
        if (pat) {
          const bool have = li < r.d2_pattern_energy.size();
          for (int n = 0; n < 3; ++n) row.emplace_back(have ? r.d2_pattern_energy[li][std::size_t(n)] : kNaN);
        }
      }
      row.emplace_back(r.ok() ? std::string(r.converged() ? "ok" : "unconverged") : "error: " + sanitize(r.error));
      t.add_row(std::move(row));
    }
  }
  return t;
}

}  // namespace rabipat
