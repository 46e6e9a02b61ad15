#include "commands.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>

#include <CLI11.hpp>

#include "rabipat/errata.hpp"
#include "rabipat/phases.hpp"
#include "rabipat/sweep.hpp"

namespace rabipat::cli {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

ModelKind read_model(const ObjectReader& r, const std::string& fallback) {
  const std::string name = fallback.empty() ? r.string("model") : r.string("model", fallback);
  try {
    return parse_model(name);
  } catch (const InvalidArgument& e) {
    throw ConfigError(r.path("model") + ": " + e.what());
  }
}

std::vector<AxisSpec> read_axes(const ObjectReader& r) {
  const Json& j = r.raw("axes");
  if (!j.is_array() || j.empty() || j.size() > 2) throw ConfigError(r.path("axes") + " must hold one or two axes");
  std::vector<AxisSpec> axes;
  for (std::size_t i = 0; i < j.size(); ++i) axes.push_back(read_axis(j[i], r.path("axes") + "[" + std::to_string(i) + "]"));
  return axes;
}

// Resolves the first grid point so schema problems surface as config errors
// instead of a table full of failed rows.
void precheck(const SweepSpec& spec) {
  try {
    spec.validate();
    ParamMap params = spec.fixed;
    for (const auto& a : spec.axes) params[a.name] = a.values.front();
    resolve_point(spec.model, params, spec.convention, spec.ordering);
  } catch (const InvalidArgument& e) {
    throw ConfigError(e.what());
  }
}

Table finish_sweep(Table t, const std::vector<PointResult>& results) {
  std::size_t bad = 0;
  for (const auto& r : results) bad += r.converged() ? 0 : 1;
  if (bad) {
    throw PartialResult(std::to_string(bad) + " of " + std::to_string(results.size()) +
                            " points failed or did not converge",
                        std::move(t));
  }
  return t;
}

int read_levels(const ObjectReader& r, int fallback) {
  const int k = r.integer("levels", fallback);
  if (k < 1) throw ConfigError(r.path("levels") + " must be >= 1");
  return k;
}

}  // namespace

void add_preamble(Table& t, const std::string& command, const Json& config, const std::string& model) {
  std::vector<std::string> c = {"rabipat " + std::string(kVersion), "command: " + command,
                                "config_hash: " + config_hash(config)};
  for (const auto& e : errata_for(command, model)) c.push_back(format_erratum(e));
  t.comments.insert(t.comments.begin(), c.begin(), c.end());
}

Table cmd_spectrum(const Json& config, const Invocation&) {
  const ObjectReader r(config, "config");
  SweepSpec spec;
  spec.model = read_model(r, "");
  spec.fixed = read_params(r, "params");
  const int k = read_levels(r, 4);
  spec.policy = read_cutoff(r, k, &spec.fixed_cutoff);
  spec.convention = read_convention(r);
  spec.ordering = read_ordering(r);
  r.finish();
  try {
    spec.policy.validate();
    resolve_point(spec.model, spec.fixed, spec.convention, spec.ordering);
  } catch (const InvalidArgument& e) {
    throw ConfigError(e.what());
  }
  std::vector<PointResult> results{evaluate_point(spec, {})};
  Table t = level_table(spec, results);
  add_preamble(t, "spectrum", config, std::string(model_name(spec.model)));
  return finish_sweep(std::move(t), results);
}

Table cmd_patterns(const Json& config, const Invocation& inv) {
  const ObjectReader r(config, "config");
  SweepSpec spec;
  spec.model = read_model(r, "anisotropic");
  if (spec.model != ModelKind::Anisotropic) throw ConfigError("patterns requires model \"anisotropic\"");
  spec.fixed = read_params(r, "params");
  spec.axes = read_axes(r);
  const int k = read_levels(r, 4);
  spec.policy = read_cutoff(r, k, &spec.fixed_cutoff);
  spec.fd = read_fd(r, &spec.observables.d2);
  spec.observables.patterns = true;
  r.finish();
  precheck(spec);
  const auto results = run_sweep(spec, inv.threads);
  Table t = level_table(spec, results);
  add_preamble(t, "patterns", config, "anisotropic");
  return finish_sweep(std::move(t), results);
}

Table cmd_phase_diagram(const Json& config, const Invocation& inv) {
  const ObjectReader r(config, "config");
  SweepSpec spec;
  spec.model = read_model(r, "squeezed-frame");
  spec.fixed = read_params(r, "params");
  spec.axes = read_axes(r);
  const int k = read_levels(r, 2);
  if (k < 2) throw ConfigError("phase-diagram needs levels >= 2 for the gap");
  spec.policy = read_cutoff(r, k, &spec.fixed_cutoff);
  spec.gap_floor = r.number("gap_floor", spec.gap_floor);
  spec.convention = read_convention(r);
  spec.ordering = read_ordering(r);
  r.finish();
  precheck(spec);
  const auto results = run_sweep(spec, inv.threads);
  Table t = point_table(spec, results);
  add_preamble(t, "phase-diagram", config, std::string(model_name(spec.model)));
  return finish_sweep(std::move(t), results);
}

Table cmd_analytic(const Json& config, const Invocation&) {
  const ObjectReader r(config, "config");
  const ModelKind model = read_model(r, "squeezed-frame");
  ParamMap params = read_params(r, "params");
  const AxisSpec axis = read_axis(r.raw("coupling"), r.path("coupling"), "coupling");
  bool d2 = true;
  PhaseOptions opts;
  opts.fd = read_fd(r, &d2);
  opts.with_second_derivative = d2 || !r.has("second_derivative");
  r.finish();

  const std::string key = model == ModelKind::Anisotropic ? "xi1_over_xi1c" : "g_over_g0";
  for (const char* banned : {"xi1", "xi1_over_xi1c", "xi2", "k_over_kc", "g", "g_over_g0"}) {
    if (params.count(banned)) {
      throw ConfigError(std::string("params.") + banned + " is set by the coupling axis of analytic");
    }
  }
  for (double x : axis.values) {
    if (!(x >= 0.0)) throw ConfigError("coupling values must be >= 0");
  }
  EffectiveCouplings direction;
  try {
    ParamMap at_one = params;
    at_one[key] = 1.0;
    direction = resolve_point(model, at_one).effective();
  } catch (const InvalidArgument& e) {
    throw ConfigError(e.what());
  }

  Table t;
  const ModelPoint sample = resolve_point(model, [&] {
    ParamMap p = params;
    p[key] = axis.values.front();
    return p;
  }());
  t.header.push_back("model");
  for (const auto& kv : sample.context()) t.header.push_back(kv.first);
  for (const char* h : {"coupling", "regime", "eps_np", "eps_sp", "E_G", "E_G_offset_subtracted", "E_G_lab", "d2E_G",
                        "N_c", "alpha0", "r_np", "r_sp", "spin_up", "spin_down"}) {
    t.header.push_back(h);
  }
  for (double x : axis.values) {
    ParamMap p = params;
    p[key] = x;
    const ModelPoint pt = resolve_point(model, p);
    const PhasePoint ph = phase_point(direction, x, opts);
    std::vector<Cell> row{std::string(model_name(model))};
    double shift = 0.0;
    for (const auto& kv : pt.context()) {
      row.emplace_back(kv.second);
      if (kv.first == "vacuum_shift") shift = kv.second;
    }
    for (double v : {ph.coupling}) row.emplace_back(v);
    row.emplace_back(std::string(regime_name(ph.regime)));
    for (double v : {ph.eps_np, ph.eps_sp, ph.E_G, ph.E_G_offset_subtracted, ph.E_G + shift, ph.d2E_G, ph.N_c,
                     ph.alpha0, ph.r_np, ph.r_sp, ph.spin_up, ph.spin_down}) {
      row.emplace_back(v);
    }
    t.add_row(std::move(row));
  }
  add_preamble(t, "analytic", config, std::string(model_name(model)));
  return t;
}

std::string usage() {
  return "usage: rabipat <spectrum|patterns|phase-diagram|analytic|validate> --config <file.json> "
         "--out <file.csv> [--threads N] [--seed S]\n"
         "  --threads defaults to $RABIPAT_THREADS, then 1\n"
         "  exit codes: 0 ok, 2 config error, 3 numerical/convergence failure, 4 invariant violation\n";
}

Table run_command(const Invocation& inv, std::ostream& report) {
  bool blank = true;
  for (char c : inv.config_text) blank = blank && std::isspace(static_cast<unsigned char>(c));
  if (blank) throw ConfigError("empty config");
  const Json config = parse_config(inv.config_text);
  if (!config.is_object()) throw ConfigError("config must be a JSON object");
  if (config.empty()) throw ConfigError("empty config");
  try {
    if (inv.command == "spectrum") return cmd_spectrum(config, inv);
    if (inv.command == "patterns") return cmd_patterns(config, inv);
    if (inv.command == "phase-diagram") return cmd_phase_diagram(config, inv);
    if (inv.command == "analytic") return cmd_analytic(config, inv);
    if (inv.command == "validate") return cmd_validate(config, inv, report);
  } catch (const InvalidArgument& e) {
    throw ConfigError(e.what());
  }
  throw ConfigError("unknown command '" + inv.command + "'");
}

namespace {

bool write_file(const std::string& path, const Table& t, std::ostream& err) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) {
      err << "error: cannot open " << tmp << " for writing\n";
      return false;
    }
    write_csv(t, f);
    if (!f.flush()) {
      err << "error: failed writing " << tmp << "\n";
      return false;
    }
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0) {
    err << "error: cannot move output into place at " << path << "\n";
    return false;
  }
  return true;
}

}  // namespace

int main_entry(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"rabipat: anisotropic Rabi model spectra, patterns and phase diagnostics"};
  std::string command;
  std::string config_path;
  std::string out_path;
  int threads = 0;
  std::uint64_t seed = 0;
  app.add_option("command", command, "spectrum | patterns | phase-diagram | analytic | validate")
      ->required()
      ->check(CLI::IsMember({"spectrum", "patterns", "phase-diagram", "analytic", "validate"}));
  app.add_option("--config", config_path, "JSON config file")->required();
  app.add_option("--out", out_path, "CSV output file");
  app.add_option("--threads", threads, "worker threads (default $RABIPAT_THREADS or 1)")->check(CLI::PositiveNumber);
  app.add_option("--seed", seed, "seed for randomized validation draws");
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << usage();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << usage();
    return kExitConfig;
  }

  if (threads == 0) {
    threads = 1;
    if (const char* env = std::getenv("RABIPAT_THREADS")) {
      char* end = nullptr;
      const long v = std::strtol(env, &end, 10);
      if (end == env || *end != '\0' || v < 1 || v > 4096) {
        err << "error: RABIPAT_THREADS must be a positive integer\n";
        return kExitConfig;
      }
      threads = static_cast<int>(v);
    }
  }
  if (out_path.empty() && command != "validate") {
    err << "error: --out is required for " << command << "\n" << usage();
    return kExitConfig;
  }

  Invocation inv;
  inv.command = command;
  inv.threads = threads;
  inv.seed = seed;
  {
    std::ifstream f(config_path, std::ios::binary);
    if (!f) {
      err << "error: cannot read config " << config_path << "\n";
      return kExitConfig;
    }
    std::ostringstream ss;
    ss << f.rdbuf();
    inv.config_text = ss.str();
  }

  auto emit = [&](const Table& t) { return out_path.empty() || write_file(out_path, t, err); };
  try {
    const Table t = run_command(inv, out);
    return emit(t) ? kExitOk : kExitInternal;
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << "\n";
    if (std::string(e.what()) == "empty config") err << usage();
    return kExitConfig;
  } catch (const PartialResult& e) {
    err << "numerical failure: " << e.what() << "\n";
    emit(e.table);
    return kExitNumerical;
  } catch (const InternalInvariant& e) {
    err << "invariant violation: " << e.what() << "\n";
    emit(e.table);
    return kExitInternal;
  } catch (const NumericalFailure& e) {
    err << "numerical failure: " << e.what() << "\n";
    return kExitNumerical;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}

}  // namespace rabipat::cli
