#pragma once

// Parameter sweeps over the model builders: one or two axes, any of the named
// parameters, points solved independently (optionally on worker threads) and
// pattern labels tracked afterwards in axis order.

#include <array>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rabipat/csv.hpp"
#include "rabipat/models.hpp"
#include "rabipat/patterns.hpp"
#include "rabipat/phases.hpp"
#include "rabipat/spectra.hpp"

namespace rabipat {

enum class ModelKind { Anisotropic, ParametricJC, SqueezedFrame, Dispersive };

std::string_view model_name(ModelKind m);
// Throws InvalidArgument for unknown names.
ModelKind parse_model(std::string_view name);

// Named physical parameters. Anisotropic models accept
//   omega0, Omega, xi1 | xi1_over_xi1c, xi2 | k | k_over_kc
// and the parametric family accepts
//   delta_c, delta_q | delta_q_over_omega_eff, g | g_over_g0, r | eta
// with exactly one key from each group.
using ParamMap = std::map<std::string, double>;

const std::vector<std::string>& parameter_names(ModelKind m);

struct ModelPoint {
  ModelKind kind = ModelKind::Anisotropic;
  AnisotropicRabiParams anisotropic;
  std::optional<ParametricJCParams> jc;
  CouplingConvention convention = CouplingConvention::Resolved;
  DispersiveOrdering ordering = DispersiveOrdering::LowerRaise;

  HamiltonianBuilder builder() const;
  double energy_scale() const;
  EffectiveCouplings effective() const;
  // Every derived parameter, in a fixed order per model kind.
  std::vector<std::pair<std::string, double>> context() const;
};

ModelPoint resolve_point(ModelKind kind, const ParamMap& params,
                         CouplingConvention convention = CouplingConvention::Resolved,
                         DispersiveOrdering ordering = DispersiveOrdering::LowerRaise);

struct AxisSpec {
  std::string name;
  std::vector<double> values;

  static AxisSpec linspace(std::string name, double lo, double hi, int points);
};

struct Observables {
  bool patterns = false;  // anisotropic model only
  bool d2 = false;        // second derivatives along the primary axis
};

struct SweepSpec {
  ModelKind model = ModelKind::Anisotropic;
  ParamMap fixed;
  std::vector<AxisSpec> axes;  // axes[0] is the primary axis
  Observables observables;
  CutoffPolicy policy;
  int fixed_cutoff = 0;  // > 0 bypasses the convergence controller
  SecondDerivativeOptions fd;
  double gap_floor = 1e-16;
  CouplingConvention convention = CouplingConvention::Resolved;
  DispersiveOrdering ordering = DispersiveOrdering::LowerRaise;

  void validate() const;
  std::size_t point_count() const;
};

struct PointResult {
  std::vector<double> coordinates;  // one per axis
  std::optional<ModelPoint> point;
  std::string error;  // nonempty when the point could not be evaluated

  SpectrumResult spectrum;  // eigenvectors are dropped after evaluation
  std::vector<double> photons;

  PatternDecomposition patterns;  // labels tracked along the primary axis
  double identity_shift = 0.0;
  std::vector<PatternAttribution> attribution;  // per level

  std::vector<double> d2_levels;
  std::vector<std::array<double, 3>> d2_pattern_energy;  // per level

  bool ok() const { return error.empty(); }
  bool converged() const { return ok() && spectrum.converged; }
};

// Deterministic: rows are ordered lexicographically in the axis indices
// (primary axis outermost) and do not depend on the thread count.
std::vector<PointResult> run_sweep(const SweepSpec& spec, int threads = 1);

// Evaluates one grid point exactly as run_sweep does (without the label pass).
PointResult evaluate_point(const SweepSpec& spec, const std::vector<double>& coordinates);

// One row per grid point: context, convergence data, levels, gap, photons.
Table point_table(const SweepSpec& spec, const std::vector<PointResult>& results);
// One row per grid point and level, with pattern columns when requested.
Table level_table(const SweepSpec& spec, const std::vector<PointResult>& results);

}  // namespace rabipat
