#include "config.hpp"

#include <cmath>
#include <limits>

namespace rabipat::cli {

Json parse_config(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
}

std::string config_hash(const Json& j) { return "fnv1a64:" + hex64(fnv1a64(j.dump())); }

ObjectReader::ObjectReader(const Json& j, std::string path) : j_(j), path_(std::move(path)) {
  if (!j_.is_object()) throw ConfigError(path_ + " must be a JSON object");
}

bool ObjectReader::has(const std::string& key) const { return j_.contains(key); }

const Json& ObjectReader::get(const std::string& key) const {
  if (!j_.contains(key)) throw ConfigError("missing required key " + path(key));
  used_.insert(key);
  return j_.at(key);
}

double ObjectReader::number(const std::string& key) const {
  const Json& v = get(key);
  if (!v.is_number()) throw ConfigError(path(key) + " must be a number");
  const double d = v.get<double>();
  if (!std::isfinite(d)) throw ConfigError(path(key) + " must be finite");
  return d;
}

double ObjectReader::number(const std::string& key, double fallback) const {
  return has(key) ? number(key) : fallback;
}

int ObjectReader::integer(const std::string& key, int fallback) const {
  if (!has(key)) return fallback;
  const Json& v = get(key);
  if (!v.is_number_integer()) throw ConfigError(path(key) + " must be an integer");
  const auto i = v.get<long long>();
  if (i < std::numeric_limits<int>::min() || i > std::numeric_limits<int>::max()) {
    throw ConfigError(path(key) + " is out of range");
  }
  return static_cast<int>(i);
}

bool ObjectReader::boolean(const std::string& key, bool fallback) const {
  if (!has(key)) return fallback;
  const Json& v = get(key);
  if (!v.is_boolean()) throw ConfigError(path(key) + " must be true or false");
  return v.get<bool>();
}

std::string ObjectReader::string(const std::string& key) const {
  const Json& v = get(key);
  if (!v.is_string()) throw ConfigError(path(key) + " must be a string");
  return v.get<std::string>();
}

std::string ObjectReader::string(const std::string& key, const std::string& fallback) const {
  return has(key) ? string(key) : fallback;
}

const Json& ObjectReader::raw(const std::string& key) const { return get(key); }

ObjectReader ObjectReader::object(const std::string& key) const { return ObjectReader(get(key), path(key)); }

void ObjectReader::finish() const {
  for (auto it = j_.begin(); it != j_.end(); ++it) {
    if (!used_.count(it.key())) throw ConfigError("unknown key " + path(it.key()));
  }
}

ParamMap read_params(const ObjectReader& parent, const std::string& key) {
  const ObjectReader r = parent.object(key);
  ParamMap out;
  const Json& j = parent.raw(key);
  for (auto it = j.begin(); it != j.end(); ++it) out[it.key()] = r.number(it.key());
  r.finish();
  return out;
}

CutoffPolicy read_cutoff(const ObjectReader& parent, int k_levels, int* fixed_cutoff) {
  CutoffPolicy p;
  p.k_levels = k_levels;
  *fixed_cutoff = 0;
  if (!parent.has("cutoff")) return p;
  const ObjectReader r = parent.object("cutoff");
  p.tol_E = r.number("tol_E", p.tol_E);
  p.tol_n = r.number("tol_n", p.tol_n);
  p.n_start = r.integer("n_start", p.n_start);
  p.n_max = r.integer("n_max", p.n_max);
  p.levels_checked = r.integer("levels_checked", p.levels_checked);
  p.parity_resolved = r.boolean("parity_resolved", p.parity_resolved);
  *fixed_cutoff = r.integer("fixed", 0);
  r.finish();
  if (*fixed_cutoff < 0) throw ConfigError(r.path("fixed") + " must be >= 0");
  return p;
}

AxisSpec read_axis(const Json& j, const std::string& path, const std::string& forced_name) {
  const ObjectReader r(j, path);
  std::string name = forced_name;
  if (forced_name.empty()) name = r.string("name");
  AxisSpec a;
  if (r.has("values")) {
    if (r.has("start") || r.has("stop") || r.has("points")) {
      throw ConfigError(path + " takes either values or start/stop/points");
    }
    const Json& v = r.raw("values");
    if (!v.is_array() || v.empty()) throw ConfigError(path + ".values must be a nonempty array");
    a.name = name;
    for (const auto& x : v) {
      if (!x.is_number() || !std::isfinite(x.get<double>())) {
        throw ConfigError(path + ".values must contain finite numbers");
      }
      a.values.push_back(x.get<double>());
    }
  } else {
    const double lo = r.number("start");
    const double hi = r.number("stop");
    const int n = r.integer("points", 0);
    if (n < 2) throw ConfigError(path + ".points must be >= 2");
    a = AxisSpec::linspace(name, lo, hi, n);
  }
  r.finish();
  return a;
}

SecondDerivativeOptions read_fd(const ObjectReader& parent, bool* enabled) {
  SecondDerivativeOptions fd;
  *enabled = false;
  if (!parent.has("second_derivative")) return fd;
  const ObjectReader r = parent.object("second_derivative");
  *enabled = r.boolean("enabled", true);
  fd.h = r.number("h", fd.h);
  fd.richardson = r.boolean("richardson", fd.richardson);
  r.finish();
  if (!(fd.h > 0.0)) throw ConfigError(r.path("h") + " must be > 0");
  return fd;
}

CouplingConvention read_convention(const ObjectReader& r) {
  const std::string s = r.string("convention", "resolved");
  if (s == "resolved") return CouplingConvention::Resolved;
  if (s == "double-angle") return CouplingConvention::DoubleAngle;
  throw ConfigError(r.path("convention") + " must be \"resolved\" or \"double-angle\"");
}

DispersiveOrdering read_ordering(const ObjectReader& r) {
  const std::string s = r.string("ordering", "lower-raise");
  if (s == "lower-raise") return DispersiveOrdering::LowerRaise;
  if (s == "raise-lower") return DispersiveOrdering::RaiseLower;
  throw ConfigError(r.path("ordering") + " must be \"lower-raise\" or \"raise-lower\"");
}

}  // namespace rabipat::cli
