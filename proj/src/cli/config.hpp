#pragma once

// Strict JSON access: every key read is recorded and finish() rejects the
// rest, so a misspelt option is an error rather than a silent default.

#include <optional>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "rabipat/cli.hpp"
#include "rabipat/spectra.hpp"
#include "rabipat/sweep.hpp"

namespace rabipat::cli {

using Json = nlohmann::json;

// Throws ConfigError for unparsable text.
Json parse_config(const std::string& text);

// Hash of the canonical (key-sorted, compact) serialization.
std::string config_hash(const Json& j);

class ObjectReader {
 public:
  ObjectReader(const Json& j, std::string path);

  bool has(const std::string& key) const;
  double number(const std::string& key) const;
  double number(const std::string& key, double fallback) const;
  int integer(const std::string& key, int fallback) const;
  bool boolean(const std::string& key, bool fallback) const;
  std::string string(const std::string& key) const;
  std::string string(const std::string& key, const std::string& fallback) const;
  const Json& raw(const std::string& key) const;
  ObjectReader object(const std::string& key) const;
  std::string path(const std::string& key) const { return path_ + "." + key; }

  // Throws ConfigError naming the first key never read.
  void finish() const;

 private:
  const Json& get(const std::string& key) const;

  const Json& j_;
  std::string path_;
  mutable std::set<std::string> used_;
};

ParamMap read_params(const ObjectReader& parent, const std::string& key);
CutoffPolicy read_cutoff(const ObjectReader& parent, int k_levels, int* fixed_cutoff);
AxisSpec read_axis(const Json& j, const std::string& path, const std::string& forced_name = {});
SecondDerivativeOptions read_fd(const ObjectReader& r, bool* enabled);
CouplingConvention read_convention(const ObjectReader& r);
DispersiveOrdering read_ordering(const ObjectReader& r);

}  // namespace rabipat::cli
