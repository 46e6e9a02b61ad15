#pragma once

// Machine-readable list of places where a printed formula of the source model
// disagrees with what is implemented, and why the implemented form was chosen.

#include <string>
#include <string_view>
#include <vector>

namespace rabipat {

struct Erratum {
  std::string id;
  std::string topic;
  std::string printed;
  std::string implemented;
  std::string evidence;
};

const std::vector<Erratum>& errata();

// Throws InvalidArgument for unknown ids.
const Erratum& erratum(std::string_view id);

// Entries relevant to a CLI command ("spectrum", "patterns", ...) for the
// given model ("anisotropic", "parametric-jc", ...; may be empty).
std::vector<Erratum> errata_for(std::string_view command, std::string_view model = {});

// Single-line rendering used in CSV comment blocks.
std::string format_erratum(const Erratum& e);

}  // namespace rabipat
