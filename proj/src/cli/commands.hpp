#pragma once

#include <iosfwd>
#include <string>

#include "config.hpp"
#include "rabipat/csv.hpp"

namespace rabipat::cli {

// '#' block shared by every command: tool version, config hash, errata.
void add_preamble(Table& t, const std::string& command, const Json& config, const std::string& model);

Table cmd_spectrum(const Json& config, const Invocation& inv);
Table cmd_patterns(const Json& config, const Invocation& inv);
Table cmd_phase_diagram(const Json& config, const Invocation& inv);
Table cmd_analytic(const Json& config, const Invocation& inv);
Table cmd_validate(const Json& config, const Invocation& inv, std::ostream& report);

}  // namespace rabipat::cli
