#pragma once

// Command-line front end. Each command reads one JSON config, validates it
// strictly (unknown keys are errors), runs, and writes a single CSV file.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include "rabipat/csv.hpp"
#include "rabipat/errors.hpp"

namespace rabipat::cli {

inline constexpr std::string_view kVersion = "1.0.0";

enum ExitCode : int {
  kExitOk = 0,
  kExitConfig = 2,
  kExitNumerical = 3,
  kExitInternal = 4,
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

// Raised by a command whose output is complete but flags unconverged or
// failed points; the table is still written.
class PartialResult : public Error {
 public:
  PartialResult(std::string what, Table table) : Error(std::move(what)), table(std::move(table)) {}
  Table table;
};

struct Invocation {
  std::string command;
  std::string config_text;
  int threads = 1;
  std::uint64_t seed = 0;
};

std::string usage();

// Runs a command and returns its table. Throws ConfigError for schema or
// parameter problems, PartialResult for flagged numerical failures and
// InternalInvariant when validate finds a broken invariant.
Table run_command(const Invocation& inv, std::ostream& report);

class InternalInvariant : public Error {
 public:
  InternalInvariant(std::string what, Table table) : Error(std::move(what)), table(std::move(table)) {}
  Table table;
};

// Full front end: parses argv, runs, writes the CSV, maps errors to exit
// codes. Nothing is written to --out unless a table was produced.
int main_entry(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace rabipat::cli
