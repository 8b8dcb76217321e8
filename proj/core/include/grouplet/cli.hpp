#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include "grouplet/sampling.hpp"

namespace grouplet {

/// Parsed command line for the grouplet tool. Exactly one command per run;
/// referenced files are checked for existence before any work starts.
struct RunConfig {
  enum class Command { Check, Radical, Embed, Extract, Sweep, Selftest };
  enum class Format { Text, Json };

  Command command = Command::Check;
  std::string group_spec;       // C<n>, D<m>, S<m>, Q8, products, or @file.json
  std::string field_spec;       // Q or F<p>
  std::string element_literal;  // embed input, e.g. "1,2,3"
  std::string matrix_path;      // extract input
  std::string out_path;         // empty = standard output
  Format format = Format::Text;
  std::uint64_t seed = kDefaultSeed;
};

/// Executes one command, writing the report to `out` (or the configured
/// --out file) and diagnostics to `err`. Exit codes: 0 success, 1 domain
/// or validation error, 2 internal certificate violation.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace grouplet
