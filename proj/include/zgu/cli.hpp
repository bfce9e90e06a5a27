#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace zgu {

struct RunConfig {
  enum class Mode { Validate, CheckOrder, CheckAll, Spectrum, PrimeGraph, Examples };
  enum class Format { Text, Structured };

  std::string group_path;
  Mode mode = Mode::Validate;
  long order = 0;                        // CheckOrder only
  std::vector<std::string> characters;   // empty = all
  Format format = Format::Text;
  int verbosity = 0;
  std::string example_name;              // Examples only
};

/// Runs one command against one group file. Exit code 0: every requested
/// verdict is Positive / the input is valid; 1: Inconclusive or Critical
/// results present; 2: input or validation error (diagnostic on `err`).
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace zgu
