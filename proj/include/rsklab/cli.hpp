#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "rsklab/search.hpp"

namespace rsklab::cli {

enum ExitCode : int {
  kOk = 0,                  ///< completed, conjecture findings included
  kUsage = 1,               ///< bad arguments or unparsable input
  kOracleDisagreement = 2,  ///< independent routes disagree: a harness bug
  kCapRefused = 3,          ///< input outside the configured size caps
};

enum class OutputFormat { kJsonl, kCsv, kText };

struct RunConfig {
  std::string command;
  std::string input;  ///< matrix or partition text
  SearchCaps caps;
  int jobs = 1;
  OutputFormat format = OutputFormat::kJsonl;
  std::optional<std::string> out_path;
};

/// Name of the environment variable that overrides the default weight cap.
inline constexpr const char* kMaxWeightEnv = "RSKLAB_MAX_WEIGHT";

/// Runs the command line `args` (without the program name) and returns the
/// process exit code. Normal output goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rsklab::cli
