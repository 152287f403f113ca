#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hanoigram::cli {

/// Exit statuses of the command-line tool.
enum ExitCode : int {
  kSuccess = 0,
  /// Verification failed or engines disagreed.
  kSemanticFailure = 1,
  kUsage = 2,
  /// Step limit or size cap hit inside an engine.
  kEngineFailure = 3,
};

/// Runs `hanoigram <subcommand> ...`. `args` excludes the program name.
/// stdin ("-") for `verify` is read from `in`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace hanoigram::cli
