#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace multigrade::cli {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
  kOk = 0,
  kUsageError = 1,
  /// Clean run that verified false or found nothing.
  kNegative = 2,
};

/// Runs the tool with argv-style arguments (args[0] is the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace multigrade::cli
