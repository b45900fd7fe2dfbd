#pragma once

#include <atomic>
#include <iosfwd>
#include <string>
#include <vector>

namespace tadpole::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 2,         ///< unknown flag, missing value, bad flag syntax
  kInputError = 3,    ///< unreadable or malformed input file
  kInvalidParams = 4, ///< parameter values or combinations rejected
  kFailure = 5,       ///< anything else
};

/// Set by the SIGINT handler. Phase 2 polls it before each exact call and
/// finalizes the current snapshot as an "interrupted" result.
std::atomic<bool>& interrupt_flag();

/// Installs the SIGINT handler that sets interrupt_flag().
void install_interrupt_handler();

/// Runs one command. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tadpole::cli
