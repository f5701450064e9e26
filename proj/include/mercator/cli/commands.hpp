#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mercator::cli {

enum ExitCode : int {
  kOk = 0,
  kUsageError = 1,      // parse / validation
  kDomainError = 2,     // punctures, |v| >= 1
  kInvariantFailure = 3,
};

/// Runs one command line (args exclude the program name). Normal output
/// goes to `out` unless --output names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Parses "a,b,c"; each item may also be a range "lo..hi/step" (inclusive).
std::vector<double> parse_number_list(const std::string& text);

}  // namespace mercator::cli
