#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace negsq::cli {

enum ExitCode : int {
  kOk = 0,
  kValidation = 1,     // bad flags, malformed input, unsupported parameters
  kInconsistent = 2,   // impossible invariants, non-integral cover signature
};

/// Runs one command line (without the program name). Reports go to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Parses "a,b,c" into integer coordinates.
std::vector<std::string> split_list(const std::string& text);

}  // namespace negsq::cli
