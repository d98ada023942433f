// app.hpp
//
// The zeta-explicit command line: one subcommand per invocation, reports as
// human text, a single JSON object, or CSV.

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace zx::cli {

inline constexpr char const* kZerosEnv = "ZETA_EXPLICIT_ZEROS";

enum ExitCode : int {
  kOk = 0,
  kDomainError = 1,  // numerical or mathematical precondition failed
  kInputError = 2,   // usage, parse or I/O problem
};

// argv without the program name. Never throws.
int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err);

}  // namespace zx::cli
