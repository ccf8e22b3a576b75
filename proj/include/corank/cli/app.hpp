#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace corank::cli {

/// Exit codes: 0 success with every check passing, 1 a check failed or the input is
/// mathematically inconsistent, 2 schema or IO trouble.
constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitSchema = 2;

/// Runs one command line (args[0] is the program name). Reports go to `out` unless -o is given;
/// diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace corank::cli
