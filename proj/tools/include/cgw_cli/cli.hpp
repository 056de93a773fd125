#pragma once

// The cgw command line: argument handling, output files, caching and
// plot data.

#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace cgw::cli {

enum ExitCode : int {
  kOk = 0,
  kFailure = 1,
  kInputError = 2,
  kBudgetExceeded = 3,
};

std::string version();

using EnvLookup = std::function<std::optional<std::string>(const std::string&)>;
std::optional<std::string> process_env(const std::string& name);

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err, const EnvLookup& env = process_env);
int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err);

}  // namespace cgw::cli
