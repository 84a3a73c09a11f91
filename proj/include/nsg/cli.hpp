#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace nsg::cli {

/// Exit codes of run().
inline constexpr int kOk = 0;
inline constexpr int kInputError = 1;
inline constexpr int kViolation = 2;

/// Runs one command line; `args` excludes the program name. Results go to
/// `out`, diagnostics to `err`.
int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err);

}  // namespace nsg::cli
