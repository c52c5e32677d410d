#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace polycf::cli {

/// Exit statuses.
inline constexpr int kOk = 0;
inline constexpr int kHypothesisViolation = 1;
inline constexpr int kMalformedInput = 2;
/// reproduce-paper or verify finished, but some verdict was not Pass.
inline constexpr int kNotVerified = 3;

/// Runs one command line (args excludes the program name). Results go to
/// `out`; errors are written to `err` as JSON.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace polycf::cli
