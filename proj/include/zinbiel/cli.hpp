#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace zinbiel::cli {

inline constexpr int kSuccess = 0;
inline constexpr int kVerificationFailed = 1;
inline constexpr int kInputError = 2;

/// Runs one command line (without the program name). Text goes to `out`,
/// diagnostics to `err`; `--report PATH` also writes a JSON report.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace zinbiel::cli
