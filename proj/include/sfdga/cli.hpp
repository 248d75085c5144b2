#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sfdga::cli {

// Stable exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitInconclusive = 3;

// args excludes the program name, e.g. {"certify", "t.pres", "--max-bound", "2"}.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sfdga::cli
