#pragma once

#include <string>
#include <vector>

namespace exactrn::cli {

// Exit codes: 0 all checks pass, 1 a user expression was refuted,
// 2 input problem (unreadable file, parse error, bad dimensions),
// 3 internal consistency fault (a check that can only fail on a bug).
inline constexpr int kExitPass = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitFault = 3;

int run(int argc, const char* const* argv);
int run(const std::vector<std::string>& args);

}  // namespace exactrn::cli
