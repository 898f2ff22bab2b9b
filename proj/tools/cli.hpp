#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace trid::cli {

// Exit statuses.
inline constexpr int kOk = 0;
inline constexpr int kVerificationFailed = 1;
inline constexpr int kPrecondition = 2;
inline constexpr int kInternal = 3;

/// Runs one command line (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace trid::cli
