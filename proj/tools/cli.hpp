#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace talex::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kUsage = 1;
inline constexpr int kPrecondition = 2;
inline constexpr int kInternal = 3;

/// Runs one command line (args excludes the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace talex::cli
