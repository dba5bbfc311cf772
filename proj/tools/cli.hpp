#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace jacklab::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 2;
inline constexpr int kExitTolerance = 3;

// Runs one subcommand; args excludes the program name. Output goes to `out` unless --output names a file.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace jacklab::cli
