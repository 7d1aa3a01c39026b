#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cgaskey::cli {

inline constexpr const char* kVersion = "1.0.0";

enum ExitCode : int { kPass = 0, kCheckFailure = 1, kInvalidParameters = 2, kIoError = 3 };

/// Entry point behind the `cgaskey` executable. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cgaskey::cli
