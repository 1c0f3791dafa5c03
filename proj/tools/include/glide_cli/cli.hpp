#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace glide::cli {

enum ExitCode : int { ok = 0, invariant_violation = 1, parse_error = 2 };

/// Runs one glidectl invocation; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace glide::cli
