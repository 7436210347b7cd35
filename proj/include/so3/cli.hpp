#pragma once

// Command-line front end.
//
// Exit codes: 0 a report or verdict was produced, 1 usage or input error,
// 2 invalid profile, 3 a reproduction check disagreed with its expectation.

#include <iosfwd>
#include <string>
#include <vector>

namespace so3::cli {

enum ExitCode : int { ok = 0, usage_error = 1, invalid_profile = 2, mismatch = 3 };

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace so3::cli
