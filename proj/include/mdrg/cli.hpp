#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace mdrg::cli {

inline constexpr const char* artifact_version = "0.1.0";

/// Exit codes: 0 certified, 1 a property fails (witness in the report),
/// 2 input or usage error.
enum ExitCode : int { Certified = 0, PropertyFails = 1, InputFailure = 2 };

/// Runs one command; `args` excludes the program name. Reports go to `out` as
/// JSON, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace mdrg::cli
