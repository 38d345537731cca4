#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace doew::cli {

inline constexpr const char* kToolName = "doew";
inline constexpr const char* kToolVersion = "1.0.0";
inline constexpr std::uint64_t kDefaultSeed = 12345;

enum ExitCode : int { kSuccess = 0, kDomainFailure = 1, kUsageError = 2 };

// Runs one command line (without the program name). JSON or CSV goes to
// `out`, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace doew::cli
