#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace extremal::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFinding = 1;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitInternalError = 3;

/// Version of the JSON report layout in schemas/report.schema.json.
inline constexpr int kReportSchemaVersion = 1;

/// Runs one command. `args` excludes the program name.
///
/// Exit codes: 0 success, 1 finding (counterexample, NONE, failed verification),
/// 2 input or usage error, 3 internal error.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace extremal::cli
