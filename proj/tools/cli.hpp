#ifndef QSERIES_TOOLS_CLI_HPP
#define QSERIES_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>

#include <json.hpp>

#include <qseries/report.hpp>

namespace qseries::cli
{

enum ExitCode { kOk = 0, kFailures = 1, kUnknownId = 2, kInternal = 3 };

// One structured record: {id, status, orders, first_discrepancy?, millis}.
[[nodiscard]] nlohmann::json to_json(const VerificationReport &r);
[[nodiscard]] std::string to_text(const VerificationReport &r);

// Worker count when --jobs is absent: QSERIES_JOBS, else the core count.
[[nodiscard]] int default_jobs();

// Entry point; returns the process exit code. CLI11 usage errors also
// return its own nonzero codes.
int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

} // namespace qseries::cli

#endif
