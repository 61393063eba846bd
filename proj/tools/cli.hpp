#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace trigalg::cli {

enum ExitCode : int { kOk = 0, kDomainFailure = 1, kUsageError = 2 };

/// Runs one command line (without the program name). Documents go to out,
/// diagnostics and residuals to err. Reads stdin-style input from in when an
/// input path is "-" or omitted.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err);

}  // namespace trigalg::cli
