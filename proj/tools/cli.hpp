#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "suites.hpp"

namespace mzv::cli {

enum ExitCode : int { kOk = 0, kCheckFailed = 1, kUsage = 2 };

// Runs one mzv-renorm invocation; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Renders a check table in format (human, json or csv); kCheckFailed when any
// row failed.
int report_checks(std::ostream& out, const std::string& format, const std::string& title,
                  const std::vector<CheckRow>& rows);

}  // namespace mzv::cli
