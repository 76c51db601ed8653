#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qcone::cli {

/// Runs one CLI command. args excludes the program name. Exit codes:
/// 0 all checks pass (expected failures failing as expected count as
/// pass), 1 unexpected verification failure, 2 usage or parse error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace qcone::cli
