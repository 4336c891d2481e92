#pragma once

#include <ostream>

namespace algtool {

/// Full command-line entry point. Exit 0 on success and 2 when a check fails; any
/// error exits 1 after reporting {"error": {code, message}}.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace algtool
