#pragma once

#include <ostream>

namespace otto::cli {

// Exit codes: 0 success, 1 bad arguments or evaluation error, 2 selftest failure.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace otto::cli
