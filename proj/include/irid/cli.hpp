#pragma once

#include <ostream>

namespace irid::cli {

/// Exit codes: 0 success, 2 input validation, 1 computation failure.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace irid::cli
