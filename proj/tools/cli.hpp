#pragma once

#include <ostream>

namespace wsgd::cli {

/// Entry point shared by the executable and the tests.
/// Returns 0 on success, 2 on usage or parameter errors, 1 on runtime failures.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace wsgd::cli
