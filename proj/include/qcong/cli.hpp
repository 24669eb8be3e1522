#pragma once

#include <ostream>

namespace qcong {

/// Entry point of the command line tool. Exit codes: 0 every reported case
/// holds, 1 some case fails, 2 usage or precondition error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qcong
