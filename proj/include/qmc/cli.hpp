#pragma once

#include <iostream>

namespace qmc::cli {

/// Entry point of the `qmc` tool. Returns 0 on success, 1 when `verify`
/// finds a mismatch and 2 on usage or domain errors.
int run(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr);

}  // namespace qmc::cli
