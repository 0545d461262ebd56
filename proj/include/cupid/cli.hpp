#pragma once

#include <iosfwd>

namespace cupid::cli {

/// Entry point behind the cupid binary. Exit codes: 0 success, 1 I/O
/// failure, 2 invalid arguments or bounds, 3 malformed coded stream.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace cupid::cli
