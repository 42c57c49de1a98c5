#pragma once

#include <iosfwd>

namespace secretary::cli {

// Parses argv and executes one subcommand, writing results to `out` and
// diagnostics to `err`. Returns 0 on success, 2 on bad arguments, 1 on
// computation or I/O failure.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace secretary::cli
