#pragma once

#include <iosfwd>

namespace prefas::cli {

//! Exit codes shared by all subcommands.
enum Exit : int {
    found   = 0, //!< something was found, or a check passed
    none    = 1, //!< no (preferred) answer set, or a check found violations
    failure = 2, //!< bad input, bad flags or exceeded bounds
};

//! Runs the command line `argv` writing results to `out` and diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace prefas::cli
