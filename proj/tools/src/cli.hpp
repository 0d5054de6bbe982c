#pragma once

#include <iosfwd>

namespace homspace::cli {

// Parses argv, runs one subcommand and writes its record to out (or to
// --out). Returns 0 on success, 1 when a check or invariant fails and 2 on
// invalid input.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace homspace::cli
