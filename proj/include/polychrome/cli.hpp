// Command-line surface: construct, verify, normalize, number, ramsey,
// search, seed.  All commands print JSON (TSV for ramsey --table) and the
// output is byte-for-byte deterministic for fixed inputs.
//
// Exit codes: 0 success (verify: polychromatic), 1 verify found a missing
// color, 2 usage/parse/precondition errors, 3 oracle budget exceeded.

#pragma once

#include <iosfwd>
#include <istream>

namespace polychrome::cli {

int run(int argc, const char* const* argv, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace polychrome::cli
