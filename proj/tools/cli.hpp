#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hypoly::cli {

/// Runs the command line given in `args` (argv[0] excluded), writing data
/// rows to `out` and diagnostics to `err`.  Exit-code contract:
///   0  success / all verified identities within tolerance
///   1  at least one verified identity out of tolerance
///   2  usage or parameter error
/// Output is deterministic byte-for-byte for identical flags; numbers are
/// printed with 17 significant digits.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

} // namespace hypoly::cli
