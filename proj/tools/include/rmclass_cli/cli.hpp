#pragma once

// Command-line front end. Subcommands:
//   count    orbit count N for one (n, s, k)
//   verify   recompute oracle entries and diff against the published values
//   classes  write a cell decomposition in the cell file format
//   tau      print the quotient matrix of one affine element
//   cv       print the coefficient vector of an ANF expression
// Reports are key=value lines.

#include <iosfwd>
#include <string>
#include <vector>

namespace rmclass::cli {

enum ExitCode : int {
    kExitOk = 0,
    kExitMismatch = 1,
    kExitUsage = 2,
    kExitInvariant = 3,
};

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rmclass::cli
