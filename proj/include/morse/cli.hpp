#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "morse/complex.hpp"

namespace morse::cli {

/// Process exit codes; stable across releases.
enum ExitCode : int {
    kOk = 0,
    kUsage = 2,         // bad flags or generator spec
    kInputError = 3,    // unreadable or malformed complex file
    kBudgetExceeded = 4,
    kDomainError = 5,   // parameters rejected by a library operation
    kCheckFailed = 6,   // `check` found a vector violating a necessary condition
};

/// Builds a complex from a generator spec: A:k, B:k:s, C:d:k, cyclic:d:n,
/// stacked:d:n[:seed], lm:n:p[:seed], bsd:<file>, bipyramid, dunce8,
/// simplex:d, boundary:d. Throws std::invalid_argument for unknown specs.
SimplicialComplex generate(const std::string& spec);

/// Entry point; args[0] is the program name. Data goes to `out`, diagnostics
/// to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace morse::cli
