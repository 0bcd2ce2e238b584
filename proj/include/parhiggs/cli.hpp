#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace parhiggs {

/// Command-line front end.  `args` excludes the program name.  Results are
/// written to `out`; diagnostics, warnings, and machine-readable error
/// objects to `err`.
///
/// Exit codes:
///   0 — success;
///   1 — computation or property-check failure (exactness, verification,
///       truncation, a failed check suite);
///   2 — input validation or genericity failure (bad flags, bad weights,
///       degree divisible by 3, sigma on a wall, ...);
///   3 — conjecture refutation from `check --suite hausel` (or a suite run
///       containing it).
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

} // namespace parhiggs
