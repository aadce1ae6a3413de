#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "cutpoly/io.hpp"

namespace cutpoly {

/// Batch front end. Reports go to out (stable-ordered JSON by default),
/// diagnostics to err. Exit codes: 0 command completed (verdicts live in
/// the report, not the code), 2 invalid input, 3 resource limit exceeded.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Empirical harness for the minor/normality correspondence: every
/// connected isomorphism class up to max_n vertices, with its K5-minor
/// status and bounded normality verdict, plus a contingency summary.
Json conjecture_scan(int max_n, int kmax, const Limits& limits);

} // namespace cutpoly
