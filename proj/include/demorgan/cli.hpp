#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "demorgan/json_io.hpp"

namespace demorgan::cli {

enum ExitCode : int {
  kSuccess = 0,        // success, or the property holds
  kPropertyFalse = 1,  // property false; the witness is on standard output
  kInputError = 2,
  kSizeLimit = 3,
};

struct TheoremRun {
  Json report;
  bool all_agree = true;
  bool cep_everywhere = true;
};

// Checks every enumerated dual space X with at most max_points points:
// perfectness of algebra_of(X), decomposability, and the dual-space
// condition. Instances are spread over `jobs` threads; the report does not
// depend on `jobs`.
TheoremRun verify_theorem(std::size_t max_points, std::size_t jobs, const Limits& limits);

// args excludes the program name. JSON goes to `out` on every exit path.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace demorgan::cli
