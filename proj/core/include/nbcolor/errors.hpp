#pragma once

#include <stdexcept>
#include <string>

namespace nbcolor {

// Exception taxonomy, mirrored by the CLI exit codes:
//   parse_error -> 4, eligibility_error -> 2, convergence_error -> 3.

struct parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct eligibility_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct convergence_error : std::runtime_error {
    convergence_error(const std::string& what, double best_residual)
        : std::runtime_error(what), best_residual(best_residual) {}
    double best_residual;
};

struct size_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace nbcolor
