#pragma once
// Error taxonomy shared by all modules. Exceptions are used throughout:
// domain/validation problems are programming or input errors, resource and
// convergence failures are runtime conditions a driver may want to map to
// distinct exit codes (see report.hpp).

#include <stdexcept>
#include <string>

namespace zml {

// Invalid mathematical input (argument outside the documented domain).
struct domain_error : std::domain_error {
    using std::domain_error::domain_error;
};

// A run configuration that fails validation before any computation starts.
struct validation_error : domain_error {
    using domain_error::domain_error;
};

// Request exceeds a configured resource cap (memory, expansion size, ...).
struct resource_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Requested accuracy cannot be delivered at this argument.
struct accuracy_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A lookup table does not cover the requested range.
struct table_too_small_error : domain_error {
    using domain_error::domain_error;
};

// Iterative refinement failed to meet tolerance; carries the best estimate.
struct convergence_error : std::runtime_error {
    convergence_error(const std::string& what, double best, double err)
        : std::runtime_error(what), best_estimate(best), error_estimate(err) {}
    double best_estimate;
    double error_estimate;
};

// Report/output I/O failure.
struct io_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A structural invariant that is supposed to hold by construction failed.
struct internal_error : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace zml
