#pragma once

#include <stdexcept>
#include <string>

namespace qnrnp {

// Precondition violations: bad modulus, epsilon out of range, q not a
// divisor where one is required, and similar caller mistakes.
struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

// mod_inverse called with gcd(a, m) != 1.
struct NotInvertibleError : DomainError {
    using DomainError::DomainError;
};

// A computation would exceed a configured memory or range limit.
struct ResourceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A numeric result could not be rounded to an integer within its error
// budget, or two evaluation routes disagreed beyond it.
struct PrecisionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A search that is expected to produce an element found none (e.g. no
// suitable unit exists for the requested construction).
struct NoWitnessError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace qnrnp
