#ifndef QSERIES_ERRORS_HPP
#define QSERIES_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qseries
{

// Two operands were built over different variable sets or truncations.
struct IncompatibleContext : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Inversion of an element whose constant term vanishes.
struct NonUnit : std::domain_error {
    using std::domain_error::domain_error;
};

// An infinite sum or product whose terms do not gain valuation.
struct FormalDivergence : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A value that cannot be represented in the target ring, e.g. a negative
// power of the base variable in a truncated series.
struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

// A coefficient request outside the truncation window.
struct OutOfWindow : std::out_of_range {
    using std::out_of_range::out_of_range;
};

} // namespace qseries

#endif
