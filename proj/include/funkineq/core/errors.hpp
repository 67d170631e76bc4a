#pragma once

#include <stdexcept>
#include <string>

namespace funkineq {

// integrand hit inf/nan, or a divergent integral was requested
struct NonFiniteIntegrand : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ToleranceNotMet : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

struct RangeError : std::range_error {
    using std::range_error::range_error;
};

// sup scan still climbing at the window edge
struct Unbounded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotLogConcave : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// value beyond double range (G_lambda, G*)
struct Overflow : std::overflow_error {
    using std::overflow_error::overflow_error;
};

} // namespace funkineq
