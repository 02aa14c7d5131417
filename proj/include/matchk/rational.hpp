#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace matchk {

// All counting paths use exact rationals; GMP keeps them canonical
// (reduced fraction, positive denominator).
using Rational = mpq_class;
using Integer = mpz_class;

struct ArgumentError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct DimensionError : ArgumentError {
    using ArgumentError::ArgumentError;
};

struct ParityError : ArgumentError {
    using ArgumentError::ArgumentError;
};

struct ResourceLimitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A theorem-level identity failed (e.g. a factorial division that must be
// exact was not). Always a bug, never a user error.
struct InternalConsistencyError : std::logic_error {
    using std::logic_error::logic_error;
};

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

Integer factorial(unsigned long n);

// Parses an integer or "p/q" token. Throws ParseError on malformed input
// or zero denominator.
Rational parse_rational(const std::string& token);

// Decimal integer when the denominator is 1, otherwise "p/q".
std::string format_rational(const Rational& q);

}  // namespace matchk
