#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cmath>
#include <stdexcept>
#include <string>

namespace parabose {

// Exact rational backed by GMP; always kept in lowest terms with a positive
// denominator.
using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Parses "p", "p/q", "-p/q". Throws std::invalid_argument on malformed input
// or a zero denominator.
Rational parse_rational(const std::string &text);

// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational &r);

inline double to_double(const Rational &r) { return r.convert_to<double>(); }

inline bool is_integer(const Rational &r) {
    return boost::multiprecision::denominator(r) == 1;
}

// True when r is an integer <= 0 (a terminating Pochhammer parameter).
inline bool is_nonpositive_integer(const Rational &r) {
    return is_integer(r) && r <= 0;
}

// Converts an integral rational to long; throws if not integral.
long to_long(const Rational &r);

inline Rational sign_power(long n) { return (n % 2 == 0) ? Rational(1) : Rational(-1); }

inline double sqrt_of(const Rational &r) { return std::sqrt(to_double(r)); }

} // namespace parabose
