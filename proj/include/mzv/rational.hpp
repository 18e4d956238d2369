#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/gmp.hpp>

namespace mzv {

using BigInt = boost::multiprecision::mpz_int;

// GMP rationals are kept in canonical form (reduced, positive denominator)
// after every operation.
using Rational = boost::multiprecision::mpq_rational;

// "p/q", or "p" when q == 1.
std::string to_string(const Rational& q);

// Accepts "p/q", "p" and terminating decimals such as "-0.25" or "1.5e-3".
// Throws std::invalid_argument on malformed input.
Rational parse_rational(std::string_view text);

BigInt factorial(unsigned n);

}  // namespace mzv
