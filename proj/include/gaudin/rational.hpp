#pragma once

#include <gmpxx.h>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace gaudin {

// Exact rational scalar. mpq_class keeps the canonical form the library
// relies on: positive denominator, gcd(|num|, den) = 1, zero as 0/1.
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

// Accepts "p/q", plain integers, and exact decimal strings ("-0.25" -> -1/4).
Rational parse_rational(const std::string& text);

std::string rational_to_string(const Rational& q);

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

Rational rational_pow(const Rational& base, long exp);

Rational factorial(unsigned n);

// Binomial coefficient as an exact rational (integer-valued).
Rational binomial(unsigned n, unsigned k);

}  // namespace gaudin
