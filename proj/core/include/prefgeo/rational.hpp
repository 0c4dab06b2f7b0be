#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace prefgeo {

/// Exact rational scalar. All geometry in this library is computed over
/// these; there is no floating point anywhere on a predicate path.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational make_rational(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

/// Parses "p/q", a plain integer, or a decimal like "5.5".
Rational parse_rational(const std::string& text);

/// Serializes as "p" when integral, "p/q" otherwise.
std::string rational_to_string(const Rational& q);

inline double to_double(const Rational& q) { return q.get_d(); }

inline Rational rational_abs(const Rational& q) { return q < 0 ? Rational(-q) : q; }

}  // namespace prefgeo
