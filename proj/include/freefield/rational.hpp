#ifndef FREEFIELD_RATIONAL_HPP
#define FREEFIELD_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

#include "freefield/errors.hpp"

namespace freefield {

// Exact arithmetic throughout: zero tests must be decisions, not guesses.
using Rational = mpq_class;
using Integer = mpz_class;

/// q > 0 and gcd(|p|, q) = 1 after construction.
inline Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw DomainError("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline Rational make_rational(long num, long den = 1) {
    return make_rational(Integer(num), Integer(den));
}

/// Parses "p" or "p/q" with optional leading sign.
Rational parse_rational(const std::string& text);

/// Canonical form: "p" when q = 1, else "p/q".
std::string rational_to_string(const Rational& value);

} // namespace freefield

#endif
