#pragma once

#include <gmpxx.h>

#include <string>

namespace greenbox::arith {

using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(const Integer& num, const Integer& den) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline std::string to_string(const Integer& z) { return z.get_str(); }
inline std::string to_string(const Rational& q) { return q.get_str(); }

// Parses "a", "-a" or "a/b".
Rational parse_rational(const std::string& text);

inline bool is_zero(const Integer& z) { return sgn(z) == 0; }
inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

Integer binomial(long n, long k);
Integer factorial(long n);

}  // namespace greenbox::arith
