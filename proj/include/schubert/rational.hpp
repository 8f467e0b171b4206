#pragma once

#include <gmpxx.h>

#include <string>

namespace schubert {

// Exact rational of unbounded size. Always kept canonical (reduced, positive
// denominator) by the arithmetic in this library.
using Rational = mpq_class;
using Integer = mpz_class;

// "p/q" in lowest terms, or "p" when the denominator is 1.
std::string to_string(const Rational& q);

bool is_integer(const Rational& q);

/// num/den in canonical form. mpq_class(num, den) alone does not reduce.
Rational ratio(long num, long den);

Rational factorial(unsigned n);
Rational binomial(long n, long k);

}  // namespace schubert
