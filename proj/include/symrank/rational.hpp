#ifndef SYMRANK_RATIONAL_HPP
#define SYMRANK_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

namespace symrank {

/// Arbitrary-precision integer.
using Integer = mpz_class;

/// Exact rational scalar, the coefficient domain everywhere. mpq_class is
/// kept canonical by GMP: lowest terms, denominator > 0, zero stored as 0/1.
using Rational = mpq_class;

Integer binomial(long n, long k);
Integer factorial(unsigned long n);

/// n * (n-1) * ... * (n-m+1), exact; 1 for m = 0.
Integer falling_factorial(unsigned long n, unsigned long m);

Integer pow2(unsigned long e);

/// d! / (parts[0]! * parts[1]! * ...); requires sum(parts) == d.
Integer multinomial(int d, const int* parts, int count);

bool is_integral(const Rational& q);

// Decimal interchange text: integers as plain base-10 digits with optional
// leading '-', non-integral rationals as "num/den".
std::string to_decimal(const Integer& z);
std::string to_decimal(const Rational& q);
Integer integer_from_decimal(const std::string& s);
Rational rational_from_decimal(const std::string& s);

}  // namespace symrank

#endif
