#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>

namespace lozenge {

// Every count and formula value in this library is exact: arbitrary-precision
// integers and rationals backed by GMP. Rationals are kept canonical
// (lowest terms, positive denominator) by the mpq layer.
using Integer = mpz_class;
using Rational = mpq_class;

/// Canonicalized rational num/den (mpq_class(n, d) alone does not reduce).
Rational make_rational(long num, long den);

/// Rising factorial (a)_k = a(a+1)...(a+k-1), with the standard extension
/// (a)_{-m} = 1/((a-m)(a-m+1)...(a-1)) for negative index.
/// Throws std::domain_error if a negative-index factor vanishes.
Rational pochhammer(const Rational& a, long k);

/// n! with a process-wide memo table (thread-safe). Values above the cache
/// cap are computed but not retained.
Integer factorial(long n);
void set_factorial_cache_cap(std::size_t cap);
std::size_t factorial_cache_cap();

/// Binomial coefficient; 0 for k < 0, standard extension for negative n.
Integer binomial(long n, long k);
/// Binomial with rational upper argument: (a-k+1)_k / k!.
Rational binomial(const Rational& a, long k);

// cos(r*pi/3) and sin(r*pi/3)/sqrt(3) are rational; both are pure functions
// of r mod 6.
struct TrigValue {
    int residue = 0;
    Rational cos_value;
    Rational sin_over_sqrt3;
};
TrigValue trig_at(long r);

std::string to_string(const Integer& v);
std::string to_string(const Rational& v);  // "p" or "p/q"
Integer parse_integer(const std::string& s);
Rational parse_rational(const std::string& s);

}  // namespace lozenge
