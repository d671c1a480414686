#pragma once

#include <gmpxx.h>

#include "etaq/rational.hpp"

namespace etaq {

/* Bernoulli number B_n for even n >= 0, via the classical recurrence
 * sum_{j=0}^{m} C(m+1, j) B_j = 0. Odd indices are rejected (OddIndex);
 * the kernel never needs them. */
Rational bernoulli(unsigned n);

/* sigma_s(n) = sum over divisors d of n of d^s, by trial division with a
 * memo table keyed by (s, n). Safe to call from several threads. */
mpz_class sigma(unsigned s, unsigned long n);

/* Legendre symbol (n/p) in {-1, 0, 1} for an odd prime p, by Euler's
 * criterion. NotOddPrime when p is not an odd prime. */
int legendre_symbol(long n, unsigned long p);
int legendre_symbol(const mpz_class& n, unsigned long p);

mpz_class factorial(unsigned long n);
mpz_class binomial(unsigned long n, unsigned long k);

} // namespace etaq
