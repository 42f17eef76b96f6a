#pragma once

// Exact integers and rationals (GMP), plus the elementary number theory the
// rest of the library leans on: p-adic orders, factorials, binomials.

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace supercong {

using Integer = mpz_class;
using Rational = mpq_class;  // always canonical: lowest terms, positive denominator

/// Exponent of p in a nonzero integer. Throws std::domain_error for zero.
int ord_p(const Integer& x, unsigned long p);

/// Exponent of p in a rational; nullopt for zero. May be negative.
std::optional<int> ord_p(const Rational& x, unsigned long p);

/// Exponent of p in a machine integer (nonzero).
int ord_p(long long x, unsigned long p);

bool is_prime(unsigned long n);

/// num/den in lowest terms (den nonzero). Prefer this to the two-argument
/// mpq_class constructor, which does not canonicalize.
Rational ratio(const Integer& num, const Integer& den);

/// Parses "a", "-a" or "a/b" (decimal). Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

/// Decimal "num/den", or "num" when the denominator is one.
std::string to_string(const Rational& r);

/// n! from a memoized table shared by all threads.
const Integer& factorial(unsigned n);

/// binom(n, k) for 0 <= k <= n, zero otherwise.
Integer binomial(unsigned long n, unsigned long k);

/// Integer power p^e.
Integer ipow(unsigned long p, unsigned e);

/// Inverse of x modulo m (gcd(x, m) = 1), result in [0, m).
Integer inverse_mod(const Integer& x, const Integer& m);

/// Nonnegative representative of x mod m.
Integer mod_floor(const Integer& x, const Integer& m);

}  // namespace supercong
