#pragma once

// Exact integers, rationals and the combinatorial number families used by the
// gap-sum formulas. All functions are pure; the memo tables behind them are
// guarded so they may be called from several threads.

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace sylvsum {

using BigInt = mpz_class;
using BigRational = mpq_class;

/// Bernoulli number with B_1 = -1/2.
BigRational bernoulli(unsigned n);

/// Stirling number of the second kind, S(0,0) = 1 and S(n,m) = 0 for m > n.
BigInt stirling2(unsigned n, unsigned m);

/// Eulerian number <n m>: permutations of n elements with m descents.
/// Zero outside 0 <= m <= max(n-1, 0); <0 0> = 1.
BigInt eulerian(unsigned n, long m);

/// Binomial coefficient. Returns 0 for k < 0, k > n, or n < 0; no formula here
/// needs the negative upper index extension.
BigInt binomial(long n, long k);

BigInt factorial(unsigned n);

BigInt pow(const BigInt& base, unsigned long e);
BigRational pow(const BigRational& base, unsigned long e);

/// num/den in lowest terms. Throws division_by_zero on den == 0.
BigRational make_rational(const BigInt& num, const BigInt& den);

bool is_integer(const BigRational& x);

/// Exact integer value of x; throws consistency_error naming `what` otherwise.
BigInt require_integer(const BigRational& x, const char* what);

std::string to_string(const BigInt& x);
std::string to_string(const BigRational& x);

/// Parses "p", "-p" or "p/q". Throws std::invalid_argument on anything else.
BigRational parse_rational(const std::string& text);

} // namespace sylvsum
