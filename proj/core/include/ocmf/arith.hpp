#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace ocmf {

using BigInt = mpz_class;
using Rational = mpq_class;

/// B_k for even k >= 0 (B_0 = 1, B_2 = 1/6). Odd k > 1 is rejected since
/// those vanish and nothing here consumes them; k = 1 returns -1/2.
/// Results are memoized; the cache is shared and thread safe.
Rational bernoulli(int k);

/// v_p(n!) by Legendre's formula.
std::int64_t factorial_valuation(std::int64_t n, std::int64_t p);

/// v_p(x) for nonzero x. Throws on x == 0.
std::int64_t valuation(const BigInt& x, std::int64_t p);

/// v_p of a nonzero rational (may be negative).
std::int64_t valuation(const Rational& x, std::int64_t p);

bool is_prime(std::int64_t n);

BigInt pow(const BigInt& base, unsigned long exponent);

/// "a/b", or "a" when the denominator is 1.
std::string to_string(const Rational& x);
std::string to_string(const BigInt& x);

/// Parses "a" or "a/b".
Rational parse_rational(const std::string& text);

}  // namespace ocmf
