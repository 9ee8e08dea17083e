#pragma once

#include "ocmf/arith.hpp"
#include "ocmf/qseries.hpp"

namespace ocmf {

/// sum_{d | n} d^k
BigInt divisor_sigma(long n, unsigned long k);

/// -2k/B_k, the q-coefficient scale of E_k.
Rational eisenstein_scale(int k);

/// Whether E_k has p-integral coefficients, i.e. v_p(2k/B_k) >= 0 fails only
/// through p dividing the numerator of B_k.
bool eisenstein_p_integral(int k, long p);

/// E_k = 1 - (2k/B_k) sum sigma_{k-1}(n) q^n, known to O(q^qprec).
LaurentSeries<Rational> eisenstein(int k, int qprec);

/// Delta = q prod (1 - q^n)^24, low = 1, known to O(q^qprec).
LaurentSeries<BigInt> delta(int qprec);

/// j = E_4^3 / Delta, low = -1, known to O(q^qprec). Memoized.
LaurentSeries<BigInt> j_invariant(int qprec);

}  // namespace ocmf
