#include "doctest.h"

#include "ocmf/arith.hpp"
#include "ocmf/error.hpp"

using namespace ocmf;

namespace {

BigInt factorial(unsigned long n) {
  BigInt f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return f;
}

bool trial_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace

TEST_CASE("bernoulli small table") {
  CHECK(bernoulli(0) == Rational(1));
  CHECK(bernoulli(1) == Rational(-1, 2));
  CHECK(bernoulli(2) == Rational(1, 6));
  CHECK(bernoulli(4) == Rational(-1, 30));
  CHECK(bernoulli(6) == Rational(1, 42));
  CHECK(bernoulli(8) == Rational(-1, 30));
  CHECK(bernoulli(10) == Rational(5, 66));
  CHECK(bernoulli(12) == Rational(-691, 2730));
  CHECK(bernoulli(14) == Rational(7, 6));
  CHECK_THROWS_AS(bernoulli(3), Error);
  CHECK_THROWS_AS(bernoulli(-2), Error);
}

TEST_CASE("bernoulli satisfies the defining recurrence") {
  for (int m = 1; m <= 40; ++m) {
    Rational s = 0;
    BigInt binom = 1;  // C(m+1, j)
    for (int j = 0; j <= m; ++j) {
      if (j == 1 || j % 2 == 0) s += Rational(binom) * bernoulli(j);
      binom = binom * (m + 1 - j) / (j + 1);
    }
    CHECK_MESSAGE(s == 0, "m = " << m);
  }
}

TEST_CASE("von Staudt-Clausen: B_k + sum_{(q-1)|k} 1/q is an integer") {
  for (int k = 2; k <= 80; k += 2) {
    Rational s = bernoulli(k);
    for (int q = 2; q <= k + 1; ++q)
      if (trial_prime(q) && k % (q - 1) == 0) s += Rational(1, q);
    s.canonicalize();
    CHECK_MESSAGE(s.get_den() == 1, "k = " << k);
  }
}

TEST_CASE("Legendre's formula against direct factorization") {
  for (std::int64_t p : {2, 3, 5, 7, 11, 17, 19}) {
    for (std::int64_t n = 0; n <= 500; ++n) {
      const auto direct = n < 2 ? 0 : valuation(factorial(static_cast<unsigned long>(n)), p);
      REQUIRE_MESSAGE(factorial_valuation(n, p) == direct, "n = " << n << ", p = " << p);
    }
  }
}

TEST_CASE("valuations of integers and rationals") {
  CHECK(valuation(BigInt(11 * 11 * 7), 11) == 2);
  CHECK(valuation(BigInt(-17), 17) == 1);
  CHECK(valuation(Rational(7, 121), 11) == -2);
  CHECK(valuation(Rational(242, 5), 11) == 2);
  CHECK_THROWS_AS(valuation(BigInt(0), 11), Error);
}

TEST_CASE("is_prime matches trial division") {
  for (std::int64_t n = -3; n < 2000; ++n) CHECK(is_prime(n) == trial_prime(n));
}

TEST_CASE("rational text round trip") {
  for (const char* s : {"0", "7", "-3/4", "691/2730", "123456789012345678901234567890"}) {
    CHECK(to_string(parse_rational(s)) == s);
  }
  CHECK(to_string(parse_rational("6/4")) == "3/2");
  CHECK_THROWS(parse_rational("abc"));
  CHECK_THROWS(parse_rational("1/0"));
}
