#include "ocmf/arith.hpp"

#include <mutex>
#include <vector>

#include "ocmf/error.hpp"

namespace ocmf {

namespace {

// B_0..B_m for m = size - 1, odd entries above 1 stored as zero.
struct BernoulliTable {
  std::mutex mutex;
  std::vector<Rational> values{Rational(1)};
};

BernoulliTable& bernoulli_table() {
  static BernoulliTable table;
  return table;
}

BigInt binomial(unsigned long n, unsigned long k) {
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

}  // namespace

Rational bernoulli(int k) {
  if (k < 0) throw Error(ErrorKind::InvalidArgument, "bernoulli: negative index");
  if (k > 1 && k % 2 == 1)
    throw Error(ErrorKind::InvalidArgument, "zero Bernoulli, not used");

  auto& table = bernoulli_table();
  std::lock_guard lock(table.mutex);
  auto& b = table.values;
  // sum_{j=0}^{m} C(m+1, j) B_j = 0
  while (static_cast<int>(b.size()) <= k) {
    const auto m = static_cast<unsigned long>(b.size());
    if (m > 1 && m % 2 == 1) {
      b.emplace_back(0);
      continue;
    }
    Rational acc = 0;
    for (unsigned long j = 0; j < m; ++j) {
      if (b[j] == 0) continue;
      acc += Rational(binomial(m + 1, j)) * b[j];
    }
    Rational next = -acc / Rational(BigInt(m + 1));
    next.canonicalize();
    b.push_back(next);
  }
  return b[static_cast<std::size_t>(k)];
}

std::int64_t factorial_valuation(std::int64_t n, std::int64_t p) {
  if (n < 0) throw Error(ErrorKind::InvalidArgument, "factorial_valuation: negative n");
  if (p < 2) throw Error(ErrorKind::InvalidArgument, "factorial_valuation: p < 2");
  std::int64_t total = 0;
  while (n > 0) {
    n /= p;
    total += n;
  }
  return total;
}

std::int64_t valuation(const BigInt& x, std::int64_t p) {
  if (x == 0) throw Error(ErrorKind::InvalidArgument, "valuation of zero");
  BigInt y = abs(x);
  const BigInt bp(static_cast<long>(p));
  std::int64_t v = 0;
  while (mpz_divisible_p(y.get_mpz_t(), bp.get_mpz_t())) {
    mpz_divexact(y.get_mpz_t(), y.get_mpz_t(), bp.get_mpz_t());
    ++v;
  }
  return v;
}

std::int64_t valuation(const Rational& x, std::int64_t p) {
  if (x == 0) throw Error(ErrorKind::InvalidArgument, "valuation of zero");
  return valuation(BigInt(x.get_num()), p) - valuation(BigInt(x.get_den()), p);
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

BigInt pow(const BigInt& base, unsigned long exponent) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
  return r;
}

std::string to_string(const BigInt& x) { return x.get_str(); }

std::string to_string(const Rational& x) {
  if (x.get_den() == 1) return x.get_num().get_str();
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

Rational parse_rational(const std::string& text) {
  Rational r;
  if (r.set_str(text, 10) != 0)
    throw Error(ErrorKind::InvalidArgument, "not a rational: " + text);
  if (r.get_den() == 0)
    throw Error(ErrorKind::InvalidArgument, "zero denominator: " + text);
  r.canonicalize();
  return r;
}

}  // namespace ocmf
