#include "ocmf/forms.hpp"

#include <map>
#include <mutex>

namespace ocmf {

BigInt divisor_sigma(long n, unsigned long k) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "divisor_sigma: n < 1");
  BigInt s = 0;
  for (long d = 1; d * d <= n; ++d) {
    if (n % d) continue;
    s += pow(BigInt(d), k);
    if (d != n / d) s += pow(BigInt(n / d), k);
  }
  return s;
}

Rational eisenstein_scale(int k) {
  if (k < 4 || k % 2) throw Error(ErrorKind::InvalidArgument, "eisenstein: need even k >= 4");
  Rational s = Rational(-2 * k) / bernoulli(k);
  s.canonicalize();
  return s;
}

bool eisenstein_p_integral(int k, long p) {
  const Rational s = eisenstein_scale(k);
  return mpz_divisible_ui_p(s.get_den().get_mpz_t(), static_cast<unsigned long>(p)) == 0;
}

LaurentSeries<Rational> eisenstein(int k, int qprec) {
  const Rational scale = eisenstein_scale(k);
  if (qprec < 1) throw Error(ErrorKind::InvalidArgument, "eisenstein: qprec < 1");
  std::vector<Rational> c;
  c.reserve(static_cast<std::size_t>(qprec));
  c.emplace_back(1);
  for (int n = 1; n < qprec; ++n) c.emplace_back(scale * Rational(divisor_sigma(n, k - 1)));
  return LaurentSeries<Rational>(0, qprec, std::move(c), Rational(0));
}

namespace {

// prod (1 - q^n) by Euler's pentagonal theorem, to O(q^n_terms).
LaurentSeries<BigInt> euler_product(int n_terms) {
  std::vector<BigInt> c(static_cast<std::size_t>(n_terms), 0);
  for (long m = 0;; ++m) {
    const long e1 = m * (3 * m - 1) / 2;
    const long e2 = m * (3 * m + 1) / 2;
    if (e1 >= n_terms) break;
    const int sign = (m % 2) ? -1 : 1;
    c[static_cast<std::size_t>(e1)] += sign;
    if (m > 0 && e2 < n_terms) c[static_cast<std::size_t>(e2)] += sign;
  }
  return LaurentSeries<BigInt>(0, n_terms, std::move(c), BigInt(0));
}

struct SeriesMemo {
  std::mutex mutex;
  std::map<int, LaurentSeries<BigInt>> by_qprec;
};

}  // namespace

LaurentSeries<BigInt> delta(int qprec) {
  if (qprec < 2) throw Error(ErrorKind::InvalidArgument, "delta: qprec < 2");
  // Delta / q to O(q^(qprec-1)).
  const auto eta = euler_product(qprec - 1);
  const auto e2 = eta * eta;
  const auto e4 = e2 * e2;
  const auto e8 = e4 * e4;
  const auto e16 = e8 * e8;
  return (e16 * e8).shift(1);
}

LaurentSeries<BigInt> j_invariant(int qprec) {
  if (qprec < 1) throw Error(ErrorKind::InvalidArgument, "j_invariant: qprec < 1");
  static SeriesMemo memo;
  {
    std::lock_guard lock(memo.mutex);
    auto it = memo.by_qprec.lower_bound(qprec);
    if (it != memo.by_qprec.end()) return it->second.truncate(qprec);
  }
  // j q = E_4^3 / (Delta/q), needed to O(q^(qprec+1)).
  const int n = qprec + 1;
  const auto e4 = eisenstein(4, n).map(
      [](const Rational& x) {
        if (x.get_den() != 1) throw Error(ErrorKind::Integrality, "E_4 coefficient not integral");
        return BigInt(x.get_num());
      },
      BigInt(0));
  const auto cube = e4 * e4 * e4;
  const auto d_over_q = delta(n + 1).shift(-1);
  const auto j = (cube * invert(d_over_q)).shift(-1);
  std::lock_guard lock(memo.mutex);
  memo.by_qprec.emplace(qprec, j);
  return j;
}

}  // namespace ocmf
