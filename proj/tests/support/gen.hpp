#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "ocmf/matrix.hpp"
#include "ocmf/qseries.hpp"
#include "ocmf/ring.hpp"

namespace ocmf::testing {

/// Deterministic generators for property tests.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  std::mt19937_64& engine() { return rng_; }

  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng_);
  }

  /// Uniform in [0, bound).
  BigInt below(const BigInt& bound) {
    BigInt x = 0;
    const std::size_t limbs = mpz_sizeinbase(bound.get_mpz_t(), 2) / 64 + 2;
    for (std::size_t i = 0; i < limbs; ++i) {
      x <<= 64;
      x += BigInt(std::to_string(rng_()));
    }
    return x % bound;
  }

  BigInt signed_int(long bound) { return BigInt(uniform(-bound, bound)); }

  RingElement element(const RingPtr& ring) {
    return RingElement(ring, below(ring->modulus()), ring->ramified() ? below(ring->modulus()) : 0);
  }

  RingElement unit(const RingPtr& ring) {
    for (;;) {
      auto x = element(ring);
      if (x.is_unit()) return x;
    }
  }

  /// unit * pi^twice (or p^(twice/2) when unramified).
  RingElement with_valuation(const RingPtr& ring, int twice) { return unit(ring).mul_pi_power(twice); }

  /// Mostly units, sometimes elements of positive valuation, sometimes zero.
  RingElement mixed(const RingPtr& ring) {
    const auto r = uniform(0, 9);
    if (r == 0) return RingElement::zero(ring);
    if (r < 4) return with_valuation(ring, static_cast<int>(uniform(1, ring->ramified() ? 5 : 2) *
                                                            (ring->ramified() ? 1 : 2)));
    return unit(ring);
  }

  Matrix<RingElement> matrix(const RingPtr& ring, std::size_t n) {
    Matrix<RingElement> m(n, n, RingElement::zero(ring));
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) m(r, c) = mixed(ring);
    return m;
  }

  std::vector<std::size_t> permutation(std::size_t n) {
    std::vector<std::size_t> p(n);
    for (std::size_t i = 0; i < n; ++i) p[i] = i;
    std::shuffle(p.begin(), p.end(), rng_);
    return p;
  }

  LaurentSeries<BigInt> int_series(int low, int qprec, long bound) {
    std::vector<BigInt> c;
    for (int n = low; n < qprec; ++n) c.push_back(signed_int(bound));
    return LaurentSeries<BigInt>(low, qprec, std::move(c), BigInt(0));
  }

  LaurentSeries<RingElement> ring_series(const RingPtr& ring, int low, int qprec) {
    std::vector<RingElement> c;
    for (int n = low; n < qprec; ++n) c.push_back(mixed(ring));
    return LaurentSeries<RingElement>(low, qprec, std::move(c), RingElement::zero(ring));
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace ocmf::testing
