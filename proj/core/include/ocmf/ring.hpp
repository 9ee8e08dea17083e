#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <string>

#include "ocmf/arith.hpp"

namespace ocmf {

/// Z/p^N, or the ramified extension (Z/p^N)[pi]/(pi^2 - p) when `ramified`.
class RingContext {
 public:
  static std::shared_ptr<const RingContext> make(std::int64_t p, int precision,
                                                 bool ramified);

  std::int64_t p() const noexcept { return p_; }
  int precision() const noexcept { return precision_; }
  bool ramified() const noexcept { return ramified_; }
  const BigInt& modulus() const noexcept { return modulus_; }
  const BigInt& prime() const noexcept { return prime_; }

  bool same_as(const RingContext& other) const noexcept {
    return this == &other || (p_ == other.p_ && precision_ == other.precision_ &&
                              ramified_ == other.ramified_);
  }

  RingContext(std::int64_t p, int precision, bool ramified);

 private:
  std::int64_t p_;
  int precision_;
  bool ramified_;
  BigInt prime_;
  BigInt modulus_;
};

using RingPtr = std::shared_ptr<const RingContext>;

/// Valuation normalized so v(p) = 1 and v(pi) = 1/2, stored as 2v. The
/// infinite marker means "zero within precision", i.e. >= the ring precision.
class HalfIntValuation {
 public:
  static HalfIntValuation finite(std::int64_t twice) { return {twice, false, 0}; }
  static HalfIntValuation at_least(int bound) { return {2 * std::int64_t{bound}, true, bound}; }

  bool is_infinite() const noexcept { return infinite_; }
  std::int64_t twice() const noexcept { return twice_; }
  /// Precision bound carried by the infinite marker.
  int bound() const noexcept { return bound_; }
  Rational to_rational() const;
  std::string to_string() const;

  friend bool operator==(const HalfIntValuation& x, const HalfIntValuation& y) {
    return x.infinite_ == y.infinite_ && (x.infinite_ || x.twice_ == y.twice_);
  }
  /// Infinite markers compare above every finite value.
  friend std::strong_ordering operator<=>(const HalfIntValuation& x,
                                          const HalfIntValuation& y) {
    if (x.infinite_ != y.infinite_)
      return x.infinite_ ? std::strong_ordering::greater : std::strong_ordering::less;
    if (x.infinite_) return std::strong_ordering::equal;
    return x.twice_ <=> y.twice_;
  }

 private:
  HalfIntValuation(std::int64_t twice, bool infinite, int bound)
      : twice_(twice), infinite_(infinite), bound_(bound) {}

  std::int64_t twice_;
  bool infinite_;
  int bound_;
};

/// a + b*pi with residues in [0, p^N). b is always zero in the unramified ring.
class RingElement {
 public:
  RingElement(RingPtr ctx, BigInt a, BigInt b = 0);

  static RingElement zero(const RingPtr& ctx) { return RingElement(ctx, 0); }
  static RingElement one(const RingPtr& ctx) { return RingElement(ctx, 1); }
  static RingElement pi(const RingPtr& ctx);
  /// Image of a p-integral rational. Throws NonUnit if p divides the denominator.
  static RingElement from_rational(const RingPtr& ctx, const Rational& x);

  const RingPtr& context() const noexcept { return ctx_; }
  const BigInt& a() const noexcept { return a_; }
  const BigInt& b() const noexcept { return b_; }

  bool is_zero() const noexcept { return a_ == 0 && b_ == 0; }
  bool is_unit() const;
  HalfIntValuation valuation() const;

  /// Throws NonUnit (with the valuation in the message) unless x is a unit.
  RingElement inverse() const;
  RingElement pow(unsigned long e) const;
  /// x * pi^m for m >= 0.
  RingElement mul_pi_power(int m) const;
  /// x / pi^m; throws Integrality if v(x) < m/2. The result is only
  /// meaningful modulo p^(N - ceil(m/2)).
  RingElement div_pi_power(int m) const;
  /// Reduce into another context of the same prime with precision <= N.
  /// The unramified ring embeds into the ramified one.
  RingElement reduce_to(const RingPtr& target) const;

  /// "a" or "a+b*pi".
  std::string to_string() const;

  RingElement& operator+=(const RingElement& y);
  RingElement& operator-=(const RingElement& y);
  RingElement& operator*=(const RingElement& y);
  RingElement operator-() const;

  friend RingElement operator+(RingElement x, const RingElement& y) { return x += y; }
  friend RingElement operator-(RingElement x, const RingElement& y) { return x -= y; }
  friend RingElement operator*(RingElement x, const RingElement& y) { return x *= y; }
  friend bool operator==(const RingElement& x, const RingElement& y);

 private:
  void check_same(const RingElement& y) const;
  void normalize();

  RingPtr ctx_;
  BigInt a_;
  BigInt b_;
};

/// Parses "a" or "a+b*pi" (the inverse of RingElement::to_string).
RingElement parse_ring_element(const RingPtr& ctx, const std::string& text);

}  // namespace ocmf
