#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ocmf/arith.hpp"
#include "ocmf/error.hpp"
#include "ocmf/ring.hpp"

namespace ocmf {

/// Coefficient-type hooks used by LaurentSeries. Zero and one are built from a
/// prototype so ring coefficients inherit their context.
template <class T>
struct CoeffTraits;

template <>
struct CoeffTraits<BigInt> {
  static BigInt zero_like(const BigInt&) { return 0; }
  static BigInt one_like(const BigInt&) { return 1; }
  static bool is_zero(const BigInt& x) { return x == 0; }
  static bool is_unit(const BigInt& x) { return x == 1 || x == -1; }
  static BigInt inverse(const BigInt& x) {
    if (!is_unit(x)) throw Error(ErrorKind::NonUnit, "integer leading coefficient is not +-1");
    return x;
  }
  static bool compatible(const BigInt&, const BigInt&) { return true; }
};

template <>
struct CoeffTraits<Rational> {
  static Rational zero_like(const Rational&) { return 0; }
  static Rational one_like(const Rational&) { return 1; }
  static bool is_zero(const Rational& x) { return x == 0; }
  static bool is_unit(const Rational& x) { return x != 0; }
  static Rational inverse(const Rational& x) {
    if (x == 0) throw Error(ErrorKind::NonUnit, "zero leading coefficient");
    Rational r = 1 / x;
    r.canonicalize();
    return r;
  }
  static bool compatible(const Rational&, const Rational&) { return true; }
};

template <>
struct CoeffTraits<RingElement> {
  static RingElement zero_like(const RingElement& x) { return RingElement::zero(x.context()); }
  static RingElement one_like(const RingElement& x) { return RingElement::one(x.context()); }
  static bool is_zero(const RingElement& x) { return x.is_zero(); }
  static bool is_unit(const RingElement& x) { return x.is_unit(); }
  static RingElement inverse(const RingElement& x) { return x.inverse(); }
  static bool compatible(const RingElement& x, const RingElement& y) {
    return x.context()->same_as(*y.context());
  }
};

namespace detail {

inline constexpr std::size_t kKaratsubaThreshold = 48;

/// First n coefficients of a*b, schoolbook.
template <class T>
std::vector<T> convolve_schoolbook(std::span<const T> a, std::span<const T> b, std::size_t n,
                                   const T& zero) {
  std::vector<T> r(n, zero);
  for (std::size_t i = 0; i < a.size() && i < n; ++i) {
    if (CoeffTraits<T>::is_zero(a[i])) continue;
    const std::size_t lim = std::min(b.size(), n - i);
    for (std::size_t j = 0; j < lim; ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

/// Full product (length |a|+|b|-1) by Karatsuba, falling back to schoolbook.
template <class T>
std::vector<T> karatsuba_full(std::span<const T> a, std::span<const T> b, const T& zero) {
  if (a.empty() || b.empty()) return {};
  const std::size_t full = a.size() + b.size() - 1;
  if (std::min(a.size(), b.size()) < kKaratsubaThreshold)
    return convolve_schoolbook(a, b, full, zero);
  const std::size_t half = std::max(a.size(), b.size()) / 2;
  auto lo = [&](std::span<const T> x) { return x.subspan(0, std::min(half, x.size())); };
  auto hi = [&](std::span<const T> x) {
    return x.size() > half ? x.subspan(half) : std::span<const T>{};
  };
  auto add = [&](std::span<const T> x, std::span<const T> y) {
    std::vector<T> s(std::max(x.size(), y.size()), zero);
    for (std::size_t i = 0; i < x.size(); ++i) s[i] += x[i];
    for (std::size_t i = 0; i < y.size(); ++i) s[i] += y[i];
    return s;
  };
  const auto a0 = lo(a), a1 = hi(a), b0 = lo(b), b1 = hi(b);
  std::vector<T> z0 = karatsuba_full<T>(a0, b0, zero);
  std::vector<T> z2 = karatsuba_full<T>(a1, b1, zero);
  const auto sa = add(a0, a1);
  const auto sb = add(b0, b1);
  std::vector<T> z1 = karatsuba_full<T>(std::span<const T>(sa), std::span<const T>(sb), zero);
  for (std::size_t i = 0; i < z0.size(); ++i) z1[i] -= z0[i];
  for (std::size_t i = 0; i < z2.size(); ++i) z1[i] -= z2[i];
  std::vector<T> r(full, zero);
  for (std::size_t i = 0; i < z0.size(); ++i) r[i] += z0[i];
  for (std::size_t i = 0; i < z1.size() && i + half < full; ++i) r[i + half] += z1[i];
  for (std::size_t i = 0; i < z2.size() && i + 2 * half < full; ++i) r[i + 2 * half] += z2[i];
  return r;
}

/// Schoolbook over Z/p^N or its ramified extension with one reduction per
/// output coefficient.
std::vector<RingElement> convolve_ring(std::span<const RingElement> a,
                                       std::span<const RingElement> b, std::size_t n,
                                       const RingPtr& ctx);

enum class MulAlgorithm { Auto, Schoolbook, Karatsuba };

template <class T>
std::vector<T> convolve(std::span<const T> a, std::span<const T> b, std::size_t n, const T& zero,
                        MulAlgorithm algo) {
  if (algo == MulAlgorithm::Karatsuba ||
      (algo == MulAlgorithm::Auto && std::min(a.size(), b.size()) >= 8 * kKaratsubaThreshold &&
       !std::is_same_v<T, RingElement>)) {
    auto r = karatsuba_full(a.subspan(0, std::min(a.size(), n)),
                            b.subspan(0, std::min(b.size(), n)), zero);
    r.resize(n, zero);
    return r;
  }
  if constexpr (std::is_same_v<T, RingElement>) {
    return convolve_ring(a, b, n, zero.context());
  } else {
    return convolve_schoolbook(a, b, n, zero);
  }
}

}  // namespace detail

using detail::MulAlgorithm;

/// Truncated Laurent series sum_{n=low}^{qprec-1} c_n q^n + O(q^qprec).
/// Coefficients at and beyond qprec are unknown, not zero.
template <class T>
class LaurentSeries {
 public:
  LaurentSeries(int low, int qprec, std::vector<T> coeffs, T zero)
      : low_(low), qprec_(qprec), coeffs_(std::move(coeffs)), zero_(std::move(zero)) {
    if (qprec_ <= low_) throw Error(ErrorKind::InvalidArgument, "series: qprec must exceed low");
    coeffs_.resize(static_cast<std::size_t>(qprec_ - low_), zero_);
  }

  /// The constant c + O(q^qprec).
  static LaurentSeries constant(const T& c, int qprec) {
    const T zero = CoeffTraits<T>::zero_like(c);
    return LaurentSeries(0, qprec, {c}, zero);
  }

  int low() const noexcept { return low_; }
  int qprec() const noexcept { return qprec_; }
  const std::vector<T>& coeffs() const noexcept { return coeffs_; }
  const T& zero() const noexcept { return zero_; }

  /// Coefficient of q^n. Zero below low; throws past the known precision.
  const T& coeff(int n) const {
    if (n >= qprec_)
      throw Error(ErrorKind::PrecisionShortfall,
                  "coefficient q^" + std::to_string(n) + " beyond qprec " + std::to_string(qprec_));
    if (n < low_) return zero_;
    return coeffs_[static_cast<std::size_t>(n - low_)];
  }

  /// Exponent of the first nonzero coefficient, or qprec if none is known.
  int order() const {
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
      if (!CoeffTraits<T>::is_zero(coeffs_[i])) return low_ + static_cast<int>(i);
    return qprec_;
  }

  LaurentSeries truncate(int qprec) const {
    if (qprec > qprec_)
      throw Error(ErrorKind::PrecisionShortfall, "truncate: requested qprec exceeds known");
    if (qprec <= low_) throw Error(ErrorKind::InvalidArgument, "truncate: qprec must exceed low");
    std::vector<T> c(coeffs_.begin(), coeffs_.begin() + (qprec - low_));
    return LaurentSeries(low_, qprec, std::move(c), zero_);
  }

  /// Multiply by q^k.
  LaurentSeries shift(int k) const { return LaurentSeries(low_ + k, qprec_ + k, coeffs_, zero_); }

  /// Drop leading zero coefficients so low() becomes the order.
  LaurentSeries normalized() const {
    const int ord = order();
    if (ord == low_ || ord >= qprec_) return *this;
    std::vector<T> c(coeffs_.begin() + (ord - low_), coeffs_.end());
    return LaurentSeries(ord, qprec_, std::move(c), zero_);
  }

  template <class U, class F>
  LaurentSeries<U> map(F&& f, const U& zero) const {
    std::vector<U> c;
    c.reserve(coeffs_.size());
    for (const auto& x : coeffs_) c.push_back(f(x));
    return LaurentSeries<U>(low_, qprec_, std::move(c), zero);
  }

  LaurentSeries& operator+=(const LaurentSeries& g) { return accumulate(g, false); }
  LaurentSeries& operator-=(const LaurentSeries& g) { return accumulate(g, true); }

  LaurentSeries operator-() const {
    LaurentSeries r = *this;
    for (auto& c : r.coeffs_) c = zero_ - c;
    return r;
  }

  LaurentSeries scaled(const T& s) const {
    LaurentSeries r = *this;
    for (auto& c : r.coeffs_) c = c * s;
    return r;
  }

  friend LaurentSeries operator+(LaurentSeries f, const LaurentSeries& g) { return f += g; }
  friend LaurentSeries operator-(LaurentSeries f, const LaurentSeries& g) { return f -= g; }
  friend LaurentSeries operator*(const LaurentSeries& f, const LaurentSeries& g) {
    return multiply(f, g, MulAlgorithm::Auto);
  }

  /// qprec(f*g) = min(f.qprec + g.low, g.qprec + f.low).
  static LaurentSeries multiply(const LaurentSeries& f, const LaurentSeries& g, MulAlgorithm algo) {
    f.check_compatible(g);
    const int low = f.low_ + g.low_;
    const int qprec = std::min(f.qprec_ + g.low_, g.qprec_ + f.low_);
    const auto n = static_cast<std::size_t>(qprec - low);
    auto c = detail::convolve<T>(std::span<const T>(f.coeffs_), std::span<const T>(g.coeffs_), n,
                                 f.zero_, algo);
    return LaurentSeries(low, qprec, std::move(c), f.zero_);
  }

  friend bool operator==(const LaurentSeries& f, const LaurentSeries& g) {
    if (f.qprec_ != g.qprec_) return false;
    const int lo = std::min(f.low_, g.low_);
    for (int n = lo; n < f.qprec_; ++n)
      if (!(f.coeff(n) == g.coeff(n))) return false;
    return true;
  }

 private:
  void check_compatible(const LaurentSeries& g) const {
    if (!CoeffTraits<T>::compatible(zero_, g.zero_))
      throw Error(ErrorKind::ContextMismatch, "series over different coefficient rings");
  }

  LaurentSeries& accumulate(const LaurentSeries& g, bool subtract) {
    check_compatible(g);
    const int low = std::min(low_, g.low_);
    const int qprec = std::min(qprec_, g.qprec_);
    if (qprec <= low) throw Error(ErrorKind::PrecisionShortfall, "sum has no known coefficients");
    std::vector<T> c;
    c.reserve(static_cast<std::size_t>(qprec - low));
    for (int n = low; n < qprec; ++n) c.push_back(subtract ? T(coeff(n) - g.coeff(n)) : T(coeff(n) + g.coeff(n)));
    low_ = low;
    qprec_ = qprec;
    coeffs_ = std::move(c);
    return *this;
  }

  int low_;
  int qprec_;
  std::vector<T> coeffs_;
  T zero_;
};

/// g with f*g = 1 to the propagated precision; needs a unit at q^low.
template <class T>
LaurentSeries<T> invert(const LaurentSeries<T>& f) {
  const T& lead = f.coeff(f.low());
  if (!CoeffTraits<T>::is_unit(lead))
    throw Error(ErrorKind::NonUnit, "series_invert: leading coefficient is not a unit");
  const T lead_inv = CoeffTraits<T>::inverse(lead);
  const int rel = f.qprec() - f.low();
  const auto& a = f.coeffs();
  std::vector<T> r(static_cast<std::size_t>(rel), f.zero());
  r[0] = lead_inv;
  for (int n = 1; n < rel; ++n) {
    T s = f.zero();
    for (int k = 1; k <= n; ++k) s += a[static_cast<std::size_t>(k)] * r[static_cast<std::size_t>(n - k)];
    r[static_cast<std::size_t>(n)] = f.zero() - s * lead_inv;
  }
  return LaurentSeries<T>(-f.low(), rel - f.low(), std::move(r), f.zero());
}

/// f^e by repeated squaring; e < 0 inverts first.
template <class T>
LaurentSeries<T> pow(const LaurentSeries<T>& f, long e) {
  if (e < 0) return pow(invert(f), -e);
  const T one = CoeffTraits<T>::one_like(f.zero());
  // Start from the constant 1 at f's relative precision so f^0 keeps it.
  LaurentSeries<T> result = LaurentSeries<T>::constant(one, f.qprec() - f.low());
  if (e == 0) return result;
  LaurentSeries<T> base = f;
  bool first = true;
  while (e > 0) {
    if (e & 1) {
      result = first ? base : result * base;
      first = false;
    }
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

/// U_p on q-expansions: sum a_n q^n -> sum a_{pn} q^n.
template <class T>
LaurentSeries<T> u_p_decimate(const LaurentSeries<T>& f, int p) {
  if (f.low() < 0) throw Error(ErrorKind::InvalidArgument, "u_p_decimate: negative low exponent");
  if (p < 2) throw Error(ErrorKind::InvalidArgument, "u_p_decimate: p < 2");
  const int qprec = (f.qprec() + p - 1) / p;
  std::vector<T> c;
  c.reserve(static_cast<std::size_t>(qprec));
  for (int n = 0; n < qprec; ++n) c.push_back(f.coeff(n * p));
  return LaurentSeries<T>(0, qprec, std::move(c), f.zero());
}

/// Reduce a series over Z or Q into a ring (coefficients must be p-integral).
template <class T>
LaurentSeries<RingElement> to_ring(const LaurentSeries<T>& f, const RingPtr& ctx) {
  return f.map(
      [&](const T& x) {
        if constexpr (std::is_same_v<T, BigInt>) {
          return RingElement(ctx, x);
        } else if constexpr (std::is_same_v<T, Rational>) {
          return RingElement::from_rational(ctx, x);
        } else {
          return x.reduce_to(ctx);
        }
      },
      RingElement::zero(ctx));
}

}  // namespace ocmf
