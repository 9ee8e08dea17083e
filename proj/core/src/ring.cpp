#include "ocmf/ring.hpp"

#include "ocmf/error.hpp"

namespace ocmf {

namespace {

void reduce_mod(BigInt& x, const BigInt& m) {
  mpz_fdiv_r(x.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
}

// v_p of a residue, or -1 for zero.
std::int64_t residue_valuation(const BigInt& x, const BigInt& prime) {
  if (x == 0) return -1;
  BigInt rest;
  return static_cast<std::int64_t>(mpz_remove(rest.get_mpz_t(), x.get_mpz_t(), prime.get_mpz_t()));
}

}  // namespace

RingContext::RingContext(std::int64_t p, int precision, bool ramified)
    : p_(p), precision_(precision), ramified_(ramified), prime_(static_cast<long>(p)) {
  if (!is_prime(p)) throw Error(ErrorKind::InvalidArgument, "ring: p is not prime");
  if (precision < 1) throw Error(ErrorKind::InvalidArgument, "ring: precision must be >= 1");
  modulus_ = ocmf::pow(prime_, static_cast<unsigned long>(precision));
}

RingPtr RingContext::make(std::int64_t p, int precision, bool ramified) {
  return std::make_shared<const RingContext>(p, precision, ramified);
}

Rational HalfIntValuation::to_rational() const {
  Rational r(BigInt(static_cast<long>(twice_)), BigInt(2));
  r.canonicalize();
  return r;
}

std::string HalfIntValuation::to_string() const {
  if (infinite_) return ">=" + std::to_string(bound_);
  return ocmf::to_string(to_rational());
}

RingElement::RingElement(RingPtr ctx, BigInt a, BigInt b)
    : ctx_(std::move(ctx)), a_(std::move(a)), b_(std::move(b)) {
  if (!ctx_) throw Error(ErrorKind::InvalidArgument, "ring element without context");
  if (!ctx_->ramified() && b_ != 0)
    throw Error(ErrorKind::InvalidArgument, "pi component in unramified ring");
  normalize();
}

RingElement RingElement::pi(const RingPtr& ctx) {
  if (!ctx->ramified()) throw Error(ErrorKind::InvalidArgument, "pi needs the ramified ring");
  return RingElement(ctx, 0, 1);
}

RingElement RingElement::from_rational(const RingPtr& ctx, const Rational& x) {
  const BigInt den = x.get_den();
  BigInt inv;
  if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), ctx->modulus().get_mpz_t()) == 0)
    throw Error(ErrorKind::NonUnit, "rational " + ocmf::to_string(x) + " is not p-integral");
  return RingElement(ctx, BigInt(x.get_num()) * inv);
}

void RingElement::normalize() {
  reduce_mod(a_, ctx_->modulus());
  if (b_ != 0) reduce_mod(b_, ctx_->modulus());
}

void RingElement::check_same(const RingElement& y) const {
  if (!ctx_->same_as(*y.ctx_))
    throw Error(ErrorKind::ContextMismatch, "ring elements from different contexts");
}

bool RingElement::is_unit() const {
  return mpz_divisible_p(a_.get_mpz_t(), ctx_->prime().get_mpz_t()) == 0;
}

HalfIntValuation RingElement::valuation() const {
  const auto va = residue_valuation(a_, ctx_->prime());
  const auto vb = residue_valuation(b_, ctx_->prime());
  if (va < 0 && vb < 0) return HalfIntValuation::at_least(ctx_->precision());
  if (vb < 0) return HalfIntValuation::finite(2 * va);
  if (va < 0) return HalfIntValuation::finite(2 * vb + 1);
  return HalfIntValuation::finite(std::min(2 * va, 2 * vb + 1));
}

RingElement RingElement::inverse() const {
  if (!is_unit())
    throw Error(ErrorKind::NonUnit, "non-unit pivot (valuation " + valuation().to_string() + ")");
  // (a + b pi)^-1 = (a - b pi) / (a^2 - p b^2)
  BigInt norm = a_ * a_ - ctx_->prime() * b_ * b_;
  reduce_mod(norm, ctx_->modulus());
  BigInt inv;
  mpz_invert(inv.get_mpz_t(), norm.get_mpz_t(), ctx_->modulus().get_mpz_t());
  return RingElement(ctx_, a_ * inv, -b_ * inv);
}

RingElement RingElement::pow(unsigned long e) const {
  RingElement result = one(ctx_);
  RingElement base = *this;
  while (e) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

RingElement RingElement::mul_pi_power(int m) const {
  if (m < 0) return div_pi_power(-m);
  RingElement x = *this;
  if (m == 0) return x;
  if (!ctx_->ramified() && m % 2 == 1)
    throw Error(ErrorKind::InvalidArgument, "odd pi power in unramified ring");
  x.a_ *= ocmf::pow(ctx_->prime(), static_cast<unsigned long>(m / 2));
  x.b_ *= ocmf::pow(ctx_->prime(), static_cast<unsigned long>(m / 2));
  if (m % 2 == 1) {
    // (a + b pi) pi = p b + a pi
    BigInt na = ctx_->prime() * x.b_;
    x.b_ = x.a_;
    x.a_ = na;
  }
  x.normalize();
  return x;
}

RingElement RingElement::div_pi_power(int m) const {
  if (m < 0) return mul_pi_power(-m);
  if (m == 0 || is_zero()) return *this;
  const auto v = valuation();
  if (v.twice() < m)
    throw Error(ErrorKind::Integrality,
                "cannot divide element of valuation " + v.to_string() + " by pi^" +
                    std::to_string(m));
  if (!ctx_->ramified() && m % 2 == 1)
    throw Error(ErrorKind::InvalidArgument, "odd pi power in unramified ring");
  RingElement x = *this;
  const auto& p = ctx_->prime();
  if (m % 2 == 1) {
    // (a + b pi) / pi = b + (a/p) pi
    BigInt nb;
    mpz_divexact(nb.get_mpz_t(), x.a_.get_mpz_t(), p.get_mpz_t());
    x.a_ = x.b_;
    x.b_ = nb;
  }
  const BigInt q = ocmf::pow(p, static_cast<unsigned long>(m / 2));
  if (m / 2 > 0) {
    mpz_divexact(x.a_.get_mpz_t(), x.a_.get_mpz_t(), q.get_mpz_t());
    mpz_divexact(x.b_.get_mpz_t(), x.b_.get_mpz_t(), q.get_mpz_t());
  }
  x.normalize();
  return x;
}

RingElement RingElement::reduce_to(const RingPtr& target) const {
  if (target->p() != ctx_->p())
    throw Error(ErrorKind::ContextMismatch, "reduce_to: different primes");
  if (target->precision() > ctx_->precision())
    throw Error(ErrorKind::PrecisionShortfall, "reduce_to: target precision exceeds source");
  if (!target->ramified() && ctx_->ramified() && b_ != 0)
    throw Error(ErrorKind::ContextMismatch, "reduce_to: pi component into unramified ring");
  return RingElement(target, a_, target->ramified() ? b_ : BigInt(0));
}

std::string RingElement::to_string() const {
  if (b_ == 0) return a_.get_str();
  return a_.get_str() + "+" + b_.get_str() + "*pi";
}

RingElement& RingElement::operator+=(const RingElement& y) {
  check_same(y);
  a_ += y.a_;
  b_ += y.b_;
  normalize();
  return *this;
}

RingElement& RingElement::operator-=(const RingElement& y) {
  check_same(y);
  a_ -= y.a_;
  b_ -= y.b_;
  normalize();
  return *this;
}

RingElement& RingElement::operator*=(const RingElement& y) {
  check_same(y);
  if (b_ == 0 && y.b_ == 0) {
    a_ *= y.a_;
  } else {
    BigInt na = a_ * y.a_ + ctx_->prime() * b_ * y.b_;
    BigInt nb = a_ * y.b_ + b_ * y.a_;
    a_.swap(na);
    b_.swap(nb);
  }
  normalize();
  return *this;
}

RingElement RingElement::operator-() const { return RingElement(ctx_, -a_, -b_); }

bool operator==(const RingElement& x, const RingElement& y) {
  return x.ctx_->same_as(*y.ctx_) && x.a_ == y.a_ && x.b_ == y.b_;
}

RingElement parse_ring_element(const RingPtr& ctx, const std::string& text) {
  const auto bad = [&] { return Error(ErrorKind::InvalidArgument, "bad ring element: " + text); };
  const auto plus = text.find('+');
  BigInt a, b;
  if (plus == std::string::npos) {
    if (a.set_str(text, 10) != 0) throw bad();
    return RingElement(ctx, a);
  }
  const std::string tail = text.substr(plus + 1);
  if (tail.size() < 4 || tail.substr(tail.size() - 3) != "*pi") throw bad();
  if (a.set_str(text.substr(0, plus), 10) != 0) throw bad();
  if (b.set_str(tail.substr(0, tail.size() - 3), 10) != 0) throw bad();
  return RingElement(ctx, a, b);
}

}  // namespace ocmf
