#include "ocmf/basis.hpp"

#include <algorithm>
#include <set>

#include "ocmf/forms.hpp"

namespace ocmf {

namespace {

long mod(long x, long p) { return ((x % p) + p) % p; }

// Number of points on y^2 = x^3 + A x + B over F_p, including infinity.
long count_points(long A, long B, long p) {
  std::vector<int> squares(static_cast<std::size_t>(p), 0);
  for (long y = 0; y < p; ++y) ++squares[static_cast<std::size_t>(y * y % p)];
  long n = 1;
  for (long x = 0; x < p; ++x) {
    const long rhs = mod(x * x % p * x + A * x + B, p);
    n += squares[static_cast<std::size_t>(rhs)];
  }
  return n;
}

long inverse_mod(long x, long p) {
  long r = 1, e = p - 2, b = mod(x, p);
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

}  // namespace

bool is_supersingular_j(long j, long p) {
  if (!is_prime(p) || p < 5) throw Error(ErrorKind::InvalidArgument, "need a prime p >= 5");
  j = mod(j, p);
  long A, B;
  if (j == 0) {
    A = 0;
    B = 1;
  } else if (j == 1728 % p) {
    A = 1;
    B = 0;
  } else {
    // y^2 = x^3 + 3k x + 2k with k = j / (1728 - j)
    const long k = j * inverse_mod(1728 - j, p) % p;
    A = 3 * k % p;
    B = 2 * k % p;
  }
  const long trace = p + 1 - count_points(A, B, p);
  return mod(trace, p) == 0;
}

std::vector<int> supersingular_residues(long p) {
  std::vector<int> out;
  for (long j = 0; j < p; ++j)
    if (is_supersingular_j(j, p)) out.push_back(static_cast<int>(j));
  return out;
}

SupersingularPair supersingular_pair(int p, LiftPolicy lift) {
  SupersingularPair pair{p, 0, 0, 0, 0};
  switch (p) {
    case 11:
      pair.a = 0;
      pair.b = 1;
      pair.lift_a = 0;
      pair.lift_b = 1728;
      break;
    case 17:
      pair.a = 0;
      pair.b = 8;
      pair.lift_a = 0;
      pair.lift_b = -3375;
      break;
    case 19:
      pair.a = 7;
      pair.b = 18;
      pair.lift_a = -3375;
      pair.lift_b = 1728;
      break;
    default:
      throw Error(ErrorKind::Unsupported,
                  "unsupported prime " + std::to_string(p) + " (need 11, 17 or 19)");
  }
  if (lift == LiftPolicy::Residue) {
    pair.lift_a = pair.a;
    pair.lift_b = pair.b;
  }
  return pair;
}

int default_residual_margin(int d) { return 2 * d; }

int default_qprec(int p, int d) { return p * (2 * d + 1 + default_residual_margin(d)); }

int working_precision(const BasisSpec& spec) { return spec.precision + (spec.d + 1) / 2 + 4; }

std::vector<int> default_index_order(int d) {
  std::vector<int> order{0};
  for (int i = 1; i <= d; ++i) {
    order.push_back(i);
    order.push_back(-i);
  }
  return order;
}

BasisSpec resolve(BasisSpec spec) {
  if (spec.p != 11 && spec.p != 17 && spec.p != 19)
    throw Error(ErrorKind::Unsupported, "unsupported prime " + std::to_string(spec.p));
  if (spec.weight != 0 && (spec.weight < 4 || spec.weight % 2))
    throw Error(ErrorKind::InvalidArgument, "weight must be 0 or even >= 4");
  if (spec.d < 1) throw Error(ErrorKind::InvalidArgument, "dimension d must be >= 1");
  if (spec.precision < 1) throw Error(ErrorKind::InvalidArgument, "precision must be >= 1");
  if (spec.c_unit == 0 || valuation(spec.c_unit, spec.p) != 0)
    throw Error(ErrorKind::InvalidArgument, "c_unit must be a p-adic unit");
  if (spec.weight > 0 && !eisenstein_p_integral(spec.weight, spec.p))
    throw Error(ErrorKind::Integrality,
                "E_" + std::to_string(spec.weight) + " is not p-integral");
  const int n = 2 * spec.d + 1;
  if (spec.qprec == 0) spec.qprec = default_qprec(spec.p, spec.d);
  if (spec.qprec < spec.p * n)
    throw Error(ErrorKind::PrecisionShortfall,
                "qprec " + std::to_string(spec.qprec) + " too small, need at least " +
                    std::to_string(spec.p * n));
  if (spec.index_order.empty()) {
    spec.index_order = default_index_order(spec.d);
  } else {
    auto sorted = spec.index_order;
    std::sort(sorted.begin(), sorted.end());
    auto expected = default_index_order(spec.d);
    std::sort(expected.begin(), expected.end());
    if (sorted != expected)
      throw Error(ErrorKind::InvalidArgument, "index_order must permute -d..d");
  }
  return spec;
}

LaurentSeries<RingElement> build_unit_parameter(const SupersingularPair& pair, int qprec,
                                                const RingPtr& ring, const JSource& source) {
  if (ring->p() != pair.p) throw Error(ErrorKind::ContextMismatch, "ring prime differs from pair");
  if ((pair.lift_b - pair.lift_a) % pair.p == 0)
    throw Error(ErrorKind::InvalidArgument, "supersingular lifts must differ mod p");
  // u to O(q^qprec) needs j to O(q^(qprec-1)).
  const auto j = source ? source(qprec - 1) : j_invariant(qprec - 1);
  if (j.qprec() < qprec - 1 || j.low() != -1)
    throw Error(ErrorKind::PrecisionShortfall, "j-invariant source returned too little");
  const auto jr = to_ring(j.truncate(qprec - 1), ring);
  const auto shifted = [&](const BigInt& c) {
    auto s = jr;
    s -= LaurentSeries<RingElement>::constant(RingElement(ring, c), jr.qprec());
    return s;
  };
  return (shifted(pair.lift_a) * invert(shifted(pair.lift_b))).truncate(qprec);
}

std::size_t BasisFamily::position(int index) const {
  const auto it = std::find(indices.begin(), indices.end(), index);
  if (it == indices.end())
    throw Error(ErrorKind::InvalidArgument, "basis index " + std::to_string(index) + " out of range");
  return static_cast<std::size_t>(it - indices.begin());
}

BasisFamily build_basis(const BasisSpec& requested, const JSource& source) {
  const BasisSpec spec = resolve(requested);
  auto pair = supersingular_pair(spec.p, spec.lift);
  if (spec.swap_pair) {
    std::swap(pair.a, pair.b);
    std::swap(pair.lift_a, pair.lift_b);
  }
  const auto ring = RingContext::make(spec.p, working_precision(spec), true);
  const int qprec = spec.qprec;

  auto u = build_unit_parameter(pair, qprec, ring, source);
  const auto c0 = RingElement::from_rational(ring, spec.c_unit);
  const auto cu = u.scaled(c0);
  const auto cu_inv = invert(cu);

  std::optional<LaurentSeries<RingElement>> ek;
  if (spec.weight > 0) ek = to_ring(eisenstein(spec.weight, qprec), ring);

  // Powers (c0 u)^i for 0 <= |i| <= d.
  const auto one = LaurentSeries<RingElement>::constant(RingElement::one(ring), qprec);
  std::vector<LaurentSeries<RingElement>> pos{one}, neg{one};
  for (int i = 1; i <= spec.d; ++i) {
    pos.push_back(pos.back() * cu);
    neg.push_back(neg.back() * cu_inv);
  }

  BasisFamily fam{spec, pair, ring, u, ek, {}, {}, {}, {}};
  for (int index : spec.index_order) {
    const int m = std::abs(index);
    auto w = index >= 0 ? pos[static_cast<std::size_t>(m)] : neg[static_cast<std::size_t>(m)];
    if (ek) w = *ek * w;
    fam.indices.push_back(index);
    fam.pi_grading.push_back(m);
    fam.elements.push_back(w.scaled(RingElement::pi(ring).pow(static_cast<unsigned long>(m))));
    fam.normalized.push_back(std::move(w));
  }
  return fam;
}

}  // namespace ocmf
