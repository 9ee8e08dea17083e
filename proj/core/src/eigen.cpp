#include "ocmf/eigen.hpp"

#include <algorithm>
#include <random>

namespace ocmf {

namespace {

// Lower-precision inputs are lifted by their representatives; the measured
// residual then reflects the lost digits.
RingElement coord_in(const RingElement& x, const RingPtr& ring) {
  if (x.context()->same_as(*ring)) return x;
  if (x.context()->precision() >= ring->precision()) return x.reduce_to(ring);
  return RingElement(ring, x.a(), x.b());
}

void eliminate(std::vector<RingElement>& v, const std::vector<EigenResult>& deflate) {
  for (const auto& u : deflate) {
    const RingElement f = v[u.normalizing];
    if (f.is_zero()) continue;
    for (std::size_t i = 0; i < v.size(); ++i) v[i] -= f * u.coordinates[i];
  }
}

int precision_of(const HalfIntValuation& v, int cap) {
  if (v.is_infinite()) return cap;
  return std::min<int>(cap, static_cast<int>(v.twice() / 2));
}

}  // namespace

std::vector<RingElement> unit_vector(const RingPtr& ring, std::size_t n, std::size_t pos) {
  std::vector<RingElement> v(n, RingElement::zero(ring));
  v.at(pos) = RingElement::one(ring);
  return v;
}

std::vector<RingElement> random_unit_start(const RingPtr& ring, std::size_t n, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  const std::size_t limbs = mpz_sizeinbase(ring->modulus().get_mpz_t(), 2) / 64 + 2;
  std::vector<RingElement> v;
  v.reserve(n);
  while (v.size() < n) {
    BigInt x = 0;
    for (std::size_t l = 0; l < limbs; ++l) {
      x <<= 64;
      x += BigInt(std::to_string(gen()));
    }
    RingElement e(ring, x);
    if (e.is_unit()) v.push_back(std::move(e));
  }
  return v;
}

EigenResult power_iterate(const Matrix<RingElement>& m, std::vector<RingElement> start,
                          const std::vector<EigenResult>& deflate_in, const IterateOptions& options) {
  const std::size_t n = m.rows();
  if (n == 0 || m.cols() != n) throw Error(ErrorKind::InvalidArgument, "power_iterate: bad matrix");
  if (start.size() != n) throw Error(ErrorKind::InvalidArgument, "power_iterate: start size mismatch");
  if (options.steps < 1) throw Error(ErrorKind::InvalidArgument, "power_iterate: steps must be >= 1");
  const RingPtr& ring = m(0, 0).context();
  for (auto& x : start) x = coord_in(x, ring);
  std::vector<EigenResult> deflate = deflate_in;
  for (auto& u : deflate) {
    if (u.coordinates.size() != n)
      throw Error(ErrorKind::InvalidArgument, "power_iterate: deflation vector size mismatch");
    for (auto& x : u.coordinates) x = coord_in(x, ring);
    u.eigenvalue = coord_in(u.eigenvalue, ring);
  }

  auto step = [&](const std::vector<RingElement>& v) {
    auto w = m.apply(v);
    eliminate(w, deflate);
    return w;
  };

  std::vector<RingElement> v = std::move(start);
  eliminate(v, deflate);
  std::optional<std::size_t> c;
  for (int s = 0; s < options.steps; ++s) {
    v = step(v);
    if (!c) {
      for (std::size_t i = 0; i < n && !c; ++i)
        if (v[i].is_unit()) c = i;
      if (!c)
        throw Error(ErrorKind::PrecisionShortfall,
                    "insufficient precision: no unit coordinate after step " + std::to_string(s + 1));
    }
    if (!v[*c].is_unit()) {
      if (std::none_of(v.begin(), v.end(), [](const RingElement& x) { return x.is_unit(); }))
        throw Error(ErrorKind::Unsupported, "iterate lost every unit coordinate at step " +
                                                std::to_string(s + 1) + ": only slope-0 targets are supported");
      throw Error(ErrorKind::NotSimple, "slope not simple within precision: normalizing coordinate " +
                                            std::to_string(*c) + " lost its unit");
    }
    const RingElement inv = v[*c].inverse();
    for (auto& x : v) x *= inv;
  }

  auto w = step(v);
  const RingElement mu = w[*c];
  if (!mu.is_unit())
    throw Error(ErrorKind::Unsupported,
                "eigenvalue of valuation " + mu.valuation().to_string() +
                    ": only slope-0 targets are supported");
  for (std::size_t i = 0; i < n; ++i) {
    if (!v[i].is_unit()) continue;
    const auto agree = (w[i] - mu * v[i]).valuation();
    if (!agree.is_infinite() && agree.twice() < 2 * options.min_agreement)
      throw Error(ErrorKind::NotSimple, "slope not simple within precision: ratio at coordinate " +
                                            std::to_string(i) + " agrees with the eigenvalue only to " +
                                            agree.to_string());
  }

  // Undo the eliminations: w' + t u with t = (M w')_c(u) / (mu - lambda_u).
  for (auto it = deflate.rbegin(); it != deflate.rend(); ++it) {
    const auto mv = m.apply(v);
    const RingElement gap = mu - it->eigenvalue;
    if (!gap.is_unit())
      throw Error(ErrorKind::NotSimple,
                  "slope not simple within precision: eigenvalue congruent to a deflated one (gap "
                  "valuation " + gap.valuation().to_string() + ")");
    const RingElement t = mv[it->normalizing] * gap.inverse();
    for (std::size_t i = 0; i < n; ++i) v[i] += t * it->coordinates[i];
  }
  const RingElement inv = v[*c].inverse();
  for (auto& x : v) x *= inv;

  const auto mv = m.apply(v);
  auto residual = HalfIntValuation::at_least(ring->precision());
  for (std::size_t i = 0; i < n; ++i) residual = std::min(residual, (mv[i] - mu * v[i]).valuation());

  return {std::move(v), mu, Rational(0), precision_of(residual, ring->precision()), options.steps, *c,
          std::nullopt};
}

namespace {

EigenResult reduce_result(EigenResult r, const RingPtr& ring) {
  for (auto& x : r.coordinates) x = x.reduce_to(ring);
  r.eigenvalue = r.eigenvalue.reduce_to(ring);
  r.guaranteed_precision = std::min(r.guaranteed_precision, ring->precision());
  return r;
}

}  // namespace

EigenResult power_iterate(const UpMatrix& m, std::vector<RingElement> start,
                          const std::vector<EigenResult>& deflate, const IterateOptions& options) {
  auto r = power_iterate(m.entries, std::move(start), deflate, options);
  return reduce_result(std::move(r), RingContext::make(m.spec.p, m.spec.precision, true));
}

EigenResult noncuspidal_fixed_vector(const UpMatrix& m, const IterateOptions& options) {
  if (m.spec.weight != 0)
    throw Error(ErrorKind::Unsupported, "noncuspidal_fixed_vector needs weight 0");
  const auto pos = static_cast<std::size_t>(
      std::find(m.indices.begin(), m.indices.end(), 0) - m.indices.begin());
  const RingPtr& ring = m.entries(0, 0).context();
  return power_iterate(m, unit_vector(ring, m.indices.size(), pos), {}, options);
}

EigenResult cuspidal_eigenform(const UpMatrix& m, std::optional<std::uint64_t> seed,
                               const IterateOptions& options) {
  const RingPtr& ring = m.entries(0, 0).context();
  const std::size_t n = m.indices.size();
  std::vector<EigenResult> deflate;
  if (m.spec.weight == 0) {
    const auto pos = static_cast<std::size_t>(
        std::find(m.indices.begin(), m.indices.end(), 0) - m.indices.begin());
    deflate.push_back(power_iterate(m.entries, unit_vector(ring, n, pos), {}, options));
  }
  std::vector<RingElement> start;
  if (seed) {
    start = random_unit_start(ring, n, *seed);
  } else {
    const auto it = std::find(m.indices.begin(), m.indices.end(), 1);
    if (it == m.indices.end()) throw Error(ErrorKind::InvalidArgument, "basis has no index +1");
    start = unit_vector(ring, n, static_cast<std::size_t>(it - m.indices.begin()));
  }
  auto r = power_iterate(m.entries, std::move(start), deflate, options);
  r.seed = seed;
  return reduce_result(std::move(r), RingContext::make(m.spec.p, m.spec.precision, true));
}

}  // namespace ocmf
