#include "ocmf/spectral.hpp"

#include <algorithm>

namespace ocmf {

std::vector<HalfIntValuation> CharSeries::valuations() const {
  std::vector<HalfIntValuation> v;
  v.reserve(coefficients.size());
  for (const auto& c : coefficients) v.push_back(c.valuation());
  return v;
}

std::vector<RingElement> berkowitz(const Matrix<RingElement>& m) {
  if (m.rows() != m.cols()) throw Error(ErrorKind::InvalidArgument, "berkowitz: matrix not square");
  const std::size_t n = m.rows();
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "berkowitz: empty matrix");
  const RingPtr& ring = m(0, 0).context();
  const auto zero = RingElement::zero(ring);
  std::vector<RingElement> poly{RingElement::one(ring)};
  for (std::size_t r = 0; r < n; ++r) {
    // Toeplitz column: 1, -a_rr, -R S, -R A S, ..., -R A^(r-1) S.
    std::vector<RingElement> t{RingElement::one(ring), -m(r, r)};
    std::vector<RingElement> s(r, zero);
    for (std::size_t i = 0; i < r; ++i) s[i] = m(i, r);
    for (std::size_t k = 0; k < r; ++k) {
      RingElement rs = zero;
      for (std::size_t i = 0; i < r; ++i) rs += m(r, i) * s[i];
      t.push_back(-rs);
      if (k + 1 == r) break;
      std::vector<RingElement> next(r, zero);
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) next[i] += m(i, j) * s[j];
      s = std::move(next);
    }
    std::vector<RingElement> out(r + 2, zero);
    for (std::size_t i = 0; i < r + 2; ++i)
      for (std::size_t j = 0; j <= std::min(i, r); ++j) out[i] += t[i - j] * poly[j];
    poly = std::move(out);
  }
  return poly;
}

CharSeries char_series(const Matrix<RingElement>& m, const RingPtr& ring) {
  CharSeries cs{ring, {}};
  for (const auto& c : berkowitz(m)) cs.coefficients.push_back(c.reduce_to(ring));
  return cs;
}

CharSeries char_series(const UpMatrix& m) {
  return char_series(m.entries, RingContext::make(m.spec.p, m.spec.precision, true));
}

int SlopeMultiset::total_multiplicity() const {
  int n = 0;
  for (const auto& s : segments) n += s.multiplicity;
  return n;
}

std::vector<Rational> SlopeMultiset::exact() const {
  std::vector<Rational> out;
  for (const auto& s : segments)
    if (!s.provisional) out.insert(out.end(), s.multiplicity, s.slope);
  return out;
}

std::vector<Rational> SlopeMultiset::expanded() const {
  std::vector<Rational> out;
  for (const auto& s : segments) out.insert(out.end(), s.multiplicity, s.slope);
  return out;
}

namespace {

struct Point {
  long x;
  Rational y;
};

std::vector<Point> lower_hull(const std::vector<Point>& pts) {
  std::vector<Point> hull;
  for (const auto& p : pts) {
    while (hull.size() >= 2) {
      const auto& a = hull[hull.size() - 2];
      const auto& b = hull.back();
      if ((b.y - a.y) * (p.x - a.x) >= (p.y - a.y) * (b.x - a.x))
        hull.pop_back();
      else
        break;
    }
    hull.push_back(p);
  }
  return hull;
}

}  // namespace

SlopeMultiset newton_slopes(const std::vector<HalfIntValuation>& valuations) {
  if (valuations.empty() || valuations.front().is_infinite() || valuations.front().twice() != 0)
    throw Error(ErrorKind::InvalidArgument, "newton_slopes: constant coefficient must be a unit");
  std::vector<Point> finite;
  std::vector<Point> all;
  for (std::size_t i = 0; i < valuations.size(); ++i) {
    const auto& v = valuations[i];
    const long x = static_cast<long>(i);
    if (v.is_infinite()) {
      all.push_back({x, Rational(v.bound())});
    } else {
      finite.push_back({x, v.to_rational()});
      all.push_back(finite.back());
    }
  }
  const auto hull = lower_hull(finite);
  const auto strict = lower_hull(all);

  SlopeMultiset out;
  for (std::size_t k = 1; k < hull.size(); ++k) {
    const auto& a = hull[k - 1];
    const auto& b = hull[k];
    // Interior vanishing coefficients (height >= N) lie above this chord.
    out.segments.push_back({(b.y - a.y) / (b.x - a.x), static_cast<int>(b.x - a.x), false});
  }
  const long last = hull.back().x;
  const long n = all.back().x;
  if (last < n) {
    Rational bound = (all.back().y - hull.back().y) / (n - last);
    if (!out.segments.empty() && out.segments.back().slope > bound) bound = out.segments.back().slope;
    out.segments.push_back({bound, static_cast<int>(n - last), true});
  }
  // Vertices of the strict hull (vanishing coefficients at height N) that
  // are nonvanishing coefficients certify every slope to their left.
  for (std::size_t k = 1; k < strict.size(); ++k) {
    if (valuations[strict[k].x].is_infinite()) break;
    out.certified = static_cast<int>(strict[k].x);
  }
  return out;
}

SlopeMultiset newton_slopes(const CharSeries& cs) { return newton_slopes(cs.valuations()); }

SlopeMultiset remove_noncuspidal(const SlopeMultiset& slopes) {
  SlopeMultiset out = slopes;
  for (auto it = out.segments.begin(); it != out.segments.end(); ++it) {
    if (it->provisional || it->slope != 0) continue;
    if (--it->multiplicity == 0) out.segments.erase(it);
    return out;
  }
  throw Error(ErrorKind::InvalidArgument, "no exact slope-0 entry to remove");
}

Classicality classicality(const Rational& slope, int weight) {
  const Rational bound = weight - 1;
  if (slope < bound) return Classicality::Classical;
  if (slope == bound) return Classicality::Boundary;
  return Classicality::Unknown;
}

std::string to_string(Classicality c) {
  switch (c) {
    case Classicality::Classical:
      return "yes";
    case Classicality::Boundary:
      return "boundary";
    case Classicality::Unknown:
      return "unknown";
  }
  return "unknown";
}

StabilizationReport stabilization_check(const BasisSpec& spec, const std::vector<int>& dims,
                                        const JSource& j) {
  if (dims.empty()) throw Error(ErrorKind::InvalidArgument, "stabilization_check: no dimensions");
  if (!std::is_sorted(dims.begin(), dims.end()))
    throw Error(ErrorKind::InvalidArgument, "stabilization_check: dimensions must ascend");
  StabilizationReport rep{resolve(spec), dims, {}, {}, {}, {}, 0, {}};
  for (int d : dims) {
    BasisSpec s = spec;
    s.d = d;
    s.index_order.clear();
    const auto fam = build_basis(s, j);
    rep.series.push_back(char_series(up_matrix(fam)));
    rep.slopes.push_back(newton_slopes(rep.series.back()));
  }
  const std::size_t len = rep.series.front().coefficients.size();
  std::vector<bool> all(len, true);
  for (std::size_t k = 1; k < dims.size(); ++k) {
    const auto& lo = rep.series[k - 1].coefficients;
    const auto& hi = rep.series[k].coefficients;
    StabilizationPair pair{dims[k - 1], dims[k], {}, -1};
    const std::size_t n = std::min(lo.size(), hi.size());
    for (std::size_t i = 0; i < n; ++i) pair.equal.push_back(lo[i] == hi[i]);
    while (pair.stable_prefix + 1 < static_cast<int>(n) && pair.equal[pair.stable_prefix + 1])
      ++pair.stable_prefix;
    for (std::size_t i = 0; i < len; ++i) all[i] = all[i] && i < n && pair.equal[i];
    rep.pairs.push_back(std::move(pair));
  }
  for (std::size_t i = 0; i < len; ++i)
    if (all[i]) rep.stable_in_all.push_back(static_cast<int>(i));
  rep.stable_prefix = -1;
  while (rep.stable_prefix + 1 < static_cast<int>(len) && all[rep.stable_prefix + 1]) ++rep.stable_prefix;

  rep.stable_slopes = rep.slopes.front().exact();
  for (const auto& s : rep.slopes) {
    const auto e = s.exact();
    std::size_t m = 0;
    while (m < rep.stable_slopes.size() && m < e.size() && rep.stable_slopes[m] == e[m]) ++m;
    rep.stable_slopes.resize(m);
  }
  return rep;
}

}  // namespace ocmf
