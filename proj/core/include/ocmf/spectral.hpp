#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ocmf/basis.hpp"
#include "ocmf/matrix.hpp"
#include "ocmf/ring.hpp"
#include "ocmf/upmatrix.hpp"

namespace ocmf {

/// det(1 - tM) = sum c_i t^i with c_0 = 1, reduced modulo p^N.
struct CharSeries {
  RingPtr ring;
  std::vector<RingElement> coefficients;

  std::size_t degree() const noexcept { return coefficients.size() - 1; }
  std::vector<HalfIntValuation> valuations() const;
};

/// Division-free (Berkowitz) characteristic polynomial: the coefficients of
/// det(xI - M) from x^n downwards, which are also c_0..c_n of det(1 - tM).
std::vector<RingElement> berkowitz(const Matrix<RingElement>& m);

/// det(1 - tM), reduced to `ring` (same prime, precision at most the entries').
CharSeries char_series(const Matrix<RingElement>& m, const RingPtr& ring);
/// det(1 - tM) reported at the basis precision N.
CharSeries char_series(const UpMatrix& m);

struct SlopeSegment {
  Rational slope;
  int multiplicity;
  /// The slope is only a lower bound: the trailing run over coefficients
  /// that vanish mod p^N.
  bool provisional = false;
};

struct SlopeMultiset {
  /// Ascending.
  std::vector<SlopeSegment> segments;
  /// Number of leading slopes that stay on the hull even when every
  /// vanishing coefficient is given valuation exactly N.
  int certified = 0;

  int total_multiplicity() const;
  /// Exact slopes expanded by multiplicity.
  std::vector<Rational> exact() const;
  /// All slopes expanded, provisional ones as their lower bounds.
  std::vector<Rational> expanded() const;
};

/// Lower convex hull of the points (i, v(c_i)) with c_i nonzero mod p^N.
/// Vanishing coefficients after the last such point form one provisional
/// segment whose slope is a lower bound.
SlopeMultiset newton_slopes(const std::vector<HalfIntValuation>& valuations);
SlopeMultiset newton_slopes(const CharSeries& cs);

/// Removes one exact slope-0 entry, the one carried by the Eisenstein
/// (constant at weight 0) eigenvector. Throws InvalidArgument if none.
SlopeMultiset remove_noncuspidal(const SlopeMultiset& slopes);

enum class Classicality { Classical, Boundary, Unknown };

/// Coleman's threshold: classical below k - 1, boundary at k - 1.
Classicality classicality(const Rational& slope, int weight);
/// "yes", "boundary", "unknown".
std::string to_string(Classicality c);

struct StabilizationPair {
  int d_low;
  int d_high;
  /// Per coefficient index i < min(len): equal mod p^N.
  std::vector<bool> equal;
  /// Largest i with c_0..c_i all equal.
  int stable_prefix;
};

struct StabilizationReport {
  BasisSpec spec;
  std::vector<int> dims;
  std::vector<CharSeries> series;
  std::vector<SlopeMultiset> slopes;
  std::vector<StabilizationPair> pairs;
  /// Coefficient indices equal across every consecutive pair.
  std::vector<int> stable_in_all;
  /// Largest i with c_0..c_i unchanged across all runs.
  int stable_prefix;
  /// Longest common prefix of the exact expanded slope lists.
  std::vector<Rational> stable_slopes;
};

/// Runs the pipeline at each d (ascending) with the other fields of `spec`
/// held fixed; qprec is resolved per d when spec.qprec is 0.
StabilizationReport stabilization_check(const BasisSpec& spec, const std::vector<int>& dims,
                                        const JSource& j = {});

}  // namespace ocmf
