#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ocmf/matrix.hpp"
#include "ocmf/ring.hpp"
#include "ocmf/upmatrix.hpp"

namespace ocmf {

struct EigenResult {
  /// In basis index order; coordinates[normalizing] == 1.
  std::vector<RingElement> coordinates;
  RingElement eigenvalue;
  Rational slope;
  /// min v(M v - lambda v), capped at the ring precision.
  int guaranteed_precision;
  int iterations;
  std::size_t normalizing;
  std::optional<std::uint64_t> seed;
};

struct IterateOptions {
  int steps = 9;
  /// Ratios (M v)_i / v_i at unit coordinates must agree with the eigenvalue
  /// to at least this valuation, else NotSimple.
  int min_agreement = 1;
};

/// Power iteration v <- normalize(P M v), where P eliminates each deflated
/// eigenvector u at its normalizing coordinate c (v <- v - v_c u). The limit
/// w' of P M is mapped back to the eigenvector w' + t u of M. Only unit
/// eigenvalues are supported.
EigenResult power_iterate(const Matrix<RingElement>& m, std::vector<RingElement> start,
                          const std::vector<EigenResult>& deflate = {},
                          const IterateOptions& options = {});

/// As above on the U_p matrix; the result is reduced to the basis precision N.
EigenResult power_iterate(const UpMatrix& m, std::vector<RingElement> start,
                          const std::vector<EigenResult>& deflate = {},
                          const IterateOptions& options = {});

/// Weight 0 only: the slope-0 eigenvector through the constant function,
/// iterated from the index-0 unit vector.
EigenResult noncuspidal_fixed_vector(const UpMatrix& m, const IterateOptions& options = {});

/// Unit vector at position `pos` in the matrix ring.
std::vector<RingElement> unit_vector(const RingPtr& ring, std::size_t n, std::size_t pos);

/// Coordinates drawn uniformly from the units of Z/p^N (mt19937_64).
std::vector<RingElement> random_unit_start(const RingPtr& ring, std::size_t n, std::uint64_t seed);

/// Lowest-slope cuspidal eigenform: deflates the constant-function vector
/// at weight 0 and iterates from `start` (default: the index +1 vector).
EigenResult cuspidal_eigenform(const UpMatrix& m, std::optional<std::uint64_t> seed = {},
                               const IterateOptions& options = {});

}  // namespace ocmf
