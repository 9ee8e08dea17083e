#pragma once

#include <span>
#include <vector>

#include "ocmf/basis.hpp"
#include "ocmf/matrix.hpp"
#include "ocmf/ring.hpp"

namespace ocmf {

/// Gaussian elimination over Z/p^N (or its ramified extension). Each step
/// takes a pivot of minimal valuation in the column and refuses anything
/// that is not a unit.
class UnitPivotSolver {
 public:
  explicit UnitPivotSolver(Matrix<RingElement> a);

  std::vector<RingElement> solve(std::span<const RingElement> rhs) const;
  std::size_t size() const noexcept { return n_; }

 private:
  std::size_t n_;
  Matrix<RingElement> lu_;
  std::vector<std::size_t> perm_;
  std::vector<RingElement> pivot_inv_;
};

struct ExpandOptions {
  /// Extra q-coefficients verified; -1 selects 2d.
  int residual_margin = -1;
  /// Minimum residual valuation (in p-units) before ResidualMismatch is
  /// raised; values above the ring precision demand exact agreement.
  int required_residual = 1;
};

struct Coordinates {
  /// Coefficients of element(i), in the family's index order.
  std::vector<RingElement> values;
  /// Smallest valuation among the verified extra q-coefficients of
  /// f - sum values_i element(i).
  HalfIntValuation residual;
};

/// Coordinates x with sum x_i element(i) = f on q^0 .. q^(2d+margin).
Coordinates expand_in_basis(const LaurentSeries<RingElement>& f, const BasisFamily& fam,
                            const ExpandOptions& options = {});

struct PrecisionReport {
  /// The p-precision N results are reported at.
  int precision;
  /// Internal p-precision of the solve.
  int working_precision;
  /// Precision of the entries after dividing by pi powers.
  int guaranteed_precision;
  int qprec;
  int residual_margin;
  /// Minimum over columns of the residual valuation.
  HalfIntValuation residual;
  std::vector<HalfIntValuation> column_residuals;
};

struct UpMatrix {
  BasisSpec spec;
  std::vector<int> indices;
  /// Column i holds the coordinates of U_p(element(i)), at guaranteed precision.
  Matrix<RingElement> entries;
  PrecisionReport report;
};

UpMatrix up_matrix(const BasisFamily& fam, const ExpandOptions& options = {});

}  // namespace ocmf
