#include "ocmf/upmatrix.hpp"

#include <algorithm>

namespace ocmf {

UnitPivotSolver::UnitPivotSolver(Matrix<RingElement> a)
    : n_(a.rows()), lu_(std::move(a)), perm_(n_) {
  if (lu_.rows() != lu_.cols()) throw Error(ErrorKind::InvalidArgument, "solver needs a square matrix");
  for (std::size_t i = 0; i < n_; ++i) perm_[i] = i;
  for (std::size_t c = 0; c < n_; ++c) {
    std::size_t best = c;
    auto best_v = lu_(c, c).valuation();
    for (std::size_t r = c + 1; r < n_ && best_v.twice() != 0; ++r) {
      const auto v = lu_(r, c).valuation();
      if (v < best_v) {
        best = r;
        best_v = v;
      }
    }
    if (best_v.is_infinite() || best_v.twice() != 0)
      throw Error(ErrorKind::SingularSystem,
                  "singular system: column " + std::to_string(c) + " has minimal pivot valuation " +
                      best_v.to_string());
    if (best != c) {
      for (std::size_t k = 0; k < n_; ++k) std::swap(lu_(c, k), lu_(best, k));
      std::swap(perm_[c], perm_[best]);
    }
    pivot_inv_.push_back(lu_(c, c).inverse());
    for (std::size_t r = c + 1; r < n_; ++r) {
      if (lu_(r, c).is_zero()) continue;
      const RingElement f = lu_(r, c) * pivot_inv_.back();
      lu_(r, c) = f;
      for (std::size_t k = c + 1; k < n_; ++k) lu_(r, k) -= f * lu_(c, k);
    }
  }
}

std::vector<RingElement> UnitPivotSolver::solve(std::span<const RingElement> rhs) const {
  if (rhs.size() != n_) throw Error(ErrorKind::InvalidArgument, "rhs size mismatch");
  std::vector<RingElement> y;
  y.reserve(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    RingElement s = rhs[perm_[i]];
    for (std::size_t k = 0; k < i; ++k) s -= lu_(i, k) * y[k];
    y.push_back(std::move(s));
  }
  for (std::size_t i = n_; i-- > 0;) {
    for (std::size_t k = i + 1; k < n_; ++k) y[i] -= lu_(i, k) * y[k];
    y[i] *= pivot_inv_[i];
  }
  return y;
}

namespace {

struct NormalizedSystem {
  UnitPivotSolver solver;
  int margin;
};

int resolve_margin(const BasisFamily& fam, const ExpandOptions& options) {
  return options.residual_margin < 0 ? default_residual_margin(fam.spec.d) : options.residual_margin;
}

NormalizedSystem factor(const BasisFamily& fam, int margin) {
  const std::size_t n = fam.size();
  Matrix<RingElement> s(n, n, RingElement::zero(fam.ring));
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t r = 0; r < n; ++r) s(r, c) = fam.normalized[c].coeff(static_cast<int>(r));
  return {UnitPivotSolver(std::move(s)), margin};
}

// Solve sum y_c normalized(c) = g on q^0..q^(n-1); residual on the next `margin`.
std::pair<std::vector<RingElement>, HalfIntValuation> solve_normalized(
    const NormalizedSystem& sys, const BasisFamily& fam, const LaurentSeries<RingElement>& g) {
  const std::size_t n = fam.size();
  const int rows = static_cast<int>(n) + sys.margin;
  if (g.low() < 0) throw Error(ErrorKind::InvalidArgument, "expand_in_basis: negative low exponent");
  if (g.qprec() < rows)
    throw Error(ErrorKind::PrecisionShortfall,
                "expand_in_basis: series known to q^" + std::to_string(g.qprec()) + ", need q^" +
                    std::to_string(rows) + "; raise qprec");
  std::vector<RingElement> rhs;
  rhs.reserve(n);
  for (std::size_t r = 0; r < n; ++r) rhs.push_back(g.coeff(static_cast<int>(r)));
  auto y = sys.solver.solve(rhs);
  auto residual = HalfIntValuation::at_least(fam.ring->precision());
  for (int r = static_cast<int>(n); r < rows; ++r) {
    RingElement s = g.coeff(r);
    for (std::size_t c = 0; c < n; ++c) s -= y[c] * fam.normalized[c].coeff(r);
    residual = std::min(residual, s.valuation());
  }
  return {std::move(y), residual};
}

HalfIntValuation shift_valuation(const HalfIntValuation& v, int twice) {
  if (v.is_infinite()) return v;
  return HalfIntValuation::finite(v.twice() + twice);
}

void check_residual(const HalfIntValuation& residual, const ExpandOptions& options,
                    const BasisFamily& fam, const std::string& what) {
  const int required = std::min(options.required_residual, fam.ring->precision());
  if (!residual.is_infinite() && residual.twice() < 2 * required)
    throw Error(ErrorKind::ResidualMismatch,
                what + ": residual valuation " + residual.to_string() + " below required " +
                    std::to_string(required) + "; raise d or qprec");
}

}  // namespace

Coordinates expand_in_basis(const LaurentSeries<RingElement>& f, const BasisFamily& fam,
                            const ExpandOptions& options) {
  if (!f.zero().context()->same_as(*fam.ring))
    throw Error(ErrorKind::ContextMismatch, "expand_in_basis: series ring differs from family");
  const auto sys = factor(fam, resolve_margin(fam, options));
  auto [y, residual] = solve_normalized(sys, fam, f);
  check_residual(residual, options, fam, "expand_in_basis");
  Coordinates out{{}, residual};
  for (std::size_t c = 0; c < fam.size(); ++c)
    out.values.push_back(y[c].div_pi_power(fam.pi_grading[c]));
  return out;
}

UpMatrix up_matrix(const BasisFamily& fam, const ExpandOptions& options) {
  const std::size_t n = fam.size();
  const int margin = resolve_margin(fam, options);
  const auto sys = factor(fam, margin);
  const int max_grading = *std::max_element(fam.pi_grading.begin(), fam.pi_grading.end());
  const int guaranteed = fam.ring->precision() - (max_grading + 1) / 2;
  const auto out_ring = RingContext::make(fam.spec.p, guaranteed, true);

  UpMatrix m{fam.spec, fam.indices, Matrix<RingElement>(n, n, RingElement::zero(out_ring)),
             PrecisionReport{fam.spec.precision, fam.ring->precision(), guaranteed, fam.spec.qprec,
                             margin, HalfIntValuation::at_least(fam.ring->precision()), {}}};

  for (std::size_t i = 0; i < n; ++i) {
    // U_p(element(i)) = pi^|i| U_p(normalized(i)); entry (j, i) = pi^(|i|-|j|) y_j.
    const auto g = u_p_decimate(fam.normalized[i], fam.spec.p);
    auto [y, residual] = solve_normalized(sys, fam, g);
    residual = shift_valuation(residual, fam.pi_grading[i]);
    check_residual(residual, options, fam, "up_matrix column " + std::to_string(fam.indices[i]));
    m.report.column_residuals.push_back(residual);
    m.report.residual = std::min(m.report.residual, residual);
    for (std::size_t j = 0; j < n; ++j) {
      const int shift = fam.pi_grading[i] - fam.pi_grading[j];
      try {
        m.entries(j, i) = y[j].mul_pi_power(shift).reduce_to(out_ring);
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::Integrality) throw;
        throw Error(ErrorKind::Integrality, "U_p matrix entry (" + std::to_string(fam.indices[j]) +
                                                ", " + std::to_string(fam.indices[i]) +
                                                ") is not integral: " + e.what());
      }
    }
  }
  return m;
}

}  // namespace ocmf
