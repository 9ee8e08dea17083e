#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ocmf/arith.hpp"

namespace ocmf {

/// v_p(p^e * prod num_i! / prod den_i!). Undefined (nullopt) when any
/// factorial argument is negative.
struct FactorialRatio {
  std::int64_t p;
  std::int64_t exponent;
  std::vector<std::int64_t> numerator;
  std::vector<std::int64_t> denominator;

  bool defined() const;
  std::optional<std::int64_t> valuation() const;
};

/// v_5(5^i (3i-1)! (3i)! / (i! (i-1)!)), i >= 1.
std::int64_t clay_slope_p5(std::int64_t i);

/// Number of case formulas, (p^2 - 1)/24.
int clay_period(int p);

/// The case formula s_k(j) for p in {5, 11, 17, 19}; k < clay_period(p).
FactorialRatio clay_formula(int p, std::int64_t j, int k);

struct ClayEntry {
  std::int64_t index;  // i = period * j + k
  std::int64_t j;
  int k;
  std::optional<std::int64_t> slope;
};

struct ClayPrediction {
  int p;
  std::int64_t period;
  std::vector<ClayEntry> entries;  // i = 1..count, formula order
  std::string convention;
  /// Corrections applied to the displayed formulas.
  std::vector<std::string> corrections;

  /// Defined values in formula order.
  std::vector<std::int64_t> defined() const;
};

/// Evaluates i = 1..count. Throws Unsupported for other p.
ClayPrediction clay_slopes(int p, int count);

struct ClayComparison {
  int window;
  std::vector<Rational> predicted;  // sorted
  std::vector<Rational> computed;   // sorted
  bool match;
  /// Slopes in one window but not the other (multiset difference),
  /// prefixed "predicted only: " or "computed only: ".
  std::vector<std::string> mismatches;
  std::string convention;
};

/// Compares the `window` smallest defined predictions among the evaluated
/// entries with the first `window` computed slopes (ascending), as sorted
/// multisets. Evaluate enough periods that later entries cannot undercut.
ClayComparison compare_predictions(const ClayPrediction& pred,
                                   const std::vector<Rational>& computed, int window);

}  // namespace ocmf
