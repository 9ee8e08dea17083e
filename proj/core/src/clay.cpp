#include "ocmf/clay.hpp"

#include <algorithm>
#include <map>

#include "ocmf/error.hpp"

namespace ocmf {

bool FactorialRatio::defined() const {
  auto nonneg = [](std::int64_t n) { return n >= 0; };
  return std::all_of(numerator.begin(), numerator.end(), nonneg) &&
         std::all_of(denominator.begin(), denominator.end(), nonneg);
}

std::optional<std::int64_t> FactorialRatio::valuation() const {
  if (!defined()) return std::nullopt;
  std::int64_t v = exponent;
  for (auto n : numerator) v += factorial_valuation(n, p);
  for (auto n : denominator) v -= factorial_valuation(n, p);
  return v;
}

std::int64_t clay_slope_p5(std::int64_t i) {
  if (i < 1) throw Error(ErrorKind::InvalidArgument, "clay_slope_p5: index must be >= 1");
  return *clay_formula(5, i, 0).valuation();
}

int clay_period(int p) {
  switch (p) {
    case 5:
    case 11:
    case 17:
    case 19:
      return (p * p - 1) / 24;
    default:
      throw Error(ErrorKind::Unsupported, "no slope formulas for p = " + std::to_string(p));
  }
}

namespace {

// Genus-1 shape: p^(a j + e) (b j + x)! (b j + y)! / ((j-1)!)^2.
FactorialRatio shifted(std::int64_t p, std::int64_t a, std::int64_t b, std::int64_t j,
                       std::int64_t e, std::int64_t x, std::int64_t y) {
  return {p, a * j + e, {b * j + x, b * j + y}, {j - 1, j - 1}};
}

// k = 0 shape: p^(a j) (b j)! (b j - 1)! / (j! (j-1)!).
FactorialRatio leading(std::int64_t p, std::int64_t a, std::int64_t b, std::int64_t j) {
  return {p, a * j, {b * j, b * j - 1}, {j, j - 1}};
}

}  // namespace

FactorialRatio clay_formula(int p, std::int64_t j, int k) {
  const int period = clay_period(p);
  if (k < 0 || k >= period) throw Error(ErrorKind::InvalidArgument, "clay_formula: k out of range");
  switch (p) {
    case 5:
      // Single formula indexed directly by i (passed as j).
      return {5, j, {3 * j - 1, 3 * j}, {j, j - 1}};
    case 11:
      if (k == 0) return leading(11, 4, 6, j);
      if (k == 1) return shifted(11, 4, 6, j, -4, -6, -6);
      return shifted(11, 4, 6, j, k - 5, k - 6, k - 7);
    case 17:
      if (k == 0) return leading(17, 7, 9, j);
      if (k == 1) return shifted(17, 7, 9, j, -7, -9, -9);
      if (k <= 4) return shifted(17, 7, 9, j, k - 9, k - 11, k - 10);
      if (k <= 8) return shifted(17, 7, 9, j, k - 10, k - 12, k - 11);
      return shifted(17, 7, 9, j, k - 11, k - 13, k - 12);
    case 19:
      if (k == 0) return leading(19, 8, 10, j);
      if (k == 1) return shifted(19, 8, 10, j, -8, -10, -10);
      if (k <= 4) return shifted(19, 8, 10, j, k - 10, k - 11, k - 12);
      if (k <= 7) return shifted(19, 8, 10, j, k - 11, k - 12, k - 13);
      if (k <= 10) return shifted(19, 8, 10, j, k - 12, k - 13, k - 14);
      if (k <= 12) return shifted(19, 8, 10, j, k - 13, k - 14, k - 15);
      return shifted(19, 8, 10, j, k - 14, k - 15, k - 16);
  }
  throw Error(ErrorKind::Unsupported, "no slope formulas for p = " + std::to_string(p));
}

std::vector<std::int64_t> ClayPrediction::defined() const {
  std::vector<std::int64_t> out;
  for (const auto& e : entries)
    if (e.slope) out.push_back(*e.slope);
  return out;
}

ClayPrediction clay_slopes(int p, int count) {
  if (count < 1) throw Error(ErrorKind::InvalidArgument, "clay_slopes: count must be >= 1");
  const int period = clay_period(p);
  ClayPrediction pred{p, period, {}, {}, {}};
  if (p == 5) {
    pred.convention = "i -> s(i), i = 1.." + std::to_string(count);
  } else {
    pred.convention = "i = " + std::to_string(period) +
                      "j + k, 0 <= k < " + std::to_string(period) +
                      "; s_k(j) in formula order; negative factorial arguments are undefined";
  }
  if (p == 11) pred.corrections.push_back("k = 0 case evaluated with v_11 (displayed as v_5)");
  if (p == 17) pred.corrections.push_back("i = 12j + k (displayed as 12i + j)");
  if (p == 19) {
    pred.corrections.push_back("i = 15j + k (displayed as 15i + j)");
    pred.corrections.push_back("k = 0 case uniformly in j: (10j)! (10j-1)! / (j! (j-1)!)");
  }
  for (std::int64_t i = 1; i <= count; ++i) {
    const std::int64_t j = p == 5 ? i : i / period;
    const int k = p == 5 ? 0 : static_cast<int>(i % period);
    pred.entries.push_back({i, j, k, clay_formula(p, j, k).valuation()});
  }
  return pred;
}

ClayComparison compare_predictions(const ClayPrediction& pred,
                                   const std::vector<Rational>& computed, int window) {
  const auto defined = pred.defined();
  if (window < 1 || window > static_cast<int>(defined.size()) ||
      window > static_cast<int>(computed.size()))
    throw Error(ErrorKind::InvalidArgument, "compare_predictions: window exceeds available slopes");
  ClayComparison out{window, {}, {}, true, {}, pred.convention +
                                                    "; smallest " + std::to_string(window) +
                                                    " defined predictions among i = 1.." +
                                                    std::to_string(pred.entries.size()) + " vs first " +
                                                    std::to_string(window) +
                                                    " computed slopes, as sorted multisets"};
  auto sorted = defined;
  std::sort(sorted.begin(), sorted.end());
  for (int i = 0; i < window; ++i) {
    out.predicted.emplace_back(sorted[i]);
    out.computed.push_back(computed[i]);
  }
  std::sort(out.computed.begin(), out.computed.end());
  std::map<Rational, int> balance;
  for (const auto& s : out.predicted) ++balance[s];
  for (const auto& s : out.computed) --balance[s];
  for (const auto& [slope, n] : balance) {
    for (int c = 0; c < n; ++c) out.mismatches.push_back("predicted only: " + to_string(slope));
    for (int c = 0; c < -n; ++c) out.mismatches.push_back("computed only: " + to_string(slope));
  }
  out.match = out.mismatches.empty();
  return out;
}

}  // namespace ocmf
