#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "ocmf/arith.hpp"
#include "ocmf/qseries.hpp"
#include "ocmf/ring.hpp"

namespace ocmf {

/// How the two supersingular residues are lifted to integers when forming
/// u = (j - a)/(j - b).
enum class LiftPolicy {
  /// Integral CM j-invariants reducing to the residues.
  Cm,
  /// The residues themselves.
  Residue,
};

struct SupersingularPair {
  int p;
  int a;  // residues, a < b
  int b;
  BigInt lift_a;
  BigInt lift_b;
};

/// The two supersingular j-invariants mod p for p in {11, 17, 19}.
SupersingularPair supersingular_pair(int p, LiftPolicy lift = LiftPolicy::Cm);

/// Brute-force oracle: whether the curve with j-invariant j (mod p) is
/// supersingular, by counting points on a model over F_p.
bool is_supersingular_j(long j, long p);

/// All supersingular residues mod p found by point counting.
std::vector<int> supersingular_residues(long p);

struct BasisSpec {
  int p = 11;
  int weight = 0;
  int d = 6;
  int precision = 13;
  /// 0 selects default_qprec.
  int qprec = 0;
  LiftPolicy lift = LiftPolicy::Cm;
  /// Swap the roles of a and b (z <-> unit multiple of p/z).
  bool swap_pair = false;
  /// The annulus constant is c = pi * c_unit; c_unit must be a p-adic unit.
  Rational c_unit = 1;
  /// Signed basis indices in order (+i <-> z^i, -i <-> (p/z)^i). Empty
  /// selects 0, +1, -1, ..., +d, -d.
  std::vector<int> index_order;
};

/// Extra q-coefficients checked beyond the square system.
int default_residual_margin(int d);
/// p * (2d + 1 + margin): enough for the square solve plus the margin after U_p.
int default_qprec(int p, int d);
/// Internal p-adic precision, N + ceil(d/2) + 4, covering the pi regrading.
int working_precision(const BasisSpec& spec);
std::vector<int> default_index_order(int d);

/// Checks a BasisSpec and fills in qprec and index_order.
BasisSpec resolve(BasisSpec spec);

using JSource = std::function<LaurentSeries<BigInt>(int qprec)>;

/// u = (j - a)/(j - b) in the ring; low 0 and constant term 1.
LaurentSeries<RingElement> build_unit_parameter(const SupersingularPair& pair, int qprec,
                                                const RingPtr& ring, const JSource& j = {});

struct BasisFamily {
  BasisSpec spec;
  SupersingularPair pair;
  /// Ramified ring at working precision.
  RingPtr ring;
  LaurentSeries<RingElement> u;
  /// E_k in the ring, or nullopt at weight 0.
  std::optional<LaurentSeries<RingElement>> eisenstein;
  std::vector<int> indices;
  /// |i| for index i; element(i) = pi^grading * normalized(i).
  std::vector<int> pi_grading;
  /// E_k * c_unit^{+-i} * u^{+-i}: the pi-free family the solver works on.
  std::vector<LaurentSeries<RingElement>> normalized;
  /// E_k z^i and E_k (p/z)^i themselves.
  std::vector<LaurentSeries<RingElement>> elements;

  std::size_t size() const noexcept { return indices.size(); }
  /// Position of signed index i in the ordering.
  std::size_t position(int index) const;
  const LaurentSeries<RingElement>& element(int index) const { return elements[position(index)]; }
};

BasisFamily build_basis(const BasisSpec& spec, const JSource& j = {});

}  // namespace ocmf
