#include "doctest.h"

#include "gen.hpp"
#include "ocmf/error.hpp"
#include "ocmf/eigen.hpp"
#include "ocmf/spectral.hpp"

using namespace ocmf;

namespace {

Matrix<RingElement> mat2(const RingPtr& R, long a, long b, long c, long d) {
  Matrix<RingElement> m(2, 2, RingElement::zero(R));
  m(0, 0) = RingElement(R, a);
  m(0, 1) = RingElement(R, b);
  m(1, 0) = RingElement(R, c);
  m(1, 1) = RingElement(R, d);
  return m;
}

std::vector<RingElement> vec(const RingPtr& R, std::initializer_list<long> v) {
  std::vector<RingElement> out;
  for (long x : v) out.emplace_back(R, x);
  return out;
}

UpMatrix p19() {
  BasisSpec s;
  s.p = 19;
  s.d = 6;
  s.precision = 9;
  return up_matrix(build_basis(s));
}

}  // namespace

TEST_CASE("diagonal unit eigenvalue dominates") {
  const auto R = RingContext::make(11, 10, true);
  IterateOptions o;
  o.steps = 12;
  const auto r = power_iterate(mat2(R, 1, 0, 0, 11), vec(R, {1, 1}), {}, o);
  CHECK(r.eigenvalue == RingElement::one(R));
  CHECK(r.coordinates == vec(R, {1, 0}));
  CHECK(r.normalizing == 0);
  CHECK(r.guaranteed_precision == 10);
}

TEST_CASE("upper triangular closed form") {
  const auto R = RingContext::make(11, 10, true);
  IterateOptions o;
  o.steps = 12;
  const auto r = power_iterate(mat2(R, 1, 1, 0, 11), vec(R, {1, 1}), {}, o);
  CHECK(r.eigenvalue == RingElement::one(R));
  CHECK(r.coordinates == vec(R, {1, 0}));
}

TEST_CASE("error cases") {
  const auto R = RingContext::make(11, 6, true);
  CHECK_THROWS_AS(power_iterate(mat2(R, 1, 0, 0, 2), vec(R, {1, 1})), Error);  // two unit eigenvalues
  try {
    power_iterate(mat2(R, 1, 0, 0, 2), vec(R, {1, 1}));
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotSimple);
  }
  try {
    power_iterate(mat2(R, 11, 0, 0, 121), vec(R, {1, 1}));
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::PrecisionShortfall);  // every coordinate non-unit
  }
  try {
    power_iterate(mat2(R, 11, 1, 0, 121), vec(R, {0, 1}));
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Unsupported);  // positive slope target
  }
  CHECK_THROWS_AS(power_iterate(mat2(R, 1, 0, 0, 1), vec(R, {1})), Error);
}

TEST_CASE("deflation recovers the second eigenvector") {
  // Eigenvalues 1 (vector (1,0)) and 2 + 11 = 13 (vector (1, 12)); deflating the first.
  const auto R = RingContext::make(11, 8, true);
  const auto m = mat2(R, 1, 1, 0, 13);
  IterateOptions o;
  o.steps = 3;
  const auto first = power_iterate(m, vec(R, {1, 0}), {}, o);
  CHECK(first.coordinates == vec(R, {1, 0}));
  const auto second = power_iterate(m, vec(R, {1, 1}), {first}, o);
  CHECK(second.eigenvalue == RingElement(R, 13));
  CHECK(second.coordinates[0] * RingElement(R, 12) == second.coordinates[1]);
  CHECK(second.guaranteed_precision == 8);
}

TEST_CASE("constant function is the non-cuspidal fixed vector") {
  const auto m = p19();
  const auto u = noncuspidal_fixed_vector(m);
  CHECK(u.eigenvalue == RingElement::one(u.eigenvalue.context()));
  CHECK(u.coordinates[0] == RingElement::one(u.eigenvalue.context()));
  CHECK(u.slope == 0);
  BasisSpec s;
  s.p = 17;
  s.weight = 4;
  s.d = 2;
  s.precision = 4;
  CHECK_THROWS_AS(noncuspidal_fixed_vector(up_matrix(build_basis(s))), Error);
}

TEST_CASE("cuspidal eigenform invariants") {
  const auto m = p19();
  IterateOptions o;
  o.steps = 12;
  const auto r = cuspidal_eigenform(m, std::nullopt, o);
  const auto& R = r.eigenvalue.context();
  CHECK(R->precision() == 9);
  CHECK(r.eigenvalue.is_unit());
  CHECK(r.coordinates[r.normalizing] == RingElement::one(R));
  CHECK(r.guaranteed_precision == 9);
  // Residual bound, checked against the matrix reduced to N.
  std::vector<RingElement> mv(r.coordinates.size(), RingElement::zero(R));
  for (std::size_t i = 0; i < mv.size(); ++i)
    for (std::size_t j = 0; j < mv.size(); ++j) mv[i] += m.entries(i, j).reduce_to(R) * r.coordinates[j];
  for (std::size_t i = 0; i < mv.size(); ++i) CHECK((mv[i] - r.eigenvalue * r.coordinates[i]).is_zero());
  // Slope consistency: the least cuspidal slope is 0.
  const auto cusp = remove_noncuspidal(newton_slopes(char_series(m)));
  CHECK(cusp.exact().front() == 0);
}

TEST_CASE("start independence") {
  const auto m = p19();
  IterateOptions o;
  o.steps = 12;
  const auto a = cuspidal_eigenform(m, 1, o);
  const auto b = cuspidal_eigenform(m, 2, o);
  const auto c = cuspidal_eigenform(m, std::nullopt, o);
  CHECK(a.seed == 1);
  CHECK(a.coordinates == b.coordinates);
  CHECK(a.eigenvalue == c.eigenvalue);
  CHECK(a.coordinates == c.coordinates);
}

TEST_CASE("seeded starts are deterministic units") {
  const auto R = RingContext::make(17, 6, true);
  const auto a = random_unit_start(R, 8, 5), b = random_unit_start(R, 8, 5);
  CHECK(a == b);
  for (const auto& x : a) CHECK(x.is_unit());
  CHECK(random_unit_start(R, 8, 6) != a);
}
