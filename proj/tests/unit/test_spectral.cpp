#include "doctest.h"

#include "gen.hpp"
#include "oracles.hpp"
#include "ocmf/spectral.hpp"

using namespace ocmf;
using namespace ocmf::testing;

namespace {

std::vector<HalfIntValuation> vals(std::initializer_list<int> v) {
  std::vector<HalfIntValuation> out;
  for (int x : v) out.push_back(HalfIntValuation::finite(2 * x));
  return out;
}

std::vector<Rational> rats(std::initializer_list<int> v) {
  std::vector<Rational> out;
  for (int x : v) out.emplace_back(x);
  return out;
}

}  // namespace

TEST_CASE("triangular and zero matrices") {
  const auto R = RingContext::make(11, 8, true);
  Matrix<RingElement> m(2, 2, RingElement::zero(R));
  m(0, 0) = RingElement(R, 11);
  m(1, 1) = RingElement(R, 121);
  const auto cs = char_series(m, R);
  CHECK(cs.coefficients == std::vector<RingElement>{RingElement::one(R), RingElement(R, -(11 + 121)),
                                                    RingElement(R, 1331)});
  const auto z = char_series(Matrix<RingElement>(3, 3, RingElement::zero(R)), R);
  CHECK(z.coefficients[0] == RingElement::one(R));
  for (std::size_t i = 1; i < 4; ++i) CHECK(z.coefficients[i].is_zero());
}

TEST_CASE("Berkowitz against the cofactor oracle") {
  testing::Gen g(41);
  for (bool ramified : {false, true}) {
    const auto R = RingContext::make(11, 6, ramified);
    for (int t = 0; t < 60; ++t) {
      const auto n = static_cast<std::size_t>(g.uniform(1, 5));
      const auto m = g.matrix(R, n);
      REQUIRE(berkowitz(m) == oracle_char_series(m));
    }
  }
}

TEST_CASE("c_1 is minus the trace") {
  testing::Gen g(42);
  const auto R = RingContext::make(17, 9, true);
  for (int t = 0; t < 20; ++t) {
    const auto n = static_cast<std::size_t>(g.uniform(1, 12));
    const auto m = g.matrix(R, n);
    RingElement tr = RingElement::zero(R);
    for (std::size_t i = 0; i < n; ++i) tr += m(i, i);
    CHECK(berkowitz(m)[1] == -tr);
  }
}

TEST_CASE("conjugation invariance") {
  testing::Gen g(43);
  const auto R = RingContext::make(19, 7, true);
  for (int t = 0; t < 20; ++t) {
    const auto n = static_cast<std::size_t>(g.uniform(2, 10));
    const auto m = g.matrix(R, n);
    const auto perm = g.permutation(n);
    std::vector<RingElement> diag;
    for (std::size_t i = 0; i < n; ++i) diag.push_back(g.unit(R));
    // P M P^-1 with P = permutation times unit diagonal.
    Matrix<RingElement> c(n, n, RingElement::zero(R));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        c(i, j) = diag[perm[i]] * m(perm[i], perm[j]) * diag[perm[j]].inverse();
    CHECK(berkowitz(c) == berkowitz(m));
  }
}

TEST_CASE("Newton polygon by hand") {
  const auto s = newton_slopes(vals({0, 0, 1, 3}));
  CHECK(s.exact() == rats({0, 1, 2}));
  CHECK(s.segments.size() == 3);
  const auto flat = newton_slopes(vals({0, 2, 2, 2}));
  CHECK(flat.segments.size() == 1);
  CHECK(flat.segments[0].slope == Rational(2, 3));
  CHECK(flat.segments[0].multiplicity == 3);
  CHECK_THROWS_AS(newton_slopes(vals({1, 2})), Error);
}

TEST_CASE("constructed products recover their slopes") {
  testing::Gen g(44);
  for (bool ramified : {false, true}) {
    const auto R = RingContext::make(11, 40, ramified);
    for (int t = 0; t < 100; ++t) {
      const int k = static_cast<int>(g.uniform(1, 7));
      std::vector<int> twice;
      for (int i = 0; i < k; ++i) twice.push_back(static_cast<int>(g.uniform(0, 4)) * (ramified ? 1 : 2));
      std::sort(twice.begin(), twice.end());
      Poly prod{RingElement::one(R)};
      for (int s : twice) prod = poly_mul(prod, {RingElement::one(R), -g.with_valuation(R, s)});
      const auto got = newton_slopes(CharSeries{R, prod}.valuations());
      std::vector<Rational> expect;
      for (int s : twice) expect.emplace_back(s, 2);
      for (auto& e : expect) e.canonicalize();
      REQUIRE(got.exact() == expect);
      REQUIRE(got.segments.back().provisional == false);
    }
  }
}

TEST_CASE("degree-5 reference polynomial mod 11^13") {
  const auto R = RingContext::make(11, 13, false);
  std::vector<RingElement> c{RingElement::one(R)};
  for (const char* s : {"30120372860126", "17601733022753", "32271675221764", "17634685093520",
                        "5939670233629"})
    c.emplace_back(R, BigInt(s));
  const auto s = newton_slopes(CharSeries{R, c});
  const auto e = s.exact();
  for (int x : {1, 2, 3, 4}) CHECK(std::count(e.begin(), e.end(), Rational(x)) >= 1);
}

TEST_CASE("vanishing tail is provisional") {
  std::vector<HalfIntValuation> v = vals({0, 0, 1, 3});
  for (int i = 0; i < 4; ++i) v.push_back(HalfIntValuation::at_least(8));
  const auto s = newton_slopes(v);
  REQUIRE(s.segments.size() == 4);
  CHECK(s.exact() == rats({0, 1, 2}));
  CHECK(s.segments.back().provisional);
  CHECK(s.segments.back().multiplicity == 4);
  CHECK(s.segments.back().slope == Rational(2));  // max(2, (8 - 3)/4)
  CHECK(s.total_multiplicity() == 7);
  // Strictly, (7, 8) undercuts (3, 3): only slopes 0 and 1 are certified.
  CHECK(s.certified == 2);

  // An interior vanishing coefficient sits above every chord of smaller
  // valuations and leaves the polygon exact.
  std::vector<HalfIntValuation> w = vals({0, 1});
  w.push_back(HalfIntValuation::at_least(4));
  w.push_back(HalfIntValuation::finite(2 * 3));
  const auto u = newton_slopes(w);
  CHECK(u.exact() == rats({1, 1, 1}));
  CHECK_FALSE(u.segments.back().provisional);
  CHECK(u.certified == 3);
}

TEST_CASE("non-cuspidal removal and classicality") {
  const auto s = newton_slopes(vals({0, 0, 0, 1}));
  CHECK(remove_noncuspidal(s).exact() == rats({0, 1}));
  CHECK_THROWS_AS(remove_noncuspidal(newton_slopes(vals({0, 1, 2}))), Error);
  CHECK(classicality(Rational(3), 4) == Classicality::Boundary);
  CHECK(classicality(Rational(1), 4) == Classicality::Classical);
  CHECK(classicality(Rational(4), 4) == Classicality::Unknown);
  CHECK(classicality(Rational(1, 2), 0) == Classicality::Unknown);
  CHECK(to_string(Classicality::Classical) == "yes");
  CHECK(to_string(Classicality::Boundary) == "boundary");
}

TEST_CASE("identical dimensions are trivially stable") {
  BasisSpec s;
  s.d = 2;
  s.precision = 5;
  const auto r = stabilization_check(s, {2, 2});
  CHECK(r.stable_prefix == 5);
  CHECK(r.stable_in_all.size() == 6);
  CHECK(r.pairs.size() == 1);
  CHECK_THROWS_AS(stabilization_check(s, {3, 2}), Error);
}

TEST_CASE("invariance under basis choices (small)") {
  BasisSpec s;
  s.p = 11;
  s.d = 3;
  s.precision = 6;
  const auto base = char_series(up_matrix(build_basis(s))).coefficients;
  auto swapped = s;
  swapped.swap_pair = true;
  CHECK(char_series(up_matrix(build_basis(swapped))).coefficients == base);
  auto scaled = s;
  scaled.c_unit = Rational(7, 3);
  CHECK(char_series(up_matrix(build_basis(scaled))).coefficients == base);
  auto permuted = s;
  permuted.index_order = {-2, 3, 0, 1, -3, 2, -1};
  CHECK(char_series(up_matrix(build_basis(permuted))).coefficients == base);
}
