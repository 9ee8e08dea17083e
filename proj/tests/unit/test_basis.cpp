#include "doctest.h"

#include <algorithm>

#include "ocmf/basis.hpp"
#include "ocmf/forms.hpp"

using namespace ocmf;

TEST_CASE("supersingular residues agree with point counting") {
  for (int p : {11, 17, 19}) {
    const auto pair = supersingular_pair(p);
    const auto found = supersingular_residues(p);
    CHECK(found == std::vector<int>{pair.a, pair.b});
    // The integral lifts reduce to the residues.
    CHECK(((pair.lift_a % p) + p) % p == pair.a);
    CHECK(((pair.lift_b % p) + p) % p == pair.b);
    const auto res = supersingular_pair(p, LiftPolicy::Residue);
    CHECK(res.lift_a == res.a);
    CHECK(res.lift_b == res.b);
  }
  CHECK(supersingular_residues(5) == std::vector<int>{0});
  CHECK(supersingular_residues(13) == std::vector<int>{5});
  CHECK_THROWS_AS(supersingular_pair(13), Error);
}

TEST_CASE("spec resolution") {
  BasisSpec s;
  s.p = 17;
  s.d = 3;
  const auto r = resolve(s);
  CHECK(r.qprec == default_qprec(17, 3));
  CHECK(r.qprec == 17 * 13);
  CHECK(r.index_order == std::vector<int>{0, 1, -1, 2, -2, 3, -3});
  CHECK(working_precision(r) == 13 + 2 + 4);

  auto bad = s;
  bad.p = 13;
  CHECK_THROWS_AS(resolve(bad), Error);
  bad = s;
  bad.weight = 2;
  CHECK_THROWS_AS(resolve(bad), Error);
  bad = s;
  bad.qprec = 17 * 7 - 1;
  CHECK_THROWS_AS(resolve(bad), Error);
  bad = s;
  bad.c_unit = 17;
  CHECK_THROWS_AS(resolve(bad), Error);
  bad = s;
  bad.index_order = {0, 1, 2, -1, -2, 3, 3};
  CHECK_THROWS_AS(resolve(bad), Error);
}

TEST_CASE("unit parameter") {
  for (int p : {11, 17, 19}) {
    const auto pair = supersingular_pair(p);
    const auto R = RingContext::make(p, 6, true);
    const auto u = build_unit_parameter(pair, 40, R);
    CHECK(u.low() == 0);
    CHECK(u.qprec() == 40);
    CHECK(u.coeff(0) == RingElement::one(R));
    // (j - b) u = j - a, checked on the integral j.
    const auto j = to_ring(j_invariant(39), R);
    const auto lhs = (j - LaurentSeries<RingElement>::constant(RingElement(R, pair.lift_b), 39)) * u;
    const auto rhs = j - LaurentSeries<RingElement>::constant(RingElement(R, pair.lift_a), 39);
    for (int n = -1; n < lhs.qprec(); ++n) REQUIRE(lhs.coeff(n) == rhs.coeff(n));
  }
}

TEST_CASE("basis elements") {
  BasisSpec s;
  s.p = 11;
  s.d = 3;
  s.precision = 6;
  const auto fam = build_basis(s);
  const auto& R = fam.ring;
  CHECK(fam.size() == 7);
  CHECK(fam.element(0).coeff(0) == RingElement::one(R));
  for (std::size_t i = 0; i < fam.size(); ++i) {
    CHECK(fam.pi_grading[i] == std::abs(fam.indices[i]));
    const auto scale = RingElement::pi(R).pow(static_cast<unsigned long>(fam.pi_grading[i]));
    CHECK(fam.elements[i] == fam.normalized[i].scaled(scale));
  }
  // z * (p/z) = p at weight 0.
  const auto prod = fam.element(1) * fam.element(-1);
  CHECK(prod.coeff(0) == RingElement(R, 11));
  for (int n = 1; n < 50; ++n) REQUIRE(prod.coeff(n).is_zero());
  CHECK_THROWS_AS(fam.element(4), Error);
}

TEST_CASE("weighted basis carries E_k") {
  BasisSpec s;
  s.p = 17;
  s.weight = 4;
  s.d = 2;
  s.precision = 5;
  const auto fam = build_basis(s);
  REQUIRE(fam.eisenstein.has_value());
  CHECK(fam.element(0) == *fam.eisenstein);
  CHECK(fam.element(0).coeff(1) == RingElement(fam.ring, 240));
}

TEST_CASE("truncation coherence") {
  BasisSpec s;
  s.p = 19;
  s.d = 2;
  s.precision = 5;
  const auto a = build_basis(s);
  s.qprec = a.spec.qprec + 40;
  const auto b = build_basis(s);
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(b.elements[i].truncate(a.spec.qprec) == a.elements[i]);
}

TEST_CASE("custom j source is used") {
  int calls = 0;
  BasisSpec s;
  s.d = 1;
  s.precision = 3;
  const auto fam = build_basis(s, [&](int q) {
    ++calls;
    return j_invariant(q);
  });
  CHECK(calls == 1);
  CHECK(fam.size() == 3);
  CHECK_THROWS_AS(build_basis(s, [](int q) { return j_invariant(q / 2); }), Error);
}
