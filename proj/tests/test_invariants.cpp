#include "doctest.h"

#include "svoa/invariants.hpp"

using namespace svoa;

namespace {

const MultiPoly a = MultiPoly::variable(0);
const MultiPoly b = MultiPoly::variable(1);
const MultiPoly c = MultiPoly::variable(2);

Rational m(int i, int j, int k) { return monster_polynomial().coeff(i, j, k); }

}  // namespace

TEST_CASE("poly_act") {
  const MultiPoly p = a * a * c - b * b * c + a * b * frac(3, 7);
  CHECK(poly_act(CycMatrix::identity(3), p) == to_cyclotomic(p));

  const CharacterRep rep = character_rep(frac(1, 2));
  for (const Exponent3 e : {Exponent3{1, 0, 0}, Exponent3{2, 3, 1}, Exponent3{0, 5, 7}}) {
    const MultiPoly mono = MultiPoly::monomial(e[0], e[1], e[2], Rational(1));
    const CycPoly got = poly_act(rep.T, mono);
    const long phase = -(e[0] + e[1] + e[2]) + 24 * e[1] + 3 * e[2];
    CHECK(got == CycPoly::monomial(e[0], e[1], e[2], zeta_pow(phase)));
  }

  const MultiPoly p1 = a * a * c - b * b * c;
  CHECK(poly_act(rep.S, p1) == to_cyclotomic(p1));
}

TEST_CASE("basis invariants") {
  const auto& inv = basis_invariants();
  CHECK(inv.p1.coeff(2, 0, 1) == 1);
  CHECK(inv.p1.coeff(0, 2, 1) == -1);
  CHECK(inv.p3.coeff(0, 0, 24) == -256);
  CHECK(inv.p4.coeff(0, 0, 48) == 2097152);
  CHECK(inv.p1.homogeneous_degree() == 3);
  CHECK(inv.p4.homogeneous_degree() == 48);
  for (const MultiPoly* p : {&inv.p1, &inv.p2, &inv.p3, &inv.p4}) CHECK(is_invariant(*p));
  for (const MultiPoly& p : degree48_basis()) {
    CHECK(p.homogeneous_degree() == 48);
    CHECK(is_invariant(p));
  }
  CHECK(degree48_basis().size() == 7);

  CHECK_FALSE(is_invariant(a));
  try {
    is_invariant(a * a, true);
    FAIL("expected invariance_failure");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::invariance_failure);
  }
}

TEST_CASE("moonshine weight enumerator") {
  const MultiPoly& P = monster_polynomial();
  CHECK(m(48, 0, 0) == 1);
  CHECK(m(44, 4, 0) == 804);
  CHECK(m(0, 0, 48) == 2048);
  CHECK(m(21, 19, 8) == 33843588096);
  CHECK(m(7, 1, 40) == 135168);
  CHECK(m(46, 2, 0) == 0);
  CHECK(m(7, 1, 40) == 9 * 16384 - 6 * m(0, 0, 48));
  CHECK(P.homogeneous_degree() == 48);
  CHECK(P == P.swapped_ab());
  CHECK(is_invariant(P));
  for (const auto& [e, v] : P.terms()) {
    CHECK(v > 0);
    CHECK(is_integer(v));
  }
  CHECK(P.size() == published_monster_coefficients().size());
}

TEST_CASE("constraint handling") {
  const ConstraintSet def = default_constraints();
  CHECK(def.size() == 7);

  const ConstraintSet parsed = parse_constraints(
      "# default set\n48 0 0 1\n46 2 0 0\n39 1 8 0\n32 0 16 0\n44 4 0 804\n"
      "16 0 32 9024\n0 0 48 2048   # top\n");
  CHECK(solve_monster_polynomial(parsed).P == monster_polynomial());

  CHECK_THROWS_AS(parse_constraints("1 2 3\n"), Error);
  CHECK_THROWS_AS(parse_constraints("1 2 3 4\n"), Error);
  CHECK_THROWS_AS(parse_constraints("48 0 0 1\n48 0 0 2\n"), Error);

  ConstraintSet wrong = def;
  for (auto& con : wrong)
    if (con.e == Exponent3{44, 4, 0}) con.value = 805;
  try {
    solve_monster_polynomial(wrong);
    FAIL("expected published_mismatch");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::published_mismatch);
  }
  CHECK_NOTHROW(solve_monster_polynomial(wrong, false));

  ConstraintSet few(def.begin(), def.begin() + 3);
  try {
    solve_monster_polynomial(few);
    FAIL("expected singular_system");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::singular_system);
  }
}

TEST_CASE("evaluation at the Ising characters") {
  CHECK(evaluate_at_characters(a, 480).agrees_with(standard_series(FormKind::chi_ising_0, 480)));
  QSeries j = standard_series(FormKind::j, 480);
  CHECK(evaluate_at_characters(basis_invariants().p4, 480).agrees_with(j));
  QSeries moon = evaluate_at_characters(monster_polynomial(), 480);
  CHECK(moon.agrees_with(j - QSeries::one(480) * Rational(744)));
  CHECK(moon.trunc() >= 480);
}

TEST_CASE("serialization") {
  const MultiPoly p = a * a * c - b * frac(1, 2);
  CHECK(poly_to_json(p) == R"([[0,1,0,"-1/2"],[2,0,1,"1"]])");
  CHECK(poly_to_text(p) == "a^2c - 1/2b");
}
