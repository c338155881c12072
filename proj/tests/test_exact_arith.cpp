#include "doctest.h"

#include <unordered_set>

#include "svoa/exact_arith.hpp"

using namespace svoa;

TEST_CASE("rational parsing is canonical") {
  CHECK(parse_rational("6/4") == frac(3, 2));
  CHECK(to_string(parse_rational("-10/4")) == "-5/2");
  CHECK(to_string(parse_rational("8/4")) == "2");
  CHECK(parse_rational("0/7").get_den() == 1);
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
  CHECK_THROWS_AS(parse_rational("abc"), Error);
  CHECK(floor(frac(-3, 2)) == -2);
  CHECK(floor(frac(7, 2)) == 3);
  CHECK(is_integer(frac(4, 2)));
  CHECK_FALSE(is_integer(frac(1, 2)));
}

TEST_CASE("roots of unity") {
  CHECK(zeta_pow(0) == Cyclotomic48(1));
  CHECK(zeta_pow(24) == Cyclotomic48(-1));
  CHECK(zeta_pow(48) == Cyclotomic48(1));
  CHECK(zeta_pow(-1) == zeta_pow(47));
  Cyclotomic48 s = zeta_pow(6) + zeta_pow(-6);
  CHECK(s * s == Cyclotomic48(2));
  CHECK(Cyclotomic48::sqrt2() == s);
  CHECK(Cyclotomic48::imag_unit() * Cyclotomic48::imag_unit() == Cyclotomic48(-1));
}

TEST_CASE("cyc_mul reduces modulo the cyclotomic polynomial") {
  CHECK(cyc_mul(zeta_pow(8), zeta_pow(8)) == zeta_pow(8) - Cyclotomic48(1));
  Cyclotomic48 x = zeta_pow(5) * frac(2, 3) + zeta_pow(11);
  CHECK(cyc_mul(x, Cyclotomic48(1)) == x);
  CHECK(cyc_mul(zeta_pow(1), zeta_pow(47)) == Cyclotomic48(1));
  for (int a = 0; a < 48; a += 7)
    for (int b = 0; b < 48; b += 5) CHECK(cyc_mul(zeta_pow(a), zeta_pow(b)) == zeta_pow(a + b));
}

TEST_CASE("cyc_inv") {
  CHECK(cyc_inv(zeta_pow(1)) == zeta_pow(47));
  CHECK(cyc_inv(Cyclotomic48(2)) == Cyclotomic48(frac(1, 2)));
  const Cyclotomic48 r2 = Cyclotomic48::sqrt2();
  CHECK(cyc_inv(r2) == r2 * frac(1, 2));
  Cyclotomic48 x = Cyclotomic48(3) + zeta_pow(7) * frac(-1, 5) + zeta_pow(13);
  CHECK(cyc_mul(x, cyc_inv(x)) == Cyclotomic48(1));
  try {
    cyc_inv(Cyclotomic48());
    FAIL("expected division_by_zero");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::division_by_zero);
  }
}

TEST_CASE("conjugation, orders and hashing") {
  CHECK(zeta_pow(5).conj() == zeta_pow(43));
  CHECK(root_of_unity_order(zeta_pow(0)) == 1);
  CHECK(root_of_unity_order(zeta_pow(24)) == 2);
  CHECK(root_of_unity_order(zeta_pow(12)) == 4);
  CHECK(root_of_unity_order(zeta_pow(-1)) == 48);
  CHECK(root_of_unity_order(zeta_pow(18)) == 8);
  CHECK(root_of_unity_order(Cyclotomic48(2)) == 0);
  CHECK(Cyclotomic48(frac(3, 4)).is_rational());
  CHECK(Cyclotomic48(frac(3, 4)).to_rational() == frac(3, 4));
  CHECK_THROWS_AS(zeta_pow(1).to_rational(), Error);

  std::unordered_set<Cyclotomic48> seen;
  for (int k = 0; k < 96; ++k) seen.insert(zeta_pow(k));
  CHECK(seen.size() == 48);
}
